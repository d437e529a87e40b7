#ifndef RELDP_TRS_HPP
#define RELDP_TRS_HPP

#include <set>
#include <string>
#include <vector>

#include "reldp/term.hpp"

namespace reldp {

class rule_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rewrite rule l -> r with the usual TRS well-formedness conditions.
struct Rule {
  Term lhs;
  Term rhs;

  Rule(Term l, Term r);

  std::string to_string() const;
  bool operator==(const Rule& other) const {
    return lhs == other.lhs && rhs == other.rhs;
  }
};

/// Ordered duplicate-free list of rules over one signature.
class Trs {
 public:
  Trs() = default;
  explicit Trs(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }
  std::size_t size() const { return rules_.size(); }
  const Rule& operator[](std::size_t i) const { return rules_[i]; }
  auto begin() const { return rules_.begin(); }
  auto end() const { return rules_.end(); }

  bool contains(const Rule& r) const;
  const std::set<Symbol>& signature() const { return signature_; }

  bool operator==(const Trs& other) const { return rules_ == other.rules_; }

 private:
  std::vector<Rule> rules_;
  std::set<Symbol> signature_;
};

/// Union preserving order of `a` then new rules of `b`.
Trs concat(const Trs& a, const Trs& b);
/// Rules of `a` not contained in `b`.
Trs difference(const Trs& a, const Trs& b);

std::set<Symbol> defined_symbols(const Trs& r);

/// Base name of a possibly labeled symbol ("f.01" -> "f").
std::string unlabel_name(const std::string& name);
bool is_marked_name(const std::string& name);

/// Replaces the root symbol by its marked (#-suffixed) variant.
Term mark_root(const Term& t);

/// DP(R). With `improved` set, right-hand subterms that already occur as
/// proper subterms of the left-hand side are skipped.
Trs dependency_pairs(const Trs& r, bool improved = true);

}  // namespace reldp

#endif  // RELDP_TRS_HPP
