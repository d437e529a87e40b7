#ifndef RELDP_TERM_HPP
#define RELDP_TERM_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reldp {

/// Function symbol with a fixed arity.
struct Symbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

class invalid_position : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable first-order term. Copies share structure; structural equality
/// is the only equality.
class Term {
 public:
  static Term var(std::string name);
  static Term fun(std::string name, std::vector<Term> args = {});
  static Term fun(const Symbol& f, std::vector<Term> args);

  bool is_var() const { return node_->is_var; }
  bool is_fun() const { return !node_->is_var; }

  const std::string& var_name() const { return node_->name; }
  const std::string& fun_name() const { return node_->name; }
  const std::string& name() const { return node_->name; }
  Symbol symbol() const { return Symbol{node_->name, node_->args.size()}; }
  const std::vector<Term>& args() const { return node_->args; }

  std::size_t size() const { return node_->size; }
  std::size_t depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }

  void collect_vars(std::set<std::string>& out) const;
  std::set<std::string> vars() const;
  bool ground() const;

  std::string to_string() const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  struct Node {
    bool is_var;
    std::string name;
    std::vector<Term> args;
    std::size_t size;
    std::size_t depth;
    std::size_t hash;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// 1-based path from the root; the empty position is the root itself.
using Position = std::vector<std::size_t>;

std::string to_string(const Position& p);

/// Normalized finite map from variable names to terms (no identity bindings).
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, Term> bindings);

  void bind(const std::string& var, const Term& t);
  const Term* lookup(const std::string& var) const;
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<std::string, Term>& bindings() const { return map_; }

  bool operator==(const Substitution& other) const { return map_ == other.map_; }

 private:
  std::map<std::string, Term> map_;
};

Term apply(const Substitution& sigma, const Term& t);

Term subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& s);
bool valid_position(const Term& t, const Position& p);

/// All positions of t in pre-order (root first).
std::vector<Position> positions(const Term& t);

std::optional<Substitution> match(const Term& pattern, const Term& subject);
std::optional<Substitution> unify(const Term& s, const Term& t);

/// Variable-renamed copy of t sharing no variable with `forbidden`.
/// Fresh names append numeric suffixes to the clashing base name.
std::pair<Term, Substitution> rename_apart(const Term& t,
                                           const std::set<std::string>& forbidden);

}  // namespace reldp

#endif  // RELDP_TERM_HPP
