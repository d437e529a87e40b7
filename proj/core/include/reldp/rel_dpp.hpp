#ifndef RELDP_REL_DPP_HPP
#define RELDP_REL_DPP_HPP

#include "reldp/trs.hpp"

namespace reldp {

enum class DppErrorKind { Overlap, MalformedRule, MarkPlacement };

class dpp_error : public std::invalid_argument {
 public:
  dpp_error(DppErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind(kind) {}
  DppErrorKind kind;
};

/// Relative DP problem: the quadruple (P, P_w, R, R_w) of strict/weak pairs
/// and strict/weak rules. The four components are pairwise disjoint.
class RelativeDpp {
 public:
  RelativeDpp() = default;
  static RelativeDpp make(Trs strict_pairs, Trs weak_pairs, Trs strict_rules,
                          Trs weak_rules, bool check_marks = false);

  /// No disjointness validation. Needed for the literal printed form of the
  /// split processor, whose second successor duplicates the weak rules.
  static RelativeDpp make_unchecked(Trs strict_pairs, Trs weak_pairs,
                                    Trs strict_rules, Trs weak_rules);

  const Trs& strict_pairs() const { return strict_pairs_; }
  const Trs& weak_pairs() const { return weak_pairs_; }
  const Trs& strict_rules() const { return strict_rules_; }
  const Trs& weak_rules() const { return weak_rules_; }

  /// P followed by P_w; the index space used by chain witnesses.
  Trs all_pairs() const { return concat(strict_pairs_, weak_pairs_); }
  /// R followed by R_w.
  Trs all_rules() const { return concat(strict_rules_, weak_rules_); }

  bool operator==(const RelativeDpp& other) const = default;
  std::string to_string() const;

 private:
  Trs strict_pairs_;
  Trs weak_pairs_;
  Trs strict_rules_;
  Trs weak_rules_;
};

struct ClassicDpp {
  Trs pairs;
  Trs rules;
};

/// Marked symbols occur only at the roots of pair sides and nowhere in rules.
void check_mark_placement(const RelativeDpp& d);

/// The initial relative DPP (DP(R), {}, {}, R).
RelativeDpp initial(const Trs& r);
/// Initial problem of a TRS with weak-rule annotations:
/// (DP(R), {}, {}, R union S).
RelativeDpp initial(const Trs& strict, const Trs& weak);

/// (P, {}, {}, R); finiteness is preserved and reflected.
RelativeDpp embed(const ClassicDpp& c);

/// True iff P union P_w is empty or P union R is empty.
bool is_trivially_finite(const RelativeDpp& d);

}  // namespace reldp

#endif  // RELDP_REL_DPP_HPP
