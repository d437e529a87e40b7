#ifndef RELDP_REWRITING_HPP
#define RELDP_REWRITING_HPP

#include "reldp/trs.hpp"

namespace reldp {

enum class RewriteMode { Top, Anywhere };

struct RewriteStep {
  Term result;
  Position pos;
  std::size_t rule_index;

  bool operator==(const RewriteStep&) const = default;
};

/// All one-step rewrites of t, each annotated with the redex position and
/// rule index. Positions and rules are enumerated in pre-order / list order.
std::vector<RewriteStep> successors(const Term& t, const Trs& rules,
                                    RewriteMode mode);

enum class SnStatus { Terminating, NonterminatingLoop, Unknown };

/// Bounded exploration of the reduction graph of t. Terminating means the
/// graph closed within `node_budget` expansions without a cycle or matching
/// loop; NonterminatingLoop means a reachable term contains an instance of a
/// reduction ancestor (a matching loop, a sound nontermination certificate).
SnStatus bounded_sn(const Term& t, const Trs& rules, std::size_t node_budget);

}  // namespace reldp

#endif  // RELDP_REWRITING_HPP
