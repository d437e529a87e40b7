#ifndef RELDP_CHAIN_HPP
#define RELDP_CHAIN_HPP

#include "reldp/rel_dpp.hpp"
#include "reldp/rewriting.hpp"

namespace reldp {

/// One rewrite step of a connection t_i sigma_i ->* s_{i+1} sigma_{i+1},
/// with rules indexed into R followed by R_w.
struct ConnectionStep {
  std::size_t rule_index;
  Position pos;
  bool strict_rule;

  bool operator==(const ConnectionStep&) const = default;
};

/// One pair application of a chain. `sigma` is over the variables of the
/// original pair; `connection` rewrites t_i sigma_i to the next instance.
struct ChainStep {
  std::size_t pair_index;  // into P followed by P_w
  bool strict_pair;
  Substitution sigma;
  std::vector<ConnectionStep> connection;
};

enum class Minimality { Verified, Unknown };

/// A finite looping chain fragment: replaying `steps`, then `closing` from
/// the last t_n sigma_n, reaches s_1 sigma_1 instantiated by `theta`.
struct ChainWitness {
  std::vector<ChainStep> steps;
  std::vector<ConnectionStep> closing;
  Substitution theta;
  Minimality minimality = Minimality::Unknown;
  std::size_t sn_budget = 0;
};

struct OracleBounds {
  std::size_t max_steps = 4;
  std::size_t max_term_depth = 6;
  std::size_t rewrite_budget = 100;
};

struct VerifyResult {
  bool ok;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Term reachable from a start term, with the rewrite path that produced it.
struct Reachable {
  Term term;
  std::vector<ConnectionStep> path;
};

/// Breadth-first reachability under `rules` (strict rules first, the first
/// `strict_count` entries). Expands at most `budget` terms; results deeper
/// than `max_depth` are cut off. The start term is element 0 (empty path).
std::vector<Reachable> reachable_terms(const Term& from, const Trs& rules,
                                       std::size_t strict_count,
                                       std::size_t budget, std::size_t max_depth);

/// Bounded search for a looping chain fragment; a returned witness always
/// passes verify_witness. Absence is not a finiteness proof.
std::optional<ChainWitness> find_witness(const RelativeDpp& d, OracleBounds bounds);

/// Replays conditions (1)-(4) of the chain definition literally.
VerifyResult verify_witness(const RelativeDpp& d, const ChainWitness& w);

enum class Finiteness { Finite, NotFinite, Unknown };

struct FinitenessResult {
  Finiteness status;
  std::optional<ChainWitness> witness;
};

FinitenessResult bounded_finiteness(const RelativeDpp& d, OracleBounds bounds);

}  // namespace reldp

#endif  // RELDP_CHAIN_HPP
