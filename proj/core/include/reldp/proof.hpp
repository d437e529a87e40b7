#ifndef RELDP_PROOF_HPP
#define RELDP_PROOF_HPP

#include "reldp/chain.hpp"
#include "reldp/processors.hpp"

namespace reldp {

/// Node of a replayable proof tree. Finite nodes carry a justification and
/// one child per processor successor; NotFinite leaves carry a witness.
struct ProofNode {
  enum class Outcome { Finite, NotFinite, Open };

  RelativeDpp problem;
  Outcome outcome = Outcome::Open;
  std::optional<Justification> justification;
  std::vector<ProofNode> children;
  std::optional<ChainWitness> witness;
};

struct Tactic {
  enum class Kind {
    Trivial,
    DependencyGraph,
    ReductionPair,
    SemanticLabeling,
    SplitWorkflow
  };
  Kind kind = Kind::Trivial;
  long long bound = 2;  // reduction pair coefficient bound
  LinearInterpretation::Mode mode = LinearInterpretation::Mode::WeaklyMonotone;
  std::size_t carrier = 2;  // labeling carrier size
};

struct Strategy {
  std::vector<Tactic> tactics;
  std::size_t max_depth = 16;
  double time_budget_seconds = 60.0;
  OracleBounds oracle{4, 6, 120};
  std::size_t search_cap = 300000;
};

/// trivial -> dependency graph -> reduction pairs (weak, then strict) ->
/// labeling with retry -> split workflow.
Strategy default_strategy();

ProofNode prove(const RelativeDpp& d, const Strategy& s);

/// Replays every justification (split arithmetic, orientation inequalities,
/// SCC membership, model condition and labeling output, Lemma-3 emptiness)
/// and verify_witness on NotFinite leaves.
VerifyResult replay(const ProofNode& root);

/// Avoid-unlabeling workflow: an exploratory labeled attempt
/// identifies the elements whose labeled variants were all removed, split
/// deletes exactly those, the first successor is closed through labeling,
/// and the second continues with the remaining strategy.
ProofNode split_workflow(const RelativeDpp& d, const Strategy& s);

}  // namespace reldp

#endif  // RELDP_PROOF_HPP
