#ifndef RELDP_PROCESSORS_HPP
#define RELDP_PROCESSORS_HPP

#include <variant>

#include "reldp/rel_dpp.hpp"

namespace reldp {

/// Linear polynomial interpretation over the non-negative integers.
/// For each symbol of arity n, coefficients()[name] holds [c0, c1..cn]
/// (constant first). Strictly monotone mode requires every ci >= 1 (i >= 1).
struct LinearInterpretation {
  enum class Mode { WeaklyMonotone, StrictlyMonotone };
  Mode mode = Mode::WeaklyMonotone;
  std::map<std::string, std::vector<long long>> coefficients;

  bool operator==(const LinearInterpretation&) const = default;
};

/// Finite algebra over carrier {0..carrier_size-1}; per symbol a total
/// function stored row-major over the argument tuple.
struct FiniteModel {
  std::size_t carrier_size = 2;
  std::map<std::string, std::vector<std::size_t>> tables;

  bool operator==(const FiniteModel&) const = default;
};

struct TrivialJustification {
  bool operator==(const TrivialJustification&) const = default;
};

struct SplitJustification {
  Trs delete_pairs;
  Trs delete_rules;
  bool literal_variant = false;

  bool operator==(const SplitJustification&) const = default;
};

struct DepGraphJustification {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> sccs;  // kept components, in order

  bool operator==(const DepGraphJustification&) const = default;
};

struct ReductionPairJustification {
  LinearInterpretation interp;
  Trs removed_pairs;
  Trs removed_rules;

  bool operator==(const ReductionPairJustification&) const = default;
};

struct SemanticLabelingJustification {
  FiniteModel model;

  bool operator==(const SemanticLabelingJustification&) const = default;
};

using Justification =
    std::variant<TrivialJustification, SplitJustification, DepGraphJustification,
                 ReductionPairJustification, SemanticLabelingJustification>;

std::string justification_name(const Justification& j);

struct ProcessorResult {
  std::vector<RelativeDpp> successors;
  Justification justification;
};

/// Lemma-3 closure: zero successors iff the problem is trivially finite.
std::optional<ProcessorResult> trivial(const RelativeDpp& d);

/// Split processor. Successor A makes the delete sets strict (and everything
/// else weak); successor B is the input minus the delete sets. With
/// `literal_variant`, B instead follows the printed definition, whose third
/// component is the weak remainder rules.
ProcessorResult split(const RelativeDpp& d, const Trs& delete_pairs,
                      const Trs& delete_rules, bool literal_variant = false);

/// Estimated dependency graph (CAP/unification estimate) followed by SCC
/// decomposition; trivially finite components are omitted.
ProcessorResult dependency_graph(const RelativeDpp& d);

std::optional<ProcessorResult> reduction_pair(const RelativeDpp& d,
                                              const LinearInterpretation& interp);

/// Description of the first element not weakly oriented by `interp`, if any.
std::optional<std::string> orientation_violation(const RelativeDpp& d,
                                                 const LinearInterpretation& interp);

/// Enumerates interpretations with parameters in [0, coefficient_bound] in
/// documented (odometer) order; returns the first that removes an element.
/// Enumeration stops after `max_candidates` interpretations.
std::optional<std::pair<LinearInterpretation, ProcessorResult>>
search_reduction_pair(const RelativeDpp& d, long long coefficient_bound,
                      LinearInterpretation::Mode mode,
                      std::size_t max_candidates = 300000);

std::optional<ProcessorResult> semantic_labeling(const RelativeDpp& d,
                                                 const FiniteModel& m);

std::optional<FiniteModel> search_model(const RelativeDpp& d,
                                        std::size_t carrier_size,
                                        std::size_t max_candidates = 300000);

// Building blocks, exposed for testing and for the proof engine.

/// CAP: replaces every subterm whose root is defined (and every variable)
/// by a fresh variable.
Term cap(const Term& t, const std::set<Symbol>& defined);

/// Edge of the estimated graph between two pairs.
bool dg_edge(const Rule& p, const Rule& q, const std::set<Symbol>& defined);

/// SCCs of a directed graph in deterministic order (sorted by smallest
/// member); trivial single nodes without self-loop are excluded.
std::vector<std::vector<std::size_t>> sccs(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

std::size_t eval_term(const Term& t, const FiniteModel& m,
                      const std::map<std::string, std::size_t>& assignment);

Term label_term(const Term& t, const FiniteModel& m,
                const std::map<std::string, std::size_t>& assignment);

/// True iff every rule and pair of d evaluates equally on both sides under
/// every assignment.
bool model_condition(const RelativeDpp& d, const FiniteModel& m);

/// Strips labels everywhere in a term / rule.
Term unlabel_term(const Term& t);
Rule unlabel_rule(const Rule& r);
bool is_labeled(const RelativeDpp& d);

}  // namespace reldp

#endif  // RELDP_PROCESSORS_HPP
