#include "reldp/proof.hpp"

#include <algorithm>
#include <chrono>

namespace reldp {

namespace {

using Clock = std::chrono::steady_clock;

bool all_finite(const std::vector<ProofNode>& children) {
  return std::all_of(children.begin(), children.end(), [](const ProofNode& n) {
    return n.outcome == ProofNode::Outcome::Finite;
  });
}

ProofNode open_leaf(const RelativeDpp& d) {
  return ProofNode{d, ProofNode::Outcome::Open, std::nullopt, {}, std::nullopt};
}

struct Prover {
  const Strategy& strategy;
  Clock::time_point deadline;

  explicit Prover(const Strategy& s)
      : strategy(s),
        deadline(Clock::now() +
                 std::chrono::duration_cast<Clock::duration>(
                     std::chrono::duration<double>(s.time_budget_seconds))) {}

  bool out_of_time() const { return Clock::now() > deadline; }

  // Applies one tactic; nullopt when not applicable or no progress.
  std::optional<ProcessorResult> apply_tactic(const RelativeDpp& d,
                                              const Tactic& t) {
    switch (t.kind) {
      case Tactic::Kind::Trivial:
        return trivial(d);
      case Tactic::Kind::DependencyGraph: {
        ProcessorResult r;
        try {
          r = dependency_graph(d);
        } catch (const dpp_error&) {
          return std::nullopt;  // marks not in place; estimation unsound
        }
        if (r.successors.size() == 1 && r.successors.front() == d)
          return std::nullopt;
        return r;
      }
      case Tactic::Kind::ReductionPair: {
        auto found = search_reduction_pair(d, t.bound, t.mode, strategy.search_cap);
        if (!found) return std::nullopt;
        return std::move(found->second);
      }
      case Tactic::Kind::SemanticLabeling: {
        if (is_labeled(d)) return std::nullopt;
        auto m = search_model(d, t.carrier, strategy.search_cap);
        if (!m) return std::nullopt;
        auto r = semantic_labeling(d, *m);
        if (!r || (r->successors.size() == 1 && r->successors.front() == d))
          return std::nullopt;
        return r;
      }
      case Tactic::Kind::SplitWorkflow:
        return std::nullopt;  // handled separately, produces a whole subtree
    }
    return std::nullopt;
  }

  ProofNode prove_node(const RelativeDpp& d, std::size_t depth) {
    if (auto t = trivial(d))
      return ProofNode{d, ProofNode::Outcome::Finite, t->justification, {}, {}};
    if (depth >= strategy.max_depth || out_of_time()) return open_leaf(d);

    if (auto w = find_witness(d, strategy.oracle))
      if (w->minimality == Minimality::Verified && verify_witness(d, *w))
        return ProofNode{d, ProofNode::Outcome::NotFinite, std::nullopt, {}, *w};

    for (const Tactic& t : strategy.tactics) {
      if (out_of_time()) break;
      if (t.kind == Tactic::Kind::SplitWorkflow) {
        auto node = try_split_workflow(d, t, depth);
        if (node && node->outcome == ProofNode::Outcome::Finite) return *node;
        continue;
      }
      auto result = apply_tactic(d, t);
      if (!result) continue;
      std::vector<ProofNode> children;
      for (const RelativeDpp& succ : result->successors)
        children.push_back(prove_node(succ, depth + 1));
      if (all_finite(children))
        return ProofNode{d, ProofNode::Outcome::Finite, result->justification,
                         std::move(children), {}};
      // Backtrack and try the next tactic.
    }
    return open_leaf(d);
  }

  // Greedy fixed-order simplification used inside the split workflow, both
  // for the exploratory labeled attempt and for the first successor's proof.
  ProofNode simplify(const RelativeDpp& d, const Tactic& t, std::size_t depth) {
    if (auto tr = trivial(d))
      return ProofNode{d, ProofNode::Outcome::Finite, tr->justification, {}, {}};
    if (depth >= strategy.max_depth || out_of_time()) return open_leaf(d);
    for (Tactic::Kind kind :
         {Tactic::Kind::DependencyGraph, Tactic::Kind::ReductionPair}) {
      Tactic inner = t;
      inner.kind = kind;
      inner.mode = LinearInterpretation::Mode::WeaklyMonotone;
      auto result = apply_tactic(d, inner);
      if (!result) continue;
      std::vector<ProofNode> children;
      for (const RelativeDpp& succ : result->successors)
        children.push_back(simplify(succ, t, depth + 1));
      return ProofNode{d,
                       all_finite(children) ? ProofNode::Outcome::Finite
                                            : ProofNode::Outcome::Open,
                       result->justification, std::move(children), {}};
    }
    return open_leaf(d);
  }

  static void collect_open_problems(const ProofNode& n,
                                    std::vector<RelativeDpp>& out) {
    if (n.outcome == ProofNode::Outcome::Open && n.children.empty())
      out.push_back(n.problem);
    for (const ProofNode& c : n.children) collect_open_problems(c, out);
  }

  std::optional<ProofNode> try_split_workflow(const RelativeDpp& d,
                                              const Tactic& t, std::size_t depth) {
    if (!d.weak_pairs().empty() || !d.strict_rules().empty()) return std::nullopt;
    if (d.strict_pairs().empty() || is_labeled(d)) return std::nullopt;
    auto model = search_model(d, t.carrier, strategy.search_cap);
    if (!model) return std::nullopt;
    auto labeled = semantic_labeling(d, *model);
    if (!labeled) return std::nullopt;

    // Exploratory attempt: simplify the labeled problem, then keep exactly
    // the original elements some labeled variant of which is still alive in
    // a stuck leaf. The attempt itself is discarded.
    ProofNode attempt = simplify(labeled->successors.front(), t, depth + 1);
    std::vector<RelativeDpp> stuck;
    collect_open_problems(attempt, stuck);
    std::vector<Rule> surviving_pairs, surviving_rules;
    for (const RelativeDpp& q : stuck) {
      for (const Rule& p : q.all_pairs()) surviving_pairs.push_back(unlabel_rule(p));
      for (const Rule& r : q.all_rules()) surviving_rules.push_back(unlabel_rule(r));
    }
    Trs survivors_p(std::move(surviving_pairs));
    Trs survivors_r(std::move(surviving_rules));
    Trs delete_pairs = difference(d.all_pairs(), survivors_p);
    Trs delete_rules = difference(d.all_rules(), survivors_r);

    ProcessorResult sp = split(d, delete_pairs, delete_rules);
    const RelativeDpp& first = sp.successors[0];
    const RelativeDpp& second = sp.successors[1];

    // First successor: label with the same model, then simplify; the
    // certificate never unlabels.
    ProofNode first_node;
    if (auto tr = trivial(first)) {
      first_node =
          ProofNode{first, ProofNode::Outcome::Finite, tr->justification, {}, {}};
    } else {
      auto labeled_first = semantic_labeling(first, *model);
      if (!labeled_first) return std::nullopt;
      ProofNode sub = simplify(labeled_first->successors.front(), t, depth + 2);
      first_node = ProofNode{first,
                             sub.outcome == ProofNode::Outcome::Finite
                                 ? ProofNode::Outcome::Finite
                                 : ProofNode::Outcome::Open,
                             labeled_first->justification,
                             {std::move(sub)},
                             {}};
    }

    // Second successor: continue with the surrounding strategy. When the
    // delete set is empty the second successor equals d again; recursing
    // would not terminate, so it stays open in that degenerate case.
    ProofNode second_node =
        second == d ? open_leaf(second) : prove_node(second, depth + 1);

    ProofNode root{d,
                   first_node.outcome == ProofNode::Outcome::Finite &&
                           second_node.outcome == ProofNode::Outcome::Finite
                       ? ProofNode::Outcome::Finite
                       : ProofNode::Outcome::Open,
                   sp.justification,
                   {},
                   {}};
    root.children.push_back(std::move(first_node));
    root.children.push_back(std::move(second_node));
    return root;
  }
};

}  // namespace

Strategy default_strategy() {
  Strategy s;
  s.tactics = {
      Tactic{Tactic::Kind::Trivial},
      Tactic{Tactic::Kind::DependencyGraph},
      Tactic{Tactic::Kind::ReductionPair, 2,
             LinearInterpretation::Mode::WeaklyMonotone},
      Tactic{Tactic::Kind::ReductionPair, 2,
             LinearInterpretation::Mode::StrictlyMonotone},
      Tactic{Tactic::Kind::SemanticLabeling, 2,
             LinearInterpretation::Mode::WeaklyMonotone, 2},
      Tactic{Tactic::Kind::SplitWorkflow, 2,
             LinearInterpretation::Mode::WeaklyMonotone, 2},
  };
  return s;
}

ProofNode prove(const RelativeDpp& d, const Strategy& s) {
  Prover prover(s);
  return prover.prove_node(d, 0);
}

ProofNode split_workflow(const RelativeDpp& d, const Strategy& s) {
  Prover prover(s);
  Tactic t{Tactic::Kind::SplitWorkflow, 2,
           LinearInterpretation::Mode::WeaklyMonotone, 2};
  for (const Tactic& cand : s.tactics)
    if (cand.kind == Tactic::Kind::SplitWorkflow) t = cand;
  auto node = prover.try_split_workflow(d, t, 0);
  if (node) return std::move(*node);
  return ProofNode{d, ProofNode::Outcome::Open, std::nullopt, {}, std::nullopt};
}

namespace {

VerifyResult fail(const RelativeDpp& problem, const std::string& why) {
  return {false, "node " + problem.to_string() + ": " + why};
}

VerifyResult replay_node(const ProofNode& n) {
  switch (n.outcome) {
    case ProofNode::Outcome::Open:
      if (!n.children.empty())
        // An inner node that did not close still carries its successors;
        // validate them but accept the Open outcome.
        break;
      return {true, ""};
    case ProofNode::Outcome::NotFinite: {
      if (!n.witness) return fail(n.problem, "NotFinite node without witness");
      VerifyResult v = verify_witness(n.problem, *n.witness);
      if (!v) return fail(n.problem, "witness rejected: " + v.diagnostic);
      return {true, ""};
    }
    case ProofNode::Outcome::Finite:
      if (!n.justification)
        return fail(n.problem, "Finite node without justification");
      break;
  }

  if (n.outcome == ProofNode::Outcome::Finite) {
    const Justification& j = *n.justification;
    std::vector<RelativeDpp> expected;
    if (const auto* tj = std::get_if<TrivialJustification>(&j)) {
      (void)tj;
      if (!is_trivially_finite(n.problem))
        return fail(n.problem, "Lemma-3 emptiness does not hold");
      if (!n.children.empty())
        return fail(n.problem, "trivial node must have no children");
    } else if (const auto* sj = std::get_if<SplitJustification>(&j)) {
      ProcessorResult r;
      try {
        r = split(n.problem, sj->delete_pairs, sj->delete_rules, sj->literal_variant);
      } catch (const std::invalid_argument& e) {
        return fail(n.problem, std::string("split bookkeeping: ") + e.what());
      }
      expected = r.successors;
      if (n.children.size() != expected.size())
        return fail(n.problem, "split bookkeeping: wrong successor count");
      for (std::size_t i = 0; i < expected.size(); ++i)
        if (!(n.children[i].problem == expected[i]))
          return fail(n.problem, "split bookkeeping: successor " +
                                     std::to_string(i) + " is " +
                                     n.children[i].problem.to_string() +
                                     ", expected " + expected[i].to_string());
    } else if (const auto* dj = std::get_if<DepGraphJustification>(&j)) {
      ProcessorResult r;
      try {
        r = dependency_graph(n.problem);
      } catch (const dpp_error& e) {
        return fail(n.problem, std::string("dependency graph: ") + e.what());
      }
      const auto& recomputed = std::get<DepGraphJustification>(r.justification);
      if (recomputed.edges != dj->edges || recomputed.sccs != dj->sccs)
        return fail(n.problem, "dependency graph estimation does not match");
      expected = r.successors;
      if (n.children.size() != expected.size())
        return fail(n.problem, "dependency graph: wrong successor count");
      for (std::size_t i = 0; i < expected.size(); ++i)
        if (!(n.children[i].problem == expected[i]))
          return fail(n.problem, "dependency graph: SCC successor mismatch");
    } else if (const auto* rj = std::get_if<ReductionPairJustification>(&j)) {
      auto r = reduction_pair(n.problem, rj->interp);
      if (!r) {
        auto why = orientation_violation(n.problem, rj->interp);
        return fail(n.problem, "reduction pair: " +
                                   why.value_or("orientation failed"));
      }
      const auto& recomputed = std::get<ReductionPairJustification>(r->justification);
      if (!(recomputed.removed_pairs == rj->removed_pairs) ||
          !(recomputed.removed_rules == rj->removed_rules))
        return fail(n.problem, "reduction pair: removed element mismatch");
      if (n.children.size() != 1 || !(n.children[0].problem == r->successors[0]))
        return fail(n.problem, "reduction pair: successor mismatch");
    } else if (const auto* lj = std::get_if<SemanticLabelingJustification>(&j)) {
      auto r = semantic_labeling(n.problem, lj->model);
      if (!r) return fail(n.problem, "semantic labeling: model condition violated");
      if (n.children.size() != 1 || !(n.children[0].problem == r->successors[0]))
        return fail(n.problem, "semantic labeling: labeled output mismatch");
    }
    for (const ProofNode& c : n.children)
      if (c.outcome != ProofNode::Outcome::Finite)
        return fail(n.problem, "Finite node has a non-finite child");
  }

  for (const ProofNode& c : n.children) {
    VerifyResult v = replay_node(c);
    if (!v) return v;
  }
  return {true, ""};
}

}  // namespace

VerifyResult replay(const ProofNode& root) { return replay_node(root); }

}  // namespace reldp
