// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "reldp/parse.hpp"
#include "reldp/proof_json.hpp"
#include "support/classic_loop.hpp"
#include "support/generators.hpp"

using namespace reldp;
using testsupport::Gen;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

Term V(const std::string& n) { return Term::var(n); }
Term F(const std::string& n, std::vector<Term> args = {}) {
  return Term::fun(n, std::move(args));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RelativeDpp example3() {
  return RelativeDpp::make(
      Trs{}, Trs(std::vector<Rule>{Rule(F("F#", {F("a")}), F("F#", {F("b")}))}),
      Trs(std::vector<Rule>{Rule(F("b"), F("a"))}), Trs{});
}

// --- criterion 1 -----------------------------------------------------------

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  FinitenessResult r = bounded_finiteness(example3(), OracleBounds{4, 5, 50});
  double elapsed = seconds_since(t0);
  bool ok = r.status == Finiteness::NotFinite && r.witness &&
            verify_witness(example3(), *r.witness).ok &&
            r.witness->minimality == Minimality::Verified && elapsed < 1.0;
  if (ok) {
    // The loop body must use the strict rule b -> a (rule index 0 is strict).
    bool strict_used = false;
    for (const ChainStep& s : r.witness->steps)
      for (const ConnectionStep& c : s.connection)
        if (c.strict_rule) strict_used = true;
    for (const ConnectionStep& c : r.witness->closing)
      if (c.strict_rule) strict_used = true;
    ok = strict_used;
  }
  std::ostringstream d;
  d << elapsed << " s";
  report(1, "Example 3 reproduction", ok, d.str());
}

// --- criterion 2 -----------------------------------------------------------

void criterion2() {
  Gen gen(1002);
  OracleBounds bounds{3, 4, 50};
  int bad = 0;
  const int total = 500;
  for (int i = 0; i < total; ++i) {
    RelativeDpp d = gen.lemma3_dpp(3, 3, 3);
    if (bounded_finiteness(d, bounds).status == Finiteness::NotFinite) ++bad;
    if (find_witness(d, bounds)) ++bad;
  }
  std::ostringstream d;
  d << total << " instances, " << bad << " NotFinite";
  report(2, "Lemma 3 property suite", bad == 0, d.str());
}

// --- criterion 3 -----------------------------------------------------------

void criterion3() {
  Gen gen(1003);
  OracleBounds bounds{3, 4, 40};
  int disagreements = 0;
  const int total = 200;
  for (int i = 0; i < total; ++i) {
    ClassicDpp c = gen.classic(3, 3, 3);
    bool ours = find_witness(embed(c), bounds).has_value();
    bool theirs = testsupport::ClassicLoopFinder(c, bounds).finds_loop();
    if (ours != theirs) ++disagreements;
  }
  std::ostringstream d;
  d << total << " instances, " << disagreements << " disagreements";
  report(3, "Lemma 1 embedding equivalence", disagreements == 0, d.str());
}

// --- criterion 4 -----------------------------------------------------------

void criterion4() {
  Rule p1(F("F#", {F("s", {V("x")})}), F("F#", {V("x")}));
  Rule p2(F("G#", {F("s", {V("x")})}), F("G#", {F("p", {F("s", {V("x")})})}));
  Rule r3(F("p", {F("s", {V("x")})}), V("x"));
  RelativeDpp d = RelativeDpp::make(Trs(std::vector<Rule>{p1, p2}), Trs{}, Trs{},
                                    Trs(std::vector<Rule>{r3}));
  ProcessorResult r = split(d, Trs(std::vector<Rule>{p1}), Trs{});
  bool ok =
      r.successors.size() == 2 &&
      r.successors[0] == RelativeDpp::make(Trs(std::vector<Rule>{p1}),
                                           Trs(std::vector<Rule>{p2}), Trs{},
                                           Trs(std::vector<Rule>{r3})) &&
      r.successors[1] == RelativeDpp::make(Trs(std::vector<Rule>{p2}), Trs{},
                                           Trs{}, Trs(std::vector<Rule>{r3}));
  report(4, "split bookkeeping exactness", ok, "");
}

// --- criteria 5 and 9 ------------------------------------------------------

struct FuzzStats {
  int corpus = 0;
  int soundness_violations = 0;
  int edge_misses = 0;
  int split_checked = 0, dg_checked = 0, rp_checked = 0, lab_checked = 0;
};

bool some_successor_not_finite(const std::vector<RelativeDpp>& succs,
                               OracleBounds doubled) {
  for (const RelativeDpp& s : succs)
    if (bounded_finiteness(s, doubled).status == Finiteness::NotFinite) return true;
  return false;
}

void criteria5and9() {
  Gen gen(1005);
  OracleBounds base{3, 4, 60};
  OracleBounds doubled{6, 8, 120};
  FuzzStats st;
  const int target = 500;
  int attempts = 0;
  while (st.corpus < target && attempts < 40000) {
    ++attempts;
    RelativeDpp d = gen.dpp(3, 3, 3);
    FinitenessResult r = bounded_finiteness(d, base);
    if (r.status != Finiteness::NotFinite) continue;
    ++st.corpus;
    const ChainWitness& w = *r.witness;

    // criterion 9: consecutive pair transitions are estimated-graph edges.
    ProcessorResult dgr = dependency_graph(d);
    const auto& edges = std::get<DepGraphJustification>(dgr.justification).edges;
    auto has_edge = [&](std::size_t a, std::size_t b) {
      for (auto [x, y] : edges)
        if (x == a && y == b) return true;
      return false;
    };
    for (std::size_t i = 0; i + 1 < w.steps.size(); ++i)
      if (!has_edge(w.steps[i].pair_index, w.steps[i + 1].pair_index))
        ++st.edge_misses;
    if (!has_edge(w.steps.back().pair_index, w.steps.front().pair_index))
      ++st.edge_misses;

    // criterion 5: every applicable processor preserves the loop somewhere.
    {  // split with a random delete set
      std::vector<Rule> dp, dr;
      for (const Rule& p : d.all_pairs())
        if (gen.coin()) dp.push_back(p);
      for (const Rule& rr : d.all_rules())
        if (gen.coin()) dr.push_back(rr);
      ProcessorResult sp = split(d, Trs(std::move(dp)), Trs(std::move(dr)));
      ++st.split_checked;
      if (!some_successor_not_finite(sp.successors, doubled))
        ++st.soundness_violations;
    }
    {  // dependency graph
      ++st.dg_checked;
      if (!some_successor_not_finite(dgr.successors, doubled))
        ++st.soundness_violations;
    }
    if (auto rp = search_reduction_pair(d, 1,
                                        LinearInterpretation::Mode::WeaklyMonotone,
                                        20000)) {
      ++st.rp_checked;
      if (!some_successor_not_finite(rp->second.successors, doubled))
        ++st.soundness_violations;
    }
    if (auto m = search_model(d, 2, 4096)) {
      if (auto lab = semantic_labeling(d, *m)) {
        ++st.lab_checked;
        if (!some_successor_not_finite(lab->successors, doubled))
          ++st.soundness_violations;
      }
    }
  }
  {
    std::ostringstream det;
    det << st.corpus << " NotFinite instances; split/dg/rp/labeling applications "
        << st.split_checked << "/" << st.dg_checked << "/" << st.rp_checked << "/"
        << st.lab_checked << "; " << st.soundness_violations << " violations";
    report(5, "processor soundness fuzzing",
           st.corpus >= target && st.soundness_violations == 0, det.str());
  }
  {
    std::ostringstream det;
    det << st.edge_misses << " missing edges over " << st.corpus << " witnesses";
    report(9, "dependency-graph over-approximation",
           st.corpus >= target && st.edge_misses == 0, det.str());
  }
}

// --- criterion 6 -----------------------------------------------------------

int run_command(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void criterion6() {
  const std::string dir = "/tmp/reldp_acceptance";
  std::system(("mkdir -p " + dir).c_str());
  const std::string trs = dir + "/minus.trs";
  const std::string proof = dir + "/minus_proof.json";
  {
    std::ofstream out(trs);
    out << "(VAR x y)\n(RULES\n  minus(x, 0) -> x\n"
           "  minus(s(x), s(y)) -> minus(x, y)\n)\n";
  }
  auto t0 = std::chrono::steady_clock::now();
  int prove_exit =
      run_command(std::string(RELDP_CLI_PATH) + " prove " + trs +
                  " --format json > " + proof);
  int check_exit =
      run_command(std::string(RELDP_CLI_PATH) + " check " + proof + " > /dev/null");
  double elapsed = seconds_since(t0);

  bool ok = prove_exit == 0 && check_exit == 0 && elapsed < 5.0;
  if (ok) {
    // The certificate must remove the minus# pair with a reduction pair and
    // close the remainder trivially.
    std::ifstream in(proof);
    std::stringstream ss;
    ss << in.rdbuf();
    ProofNode root = proof_from_json(Json::parse(ss.str()));
    ok = root.outcome == ProofNode::Outcome::Finite && root.justification &&
         std::holds_alternative<ReductionPairJustification>(*root.justification) &&
         root.children.size() == 1 &&
         root.children[0].problem.strict_pairs().empty() && replay(root).ok;
  }
  std::ostringstream det;
  det << "prove exit " << prove_exit << ", check exit " << check_exit << ", "
      << elapsed << " s";
  report(6, "end-to-end finiteness proof", ok, det.str());
}

// --- criterion 7 -----------------------------------------------------------

// Random term over exactly the given signature, so that every symbol is
// covered by the model found for the system.
Term term_over(Gen& gen, const std::vector<Symbol>& sig, std::size_t max_depth) {
  std::vector<Symbol> leaves, inner;
  for (const Symbol& f : sig) (f.arity == 0 ? leaves : inner).push_back(f);
  if (max_depth == 0 || inner.empty() || gen.coin(0.3)) {
    if (!leaves.empty() && gen.coin(0.7)) return Term::fun(gen.pick(leaves), {});
    return V(gen.coin() ? "x" : "y");
  }
  Symbol f = gen.pick(inner);
  std::vector<Term> args;
  for (std::size_t i = 0; i < f.arity; ++i)
    args.push_back(term_over(gen, sig, max_depth - 1));
  return Term::fun(f, std::move(args));
}

void criterion7() {
  Gen gen(1007);
  int checked = 0, lifted_failures = 0;
  const int target = 300;
  int guard = 0;
  while (checked < target && guard++ < 4000) {
    RelativeDpp d = RelativeDpp::make(Trs{}, Trs{}, Trs{}, gen.trs(3, 3));
    if (d.weak_rules().empty()) continue;
    auto m = search_model(d, 2, 4096);
    if (!m) continue;
    auto lab = semantic_labeling(d, *m);
    if (!lab) continue;
    Trs labeled_rules = lab->successors[0].all_rules();
    Trs rules = d.all_rules();
    std::vector<Symbol> sig(rules.signature().begin(), rules.signature().end());
    for (int k = 0; k < 8 && checked < target; ++k) {
      Term s = term_over(gen, sig, 4);
      std::vector<RewriteStep> steps = successors(s, rules, RewriteMode::Anywhere);
      if (steps.empty()) continue;
      const RewriteStep& step = steps[gen.below(steps.size())];
      std::map<std::string, std::size_t> alpha;
      for (const std::string& v : s.vars()) alpha[v] = gen.below(m->carrier_size);
      for (const std::string& v : step.result.vars())
        if (!alpha.count(v)) alpha[v] = gen.below(m->carrier_size);
      Term ls = label_term(s, *m, alpha);
      Term lt = label_term(step.result, *m, alpha);
      bool found = false;
      for (const RewriteStep& lstep :
           successors(ls, labeled_rules, RewriteMode::Anywhere))
        if (lstep.result == lt && lstep.pos == step.pos) found = true;
      ++checked;
      if (!found) ++lifted_failures;
    }
  }
  std::ostringstream det;
  det << checked << " triples, " << lifted_failures << " failures";
  report(7, "labeling step-lifting", checked >= target && lifted_failures == 0,
         det.str());
}

// --- criterion 8 -----------------------------------------------------------

bool subtree_all_labeled_and_closed(const ProofNode& n) {
  if (!is_labeled(n.problem) && !is_trivially_finite(n.problem)) return false;
  if (n.outcome != ProofNode::Outcome::Finite) return false;
  for (const ProofNode& c : n.children)
    if (!subtree_all_labeled_and_closed(c)) return false;
  return true;
}

bool check_workflow(const RelativeDpp& d, const RelativeDpp& expected_second,
                    std::string& why) {
  Strategy s = default_strategy();
  ProofNode root = split_workflow(d, s);
  if (!root.justification ||
      !std::holds_alternative<SplitJustification>(*root.justification)) {
    why = "no split at the root";
    return false;
  }
  if (root.children.size() != 2) {
    why = "expected two successors";
    return false;
  }
  const ProofNode& first = root.children[0];
  const ProofNode& second = root.children[1];
  if (!(second.problem == expected_second)) {
    why = "second successor is " + second.problem.to_string();
    return false;
  }
  if (first.outcome != ProofNode::Outcome::Finite) {
    why = "first successor not closed";
    return false;
  }
  if (!first.justification ||
      !std::holds_alternative<SemanticLabelingJustification>(*first.justification)) {
    why = "first successor not closed via labeling";
    return false;
  }
  // Everything below the labeling step stays labeled until Lemma 3 closes it.
  for (const ProofNode& c : first.children)
    if (!subtree_all_labeled_and_closed(c)) {
      why = "labeled subtree not closed through Lemma-3 leaves";
      return false;
    }
  if (!replay(root).ok) {
    why = "replay failed";
    return false;
  }
  return true;
}

void criterion8() {
  Rule p1(F("F#", {F("s", {V("x")})}), F("F#", {V("x")}));
  Rule p2(F("G#", {F("s", {V("x")})}), F("G#", {F("p", {F("s", {V("x")})})}));
  Rule r3(F("p", {F("s", {V("x")})}), V("x"));
  Rule r4(F("q", {V("x")}), V("x"));

  RelativeDpp ex6 = RelativeDpp::make(Trs(std::vector<Rule>{p1, p2}), Trs{}, Trs{},
                                      Trs(std::vector<Rule>{r3}));
  RelativeDpp ex6_second = RelativeDpp::make(
      Trs(std::vector<Rule>{p2}), Trs{}, Trs{}, Trs(std::vector<Rule>{r3}));

  RelativeDpp ex7 = RelativeDpp::make(Trs(std::vector<Rule>{p1, p2}), Trs{}, Trs{},
                                      Trs(std::vector<Rule>{r3, r4}));
  RelativeDpp ex7_second = RelativeDpp::make(
      Trs(std::vector<Rule>{p2}), Trs{}, Trs{}, Trs(std::vector<Rule>{r3, r4}));

  std::string why6, why7;
  bool ok6 = check_workflow(ex6, ex6_second, why6);
  bool ok7 = check_workflow(ex7, ex7_second, why7);
  std::string detail;
  if (!ok6) detail += "first instance: " + why6;
  if (!ok7) detail += (detail.empty() ? "" : "; ") + ("second instance: " + why7);
  report(8, "split workflow replay", ok6 && ok7, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criteria5and9();
  criterion6();
  criterion7();
  criterion8();
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
