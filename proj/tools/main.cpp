#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "reldp/parse.hpp"
#include "reldp/proof_json.hpp"

namespace {

using namespace reldp;

constexpr int kExitFinite = 0;
constexpr int kExitNotFinite = 1;
constexpr int kExitOpen = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInput = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// .trs inputs become their initial relative DPP; .rdp inputs are taken as is.
RelativeDpp load_problem(const std::string& path) {
  std::string text = read_file(path);
  if (has_suffix(path, ".rdp")) return parse_rdp(text);
  ParsedTrs trs = parse_trs(text);
  return initial(trs.strict, trs.weak);
}

Strategy load_strategy(const std::string& spec) {
  if (spec.empty() || spec == "default") return default_strategy();
  // A strategy file is a JSON object {"tactics": [...], "max_depth": n, ...}
  Json j = Json::parse(read_file(spec));
  Strategy s = default_strategy();
  if (j.contains("max_depth")) s.max_depth = j["max_depth"].get<std::size_t>();
  if (j.contains("time_budget_seconds"))
    s.time_budget_seconds = j["time_budget_seconds"].get<double>();
  if (j.contains("oracle")) {
    s.oracle.max_steps = j["oracle"].value("max_steps", s.oracle.max_steps);
    s.oracle.max_term_depth =
        j["oracle"].value("max_term_depth", s.oracle.max_term_depth);
    s.oracle.rewrite_budget =
        j["oracle"].value("rewrite_budget", s.oracle.rewrite_budget);
  }
  if (j.contains("tactics")) {
    s.tactics.clear();
    for (const Json& t : j["tactics"]) {
      Tactic tactic;
      std::string name = t.at("name").get<std::string>();
      if (name == "trivial") tactic.kind = Tactic::Kind::Trivial;
      else if (name == "dependency_graph") tactic.kind = Tactic::Kind::DependencyGraph;
      else if (name == "reduction_pair") tactic.kind = Tactic::Kind::ReductionPair;
      else if (name == "semantic_labeling") tactic.kind = Tactic::Kind::SemanticLabeling;
      else if (name == "split_workflow") tactic.kind = Tactic::Kind::SplitWorkflow;
      else throw std::runtime_error("unknown tactic " + name);
      tactic.bound = t.value("bound", tactic.bound);
      tactic.carrier = t.value("carrier", tactic.carrier);
      if (t.value("mode", "weak") == "strict")
        tactic.mode = LinearInterpretation::Mode::StrictlyMonotone;
      s.tactics.push_back(tactic);
    }
  }
  return s;
}

void print_proof_text(const ProofNode& n, std::ostream& os, int indent) {
  std::string pad(2 * indent, ' ');
  const char* outcome = n.outcome == ProofNode::Outcome::Finite      ? "finite"
                        : n.outcome == ProofNode::Outcome::NotFinite ? "not finite"
                                                                     : "open";
  os << pad << n.problem.to_string() << "  [" << outcome;
  if (n.justification) os << " via " << justification_name(*n.justification);
  os << "]\n";
  for (const ProofNode& c : n.children) print_proof_text(c, os, indent + 1);
}

int run_prove(const std::string& file, const std::string& strategy,
              const std::string& format, double timeout) {
  RelativeDpp d = load_problem(file);
  Strategy s = load_strategy(strategy);
  if (timeout > 0) s.time_budget_seconds = timeout;
  ProofNode proof = prove(d, s);
  if (format == "json")
    std::cout << proof_to_json(proof).dump(2) << '\n';
  else
    print_proof_text(proof, std::cout, 0);
  switch (proof.outcome) {
    case ProofNode::Outcome::Finite: return kExitFinite;
    case ProofNode::Outcome::NotFinite: return kExitNotFinite;
    case ProofNode::Outcome::Open: return kExitOpen;
  }
  return kExitUsage;
}

int run_oracle(const std::string& file, OracleBounds bounds) {
  RelativeDpp d = load_problem(file);
  FinitenessResult r = bounded_finiteness(d, bounds);
  switch (r.status) {
    case Finiteness::Finite:
      std::cout << "Finite\n";
      return kExitFinite;
    case Finiteness::NotFinite:
      std::cout << "NotFinite\n" << witness_to_json(*r.witness).dump(2) << '\n';
      return kExitNotFinite;
    case Finiteness::Unknown:
      std::cout << "Unknown\n";
      if (r.witness)
        std::cout << witness_to_json(*r.witness).dump(2) << '\n';
      return kExitOpen;
  }
  return kExitUsage;
}

int run_dps(const std::string& file) {
  std::string text = read_file(file);
  ParsedTrs trs = parse_trs(text);
  std::cout << print_rdp(initial(trs.strict, trs.weak));
  return 0;
}

int run_graph(const std::string& file) {
  RelativeDpp d = load_problem(file);
  Trs pairs = d.all_pairs();
  std::size_t nsp = d.strict_pairs().size();
  ProcessorResult r = dependency_graph(d);
  const auto& j = std::get<DepGraphJustification>(r.justification);
  std::cout << "digraph dependency_graph {\n";
  for (std::size_t i = 0; i < pairs.size(); ++i)
    std::cout << "  n" << i << " [label=\"" << pairs[i].to_string() << "\""
              << (i < nsp ? "" : ", style=dashed") << "];\n";
  for (auto [a, b] : j.edges) std::cout << "  n" << a << " -> n" << b << ";\n";
  std::cout << "}\n";
  return 0;
}

int run_check(const std::string& file) {
  Json j = Json::parse(read_file(file));
  ProofNode proof = proof_from_json(j);
  VerifyResult v = replay(proof);
  if (!v) {
    std::cerr << "replay failed: " << v.diagnostic << '\n';
    return 1;
  }
  std::cout << "proof replays\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative dependency pair termination prover"};
  app.require_subcommand(1);

  std::string file, strategy, format = "json", proof_file;
  double timeout = 0;
  OracleBounds bounds;

  CLI::App* prove_cmd = app.add_subcommand("prove", "prove finiteness of a problem");
  prove_cmd->add_option("file", file)->required();
  prove_cmd->add_option("--strategy", strategy, "strategy name or JSON file");
  prove_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  prove_cmd->add_option("--timeout", timeout, "time budget in seconds");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "bounded chain search (desk-scale oracle)");
  oracle_cmd->add_option("file", file)->required();
  oracle_cmd->add_option("--max-steps", bounds.max_steps);
  oracle_cmd->add_option("--term-depth", bounds.max_term_depth);
  oracle_cmd->add_option("--rewrite-budget", bounds.rewrite_budget);

  CLI::App* dps_cmd = app.add_subcommand("dps", "print the initial relative DPP");
  dps_cmd->add_option("file", file)->required();

  CLI::App* graph_cmd = app.add_subcommand("graph", "estimated dependency graph");
  graph_cmd->add_option("file", file)->required();
  bool dot = false;
  graph_cmd->add_flag("--dot", dot, "DOT output (the only supported format)");

  CLI::App* check_cmd = app.add_subcommand("check", "replay a JSON proof");
  check_cmd->add_option("proof", proof_file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (prove_cmd->parsed()) return run_prove(file, strategy, format, timeout);
    if (oracle_cmd->parsed()) return run_oracle(file, bounds);
    if (dps_cmd->parsed()) return run_dps(file);
    if (graph_cmd->parsed()) return run_graph(file);
    if (check_cmd->parsed()) return run_check(proof_file);
  } catch (const reldp::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
