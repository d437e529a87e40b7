#include "reldp/proof_json.hpp"

namespace reldp {

Json term_to_json(const Term& t) {
  if (t.is_var()) return Json{{"var", t.var_name()}};
  Json args = Json::array();
  for (const Term& a : t.args()) args.push_back(term_to_json(a));
  return Json{{"fun", t.fun_name()}, {"args", std::move(args)}};
}

Term term_from_json(const Json& j) {
  if (j.contains("var")) return Term::var(j.at("var").get<std::string>());
  std::vector<Term> args;
  for (const Json& a : j.at("args")) args.push_back(term_from_json(a));
  return Term::fun(j.at("fun").get<std::string>(), std::move(args));
}

Json rule_to_json(const Rule& r) {
  return Json{{"lhs", term_to_json(r.lhs)}, {"rhs", term_to_json(r.rhs)}};
}

Rule rule_from_json(const Json& j) {
  return Rule(term_from_json(j.at("lhs")), term_from_json(j.at("rhs")));
}

Json trs_to_json(const Trs& t) {
  Json out = Json::array();
  for (const Rule& r : t) out.push_back(rule_to_json(r));
  return out;
}

Trs trs_from_json(const Json& j) {
  std::vector<Rule> rules;
  for (const Json& r : j) rules.push_back(rule_from_json(r));
  return Trs(std::move(rules));
}

Json dpp_to_json(const RelativeDpp& d) {
  return Json{{"strict_pairs", trs_to_json(d.strict_pairs())},
              {"weak_pairs", trs_to_json(d.weak_pairs())},
              {"strict_rules", trs_to_json(d.strict_rules())},
              {"weak_rules", trs_to_json(d.weak_rules())}};
}

RelativeDpp dpp_from_json(const Json& j) {
  return RelativeDpp::make_unchecked(
      trs_from_json(j.at("strict_pairs")), trs_from_json(j.at("weak_pairs")),
      trs_from_json(j.at("strict_rules")), trs_from_json(j.at("weak_rules")));
}

namespace {

Json substitution_to_json(const Substitution& s) {
  Json out = Json::object();
  for (const auto& [v, t] : s.bindings()) out[v] = term_to_json(t);
  return out;
}

Substitution substitution_from_json(const Json& j) {
  Substitution s;
  for (auto it = j.begin(); it != j.end(); ++it)
    s.bind(it.key(), term_from_json(it.value()));
  return s;
}

Json connection_to_json(const std::vector<ConnectionStep>& conn) {
  Json out = Json::array();
  for (const ConnectionStep& c : conn)
    out.push_back(Json{{"rule_index", c.rule_index},
                       {"position", c.pos},
                       {"strict_rule", c.strict_rule}});
  return out;
}

std::vector<ConnectionStep> connection_from_json(const Json& j) {
  std::vector<ConnectionStep> out;
  for (const Json& c : j)
    out.push_back({c.at("rule_index").get<std::size_t>(),
                   c.at("position").get<Position>(),
                   c.at("strict_rule").get<bool>()});
  return out;
}

Json interp_to_json(const LinearInterpretation& i) {
  Json coeffs = Json::object();
  for (const auto& [name, cs] : i.coefficients) coeffs[name] = cs;
  return Json{{"mode", i.mode == LinearInterpretation::Mode::WeaklyMonotone
                           ? "weakly_monotone"
                           : "strictly_monotone"},
              {"coefficients", std::move(coeffs)}};
}

LinearInterpretation interp_from_json(const Json& j) {
  LinearInterpretation out;
  out.mode = j.at("mode").get<std::string>() == "weakly_monotone"
                 ? LinearInterpretation::Mode::WeaklyMonotone
                 : LinearInterpretation::Mode::StrictlyMonotone;
  const Json& coeffs = j.at("coefficients");
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it)
    out.coefficients[it.key()] = it.value().get<std::vector<long long>>();
  return out;
}

Json model_to_json(const FiniteModel& m) {
  Json tables = Json::object();
  for (const auto& [name, t] : m.tables) tables[name] = t;
  return Json{{"carrier_size", m.carrier_size}, {"tables", std::move(tables)}};
}

FiniteModel model_from_json(const Json& j) {
  FiniteModel out;
  out.carrier_size = j.at("carrier_size").get<std::size_t>();
  const Json& tables = j.at("tables");
  for (auto it = tables.begin(); it != tables.end(); ++it)
    out.tables[it.key()] = it.value().get<std::vector<std::size_t>>();
  return out;
}

Json justification_params(const Justification& j) {
  if (std::holds_alternative<TrivialJustification>(j)) return Json::object();
  if (const auto* s = std::get_if<SplitJustification>(&j))
    return Json{{"delete_pairs", trs_to_json(s->delete_pairs)},
                {"delete_rules", trs_to_json(s->delete_rules)},
                {"literal", s->literal_variant}};
  if (const auto* g = std::get_if<DepGraphJustification>(&j)) {
    Json edges = Json::array();
    for (auto [a, b] : g->edges) edges.push_back(Json::array({a, b}));
    return Json{{"edges", std::move(edges)}, {"sccs", g->sccs}};
  }
  if (const auto* r = std::get_if<ReductionPairJustification>(&j))
    return Json{{"interpretation", interp_to_json(r->interp)},
                {"removed_pairs", trs_to_json(r->removed_pairs)},
                {"removed_rules", trs_to_json(r->removed_rules)}};
  const auto& l = std::get<SemanticLabelingJustification>(j);
  return Json{{"model", model_to_json(l.model)}};
}

Justification justification_from_json(const std::string& name, const Json& params) {
  if (name == "trivial") return TrivialJustification{};
  if (name == "split")
    return SplitJustification{trs_from_json(params.at("delete_pairs")),
                              trs_from_json(params.at("delete_rules")),
                              params.at("literal").get<bool>()};
  if (name == "dependency_graph") {
    DepGraphJustification out;
    for (const Json& e : params.at("edges"))
      out.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    out.sccs = params.at("sccs").get<std::vector<std::vector<std::size_t>>>();
    return out;
  }
  if (name == "reduction_pair")
    return ReductionPairJustification{
        interp_from_json(params.at("interpretation")),
        trs_from_json(params.at("removed_pairs")),
        trs_from_json(params.at("removed_rules"))};
  if (name == "semantic_labeling")
    return SemanticLabelingJustification{model_from_json(params.at("model"))};
  throw std::invalid_argument("unknown processor " + name);
}

}  // namespace

Json witness_to_json(const ChainWitness& w) {
  Json steps = Json::array();
  for (const ChainStep& s : w.steps)
    steps.push_back(Json{{"pair_index", s.pair_index},
                         {"strict_pair", s.strict_pair},
                         {"sigma", substitution_to_json(s.sigma)},
                         {"connection", connection_to_json(s.connection)}});
  return Json{{"steps", std::move(steps)},
              {"closing", connection_to_json(w.closing)},
              {"theta", substitution_to_json(w.theta)},
              {"minimality",
               w.minimality == Minimality::Verified ? "verified" : "unknown"},
              {"sn_budget", w.sn_budget}};
}

ChainWitness witness_from_json(const Json& j) {
  ChainWitness w;
  for (const Json& s : j.at("steps"))
    w.steps.push_back({s.at("pair_index").get<std::size_t>(),
                       s.at("strict_pair").get<bool>(),
                       substitution_from_json(s.at("sigma")),
                       connection_from_json(s.at("connection"))});
  w.closing = connection_from_json(j.at("closing"));
  w.theta = substitution_from_json(j.at("theta"));
  w.minimality = j.at("minimality").get<std::string>() == "verified"
                     ? Minimality::Verified
                     : Minimality::Unknown;
  w.sn_budget = j.at("sn_budget").get<std::size_t>();
  return w;
}

Json proof_to_json(const ProofNode& n) {
  Json out;
  out["problem"] = dpp_to_json(n.problem);
  switch (n.outcome) {
    case ProofNode::Outcome::Finite:
      out["outcome"] = "finite";
      break;
    case ProofNode::Outcome::NotFinite:
      out["outcome"] = "not_finite";
      break;
    case ProofNode::Outcome::Open:
      out["outcome"] = "open";
      break;
  }
  if (n.justification) {
    out["processor"] = justification_name(*n.justification);
    out["parameters"] = justification_params(*n.justification);
  }
  if (n.witness) out["witness"] = witness_to_json(*n.witness);
  if (!n.children.empty()) {
    Json children = Json::array();
    for (const ProofNode& c : n.children) children.push_back(proof_to_json(c));
    out["children"] = std::move(children);
  }
  return out;
}

ProofNode proof_from_json(const Json& j) {
  ProofNode n;
  n.problem = dpp_from_json(j.at("problem"));
  std::string outcome = j.at("outcome").get<std::string>();
  n.outcome = outcome == "finite"    ? ProofNode::Outcome::Finite
              : outcome == "not_finite" ? ProofNode::Outcome::NotFinite
                                        : ProofNode::Outcome::Open;
  if (j.contains("processor"))
    n.justification = justification_from_json(j.at("processor").get<std::string>(),
                                              j.at("parameters"));
  if (j.contains("witness")) n.witness = witness_from_json(j.at("witness"));
  if (j.contains("children"))
    for (const Json& c : j.at("children")) n.children.push_back(proof_from_json(c));
  return n;
}

}  // namespace reldp
