#include "reldp/processors.hpp"

#include <algorithm>
#include <functional>

namespace reldp {

std::string justification_name(const Justification& j) {
  struct Visitor {
    std::string operator()(const TrivialJustification&) { return "trivial"; }
    std::string operator()(const SplitJustification&) { return "split"; }
    std::string operator()(const DepGraphJustification&) {
      return "dependency_graph";
    }
    std::string operator()(const ReductionPairJustification&) {
      return "reduction_pair";
    }
    std::string operator()(const SemanticLabelingJustification&) {
      return "semantic_labeling";
    }
  };
  return std::visit(Visitor{}, j);
}

std::optional<ProcessorResult> trivial(const RelativeDpp& d) {
  if (!is_trivially_finite(d)) return std::nullopt;
  return ProcessorResult{{}, TrivialJustification{}};
}

ProcessorResult split(const RelativeDpp& d, const Trs& delete_pairs,
                      const Trs& delete_rules, bool literal_variant) {
  Trs all_pairs = d.all_pairs();
  Trs all_rules = d.all_rules();
  for (const Rule& p : delete_pairs)
    if (!all_pairs.contains(p))
      throw std::invalid_argument("delete pair " + p.to_string() +
                                  " is not a pair of the problem");
  for (const Rule& r : delete_rules)
    if (!all_rules.contains(r))
      throw std::invalid_argument("delete rule " + r.to_string() +
                                  " is not a rule of the problem");

  auto keep = [](const Trs& t, const Trs& del, bool in_del) {
    std::vector<Rule> out;
    for (const Rule& r : t)
      if (del.contains(r) == in_del) out.push_back(r);
    return Trs(std::move(out));
  };

  RelativeDpp first = RelativeDpp::make(
      keep(all_pairs, delete_pairs, true), keep(all_pairs, delete_pairs, false),
      keep(all_rules, delete_rules, true), keep(all_rules, delete_rules, false));

  Trs p1w = keep(d.strict_pairs(), delete_pairs, false);
  Trs p2w = keep(d.weak_pairs(), delete_pairs, false);
  Trs r1w = keep(d.strict_rules(), delete_rules, false);
  Trs r2w = keep(d.weak_rules(), delete_rules, false);
  RelativeDpp second =
      literal_variant ? RelativeDpp::make_unchecked(p1w, p2w, r2w, r2w)
                      : RelativeDpp::make(p1w, p2w, r1w, r2w);

  return ProcessorResult{
      {std::move(first), std::move(second)},
      SplitJustification{delete_pairs, delete_rules, literal_variant}};
}

namespace {

Term cap_rec(const Term& t, const std::set<Symbol>& defined, std::size_t& counter) {
  if (t.is_var() || defined.contains(t.symbol()))
    return Term::var("!c" + std::to_string(counter++));
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(cap_rec(a, defined, counter));
  return Term::fun(t.fun_name(), std::move(args));
}

}  // namespace

Term cap(const Term& t, const std::set<Symbol>& defined) {
  std::size_t counter = 0;
  if (t.is_var()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  // The root itself (a marked pair root) is kept rigid.
  for (const Term& a : t.args()) args.push_back(cap_rec(a, defined, counter));
  return Term::fun(t.fun_name(), std::move(args));
}

bool dg_edge(const Rule& p, const Rule& q, const std::set<Symbol>& defined) {
  if (p.rhs.is_var()) return false;  // a variable rhs cannot head a pair step
  Term capped = cap(p.rhs, defined);
  auto [lhs_q, renaming] = rename_apart(q.lhs, capped.vars());
  (void)renaming;
  return unify(capped, lhs_q).has_value();
}

namespace {

struct TarjanState {
  const std::vector<std::vector<std::size_t>>& adj;
  std::vector<long> index, low;
  std::vector<bool> on_stack;
  std::vector<std::size_t> stack;
  long next = 0;
  std::vector<std::vector<std::size_t>> components;

  explicit TarjanState(const std::vector<std::vector<std::size_t>>& adj)
      : adj(adj), index(adj.size(), -1), low(adj.size(), 0),
        on_stack(adj.size(), false) {}

  void visit(std::size_t v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      components.push_back(std::move(comp));
    }
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> sccs(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) adj[a].push_back(b);
  TarjanState tarjan(adj);
  for (std::size_t v = 0; v < n; ++v)
    if (tarjan.index[v] < 0) tarjan.visit(v);

  std::vector<std::vector<std::size_t>> out;
  for (auto& comp : tarjan.components) {
    std::sort(comp.begin(), comp.end());
    if (comp.size() == 1) {
      std::size_t v = comp.front();
      bool self_loop =
          std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
      if (!self_loop) continue;
    }
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

ProcessorResult dependency_graph(const RelativeDpp& d) {
  check_mark_placement(d);
  Trs pairs = d.all_pairs();
  std::size_t nsp = d.strict_pairs().size();
  std::set<Symbol> defined = defined_symbols(d.all_rules());

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (dg_edge(pairs[i], pairs[j], defined)) edges.emplace_back(i, j);

  std::vector<std::vector<std::size_t>> components = sccs(pairs.size(), edges);

  std::vector<RelativeDpp> succ;
  std::vector<std::vector<std::size_t>> kept;
  for (const auto& comp : components) {
    std::vector<Rule> strict, weak;
    for (std::size_t i : comp)
      (i < nsp ? strict : weak).push_back(pairs[i]);
    RelativeDpp s = RelativeDpp::make(Trs(std::move(strict)), Trs(std::move(weak)),
                                      d.strict_rules(), d.weak_rules());
    if (is_trivially_finite(s)) continue;
    succ.push_back(std::move(s));
    kept.push_back(comp);
  }
  return ProcessorResult{std::move(succ),
                         DepGraphJustification{std::move(edges), std::move(kept)}};
}

namespace {

// Linear polynomial over the variables of one rule side.
struct Poly {
  long long constant = 0;
  std::map<std::string, long long> coeff;
};

Poly eval_poly(const Term& t, const LinearInterpretation& interp) {
  Poly p;
  if (t.is_var()) {
    p.coeff[t.var_name()] = 1;
    return p;
  }
  auto it = interp.coefficients.find(t.fun_name());
  if (it == interp.coefficients.end() || it->second.size() != t.args().size() + 1)
    throw std::invalid_argument("interpretation does not cover symbol " +
                                t.fun_name() + "/" + std::to_string(t.args().size()));
  p.constant = it->second[0];
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    long long c = it->second[i + 1];
    if (c == 0) continue;
    Poly sub = eval_poly(t.args()[i], interp);
    p.constant += c * sub.constant;
    for (const auto& [v, k] : sub.coeff) p.coeff[v] += c * k;
  }
  return p;
}

bool poly_geq(const Poly& l, const Poly& r) {
  if (l.constant < r.constant) return false;
  for (const auto& [v, k] : r.coeff) {
    auto it = l.coeff.find(v);
    long long lk = it == l.coeff.end() ? 0 : it->second;
    if (lk < k) return false;
  }
  return true;
}

bool poly_gt(const Poly& l, const Poly& r) {
  return poly_geq(l, r) && l.constant > r.constant;
}

std::set<Symbol> problem_signature(const RelativeDpp& d) {
  Trs pairs = d.all_pairs(), rules = d.all_rules();
  std::set<Symbol> sig = pairs.signature();
  sig.insert(rules.signature().begin(), rules.signature().end());
  return sig;
}

}  // namespace

std::optional<std::string> orientation_violation(const RelativeDpp& d,
                                                 const LinearInterpretation& interp) {
  for (const Rule& r : concat(d.all_pairs(), d.all_rules()))
    if (!poly_geq(eval_poly(r.lhs, interp), eval_poly(r.rhs, interp)))
      return "[" + r.lhs.to_string() + "] >= [" + r.rhs.to_string() +
             "] does not hold";
  return std::nullopt;
}

std::optional<ProcessorResult> reduction_pair(const RelativeDpp& d,
                                              const LinearInterpretation& interp) {
  if (interp.mode == LinearInterpretation::Mode::StrictlyMonotone)
    for (const auto& [name, cs] : interp.coefficients)
      for (std::size_t i = 1; i < cs.size(); ++i)
        if (cs[i] < 1)
          throw std::invalid_argument(
              "strictly monotone interpretation requires every argument "
              "coefficient of " + name + " to be at least 1");

  auto strictly = [&](const Rule& r) {
    return poly_gt(eval_poly(r.lhs, interp), eval_poly(r.rhs, interp));
  };
  for (const Rule& r : concat(d.all_pairs(), d.all_rules()))
    if (!poly_geq(eval_poly(r.lhs, interp), eval_poly(r.rhs, interp)))
      return std::nullopt;

  auto filter = [&](const Trs& t, bool removable, Trs& removed) {
    std::vector<Rule> kept, gone;
    for (const Rule& r : t)
      (removable && strictly(r) ? gone : kept).push_back(r);
    removed = concat(removed, Trs(std::move(gone)));
    return Trs(std::move(kept));
  };

  bool strict_mode = interp.mode == LinearInterpretation::Mode::StrictlyMonotone;
  Trs removed_pairs, removed_rules;
  Trs p = filter(d.strict_pairs(), true, removed_pairs);
  Trs pw = filter(d.weak_pairs(), true, removed_pairs);
  Trs r = filter(d.strict_rules(), strict_mode, removed_rules);
  Trs rw = filter(d.weak_rules(), strict_mode, removed_rules);

  return ProcessorResult{
      {RelativeDpp::make(std::move(p), std::move(pw), std::move(r), std::move(rw))},
      ReductionPairJustification{interp, std::move(removed_pairs),
                                 std::move(removed_rules)}};
}

std::optional<std::pair<LinearInterpretation, ProcessorResult>>
search_reduction_pair(const RelativeDpp& d, long long coefficient_bound,
                      LinearInterpretation::Mode mode, std::size_t max_candidates) {
  if (coefficient_bound < 1)
    throw std::invalid_argument("coefficient bound must be at least 1");
  std::set<Symbol> sig = problem_signature(d);
  std::vector<Symbol> symbols(sig.begin(), sig.end());
  long long lo_arg = mode == LinearInterpretation::Mode::StrictlyMonotone ? 1 : 0;

  // One odometer digit per parameter: per symbol [c0, c1..cn], symbols in
  // name order, rightmost digit fastest. Each digit indexes a per-parameter
  // value sequence; argument coefficients try 1 first so that
  // argument-preserving interpretations are enumerated early.
  std::vector<long long> const_values, arg_values{1};
  for (long long v = 0; v <= coefficient_bound; ++v) {
    const_values.push_back(v);
    if (v != 1 && v >= lo_arg) arg_values.push_back(v);
  }
  std::vector<const std::vector<long long>*> value_seq;
  std::vector<std::size_t> digits;
  for (const Symbol& f : symbols) {
    value_seq.push_back(&const_values);
    for (std::size_t i = 0; i < f.arity; ++i) value_seq.push_back(&arg_values);
  }
  digits.assign(value_seq.size(), 0);

  std::size_t tried = 0;
  while (tried < max_candidates) {
    ++tried;
    LinearInterpretation interp{mode, {}};
    std::size_t k = 0;
    for (const Symbol& f : symbols) {
      std::vector<long long> cs;
      for (std::size_t i = 0; i <= f.arity; ++i, ++k)
        cs.push_back((*value_seq[k])[digits[k]]);
      interp.coefficients[f.name] = std::move(cs);
    }
    if (auto result = reduction_pair(d, interp)) {
      const auto& just = std::get<ReductionPairJustification>(result->justification);
      if (!just.removed_pairs.empty() || !just.removed_rules.empty())
        return std::make_pair(std::move(interp), std::move(*result));
    }
    // increment odometer
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (digits[pos] + 1 < value_seq[pos]->size()) {
        ++digits[pos];
        break;
      }
      digits[pos] = 0;
      if (pos == 0) return std::nullopt;  // wrapped around
    }
    if (digits.empty()) return std::nullopt;
  }
  return std::nullopt;
}

std::size_t eval_term(const Term& t, const FiniteModel& m,
                      const std::map<std::string, std::size_t>& assignment) {
  if (t.is_var()) {
    auto it = assignment.find(t.var_name());
    if (it == assignment.end())
      throw std::invalid_argument("assignment does not cover variable " +
                                  t.var_name());
    return it->second;
  }
  auto it = m.tables.find(t.fun_name());
  if (it == m.tables.end())
    throw std::invalid_argument("model does not cover symbol " + t.fun_name());
  std::size_t index = 0;
  for (const Term& a : t.args())
    index = index * m.carrier_size + eval_term(a, m, assignment);
  return it->second.at(index);
}

Term label_term(const Term& t, const FiniteModel& m,
                const std::map<std::string, std::size_t>& assignment) {
  if (t.is_var()) return t;
  std::vector<Term> args;
  std::string label;
  for (const Term& a : t.args()) {
    label += std::to_string(eval_term(a, m, assignment));
    args.push_back(label_term(a, m, assignment));
  }
  std::string name = t.fun_name();
  if (!t.args().empty()) name += "." + label;
  return Term::fun(name, std::move(args));
}

namespace {

std::vector<std::map<std::string, std::size_t>> all_assignments(
    const std::set<std::string>& vars, std::size_t carrier) {
  std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<std::map<std::string, std::size_t>> out;
  std::vector<std::size_t> digits(names.size(), 0);
  while (true) {
    std::map<std::string, std::size_t> a;
    for (std::size_t i = 0; i < names.size(); ++i) a[names[i]] = digits[i];
    out.push_back(std::move(a));
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (digits[pos] + 1 < carrier) {
        ++digits[pos];
        break;
      }
      digits[pos] = 0;
      if (pos == 0) return out;
    }
    if (digits.empty()) return out;
  }
}

std::set<std::string> rule_vars(const Rule& r) {
  std::set<std::string> vs = r.lhs.vars();
  r.rhs.collect_vars(vs);
  return vs;
}

}  // namespace

bool model_condition(const RelativeDpp& d, const FiniteModel& m) {
  for (const Rule& r : concat(d.all_pairs(), d.all_rules()))
    for (const auto& alpha : all_assignments(rule_vars(r), m.carrier_size))
      if (eval_term(r.lhs, m, alpha) != eval_term(r.rhs, m, alpha)) return false;
  return true;
}

std::optional<ProcessorResult> semantic_labeling(const RelativeDpp& d,
                                                 const FiniteModel& m) {
  if (!model_condition(d, m)) return std::nullopt;
  auto label_component = [&](const Trs& t) {
    std::vector<Rule> out;
    for (const Rule& r : t)
      for (const auto& alpha : all_assignments(rule_vars(r), m.carrier_size))
        out.emplace_back(label_term(r.lhs, m, alpha), label_term(r.rhs, m, alpha));
    return Trs(std::move(out));
  };
  RelativeDpp labeled = RelativeDpp::make(
      label_component(d.strict_pairs()), label_component(d.weak_pairs()),
      label_component(d.strict_rules()), label_component(d.weak_rules()));
  return ProcessorResult{{std::move(labeled)}, SemanticLabelingJustification{m}};
}

std::optional<FiniteModel> search_model(const RelativeDpp& d,
                                        std::size_t carrier_size,
                                        std::size_t max_candidates) {
  if (carrier_size < 2 || carrier_size > 3)
    throw std::invalid_argument("carrier size must be 2 or 3");
  std::set<Symbol> sig = problem_signature(d);
  std::vector<Symbol> symbols(sig.begin(), sig.end());
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (const Symbol& f : symbols) {
    std::size_t rows = 1;
    for (std::size_t i = 0; i < f.arity; ++i) rows *= carrier_size;
    sizes.push_back(rows);
    total += rows;
  }
  std::vector<std::size_t> digits(total, 0);
  std::size_t tried = 0;
  while (tried < max_candidates) {
    ++tried;
    FiniteModel m{carrier_size, {}};
    std::size_t k = 0;
    for (std::size_t s = 0; s < symbols.size(); ++s) {
      m.tables[symbols[s].name] =
          std::vector<std::size_t>(digits.begin() + k, digits.begin() + k + sizes[s]);
      k += sizes[s];
    }
    if (model_condition(d, m)) return m;
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (digits[pos] + 1 < carrier_size) {
        ++digits[pos];
        break;
      }
      digits[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (digits.empty()) return std::nullopt;
  }
  return std::nullopt;
}

Term unlabel_term(const Term& t) {
  if (t.is_var()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(unlabel_term(a));
  return Term::fun(unlabel_name(t.fun_name()), std::move(args));
}

Rule unlabel_rule(const Rule& r) {
  return Rule(unlabel_term(r.lhs), unlabel_term(r.rhs));
}

namespace {

bool term_labeled(const Term& t) {
  if (t.is_var()) return false;
  if (t.fun_name().find('.') != std::string::npos) return true;
  for (const Term& a : t.args())
    if (term_labeled(a)) return true;
  return false;
}

}  // namespace

bool is_labeled(const RelativeDpp& d) {
  for (const Rule& r : concat(d.all_pairs(), d.all_rules()))
    if (term_labeled(r.lhs) || term_labeled(r.rhs)) return true;
  return false;
}

}  // namespace reldp
