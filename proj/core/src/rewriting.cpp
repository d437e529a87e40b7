#include "reldp/rewriting.hpp"

#include <map>

namespace reldp {

std::vector<RewriteStep> successors(const Term& t, const Trs& rules,
                                    RewriteMode mode) {
  std::vector<RewriteStep> out;
  std::vector<Position> ps =
      mode == RewriteMode::Top ? std::vector<Position>{{}} : positions(t);
  for (const Position& p : ps) {
    Term sub = subterm_at(t, p);
    if (sub.is_var()) continue;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (auto sigma = match(rules[i].lhs, sub)) {
        RewriteStep step{replace_at(t, p, apply(*sigma, rules[i].rhs)), p, i};
        if (std::find(out.begin(), out.end(), step) == out.end())
          out.push_back(std::move(step));
      }
    }
  }
  return out;
}

namespace {

void canonical_rec(const Term& t, std::map<std::string, std::string>& names,
                   std::string& out) {
  if (t.is_var()) {
    auto [it, fresh] = names.emplace(t.var_name(), "%" + std::to_string(names.size()));
    (void)fresh;
    out += it->second;
    return;
  }
  out += t.fun_name();
  out += '(';
  for (const Term& a : t.args()) {
    canonical_rec(a, names, out);
    out += ',';
  }
  out += ')';
}

std::string canonical_key(const Term& t) {
  std::map<std::string, std::string> names;
  std::string out;
  canonical_rec(t, names, out);
  return out;
}

bool contains_instance_of(const Term& pattern, const Term& t) {
  if (match(pattern, t)) return true;
  if (t.is_var()) return false;
  for (const Term& a : t.args())
    if (contains_instance_of(pattern, a)) return true;
  return false;
}

struct SnSearch {
  const Trs& rules;
  std::size_t budget;
  std::size_t used = 0;
  bool truncated = false;
  std::set<std::string> done;

  // Returns false iff a matching loop was found below t.
  bool explore(const Term& t, std::vector<Term>& path) {
    std::string key = canonical_key(t);
    if (done.contains(key)) return true;
    if (used >= budget) {
      truncated = true;
      return true;
    }
    ++used;
    path.push_back(t);
    for (const RewriteStep& step : successors(t, rules, RewriteMode::Anywhere)) {
      for (const Term& ancestor : path)
        if (contains_instance_of(ancestor, step.result)) return false;
      if (!explore(step.result, path)) return false;
    }
    path.pop_back();
    done.insert(std::move(key));
    return true;
  }
};

}  // namespace

SnStatus bounded_sn(const Term& t, const Trs& rules, std::size_t node_budget) {
  SnSearch search{rules, node_budget};
  std::vector<Term> path;
  if (!search.explore(t, path)) return SnStatus::NonterminatingLoop;
  return search.truncated ? SnStatus::Unknown : SnStatus::Terminating;
}

}  // namespace reldp
