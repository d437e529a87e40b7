#include "reldp/chain.hpp"

#include <deque>
#include <unordered_set>

namespace reldp {

std::vector<Reachable> reachable_terms(const Term& from, const Trs& rules,
                                       std::size_t strict_count,
                                       std::size_t budget, std::size_t max_depth) {
  std::vector<Reachable> out;
  std::unordered_set<std::string> seen;
  std::deque<std::size_t> queue;  // indices into out
  out.push_back({from, {}});
  seen.insert(from.to_string());
  queue.push_back(0);
  std::size_t expanded = 0;
  while (!queue.empty() && expanded < budget) {
    std::size_t idx = queue.front();
    queue.pop_front();
    ++expanded;
    Term cur = out[idx].term;
    std::vector<ConnectionStep> path = out[idx].path;
    for (const RewriteStep& step : successors(cur, rules, RewriteMode::Anywhere)) {
      if (step.result.depth() > max_depth) continue;
      if (!seen.insert(step.result.to_string()).second) continue;
      std::vector<ConnectionStep> next = path;
      next.push_back({step.rule_index, step.pos, step.rule_index < strict_count});
      out.push_back({step.result, std::move(next)});
      queue.push_back(out.size() - 1);
    }
  }
  return out;
}

namespace {

struct WitnessSearch {
  const RelativeDpp& d;
  OracleBounds bounds;
  Trs pairs;
  Trs rules;
  std::size_t n_strict_pairs;
  std::size_t n_strict_rules;
  std::optional<ChainWitness> fallback;  // first witness with Unknown minimality

  std::vector<ChainStep> steps;
  Term start = Term::var("_");
  std::set<std::string> used_vars;

  WitnessSearch(const RelativeDpp& d, OracleBounds bounds)
      : d(d),
        bounds(bounds),
        pairs(d.all_pairs()),
        rules(d.all_rules()),
        n_strict_pairs(d.strict_pairs().size()),
        n_strict_rules(d.strict_rules().size()) {}

  bool condition3(const std::vector<ConnectionStep>& closing) const {
    for (const ChainStep& s : steps) {
      if (s.strict_pair) return true;
      for (const ConnectionStep& c : s.connection)
        if (c.strict_rule) return true;
    }
    for (const ConnectionStep& c : closing)
      if (c.strict_rule) return true;
    return false;
  }

  Minimality minimality(const std::vector<ConnectionStep>& closing,
                        const Substitution& theta) const {
    (void)closing;
    // Pumping repeats the body under theta; only when theta renames the
    // body variables injectively are all pumped instances renamed copies,
    // so that one bounded_sn run per step covers the whole infinite chain.
    std::set<std::string> body_vars;
    for (const ChainStep& s : steps) {
      apply(s.sigma, pairs[s.pair_index].lhs).collect_vars(body_vars);
      apply(s.sigma, pairs[s.pair_index].rhs).collect_vars(body_vars);
    }
    std::set<std::string> images;
    for (const std::string& v : body_vars) {
      Term img = theta.lookup(v) ? *theta.lookup(v) : Term::var(v);
      if (!img.is_var()) return Minimality::Unknown;
      if (!images.insert(img.var_name()).second) return Minimality::Unknown;
    }
    for (const ChainStep& s : steps) {
      Term t = apply(s.sigma, pairs[s.pair_index].rhs);
      if (bounded_sn(t, rules, bounds.rewrite_budget) != SnStatus::Terminating)
        return Minimality::Unknown;
    }
    return Minimality::Verified;
  }

  // Extends the chain to exactly `target` steps, then tries to close the
  // loop. Returns a witness with Verified minimality as soon as one exists.
  std::optional<ChainWitness> extend(std::size_t target, const Term& cur) {
    std::vector<Reachable> reach = reachable_terms(
        cur, rules, n_strict_rules, bounds.rewrite_budget, bounds.max_term_depth);
    if (steps.size() == target) {
      for (const Reachable& r : reach) {
        auto theta = match(start, r.term);
        if (!theta || !condition3(r.path)) continue;
        ChainWitness w{steps, r.path, *theta, minimality(r.path, *theta),
                       bounds.rewrite_budget};
        if (w.minimality == Minimality::Verified) return w;
        if (!fallback) fallback = w;
      }
      return std::nullopt;
    }
    for (std::size_t pj = 0; pj < pairs.size(); ++pj) {
      auto [lhs_r, renaming] = rename_apart(pairs[pj].lhs, used_vars);
      Term rhs_r = apply(renaming, pairs[pj].rhs);
      for (const Reachable& r : reach) {
        auto tau = match(lhs_r, r.term);
        if (!tau) continue;
        Term next = apply(*tau, rhs_r);
        if (next.depth() > bounds.max_term_depth) continue;
        Substitution sigma;
        for (const std::string& v : pairs[pj].lhs.vars())
          sigma.bind(v, apply(*tau, apply(renaming, Term::var(v))));
        steps.back().connection = r.path;
        steps.push_back({pj, pj < n_strict_pairs, sigma, {}});
        std::set<std::string> saved = used_vars;
        next.collect_vars(used_vars);
        auto found = extend(target, next);
        if (found) return found;
        used_vars = std::move(saved);
        steps.pop_back();
        steps.back().connection.clear();
      }
    }
    return std::nullopt;
  }

  std::optional<ChainWitness> run() {
    if (pairs.empty()) return std::nullopt;
    for (std::size_t len = 1; len <= bounds.max_steps; ++len) {
      for (std::size_t pj = 0; pj < pairs.size(); ++pj) {
        steps.clear();
        used_vars.clear();
        start = pairs[pj].lhs;
        Term cur = pairs[pj].rhs;
        if (start.depth() > bounds.max_term_depth ||
            cur.depth() > bounds.max_term_depth)
          continue;
        start.collect_vars(used_vars);
        cur.collect_vars(used_vars);
        steps.push_back({pj, pj < n_strict_pairs, Substitution{}, {}});
        if (auto w = extend(len, cur)) return w;
      }
    }
    return fallback;
  }
};

Term connection_end(const Term& from, const std::vector<ConnectionStep>& conn,
                    const Trs& rules, std::string& error) {
  Term cur = from;
  for (const ConnectionStep& c : conn) {
    if (c.rule_index >= rules.size()) {
      error = "rule index out of range";
      return cur;
    }
    if (!valid_position(cur, c.pos)) {
      error = "invalid redex position " + to_string(c.pos) + " in " + cur.to_string();
      return cur;
    }
    Term sub = subterm_at(cur, c.pos);
    auto tau = match(rules[c.rule_index].lhs, sub);
    if (!tau) {
      error = "rule " + rules[c.rule_index].to_string() + " does not apply at " +
              to_string(c.pos) + " of " + cur.to_string();
      return cur;
    }
    cur = replace_at(cur, c.pos, apply(*tau, rules[c.rule_index].rhs));
  }
  return cur;
}

}  // namespace

std::optional<ChainWitness> find_witness(const RelativeDpp& d, OracleBounds bounds) {
  WitnessSearch search(d, bounds);
  return search.run();
}

VerifyResult verify_witness(const RelativeDpp& d, const ChainWitness& w) {
  Trs pairs = d.all_pairs();
  Trs rules = d.all_rules();
  std::size_t nsp = d.strict_pairs().size();
  std::size_t nsr = d.strict_rules().size();

  if (w.steps.empty())
    return {false, "condition (1): witness has no steps"};
  for (const ChainStep& s : w.steps) {
    if (s.pair_index >= pairs.size())
      return {false, "condition (1): pair index out of range"};
    if (s.strict_pair != (s.pair_index < nsp))
      return {false, "condition (1): pair strictness does not match its component"};
  }

  std::vector<Term> starts, ends;
  for (const ChainStep& s : w.steps) {
    starts.push_back(apply(s.sigma, pairs[s.pair_index].lhs));
    ends.push_back(apply(s.sigma, pairs[s.pair_index].rhs));
  }

  std::string err;
  for (std::size_t i = 0; i + 1 < w.steps.size(); ++i) {
    Term got = connection_end(ends[i], w.steps[i].connection, rules, err);
    if (!err.empty()) return {false, "condition (2): " + err};
    if (got != starts[i + 1])
      return {false, "condition (2): connection of step " + std::to_string(i + 1) +
                         " ends at " + got.to_string() + ", expected " +
                         starts[i + 1].to_string()};
  }
  Term closed = connection_end(ends.back(), w.closing, rules, err);
  if (!err.empty()) return {false, "condition (2): " + err};
  if (closed != apply(w.theta, starts.front()))
    return {false, "condition (2): closing reduction ends at " + closed.to_string() +
                       ", expected " + apply(w.theta, starts.front()).to_string()};

  bool strict_seen = false;
  for (const ChainStep& s : w.steps) {
    if (s.pair_index < nsp) strict_seen = true;
    for (const ConnectionStep& c : s.connection)
      if (c.rule_index < nsr) strict_seen = true;
  }
  for (const ConnectionStep& c : w.closing)
    if (c.rule_index < nsr) strict_seen = true;
  if (!strict_seen)
    return {false, "condition (3): loop body contains no strict pair or strict rule"};

  if (w.minimality == Minimality::Verified) {
    std::set<std::string> body_vars;
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
      starts[i].collect_vars(body_vars);
      ends[i].collect_vars(body_vars);
    }
    std::set<std::string> images;
    for (const std::string& v : body_vars) {
      const Term* img = w.theta.lookup(v);
      Term image = img ? *img : Term::var(v);
      if (!image.is_var() || !images.insert(image.var_name()).second)
        return {false,
                "condition (4): closing instantiation is not a variable renaming"};
    }
    for (std::size_t i = 0; i < ends.size(); ++i)
      if (bounded_sn(ends[i], rules, w.sn_budget) != SnStatus::Terminating)
        return {false, "condition (4): termination of " + ends[i].to_string() +
                           " not confirmed"};
  }
  return {true, ""};
}

FinitenessResult bounded_finiteness(const RelativeDpp& d, OracleBounds bounds) {
  if (is_trivially_finite(d)) return {Finiteness::Finite, std::nullopt};
  if (auto w = find_witness(d, bounds)) {
    if (w->minimality == Minimality::Verified)
      return {Finiteness::NotFinite, std::move(w)};
    return {Finiteness::Unknown, std::move(w)};
  }
  return {Finiteness::Unknown, std::nullopt};
}

}  // namespace reldp
