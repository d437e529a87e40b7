#ifndef RELDP_TESTS_CLASSIC_LOOP_HPP
#define RELDP_TESTS_CLASSIC_LOOP_HPP

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reldp/chain.hpp"
#include "reldp/rel_dpp.hpp"

// Independent loop finder for classic DP problems (P, R). Written directly
// against the documented bounded-search semantics (FIFO reachability with
// exact-term deduplication, expansion budget, depth cutoff; chains tried by
// increasing length with pairs in list order) without using the library's
// rewriting or chain machinery beyond the basic term operations.

namespace testsupport {

using namespace reldp;

class ClassicLoopFinder {
 public:
  ClassicLoopFinder(const ClassicDpp& c, OracleBounds bounds)
      : pairs_(c.pairs), rules_(c.rules), bounds_(bounds) {}

  bool finds_loop() {
    if (pairs_.empty()) return false;
    for (std::size_t len = 1; len <= bounds_.max_steps; ++len)
      for (std::size_t pj = 0; pj < pairs_.size(); ++pj) {
        const Rule& p = pairs_[pj];
        if (p.lhs.depth() > bounds_.max_term_depth ||
            p.rhs.depth() > bounds_.max_term_depth)
          continue;
        fresh_counter_ = 0;
        if (chain(p.lhs, p.rhs, len - 1)) return true;
      }
    return false;
  }

 private:
  // One-step rewrites of t, positions in pre-order, rules in list order.
  std::vector<Term> rewrites(const Term& t) {
    std::vector<Term> out;
    if (t.is_fun())
      for (const Rule& r : rules_)
        if (auto tau = match(r.lhs, t)) out.push_back(apply(*tau, r.rhs));
    if (t.is_fun())
      for (std::size_t i = 0; i < t.args().size(); ++i)
        for (const Term& reduct : rewrites(t.args()[i])) {
          std::vector<Term> args = t.args();
          args[i] = reduct;
          out.push_back(Term::fun(t.symbol(), std::move(args)));
        }
    return out;
  }

  std::vector<Term> reach(const Term& from) {
    std::vector<Term> out{from};
    std::set<std::string> seen{from.to_string()};
    std::deque<Term> queue{from};
    std::size_t expanded = 0;
    while (!queue.empty() && expanded < bounds_.rewrite_budget) {
      Term cur = queue.front();
      queue.pop_front();
      ++expanded;
      for (const Term& next : rewrites(cur)) {
        if (next.depth() > bounds_.max_term_depth) continue;
        if (!seen.insert(next.to_string()).second) continue;
        out.push_back(next);
        queue.push_back(next);
      }
    }
    return out;
  }

  Term freshen(const Term& t) {
    std::map<std::string, std::string> renaming;
    return freshen_rec(t, renaming);
  }

  Term freshen_rec(const Term& t, std::map<std::string, std::string>& renaming) {
    if (t.is_var()) {
      auto it = renaming.find(t.var_name());
      if (it == renaming.end())
        it = renaming.emplace(t.var_name(),
                              "c$" + std::to_string(fresh_counter_++)).first;
      return Term::var(it->second);
    }
    std::vector<Term> args;
    for (const Term& a : t.args()) args.push_back(freshen_rec(a, renaming));
    return Term::fun(t.symbol(), std::move(args));
  }

  // `remaining` more pair applications, then close against `start`.
  bool chain(const Term& start, const Term& cur, std::size_t remaining) {
    std::vector<Term> reachable = reach(cur);
    if (remaining == 0) {
      for (const Term& r : reachable)
        if (match(start, r)) return true;
      return false;
    }
    for (std::size_t pj = 0; pj < pairs_.size(); ++pj) {
      std::map<std::string, std::string> renaming;
      Term lhs = freshen_rec(pairs_[pj].lhs, renaming);
      Term rhs = freshen_rec(pairs_[pj].rhs, renaming);
      for (const Term& r : reachable) {
        auto tau = match(lhs, r);
        if (!tau) continue;
        Term next = apply(*tau, rhs);
        if (next.depth() > bounds_.max_term_depth) continue;
        if (chain(start, next, remaining - 1)) return true;
      }
    }
    return false;
  }

  Trs pairs_;
  Trs rules_;
  OracleBounds bounds_;
  std::size_t fresh_counter_ = 0;
};

}  // namespace testsupport

#endif
