#include "reldp/rel_dpp.hpp"

#include <array>
#include <sstream>

namespace reldp {

namespace {

void check_disjoint(const Trs& a, const Trs& b, const char* an, const char* bn) {
  for (const Rule& r : a)
    if (b.contains(r))
      throw dpp_error(DppErrorKind::Overlap, std::string("rule ") + r.to_string() +
                                                 " occurs in both " + an + " and " + bn);
}

bool marked_below_root(const Term& t) {
  if (t.is_var()) return false;
  for (const Term& a : t.args()) {
    if (a.is_fun() && is_marked_name(a.fun_name())) return true;
    if (marked_below_root(a)) return true;
  }
  return false;
}

}  // namespace

RelativeDpp RelativeDpp::make(Trs strict_pairs, Trs weak_pairs, Trs strict_rules,
                              Trs weak_rules, bool check_marks) {
  RelativeDpp d;
  d.strict_pairs_ = std::move(strict_pairs);
  d.weak_pairs_ = std::move(weak_pairs);
  d.strict_rules_ = std::move(strict_rules);
  d.weak_rules_ = std::move(weak_rules);

  const std::array<std::pair<const Trs*, const char*>, 4> comps = {
      std::pair{&d.strict_pairs_, "strict pairs"},
      std::pair{&d.weak_pairs_, "weak pairs"},
      std::pair{&d.strict_rules_, "strict rules"},
      std::pair{&d.weak_rules_, "weak rules"}};
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      check_disjoint(*comps[i].first, *comps[j].first, comps[i].second,
                     comps[j].second);

  // Arity consistency across the whole problem.
  Trs all = concat(d.all_pairs(), d.all_rules());
  (void)all;

  if (check_marks) check_mark_placement(d);
  return d;
}

RelativeDpp RelativeDpp::make_unchecked(Trs strict_pairs, Trs weak_pairs,
                                        Trs strict_rules, Trs weak_rules) {
  RelativeDpp d;
  d.strict_pairs_ = std::move(strict_pairs);
  d.weak_pairs_ = std::move(weak_pairs);
  d.strict_rules_ = std::move(strict_rules);
  d.weak_rules_ = std::move(weak_rules);
  return d;
}

void check_mark_placement(const RelativeDpp& d) {
  for (const Rule& p : d.all_pairs()) {
    if (!is_marked_name(p.lhs.fun_name()) ||
        (p.rhs.is_fun() && !is_marked_name(p.rhs.fun_name())))
      throw dpp_error(DppErrorKind::MarkPlacement,
                      "pair " + p.to_string() + " does not have marked roots");
    if (marked_below_root(p.lhs) || marked_below_root(p.rhs))
      throw dpp_error(DppErrorKind::MarkPlacement,
                      "marked symbol below the root of pair " + p.to_string());
  }
  for (const Rule& r : d.all_rules()) {
    if (is_marked_name(r.lhs.fun_name()) ||
        (r.rhs.is_fun() && is_marked_name(r.rhs.fun_name())) ||
        marked_below_root(r.lhs) || marked_below_root(r.rhs))
      throw dpp_error(DppErrorKind::MarkPlacement,
                      "marked symbol occurs in rule " + r.to_string());
  }
}

std::string RelativeDpp::to_string() const {
  auto comp = [](const Trs& t) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i > 0) os << ", ";
      os << t[i].to_string();
    }
    os << '}';
    return os.str();
  };
  return "(" + comp(strict_pairs_) + ", " + comp(weak_pairs_) + ", " +
         comp(strict_rules_) + ", " + comp(weak_rules_) + ")";
}

RelativeDpp initial(const Trs& r) {
  return RelativeDpp::make(dependency_pairs(r), Trs{}, Trs{}, r);
}

RelativeDpp initial(const Trs& strict, const Trs& weak) {
  return RelativeDpp::make(dependency_pairs(strict), Trs{}, Trs{},
                           concat(strict, weak));
}

RelativeDpp embed(const ClassicDpp& c) {
  return RelativeDpp::make(c.pairs, Trs{}, Trs{}, c.rules);
}

bool is_trivially_finite(const RelativeDpp& d) {
  bool no_pairs = d.strict_pairs().empty() && d.weak_pairs().empty();
  bool no_strict = d.strict_pairs().empty() && d.strict_rules().empty();
  return no_pairs || no_strict;
}

}  // namespace reldp
