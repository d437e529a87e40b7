#include "reldp/trs.hpp"

#include <algorithm>

namespace reldp {

Rule::Rule(Term l, Term r) : lhs(std::move(l)), rhs(std::move(r)) {
  if (lhs.is_var())
    throw rule_error("left-hand side of a rule must not be a variable: " +
                     lhs.to_string());
  std::set<std::string> lv = lhs.vars();
  for (const std::string& v : rhs.vars())
    if (!lv.contains(v))
      throw rule_error("variable " + v + " of the right-hand side " +
                       rhs.to_string() + " does not occur in " + lhs.to_string());
}

std::string Rule::to_string() const {
  return lhs.to_string() + " -> " + rhs.to_string();
}

namespace {

void collect_symbols(const Term& t, std::set<Symbol>& out) {
  if (t.is_var()) return;
  Symbol f = t.symbol();
  for (const Symbol& g : out)
    if (g.name == f.name && g.arity != f.arity)
      throw rule_error("symbol " + f.name + " used with arities " +
                       std::to_string(g.arity) + " and " + std::to_string(f.arity));
  out.insert(f);
  for (const Term& a : t.args()) collect_symbols(a, out);
}

bool proper_subterm_of(const Term& u, const Term& t) {
  if (t.is_var()) return false;
  for (const Term& a : t.args())
    if (a == u || proper_subterm_of(u, a)) return true;
  return false;
}

void subterms_preorder(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  if (t.is_var()) return;
  for (const Term& a : t.args()) subterms_preorder(a, out);
}

}  // namespace

Trs::Trs(std::vector<Rule> rules) {
  for (Rule& r : rules) {
    if (std::find(rules_.begin(), rules_.end(), r) != rules_.end()) continue;
    collect_symbols(r.lhs, signature_);
    collect_symbols(r.rhs, signature_);
    rules_.push_back(std::move(r));
  }
}

bool Trs::contains(const Rule& r) const {
  return std::find(rules_.begin(), rules_.end(), r) != rules_.end();
}

Trs concat(const Trs& a, const Trs& b) {
  std::vector<Rule> rules = a.rules();
  for (const Rule& r : b) rules.push_back(r);
  return Trs(std::move(rules));
}

Trs difference(const Trs& a, const Trs& b) {
  std::vector<Rule> rules;
  for (const Rule& r : a)
    if (!b.contains(r)) rules.push_back(r);
  return Trs(std::move(rules));
}

std::set<Symbol> defined_symbols(const Trs& r) {
  std::set<Symbol> out;
  for (const Rule& rule : r) out.insert(rule.lhs.symbol());
  return out;
}

std::string unlabel_name(const std::string& name) {
  auto dot = name.find('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

bool is_marked_name(const std::string& name) {
  std::string base = unlabel_name(name);
  return !base.empty() && base.back() == '#';
}

Term mark_root(const Term& t) {
  if (t.is_var())
    throw rule_error("cannot mark the root of a variable");
  std::string base = unlabel_name(t.fun_name());
  std::string rest = t.fun_name().substr(base.size());
  return Term::fun(base + "#" + rest, t.args());
}

Trs dependency_pairs(const Trs& r, bool improved) {
  std::set<Symbol> defined = defined_symbols(r);
  std::vector<Rule> pairs;
  for (const Rule& rule : r) {
    std::vector<Term> subs;
    subterms_preorder(rule.rhs, subs);
    for (const Term& u : subs) {
      if (u.is_var() || !defined.contains(u.symbol())) continue;
      if (improved && proper_subterm_of(u, rule.lhs)) continue;
      pairs.emplace_back(mark_root(rule.lhs), mark_root(u));
    }
  }
  return Trs(std::move(pairs));
}

}  // namespace reldp
