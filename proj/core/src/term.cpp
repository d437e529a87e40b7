#include "reldp/term.hpp"

#include <algorithm>
#include <sstream>

namespace reldp {

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->is_var = true;
  node->name = std::move(name);
  node->size = 1;
  node->depth = 1;
  node->hash = combine(0x517cc1b7, std::hash<std::string>{}(node->name));
  return Term(std::move(node));
}

Term Term::fun(std::string name, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->is_var = false;
  node->name = std::move(name);
  node->args = std::move(args);
  node->size = 1;
  node->depth = 1;
  std::size_t h = combine(0x27d4eb2f, std::hash<std::string>{}(node->name));
  for (const Term& a : node->args) {
    node->size += a.size();
    node->depth = std::max(node->depth, a.depth() + 1);
    h = combine(h, a.hash());
  }
  node->hash = h;
  return Term(std::move(node));
}

Term Term::fun(const Symbol& f, std::vector<Term> args) {
  if (args.size() != f.arity)
    throw std::invalid_argument("argument count does not match arity of " + f.name);
  return fun(f.name, std::move(args));
}

void Term::collect_vars(std::set<std::string>& out) const {
  if (is_var()) {
    out.insert(node_->name);
    return;
  }
  for (const Term& a : node_->args) a.collect_vars(out);
}

std::set<std::string> Term::vars() const {
  std::set<std::string> out;
  collect_vars(out);
  return out;
}

bool Term::ground() const {
  if (is_var()) return false;
  return std::all_of(node_->args.begin(), node_->args.end(),
                     [](const Term& a) { return a.ground(); });
}

std::string Term::to_string() const {
  if (is_var()) return node_->name;
  if (node_->args.empty()) return node_->name;
  std::ostringstream os;
  os << node_->name << '(';
  for (std::size_t i = 0; i < node_->args.size(); ++i) {
    if (i > 0) os << ',';
    os << node_->args[i].to_string();
  }
  os << ')';
  return os.str();
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash) return false;
  if (node_->is_var != other.node_->is_var || node_->name != other.node_->name ||
      node_->args.size() != other.node_->args.size())
    return false;
  for (std::size_t i = 0; i < node_->args.size(); ++i)
    if (!(node_->args[i] == other.node_->args[i])) return false;
  return true;
}

std::string to_string(const Position& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) os << ',';
    os << p[i];
  }
  os << ']';
  return os.str();
}

Substitution::Substitution(std::map<std::string, Term> bindings) {
  for (auto& [v, t] : bindings)
    if (!(t.is_var() && t.var_name() == v)) map_.emplace(v, t);
}

void Substitution::bind(const std::string& var, const Term& t) {
  if (t.is_var() && t.var_name() == var) {
    map_.erase(var);
    return;
  }
  map_.insert_or_assign(var, t);
}

const Term* Substitution::lookup(const std::string& var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

Term apply(const Substitution& sigma, const Term& t) {
  if (t.is_var()) {
    if (const Term* image = sigma.lookup(t.var_name())) return *image;
    return t;
  }
  if (sigma.empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(apply(sigma, a));
  return Term::fun(t.fun_name(), std::move(args));
}

bool valid_position(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t idx : p) {
    if (cur->is_var() || idx < 1 || idx > cur->args().size()) return false;
    cur = &cur->args()[idx - 1];
  }
  return true;
}

Term subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t idx : p) {
    if (cur->is_var() || idx < 1 || idx > cur->args().size())
      throw invalid_position("invalid position " + to_string(p) + " in " + t.to_string());
    cur = &cur->args()[idx - 1];
  }
  return *cur;
}

Term replace_at(const Term& t, const Position& p, const Term& s) {
  if (p.empty()) return s;
  std::size_t idx = p.front();
  if (t.is_var() || idx < 1 || idx > t.args().size())
    throw invalid_position("invalid position " + to_string(p) + " in " + t.to_string());
  std::vector<Term> args = t.args();
  Position rest(p.begin() + 1, p.end());
  args[idx - 1] = replace_at(args[idx - 1], rest, s);
  return Term::fun(t.fun_name(), std::move(args));
}

namespace {

void positions_rec(const Term& t, Position& prefix, std::vector<Position>& out) {
  out.push_back(prefix);
  if (t.is_var()) return;
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    prefix.push_back(i + 1);
    positions_rec(t.args()[i], prefix, out);
    prefix.pop_back();
  }
}

bool match_rec(const Term& pattern, const Term& subject, Substitution& sigma) {
  if (pattern.is_var()) {
    if (const Term* bound = sigma.lookup(pattern.var_name()))
      return *bound == subject;
    if (subject.is_var() && subject.var_name() == pattern.var_name()) return true;
    sigma.bind(pattern.var_name(), subject);
    return true;
  }
  if (subject.is_var() || pattern.fun_name() != subject.fun_name() ||
      pattern.args().size() != subject.args().size())
    return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_rec(pattern.args()[i], subject.args()[i], sigma)) return false;
  return true;
}

bool occurs(const std::string& var, const Term& t) {
  if (t.is_var()) return t.var_name() == var;
  for (const Term& a : t.args())
    if (occurs(var, a)) return true;
  return false;
}

}  // namespace

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out;
  Position prefix;
  positions_rec(t, prefix, out);
  return out;
}

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
  Substitution sigma;
  if (!match_rec(pattern, subject, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> unify(const Term& s, const Term& t) {
  std::vector<std::pair<Term, Term>> work{{s, t}};
  Substitution sigma;
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    a = apply(sigma, a);
    b = apply(sigma, b);
    if (a == b) continue;
    if (a.is_var() || b.is_var()) {
      if (!a.is_var()) std::swap(a, b);
      if (occurs(a.var_name(), b)) return std::nullopt;
      // Keep the solved set idempotent: fold the new binding into all images.
      Substitution single;
      single.bind(a.var_name(), b);
      Substitution next;
      for (const auto& [v, img] : sigma.bindings()) next.bind(v, apply(single, img));
      next.bind(a.var_name(), b);
      sigma = next;
      continue;
    }
    if (a.fun_name() != b.fun_name() || a.args().size() != b.args().size())
      return std::nullopt;
    for (std::size_t i = 0; i < a.args().size(); ++i)
      work.emplace_back(a.args()[i], b.args()[i]);
  }
  return sigma;
}

std::pair<Term, Substitution> rename_apart(const Term& t,
                                           const std::set<std::string>& forbidden) {
  std::set<std::string> used = t.vars();
  Substitution renaming;
  std::set<std::string> taken = used;
  taken.insert(forbidden.begin(), forbidden.end());
  for (const std::string& v : t.vars()) {
    if (!forbidden.contains(v)) continue;
    std::size_t suffix = 0;
    std::string fresh;
    do {
      fresh = v + std::to_string(suffix++);
    } while (taken.contains(fresh));
    taken.insert(fresh);
    renaming.bind(v, Term::var(fresh));
  }
  return {apply(renaming, t), renaming};
}

}  // namespace reldp
