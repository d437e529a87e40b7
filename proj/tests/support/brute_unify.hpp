#ifndef RELDP_TESTS_BRUTE_UNIFY_HPP
#define RELDP_TESTS_BRUTE_UNIFY_HPP

#include <map>
#include <optional>
#include <vector>

#include "reldp/term.hpp"

namespace testsupport {

using namespace reldp;

// Small-depth term universe for the brute-force unifier enumerator:
// all terms of depth <= 2 over {a, b, s/1} and one shared fresh variable.
inline std::vector<Term> small_universe() {
  std::vector<Term> base{Term::var("z9"), Term::fun("a"), Term::fun("b")};
  std::vector<Term> out = base;
  for (const Term& t : base) out.push_back(Term::fun("s", {t}));
  return out;
}

// Every substitution mapping `vars` into the universe (including identity
// entries, which Substitution normalizes away).
inline std::vector<Substitution> all_substitutions(const std::set<std::string>& vars) {
  std::vector<Term> uni = small_universe();
  std::vector<std::string> vs(vars.begin(), vars.end());
  std::vector<Substitution> out{Substitution{}};
  for (const std::string& v : vs) {
    std::vector<Substitution> next;
    for (const Substitution& s : out) {
      next.push_back(s);  // leave v unbound
      for (const Term& t : uni) {
        Substitution e = s;
        e.bind(v, t);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

// All unifiers of s and t found by exhaustive enumeration over the universe.
inline std::vector<Substitution> brute_force_unifiers(const Term& s, const Term& t) {
  std::set<std::string> vars = s.vars();
  for (const std::string& v : t.vars()) vars.insert(v);
  std::vector<Substitution> found;
  for (const Substitution& sigma : all_substitutions(vars))
    if (apply(sigma, s) == apply(sigma, t)) found.push_back(sigma);
  return found;
}

// theta = delta o sigma on `vars` for some delta, checked by simultaneous
// matching of the sigma-images against the theta-images.
inline bool factors_through(const Substitution& theta, const Substitution& sigma,
                            const std::set<std::string>& vars) {
  std::vector<Term> lhs_args, rhs_args;
  for (const std::string& v : vars) {
    Term x = Term::var(v);
    lhs_args.push_back(apply(sigma, x));
    rhs_args.push_back(apply(theta, x));
  }
  Symbol tuple{"tuple$", lhs_args.size()};
  return match(Term::fun(tuple, lhs_args), Term::fun(tuple, rhs_args)).has_value();
}

}  // namespace testsupport

#endif
