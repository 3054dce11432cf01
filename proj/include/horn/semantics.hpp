// semantics.hpp -- models, the van Emden-Kowalski operator, least models,
// equivalence and subsumption equivalence

#ifndef HORN_SEMANTICS_HPP_
#define HORN_SEMANTICS_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "horn/algebra.hpp"
#include "horn/atom.hpp"
#include "horn/errors.hpp"
#include "horn/theory.hpp"

namespace horn {

enum class ModelStatus { not_model, model, supported_model };

// T_P(I): heads of the rules whose body I satisfies.  Debug builds verify
// the algebraic characterization T_P(I) = P o I on every call.
inline Interpretation tp(const Theory& p, const Interpretation& interp) {
  std::vector<Atom> fired;
  for (const Rule& r : p) {
    if (r.body().subset_of(interp)) fired.push_back(r.head());
  }
  Interpretation result(std::move(fired));
#ifndef NDEBUG
  if (result != to_interpretation(compose(p, to_theory(interp)))) {
    throw InternalError("tp disagrees with composition");
  }
#endif
  return result;
}

// I is a model of P iff it is a prefixed point of T_P, supported iff it is
// a fixed point.
inline ModelStatus check_model(const Theory& p, const Interpretation& interp) {
  Interpretation consequences = tp(p, interp);
  if (consequences == interp) return ModelStatus::supported_model;
  if (consequences.subset_of(interp)) return ModelStatus::model;
  return ModelStatus::not_model;
}

enum class LmStrategy { iterate, omega };

// Least model, either by bottom-up iteration of T_P from the empty
// interpretation or through the algebraic characterization LM(P) = P^w.
// The iteration is monotone, so it must go stationary within
// |atoms(P)| + 1 steps; exceeding the cap means an implementation bug.
inline Interpretation least_model(const Theory& p,
                                  LmStrategy strategy = LmStrategy::iterate) {
  if (strategy == LmStrategy::omega) {
    return omega(p, p.atoms());
  }
  Interpretation current;
  std::size_t cap = p.atoms().size() + 1;
  for (std::size_t i = 0; i <= cap; ++i) {
    Interpretation next = tp(p, current);
    if (next == current) return current;
    current = std::move(next);
  }
  throw InternalError("least-model iteration did not stabilize");
}

// P and R are equivalent iff they share a least model.
inline bool equivalent(const Theory& p, const Theory& r) {
  return least_model(p) == least_model(r);
}

// Deletes every rule strictly subsumed by another rule with the same head
// and a strictly smaller body.  Marking is simultaneous, so the result does
// not depend on rule order; equal rules never delete each other because set
// semantics already collapsed them.
inline Theory subsumption_normal_form(const Theory& p) {
  std::vector<Rule> kept;
  for (const Rule& r : p) {
    bool subsumed = false;
    for (const Rule& s : p.rules_with_head(r.head())) {
      if (s.size() < r.size() && s.body().subset_of(r.body())) {
        subsumed = true;
        break;
      }
    }
    if (!subsumed) kept.push_back(r);
  }
  return Theory(std::move(kept));
}

// Subsumption equivalence is equality of van Emden-Kowalski operators;
// decided here by comparing normal forms.
inline bool subsumption_equivalent(const Theory& p, const Theory& r) {
  return subsumption_normal_form(p) == subsumption_normal_form(r);
}

}  // namespace horn

#endif  // HORN_SEMANTICS_HPP_
