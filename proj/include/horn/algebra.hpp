// algebra.hpp -- the composition monoid and near-semiring operations

#ifndef HORN_ALGEBRA_HPP_
#define HORN_ALGEBRA_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "horn/atom.hpp"
#include "horn/errors.hpp"
#include "horn/rule.hpp"
#include "horn/theory.hpp"

namespace horn {

// Sequential composition P o R.  For each rule r of P, every assignment of
// one R-rule per body atom of r (matching that atom as head) contributes the
// rule head(r) <- union of the selected bodies.  Facts of P pass through
// unchanged.  Enumerating choice functions instead of size-matched subsets
// is equivalent because the selected rules have pairwise distinct heads.
inline Theory compose(const Theory& p, const Theory& r) {
  std::vector<Rule> out;
  std::vector<std::span<const Rule>> candidates;
  std::vector<std::size_t> pick;
  for (const Rule& rule : p) {
    if (rule.is_fact()) {
      out.push_back(rule);
      continue;
    }
    candidates.clear();
    bool feasible = true;
    for (const Atom& b : rule.body()) {
      std::span<const Rule> matching = r.rules_with_head(b);
      if (matching.empty()) {
        feasible = false;
        break;
      }
      candidates.push_back(matching);
    }
    if (!feasible) continue;
    pick.assign(candidates.size(), 0);
    while (true) {
      std::vector<Atom> body;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        const AtomSet& b = candidates[i][pick[i]].body();
        body.insert(body.end(), b.begin(), b.end());
      }
      out.emplace_back(rule.head(), AtomSet(std::move(body)));
      std::size_t digit = 0;
      while (digit < pick.size() && ++pick[digit] == candidates[digit].size()) {
        pick[digit] = 0;
        ++digit;
      }
      if (digit == pick.size()) break;
    }
  }
  return Theory(std::move(out));
}

// Set union of rule sets; the additive operation of the near-semiring.
inline Theory unite(const Theory& p, const Theory& r) {
  std::vector<Rule> out;
  out.reserve(p.size() + r.size());
  std::set_union(p.begin(), p.end(), r.begin(), r.end(),
                 std::back_inserter(out));
  return Theory(std::move(out));
}

inline Theory operator*(const Theory& p, const Theory& r) {
  return compose(p, r);
}

inline Theory operator+(const Theory& p, const Theory& r) {
  return unite(p, r);
}

// The unit theory 1_I = {a <- a | a in I}; neutral for composition over
// any alphabet containing the operand's atoms.
inline Theory unit(const Interpretation& interp) {
  std::vector<Rule> rules;
  rules.reserve(interp.size());
  for (const Atom& a : interp) rules.emplace_back(a, AtomSet{a});
  return Theory(std::move(rules));
}

enum class ReductSide { left, right, both };

// Left reduct keeps rules whose head lies in I, right reduct keeps rules
// whose body lies within I, both gives the restriction P|_I.  Equal to the
// compositional forms 1^I o P, P o 1^I and 1^I o P o 1^I respectively.
inline Theory reduct(const Theory& p, const Interpretation& interp,
                     ReductSide side) {
  std::vector<Rule> out;
  for (const Rule& r : p) {
    bool head_ok = interp.contains(r.head());
    bool body_ok = r.body().subset_of(interp);
    bool keep = false;
    switch (side) {
      case ReductSide::left: keep = head_ok; break;
      case ReductSide::right: keep = body_ok; break;
      case ReductSide::both: keep = head_ok && body_ok; break;
    }
    if (keep) out.push_back(r);
  }
  return Theory(std::move(out));
}

// cl_I(P) = 1_I u P: pads P with tautologies so later compositions pass the
// atoms of I through.
inline Theory closure(const Theory& p, const Interpretation& interp) {
  return unite(unit(interp), p);
}

namespace detail {
inline void require_subset(const Interpretation& interp,
                           const Alphabet& alphabet, const char* what) {
  if (!interp.subset_of(alphabet)) {
    AtomSet outside = interp - alphabet;
    throw AlphabetError(std::string(what) + ": atoms {" + outside.str() +
                        "} outside alphabet {" + alphabet.str() + "}");
  }
}
}  // namespace detail

// I^-: composing P o I^- deletes the atoms of I from every rule body.
inline Theory ominus(const Interpretation& interp, const Alphabet& alphabet) {
  detail::require_subset(interp, alphabet, "ominus");
  return unite(unit(alphabet - interp), to_theory(interp));
}

// I^+: composing P o I^+ inserts the atoms of I into every proper rule body.
inline Theory oplus(const Interpretation& interp, const Alphabet& alphabet) {
  detail::require_subset(interp, alphabet, "oplus");
  std::vector<Rule> rules;
  rules.reserve(alphabet.size());
  for (const Atom& a : alphabet) {
    rules.emplace_back(a, AtomSet{a} | interp);
  }
  return Theory(std::move(rules));
}

// A bijection on a finite alphabet.
class Permutation {
 public:
  explicit Permutation(std::map<Atom, Atom> mapping)
      : mapping_(std::move(mapping)) {
    std::vector<Atom> sources;
    std::vector<Atom> targets;
    for (const auto& [from, to] : mapping_) {
      sources.push_back(from);
      targets.push_back(to);
    }
    if (AtomSet(sources) != AtomSet(targets) ||
        AtomSet(std::move(targets)).size() != mapping_.size()) {
      throw std::invalid_argument("mapping is not a bijection on its domain");
    }
  }

  static Permutation identity(const Alphabet& alphabet) {
    std::map<Atom, Atom> m;
    for (const Atom& a : alphabet) m.emplace(a, a);
    return Permutation(std::move(m));
  }

  // The cycle (c_1 ... c_k) on `alphabet`, all other atoms fixed.
  static Permutation cycle(const Alphabet& alphabet,
                           const std::vector<Atom>& cyc) {
    std::map<Atom, Atom> m;
    for (const Atom& a : alphabet) m.emplace(a, a);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      auto it = m.find(cyc[i]);
      if (it == m.end()) {
        throw AlphabetError("cycle atom '" + cyc[i].str() +
                            "' outside alphabet {" + alphabet.str() + "}");
      }
      it->second = cyc[(i + 1) % cyc.size()];
    }
    return Permutation(std::move(m));
  }

  const Atom& apply(const Atom& a) const {
    auto it = mapping_.find(a);
    if (it == mapping_.end()) {
      throw AlphabetError("atom '" + a.str() +
                          "' outside permutation alphabet");
    }
    return it->second;
  }

  Alphabet alphabet() const {
    std::vector<Atom> atoms;
    atoms.reserve(mapping_.size());
    for (const auto& [from, to] : mapping_) atoms.push_back(from);
    return Alphabet(std::move(atoms));
  }

  Permutation inverse() const {
    std::map<Atom, Atom> m;
    for (const auto& [from, to] : mapping_) m.emplace(to, from);
    return Permutation(std::move(m));
  }

  const std::map<Atom, Atom>& mapping() const noexcept { return mapping_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::map<Atom, Atom> mapping_;
};

// The Krom theory {pi(a) <- a | a in alphabet} associated with pi.
inline Theory permutation_theory(const Permutation& pi) {
  std::vector<Rule> rules;
  for (const auto& [from, to] : pi.mapping()) {
    rules.emplace_back(to, AtomSet{from});
  }
  return Theory(std::move(rules));
}

// Atom-wise renaming of P along pi; coincides with pi o P o pi^rev.
inline Theory rename(const Theory& p, const Permutation& pi) {
  detail::require_within(p, pi.alphabet(), "rename");
  std::vector<Rule> out;
  out.reserve(p.size());
  for (const Rule& r : p) {
    std::vector<Atom> body;
    body.reserve(r.size());
    for (const Atom& b : r.body()) body.push_back(pi.apply(b));
    out.emplace_back(pi.apply(r.head()), AtomSet(std::move(body)));
  }
  return Theory(std::move(out));
}

// P^n with P^0 = 1_A; the alphabet is explicit because the zeroth power
// depends on it.
inline Theory power(const Theory& p, std::size_t n, const Alphabet& alphabet) {
  detail::require_within(p, alphabet, "power");
  Theory acc = unit(alphabet);
  for (std::size_t i = 0; i < n; ++i) acc = compose(acc, p);
  return acc;
}

// P^* = union of all powers of P, computed as the stationary limit of the
// monotone cumulative union U_k = P^0 u ... u P^k.  Once U_{k+1} = U_k every
// later power stays inside U_k, so the first repeat is the fixpoint.  The
// iteration bound |A| * 2^|A| + 1 is the size of the rule universe over A
// plus one and can only be exceeded on an implementation bug.
inline Theory star(const Theory& p, const Alphabet& alphabet) {
  detail::require_within(p, alphabet, "star");
  Theory current_power = unit(alphabet);
  Theory accumulated = current_power;
  std::size_t bound = alphabet.size() * (std::size_t{1} << alphabet.size()) + 1;
  for (std::size_t i = 0; i <= bound; ++i) {
    current_power = compose(current_power, p);
    Theory next = unite(accumulated, current_power);
    if (next == accumulated) return accumulated;
    accumulated = std::move(next);
  }
  throw InternalError("star did not stabilize within the rule-universe bound");
}

// P^+ = P^* o P.
inline Theory plus(const Theory& p, const Alphabet& alphabet) {
  return compose(star(p, alphabet), p);
}

// P^w = facts(P^+), i.e. P^+ o {}; coincides with the least model of P.
inline Interpretation omega(const Theory& p, const Alphabet& alphabet) {
  return to_interpretation(plus(p, alphabet).facts());
}

inline bool is_idempotent(const Theory& p) { return compose(p, p) == p; }

enum class PrimeDirection { up, down };

// The bridge theories between an alphabet and its disjoint primed copy:
// up is [I <- I'] = {a <- a' | a in I} u 1_{A-I}, down maps the other way.
// For I = A, up o down = 1_A.
inline Theory prime_bridge(const Interpretation& interp,
                           const Alphabet& alphabet, PrimeDirection direction) {
  detail::require_subset(interp, alphabet, "prime_bridge");
  for (const Atom& a : interp) {
    if (alphabet.contains(a.primed())) {
      throw PrimeCollisionError("alphabet already contains '" +
                                a.primed().str() + "'");
    }
  }
  std::vector<Rule> rules;
  for (const Atom& a : interp) {
    if (direction == PrimeDirection::up) {
      rules.emplace_back(a, AtomSet{a.primed()});
    } else {
      rules.emplace_back(a.primed(), AtomSet{a});
    }
  }
  Theory bridge(std::move(rules));
  return unite(unit(alphabet - interp), bridge);
}

// Left-to-right product of a non-empty factor sequence.
inline Theory compose_sequence(const std::vector<Theory>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("compose_sequence: empty factor sequence");
  }
  Theory acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = compose(acc, factors[i]);
  }
  return acc;
}

}  // namespace horn

#endif  // HORN_ALGEBRA_HPP_
