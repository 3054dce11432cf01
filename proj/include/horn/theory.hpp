// theory.hpp -- canonical finite rule sets and their structural operators

#ifndef HORN_THEORY_HPP_
#define HORN_THEORY_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "horn/atom.hpp"
#include "horn/errors.hpp"
#include "horn/rule.hpp"

namespace horn {

// A propositional Horn theory: a finite set of rules stored sorted and
// duplicate-free, so equality of theories is equality of rule sets.
class Theory {
 public:
  using const_iterator = std::vector<Rule>::const_iterator;

  Theory() = default;
  Theory(std::initializer_list<Rule> rules) : rules_(rules) { canonicalize(); }
  explicit Theory(std::vector<Rule> rules) : rules_(std::move(rules)) {
    canonicalize();
  }

  bool empty() const noexcept { return rules_.empty(); }
  std::size_t size() const noexcept { return rules_.size(); }
  const_iterator begin() const noexcept { return rules_.begin(); }
  const_iterator end() const noexcept { return rules_.end(); }
  const std::vector<Rule>& rules() const noexcept { return rules_; }

  bool contains(const Rule& r) const {
    return std::binary_search(rules_.begin(), rules_.end(), r);
  }

  // Rules sharing a head are contiguous in canonical order.
  std::span<const Rule> rules_with_head(const Atom& h) const {
    auto lo = std::lower_bound(
        rules_.begin(), rules_.end(), h,
        [](const Rule& r, const Atom& a) { return r.head() < a; });
    auto hi = lo;
    while (hi != rules_.end() && hi->head() == h) ++hi;
    return {lo, hi};
  }

  AtomSet atoms() const {
    std::vector<Atom> out;
    for (const Rule& r : rules_) {
      out.push_back(r.head());
      out.insert(out.end(), r.body().begin(), r.body().end());
    }
    return AtomSet(std::move(out));
  }

  // head(P): every head atom of P.
  AtomSet head_atoms() const {
    std::vector<Atom> out;
    out.reserve(rules_.size());
    for (const Rule& r : rules_) out.push_back(r.head());
    return AtomSet(std::move(out));
  }

  // body(P): the union of all rule bodies of P.
  AtomSet body_atoms() const {
    std::vector<Atom> out;
    for (const Rule& r : rules_) {
      out.insert(out.end(), r.body().begin(), r.body().end());
    }
    return AtomSet(std::move(out));
  }

  Theory facts() const {
    std::vector<Rule> out;
    for (const Rule& r : rules_) {
      if (r.is_fact()) out.push_back(r);
    }
    return Theory(std::move(out));
  }

  Theory proper() const {
    std::vector<Rule> out;
    for (const Rule& r : rules_) {
      if (r.is_proper()) out.push_back(r);
    }
    return Theory(std::move(out));
  }

  friend auto operator<=>(const Theory&, const Theory&) = default;
  friend bool operator==(const Theory&, const Theory&) = default;

 private:
  void canonicalize() {
    std::sort(rules_.begin(), rules_.end());
    rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
  }

  std::vector<Rule> rules_;
};

// An interpretation viewed as the theory consisting of exactly its facts.
inline Theory to_theory(const Interpretation& interp) {
  std::vector<Rule> rules;
  rules.reserve(interp.size());
  for (const Atom& a : interp) rules.emplace_back(a);
  return Theory(std::move(rules));
}

// Inverse of to_theory; the theory must contain facts only.
inline Interpretation to_interpretation(const Theory& p) {
  std::vector<Atom> atoms;
  atoms.reserve(p.size());
  for (const Rule& r : p) {
    if (!r.is_fact()) {
      throw std::invalid_argument(
          "theory is not an interpretation: proper rule with head '" +
          r.head().str() + "'");
    }
    atoms.push_back(r.head());
  }
  return Interpretation(std::move(atoms));
}

// Splits P into the heads of its facts and the theory of its proper rules;
// the two parts are disjoint and union back to P.
inline std::pair<Interpretation, Theory> partition_facts_proper(
    const Theory& p) {
  return {to_interpretation(p.facts()), p.proper()};
}

namespace detail {
inline void require_within(const Theory& p, const Alphabet& alphabet,
                           const char* what) {
  AtomSet used = p.atoms();
  if (!used.subset_of(alphabet)) {
    AtomSet outside = used - alphabet;
    throw AlphabetError(std::string(what) + ": atoms {" + outside.str() +
                        "} outside alphabet {" + alphabet.str() + "}");
  }
}
}  // namespace detail

// head(P) relative to an ambient alphabet; equals the algebraic form P o A.
inline Interpretation heads(const Theory& p, const Alphabet& alphabet) {
  detail::require_within(p, alphabet, "heads");
  return p.head_atoms();
}

// body(P) relative to an ambient alphabet; equals proper(P)^rev o A.
inline Interpretation bodies(const Theory& p, const Alphabet& alphabet) {
  detail::require_within(p, alphabet, "bodies");
  return p.body_atoms();
}

// P^rev: facts kept, every proper rule's arrows reversed.
inline Theory reverse(const Theory& p) {
  std::vector<Rule> out;
  for (const Rule& r : p) {
    if (r.is_fact()) {
      out.push_back(r);
    } else {
      for (const Atom& b : r.body()) {
        out.emplace_back(b, AtomSet{r.head()});
      }
    }
  }
  return Theory(std::move(out));
}

// P depends on R iff body(P) and head(R) intersect.
inline bool depends_on(const Theory& p, const Theory& r) {
  return !(p.body_atoms() & r.head_atoms()).empty();
}

struct TheoryClass {
  bool krom = false;
  bool binary = false;
  bool proper_only = false;
  bool interpretation = false;
  bool single_rule = false;

  friend bool operator==(const TheoryClass&, const TheoryClass&) = default;
};

inline TheoryClass classify(const Theory& p) {
  TheoryClass c;
  c.krom = std::all_of(p.begin(), p.end(),
                       [](const Rule& r) { return r.is_krom(); });
  c.binary = std::all_of(p.begin(), p.end(),
                         [](const Rule& r) { return r.is_binary(); });
  c.proper_only = std::none_of(p.begin(), p.end(),
                               [](const Rule& r) { return r.is_fact(); });
  c.interpretation = std::all_of(p.begin(), p.end(),
                                 [](const Rule& r) { return r.is_fact(); });
  c.single_rule = std::count_if(p.begin(), p.end(), [](const Rule& r) {
                    return !r.is_tautology();
                  }) == 1;
  return c;
}

}  // namespace horn

#endif  // HORN_THEORY_HPP_
