// decomposition.hpp -- level mappings and the constructive decomposition
// theorems: acyclic factorization, binary-rule factorization, and the
// union decomposition through a primed alphabet copy

#ifndef HORN_DECOMPOSITION_HPP_
#define HORN_DECOMPOSITION_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "horn/algebra.hpp"
#include "horn/atom.hpp"
#include "horn/errors.hpp"
#include "horn/rule.hpp"
#include "horn/theory.hpp"

namespace horn {

// An atom ranking with every proper rule's head strictly above all of its
// body atoms; the level of a body set is the maximum over its members and
// facts impose no constraint.  Unmentioned atoms sit at level 0.
class LevelMapping {
 public:
  LevelMapping() = default;
  explicit LevelMapping(std::map<Atom, std::size_t> levels)
      : levels_(std::move(levels)) {}

  std::size_t level(const Atom& a) const {
    auto it = levels_.find(a);
    return it == levels_.end() ? 0 : it->second;
  }

  bool valid_for(const Theory& p) const {
    for (const Rule& r : p) {
      for (const Atom& b : r.body()) {
        if (level(r.head()) <= level(b)) return false;
      }
    }
    return true;
  }

  const std::map<Atom, std::size_t>& levels() const noexcept {
    return levels_;
  }

 private:
  std::map<Atom, std::size_t> levels_;
};

namespace detail {

// Longest-path layering over the atom dependency graph (edge b -> h for
// every proper rule h <- ..., b, ...), with cycle-witness extraction.
class LevelSolver {
 public:
  explicit LevelSolver(const Theory& p) : theory_(p) {}

  std::map<Atom, std::size_t> solve() {
    for (const Rule& r : theory_) {
      visit(r.head());
      for (const Atom& b : r.body()) visit(b);
    }
    return std::move(levels_);
  }

 private:
  enum class Mark { open, closed };

  std::size_t visit(const Atom& a) {
    if (auto mark = marks_.find(a); mark != marks_.end()) {
      if (mark->second == Mark::closed) return levels_.at(a);
      auto start = std::find(path_.begin(), path_.end(), a);
      throw CyclicError(std::vector<Atom>(start, path_.end()));
    }
    marks_.emplace(a, Mark::open);
    path_.push_back(a);
    std::size_t level = 0;
    for (const Rule& r : theory_.rules_with_head(a)) {
      for (const Atom& b : r.body()) {
        level = std::max(level, visit(b) + 1);
      }
    }
    path_.pop_back();
    marks_[a] = Mark::closed;
    levels_[a] = level;
    return level;
  }

  const Theory& theory_;
  std::map<Atom, Mark> marks_;
  std::map<Atom, std::size_t> levels_;
  std::vector<Atom> path_;
};

}  // namespace detail

// Minimal level mapping of P, or CyclicError with a witness cycle.
inline LevelMapping level_mapping(const Theory& p) {
  return LevelMapping(detail::LevelSolver(p).solve());
}

// Rules in non-decreasing head level, canonical rule order within a level.
using OrderedRules = std::vector<Rule>;

inline OrderedRules order_rules(const Theory& p, const LevelMapping& levels) {
  if (!levels.valid_for(p)) {
    throw std::invalid_argument("level mapping is not valid for the theory");
  }
  OrderedRules ordered(p.begin(), p.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](const Rule& a, const Rule& b) {
                     return levels.level(a.head()) < levels.level(b.head());
                   });
  return ordered;
}

// bh_i over linearly ordered rules r_1 < ... < r_n: the bodies of the rules
// strictly before position i joined with the heads of those strictly after.
// The index is 1-based.
inline Interpretation bh(std::size_t i, const OrderedRules& ordered) {
  if (i < 1 || i > ordered.size()) {
    throw std::out_of_range("bh: index " + std::to_string(i) +
                            " out of range 1.." +
                            std::to_string(ordered.size()));
  }
  std::vector<Atom> atoms;
  for (std::size_t j = 0; j + 1 < i; ++j) {
    const AtomSet& body = ordered[j].body();
    atoms.insert(atoms.end(), body.begin(), body.end());
  }
  for (std::size_t j = i; j < ordered.size(); ++j) {
    atoms.push_back(ordered[j].head());
  }
  return Interpretation(std::move(atoms));
}

// Factor sequence cl_{bh_i}({r_i}) for an already ordered rule list; the
// left-to-right product reproduces the original theory for any total order
// refining a valid level mapping.
inline std::vector<Theory> factorize_ordered(const OrderedRules& ordered) {
  std::vector<Theory> factors;
  factors.reserve(ordered.size());
  for (std::size_t i = 1; i <= ordered.size(); ++i) {
    factors.push_back(closure(Theory{ordered[i - 1]}, bh(i, ordered)));
  }
  return factors;
}

// Decomposes an acyclic theory into single-rule factors whose product is P.
// Theories with at most one rule decompose as themselves.
inline std::vector<Theory> decompose_acyclic(const Theory& p) {
  LevelMapping levels = level_mapping(p);
  if (p.size() <= 1) return {p};
  return factorize_ordered(order_rules(p, levels));
}

// Splits a rule with k >= 3 body atoms into a product of binary theories;
// rules that are already binary are returned as the single factor {r}.
// Body atoms are taken in canonical order as a_1, ..., a_k.
inline std::vector<Theory> decompose_rule_binary(const Rule& r) {
  if (r.size() <= 2) return {Theory{r}};
  const std::vector<Atom>& body = r.body().atoms();
  std::vector<Theory> factors;
  factors.push_back(Theory{Rule(r.head(), AtomSet{body[0], body[1]})});
  for (std::size_t i = 1; i + 1 < body.size(); ++i) {
    Rule link(body[i], AtomSet{body[i], body[i + 1]});
    AtomSet carried(std::vector<Atom>(body.begin(), body.begin() + i));
    factors.push_back(closure(Theory{link}, carried));
  }
  return factors;
}

struct UnionFactors {
  Theory f1;
  Theory f2;
  Theory f3;

  Theory product() const { return compose_sequence({f1, f2, f3}); }
};

// Represents P u R as a three-factor product: P with its bodies moved to
// the primed copy of A, then R closed over those primed atoms, then the
// bridge back from A' to A.
inline UnionFactors decompose_union(const Theory& p, const Theory& r,
                                    const Alphabet& alphabet) {
  detail::require_within(p, alphabet, "decompose_union");
  detail::require_within(r, alphabet, "decompose_union");
  Theory primed_p = compose(p, prime_bridge(alphabet, alphabet,
                                            PrimeDirection::up));
  UnionFactors factors;
  factors.f1 = closure(primed_p, r.head_atoms());
  factors.f2 = closure(r, primed_p.body_atoms());
  factors.f3 = closure(prime_bridge(alphabet, alphabet, PrimeDirection::down),
                       alphabet);
  return factors;
}

// E_(a_1,...,a_n) = {a_1} u {a_i <- a_{i-1}}: the fact a_1 hoisted up a
// chain of Krom rules.  Always acyclic; its least model is all of seq.
inline Theory elevator(const std::vector<Atom>& seq) {
  if (seq.empty()) {
    throw std::invalid_argument("elevator: empty atom sequence");
  }
  if (AtomSet(seq).size() != seq.size()) {
    throw std::invalid_argument("elevator: duplicate atoms in sequence");
  }
  std::vector<Rule> rules;
  rules.emplace_back(seq.front());
  for (std::size_t i = 1; i < seq.size(); ++i) {
    rules.emplace_back(seq[i], AtomSet{seq[i - 1]});
  }
  return Theory(std::move(rules));
}

}  // namespace horn

#endif  // HORN_DECOMPOSITION_HPP_
