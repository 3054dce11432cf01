// Entailment-side behavior: the van Emden-Kowalski operator, models,
// least models, equivalence, subsumption.

#include <vector>

#include "doctest.h"
#include "horn/oracle.hpp"
#include "horn/semantics.hpp"
#include "horn/textio.hpp"

using namespace horn;

namespace {

const Atom a{"a"};
const Atom b{"b"};
const Atom c{"c"};

Theory parsed(const char* text) { return parse_theory(text).theory; }

// All 2^|A| interpretations over an alphabet.
std::vector<Interpretation> all_interpretations(const Alphabet& alphabet) {
  std::vector<Interpretation> out;
  const std::vector<Atom>& atoms = alphabet.atoms();
  for (std::uint32_t bits = 0; bits < (1u << atoms.size()); ++bits) {
    std::vector<Atom> subset;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (bits & (1u << i)) subset.push_back(atoms[i]);
    }
    out.emplace_back(std::move(subset));
  }
  return out;
}

}  // namespace

TEST_CASE("semantics: tp") {
  CHECK(tp(parsed("a :- b. b."), {b}) == Interpretation{a, b});
  CHECK(tp(parsed("a :- b."), {}) == Interpretation{});
  // an interpretation's operator is constant
  Theory i = parsed("a. c.");
  CHECK(tp(i, {}) == Interpretation{a, c});
  CHECK(tp(i, {b}) == Interpretation{a, c});
}

TEST_CASE("semantics: tp equals composition, exhaustive |A|=2") {
  Alphabet ab{a, b};
  oracle::TheoryEnumeration all(ab);
  std::vector<Interpretation> interps = all_interpretations(ab);
  for (std::uint64_t i = 0; i < all.count(); ++i) {
    Theory p = all.at(i);
    for (const Interpretation& interp : interps) {
      CHECK(tp(p, interp) == to_interpretation(compose(p, to_theory(interp))));
    }
  }
}

TEST_CASE("semantics: check_model") {
  CHECK(check_model(parsed("a :- b."), {a, b}) == ModelStatus::model);
  CHECK(check_model(parsed("a."), {a}) == ModelStatus::supported_model);
  CHECK(check_model(parsed("a. b :- a."), {a}) == ModelStatus::not_model);
  CHECK(check_model(Theory{}, {}) == ModelStatus::supported_model);
}

TEST_CASE("semantics: commuting with an interpretation means supported") {
  Alphabet ab{a, b};
  oracle::TheoryEnumeration all(ab);
  for (std::uint64_t i = 0; i < all.count(); ++i) {
    Theory p = all.at(i);
    for (const Interpretation& interp : all_interpretations(ab)) {
      Theory it = to_theory(interp);
      bool commutes = compose(p, it) == compose(it, p);
      bool supported = check_model(p, interp) == ModelStatus::supported_model;
      CHECK(commutes == supported);
    }
  }
}

TEST_CASE("semantics: least_model") {
  CHECK(least_model(parsed("a. b :- a. c :- b.")) == Interpretation{a, b, c});
  CHECK(least_model(parsed("a :- b. b :- a.")) == Interpretation{});
  CHECK(least_model(Theory{}) == Interpretation{});
}

TEST_CASE("semantics: iterate and omega strategies agree, exhaustive |A|=2") {
  oracle::TheoryEnumeration all(Alphabet{a, b});
  for (std::uint64_t i = 0; i < all.count(); ++i) {
    Theory p = all.at(i);
    CHECK(least_model(p, LmStrategy::iterate) ==
          least_model(p, LmStrategy::omega));
  }
}

TEST_CASE("semantics: least model is the minimum model") {
  Alphabet abc{a, b, c};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Theory p = oracle::random_theory(seed, abc, {.rule_count = 4});
    Interpretation lm = least_model(p);
    CHECK(check_model(p, lm) != ModelStatus::not_model);
    for (const Interpretation& interp : all_interpretations(abc)) {
      if (check_model(p, interp) != ModelStatus::not_model) {
        CHECK(lm.subset_of(interp));
      }
    }
  }
}

TEST_CASE("semantics: equivalence") {
  CHECK(equivalent(parsed("a. b :- a."), parsed("a. b.")));
  CHECK(!equivalent(parsed("a."), parsed("b.")));
  // closure preserves semantical equivalence
  oracle::TheoryEnumeration all(Alphabet{a, b});
  for (std::uint64_t i = 0; i < all.count(); ++i) {
    Theory p = all.at(i);
    CHECK(equivalent(p, closure(p, {a, b})));
  }
}

TEST_CASE("semantics: subsumption normal form") {
  CHECK(subsumption_normal_form(parsed("a :- b. a :- b, c.")) ==
        parsed("a :- b."));
  Theory incomparable = parsed("a :- b. a :- c.");
  CHECK(subsumption_normal_form(incomparable) == incomparable);
  // facts subsume every proper rule with the same head
  CHECK(subsumption_normal_form(parsed("a. a :- b. a :- a.")) == parsed("a."));
  CHECK(subsumption_equivalent(parsed("a :- b. a :- b, c."), parsed("a :- b.")));
  CHECK(!subsumption_equivalent(parsed("a :- b."), parsed("a :- c.")));
}

TEST_CASE("semantics: normal form decides operator equality") {
  Alphabet ab{a, b};
  oracle::TheoryEnumeration all(ab);
  std::vector<Interpretation> interps = all_interpretations(ab);
  for (std::uint64_t i = 0; i < all.count(); ++i) {
    Theory p = all.at(i);
    Theory nf = subsumption_normal_form(p);
    // the normal form has the same operator as the original
    for (const Interpretation& interp : interps) {
      CHECK(tp(p, interp) == tp(nf, interp));
    }
  }
}

TEST_CASE("semantics: operator homomorphisms on samples") {
  Alphabet abc{a, b, c};
  std::vector<Interpretation> interps = all_interpretations(abc);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Theory p = oracle::random_theory(seed * 2, abc, {.rule_count = 4});
    Theory r = oracle::random_theory(seed * 2 + 1, abc, {.rule_count = 4});
    for (const Interpretation& interp : interps) {
      CHECK(tp(unite(p, r), interp) == (tp(p, interp) | tp(r, interp)));
      CHECK(tp(compose(p, r), interp) == tp(p, tp(r, interp)));
    }
  }
}
