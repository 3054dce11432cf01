// The verification engine itself: enumeration, random generation, and the
// law checker plumbing.

#include <set>

#include "doctest.h"
#include "horn/decomposition.hpp"
#include "horn/oracle.hpp"
#include "horn/textio.hpp"

using namespace horn;
using namespace horn::oracle;

namespace {

const Atom a{"a"};
const Atom b{"b"};
const Atom c{"c"};

Theory parsed(const char* text) { return parse_theory(text).theory; }

}  // namespace

TEST_CASE("oracle: theory enumeration counts") {
  TheoryEnumeration one_atom(Alphabet{a});
  CHECK(one_atom.count() == 4);
  std::set<Theory> seen;
  for (const Theory& p : one_atom) seen.insert(p);
  CHECK(seen == std::set<Theory>{Theory{}, parsed("a."), parsed("a :- a."),
                                 parsed("a. a :- a.")});

  CHECK(TheoryEnumeration(Alphabet{a, b}).count() == 256);
  CHECK(TheoryEnumeration(Alphabet{a, b}, {.krom_only = true}).count() == 64);
  CHECK(TheoryEnumeration(Alphabet{a, b}, {.proper_only = true}).count() ==
        64);
  CHECK(TheoryEnumeration(Alphabet{a, b}, {.max_body = 0}).count() == 4);

  // 3 atoms give 24 rules, past the 2^20-theory enumeration guard
  CHECK_THROWS_AS(TheoryEnumeration(Alphabet{a, b, c}), DomainTooLargeError);
  CHECK(TheoryEnumeration(Alphabet{a, b, c}, {.krom_only = true}).count() ==
        4096);
}

TEST_CASE("oracle: enumeration is deterministic and duplicate-free") {
  TheoryEnumeration all(Alphabet{a, b});
  std::set<Theory> seen;
  for (std::uint64_t i = 0; i < all.count(); ++i) {
    Theory p = all.at(i);
    CHECK(seen.insert(p).second);
  }
  CHECK(seen.size() == 256);
}

TEST_CASE("oracle: random_theory determinism and contracts") {
  Alphabet abcd{a, b, c, Atom("d")};
  CHECK(random_theory(42, abcd, {.rule_count = 5}) ==
        random_theory(42, abcd, {.rule_count = 5}));
  CHECK(random_theory(42, abcd, {.rule_count = 5}) !=
        random_theory(43, abcd, {.rule_count = 5}));
  CHECK(random_theory(1, abcd, {.rule_count = 5}).size() == 5);

  // the acyclic generator always admits a level mapping
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Theory p = random_theory(seed, abcd,
                             {.rule_count = 5, .max_body = 3, .acyclic = true});
    CHECK_NOTHROW(level_mapping(p));
  }

  // unconstrained generation produces cyclic theories now and then
  int cyclic = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Theory p = random_theory(seed, abcd, {.rule_count = 6, .max_body = 3});
    try {
      level_mapping(p);
    } catch (const CyclicError&) {
      ++cyclic;
    }
  }
  CHECK(cyclic > 0);

  CHECK_THROWS_AS(random_theory(1, Alphabet{a}, {.rule_count = 10}),
                  UnsatisfiableParamsError);
  CHECK_THROWS_AS(random_theory(1, Alphabet{}, {.rule_count = 1}),
                  UnsatisfiableParamsError);
}

TEST_CASE("oracle: check_law plumbing") {
  Alphabet ab{a, b};
  CHECK_THROWS_AS(check_law("no_such_law", ab, CheckMode::exhaustive()),
                  UnknownLawError);
  CHECK_THROWS_AS(check_law("associativity", Alphabet{a, b, c},
                            CheckMode::exhaustive()),
                  DomainTooLargeError);

  LawReport unit_report = check_law("unit_laws", ab, CheckMode::exhaustive());
  CHECK(unit_report.cases_checked == 256);
  CHECK(unit_report.violations == 0);
  CHECK(unit_report.counterexamples.empty());
  CHECK(unit_report.ok());
  CHECK(unit_report.domain_size == 2);

  // sampled mode is deterministic in the seed
  LawReport s1 = check_law("right_distributivity", Alphabet{a, b, c},
                           CheckMode::sampled(9, 500));
  LawReport s2 = check_law("right_distributivity", Alphabet{a, b, c},
                           CheckMode::sampled(9, 500));
  CHECK(s1.cases_checked == 500);
  CHECK(s1.violations == s2.violations);
  CHECK(s1.violations == 0);
}

TEST_CASE("oracle: composition agreement between the two implementations") {
  LawReport report =
      check_law("compose_agreement", Alphabet{a, b}, CheckMode::exhaustive());
  CHECK(report.cases_checked == 65536);
  CHECK(report.violations == 0);
}

TEST_CASE("oracle: left distributivity fails with recorded counterexamples") {
  LawReport report = check_law("left_distributivity", Alphabet{a, b},
                               CheckMode::exhaustive());
  CHECK(report.expects_counterexamples);
  CHECK(report.violations > 0);
  CHECK(report.counterexamples.size() == 10);  // capped
  CHECK(report.ok());
  // lm_omega is a theorem and must be clean on the tiny domain
  LawReport tiny = check_law("lm_omega", Alphabet{a}, CheckMode::exhaustive());
  CHECK(tiny.cases_checked == 4);
  CHECK(tiny.violations == 0);
}

TEST_CASE("oracle: associativity holds only up to subsumption") {
  Alphabet ab{a, b};
  LawReport strict = check_law("associativity", ab, CheckMode::exhaustive());
  CHECK(strict.cases_checked == 16777216);
  CHECK(strict.violations > 0);
  CHECK(!strict.ok());

  LawReport semi = check_law("semi_associativity", ab, CheckMode::exhaustive());
  CHECK(semi.cases_checked == 16777216);
  CHECK(semi.violations == 0);

  LawReport modulo = check_law("associativity_up_to_subsumption", ab,
                               CheckMode::exhaustive());
  CHECK(modulo.cases_checked == 16777216);
  CHECK(modulo.violations == 0);
}

TEST_CASE("oracle: compose_by_subsets basics") {
  CHECK(compose_by_subsets(parsed("a :- b, c."),
                           parsed("b :- b. c.")) == parsed("a :- b."));
  CHECK(compose_by_subsets(parsed("a."), Theory{}) == parsed("a."));
  CHECK(compose_by_subsets(parsed("a :- b."), Theory{}) == Theory{});
  CHECK(compose_by_subsets(parsed("a :- b, c."), parsed("b.")) == Theory{});
}

TEST_CASE("oracle: full registry sweep at |A|=2") {
  // Exhaustively checking every registered law pins the global picture:
  // the two demonstration non-laws and strict associativity have
  // counterexamples, everything else is violation-free.
  Alphabet ab{a, b};
  for (const std::string& id : law_ids()) {
    LawReport report = check_law(id, ab, CheckMode::exhaustive());
    INFO("law: ", id);
    CHECK(report.cases_checked > 0);
    if (report.expects_counterexamples || id == "associativity") {
      CHECK(report.violations > 0);
      CHECK(!report.counterexamples.empty());
    } else {
      CHECK(report.violations == 0);
      CHECK(report.counterexamples.empty());
    }
  }
}

TEST_CASE("oracle: law ids cover the cited identities") {
  std::vector<std::string> ids = law_ids();
  std::set<std::string> set(ids.begin(), ids.end());
  for (const char* required :
       {"associativity", "unit_laws", "right_distributivity",
        "left_distributivity", "krom_left_distributivity", "left_zero",
        "t_compose_hom", "t_union_hom", "tp_is_compose", "lm_omega",
        "idempotence_characterization", "reduct_left", "reduct_right",
        "reduct_restrict", "unit_intersection", "compose_simplification",
        "ominus_removes_body_atoms", "oplus_adds_body_atoms",
        "non_dependence", "non_dependent_union", "union_decomposition",
        "permutation_group", "compose_agreement"}) {
    CHECK(set.contains(required));
  }
}
