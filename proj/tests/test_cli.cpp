// End-to-end checks of the command-line tool: output formats and the
// documented exit-code contract.

#include <string>
#include <vector>

#include "doctest.h"
#include "horn/textio.hpp"
#include "run_cli.hpp"

using horn_tests::run_cli;
using horn_tests::write_temp_theory;

namespace {

std::vector<std::string> split_factors(const std::string& output) {
  std::vector<std::string> factors;
  std::string current;
  std::size_t pos = 0;
  while (pos <= output.size()) {
    std::size_t nl = output.find('\n', pos);
    std::string line =
        output.substr(pos, nl == std::string::npos ? std::string::npos
                                                   : nl - pos);
    if (line == "---") {
      factors.push_back(current);
      current.clear();
    } else if (!line.empty()) {
      current += line + "\n";
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  factors.push_back(current);
  return factors;
}

}  // namespace

TEST_CASE("cli: lm") {
  std::string path = write_temp_theory("elevator", "a.\nb :- a.\nc :- b.\n");
  auto result = run_cli("lm " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.output == "a, b, c\n");
}

TEST_CASE("cli: eval") {
  std::string path = write_temp_theory("grow", "a.\nb :- a.\n");
  auto omega = run_cli("eval -f P=" + path + " \"P^w\"");
  CHECK(omega.exit_code == 0);
  CHECK(omega.output == "a.\nb.\n");

  // lm FILE and eval "lm(P)" print identically
  auto via_eval = run_cli("eval -f P=" + path + " \"lm(P)\"");
  auto via_lm = run_cli("lm " + path);
  CHECK(via_eval.exit_code == 0);
  CHECK(via_eval.output == via_lm.output);

  auto literal = run_cli("eval \"{a :- b,c.} * ({b :- b.} + {c.})\"");
  CHECK(literal.exit_code == 0);
  CHECK(literal.output == "a :- b.\n");

  auto with_alphabet = run_cli("eval --alphabet a,b \"{a.}^*\"");
  CHECK(with_alphabet.exit_code == 0);
  CHECK(with_alphabet.output == "a.\na :- a.\nb :- b.\n");

  auto empty_result = run_cli("eval \"{a.} * {}\"");
  CHECK(empty_result.exit_code == 0);
  CHECK(empty_result.output == "a.\n");
}

TEST_CASE("cli: decompose and recompose") {
  std::string path = write_temp_theory("acyclic", "a.\nb :- a.\nc :- a, b.\n");
  auto result = run_cli("decompose " + path);
  CHECK(result.exit_code == 0);
  std::vector<std::string> factors = split_factors(result.output);
  CHECK(factors.size() == 3);
  horn::Theory product = horn::parse_theory(factors[0]).theory;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    product = horn::compose(product, horn::parse_theory(factors[i]).theory);
  }
  CHECK(product == horn::parse_theory("a.\nb :- a.\nc :- a, b.\n").theory);
}

TEST_CASE("cli: decompose --union") {
  std::string left = write_temp_theory(
      "union_left", "a :- b, c.\na :- a, b.\nb :- a.\n");
  std::string right = write_temp_theory("union_right", "b :- c.\nc :- b.\n");
  auto result = run_cli("decompose " + left + " --union " + right);
  CHECK(result.exit_code == 0);
  std::vector<std::string> factors = split_factors(result.output);
  REQUIRE(factors.size() == 3);
  horn::Theory product = horn::parse_theory(factors[0]).theory;
  product = horn::compose(product, horn::parse_theory(factors[1]).theory);
  product = horn::compose(product, horn::parse_theory(factors[2]).theory);
  CHECK(product ==
        horn::parse_theory("a :- b, c.\na :- a, b.\nb :- a.\nb :- c.\nc :- b.")
            .theory);
}

TEST_CASE("cli: exit codes") {
  // usage errors
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("lm /nonexistent/path.horn").exit_code == 1);
  CHECK(run_cli("eval \"(P\"").exit_code == 1);
  CHECK(run_cli("eval \"Q\"").exit_code == 1);

  std::string bad = write_temp_theory("bad", "a :- .\n");
  CHECK(run_cli("lm " + bad).exit_code == 1);

  // cyclic-error where acyclicity is required
  std::string cyclic = write_temp_theory("cyclic", "a :- b.\nb :- a.\n");
  CHECK(run_cli("decompose " + cyclic).exit_code == 2);
  // but the same file is fine for the union decomposition
  std::string empty = write_temp_theory("empty", "");
  CHECK(run_cli("decompose " + cyclic + " --union " + empty).exit_code == 0);

  // law checking: theorems pass, the documented non-law is not a failure,
  // the associativity defect is reported as a violation
  CHECK(run_cli("laws --law right_distributivity").exit_code == 0);
  CHECK(run_cli("laws --law left_distributivity").exit_code == 0);
  CHECK(run_cli("laws --law associativity").exit_code == 2);
  CHECK(run_cli("laws --law no_such_law").exit_code == 1);
  CHECK(run_cli("laws --alphabet-size 3 --exhaustive --law unit_laws")
            .exit_code == 1);
}

TEST_CASE("cli: laws table") {
  auto result = run_cli("laws --alphabet-size 1 --law unit_laws");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("unit_laws") != std::string::npos);
  CHECK(result.output.find("ok") != std::string::npos);

  auto sampled = run_cli(
      "laws --alphabet-size 3 --samples 200 --seed 5 --law tp_is_compose");
  CHECK(sampled.exit_code == 0);
  CHECK(sampled.output.find("200") != std::string::npos);

  auto non_law = run_cli("laws --law proper_compose_compat");
  CHECK(non_law.exit_code == 0);
  CHECK(non_law.output.find("not a law") != std::string::npos);
}
