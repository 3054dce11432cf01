// horn.cpp -- command-line front end: expression evaluation, least models,
// decompositions, and the law suites

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "horn/horn.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

horn::TheoryDocument load_theory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw horn::Error("cannot open file: " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return horn::parse_theory(buffer.str());
  } catch (const horn::ParseError& e) {
    throw horn::ParseError(e.line(), e.column(), e.expected() + " [" + path +
                                                     "]");
  }
}

// The atoms a file contributes to the ambient alphabet: its declared
// alphabet when present, otherwise the atoms it actually uses.
horn::Alphabet file_alphabet(const horn::TheoryDocument& doc) {
  return doc.declared_alphabet ? *doc.declared_alphabet : doc.theory.atoms();
}

horn::Atom parse_atom_spelling(const std::string& raw) {
  std::string text = raw;
  std::size_t primes = 0;
  while (!text.empty() && text.back() == '\'') {
    text.pop_back();
    ++primes;
  }
  return horn::Atom(text, primes);
}

horn::Alphabet parse_atom_csv(const std::string& csv) {
  std::vector<horn::Atom> atoms;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::size_t end = comma == std::string::npos ? csv.size() : comma;
    std::string piece = csv.substr(start, end - start);
    piece.erase(0, piece.find_first_not_of(" \t"));
    piece.erase(piece.find_last_not_of(" \t") + 1);
    if (!piece.empty()) atoms.push_back(parse_atom_spelling(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return horn::Alphabet(std::move(atoms));
}

int run_eval(const std::vector<std::string>& file_bindings,
             const std::string& alphabet_csv, const std::string& expr_src) {
  horn::Bindings bindings;
  horn::Alphabet alphabet;
  for (const std::string& binding : file_bindings) {
    std::size_t eq = binding.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw horn::Error("binding must have the form NAME=FILE: " + binding);
    }
    std::string name = binding.substr(0, eq);
    std::string path = binding.substr(eq + 1);
    if (bindings.contains(name)) {
      throw horn::Error("duplicate binding name: " + name);
    }
    horn::TheoryDocument doc = load_theory_file(path);
    alphabet = alphabet | file_alphabet(doc);
    bindings.emplace(std::move(name), std::move(doc.theory));
  }
  if (!alphabet_csv.empty()) {
    alphabet = alphabet | parse_atom_csv(alphabet_csv);
  }
  horn::Value result = horn::eval_expression(expr_src, bindings, alphabet);
  std::cout << horn::format_value(result);
  return kExitOk;
}

int run_lm(const std::string& path) {
  horn::TheoryDocument doc = load_theory_file(path);
  std::cout << horn::least_model(doc.theory).str() << "\n";
  return kExitOk;
}

int run_decompose(const std::string& path, const std::string& union_path) {
  horn::TheoryDocument doc = load_theory_file(path);
  std::vector<horn::Theory> factors;
  if (union_path.empty()) {
    factors = horn::decompose_acyclic(doc.theory);
  } else {
    horn::TheoryDocument other = load_theory_file(union_path);
    horn::Alphabet alphabet = file_alphabet(doc) | file_alphabet(other);
    horn::UnionFactors split =
        horn::decompose_union(doc.theory, other.theory, alphabet);
    factors = {split.f1, split.f2, split.f3};
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) std::cout << "---\n";
    std::cout << horn::serialize_theory(factors[i]);
  }
  return kExitOk;
}

void print_counterexample(const horn::oracle::Counterexample& cx) {
  std::cout << "    inputs:";
  for (const std::string& input : cx.inputs) std::cout << " " << input;
  std::cout << "\n    lhs: " << cx.lhs << "\n    rhs: " << cx.rhs << "\n";
}

int run_laws(int alphabet_size, bool sampled, std::uint64_t samples,
             std::uint64_t seed, const std::string& only_law) {
  if (alphabet_size < 0 || alphabet_size > 26) {
    throw horn::Error("--alphabet-size must be between 0 and 26");
  }
  std::vector<horn::Atom> atoms;
  for (int i = 0; i < alphabet_size; ++i) {
    atoms.emplace_back(std::string(1, static_cast<char>('a' + i)));
  }
  horn::Alphabet alphabet(std::move(atoms));
  horn::oracle::CheckMode mode =
      sampled ? horn::oracle::CheckMode::sampled(seed, samples)
              : horn::oracle::CheckMode::exhaustive();

  std::vector<std::string> ids;
  if (only_law.empty()) {
    ids = horn::oracle::law_ids();
  } else {
    ids.push_back(only_law);
  }

  std::cout << std::left << std::setw(32) << "LAW" << std::right
            << std::setw(4) << "|A|" << std::setw(12) << "CASES"
            << std::setw(12) << "VIOLATIONS"
            << "  RESULT\n";
  bool violated = false;
  for (const std::string& id : ids) {
    horn::oracle::LawReport report =
        horn::oracle::check_law(id, alphabet, mode);
    std::string result;
    if (report.expects_counterexamples) {
      result = report.violations > 0 ? "not a law (counterexamples expected)"
                                     : "no counterexample found";
    } else if (report.violations == 0) {
      result = "ok";
    } else {
      result = "VIOLATED";
      violated = true;
    }
    std::cout << std::left << std::setw(32) << report.law_id << std::right
              << std::setw(4) << report.domain_size << std::setw(12)
              << report.cases_checked << std::setw(12) << report.violations
              << "  " << result << "\n";
    if (report.violations > 0 && !report.counterexamples.empty()) {
      if (report.expects_counterexamples) {
        std::cout << "  first counterexample:\n";
        print_counterexample(report.counterexamples.front());
      } else {
        std::cout << "  counterexamples (up to 10):\n";
        for (const horn::oracle::Counterexample& cx : report.counterexamples) {
          print_counterexample(cx);
        }
      }
    }
  }
  return violated ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequential-composition algebra of propositional Horn theories"};
  app.require_subcommand(1);

  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate a meta-calculus expression");
  std::vector<std::string> file_bindings;
  std::string alphabet_csv;
  std::string expr_src;
  eval_cmd->add_option("-f,--file", file_bindings,
                       "bind NAME=FILE as a theory identifier");
  eval_cmd->add_option("--alphabet", alphabet_csv,
                       "extra ambient alphabet atoms, comma-separated");
  eval_cmd->add_option("expr", expr_src, "expression to evaluate")->required();

  auto* lm_cmd =
      app.add_subcommand("lm", "print the least model of a theory file");
  std::string lm_path;
  lm_cmd->add_option("file", lm_path, "theory file")->required();

  auto* dec_cmd = app.add_subcommand(
      "decompose", "factor a theory (acyclic by default, --union for the "
                   "primed-alphabet union decomposition)");
  std::string dec_path;
  std::string union_path;
  dec_cmd->add_option("file", dec_path, "theory file")->required();
  dec_cmd->add_option("--union", union_path,
                      "second theory file; decompose the union of both");

  auto* laws_cmd =
      app.add_subcommand("laws", "run the brute-force law checker");
  int alphabet_size = 2;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string only_law;
  bool exhaustive_flag = false;
  laws_cmd->add_option("--alphabet-size", alphabet_size,
                       "number of atoms in the generated alphabet");
  auto* exhaustive_opt = laws_cmd->add_flag(
      "--exhaustive", exhaustive_flag, "sweep every input tuple (default)");
  auto* samples_opt = laws_cmd->add_option(
      "--samples", samples, "check this many random tuples per law");
  laws_cmd->add_option("--seed", seed, "seed for sampled mode");
  laws_cmd->add_option("--law", only_law, "check a single law by id");
  exhaustive_opt->excludes(samples_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval_cmd) return run_eval(file_bindings, alphabet_csv, expr_src);
    if (*lm_cmd) return run_lm(lm_path);
    if (*dec_cmd) return run_decompose(dec_path, union_path);
    return run_laws(alphabet_size, samples_opt->count() > 0, samples, seed,
                    only_law);
  } catch (const horn::CyclicError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
