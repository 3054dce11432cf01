// oracle.hpp -- brute-force verification engine: exhaustive and seeded
// enumeration of theories over small alphabets, an independent literal
// implementation of composition, and machine checking of the algebraic laws
// with counterexample reporting

#ifndef HORN_ORACLE_HPP_
#define HORN_ORACLE_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "horn/algebra.hpp"
#include "horn/atom.hpp"
#include "horn/decomposition.hpp"
#include "horn/errors.hpp"
#include "horn/rule.hpp"
#include "horn/semantics.hpp"
#include "horn/textio.hpp"
#include "horn/theory.hpp"

namespace horn::oracle {

// ---------------------------------------------------------------------------
// Independent composition: the literal size-matched-subset definition.
// algebra's compose enumerates choice functions instead; the two are checked
// against each other by the compose_agreement law, which makes the central
// operation its own oracle.
// ---------------------------------------------------------------------------

inline Theory compose_by_subsets(const Theory& p, const Theory& r) {
  const std::vector<Rule>& pool = r.rules();
  std::vector<Rule> out;
  for (const Rule& rule : p) {
    std::size_t k = rule.size();
    if (k == 0) {
      out.push_back(rule);
      continue;
    }
    if (k > pool.size()) continue;
    std::vector<std::size_t> comb(k);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    while (true) {
      std::vector<Atom> selected_heads;
      std::vector<Atom> selected_body;
      for (std::size_t idx : comb) {
        selected_heads.push_back(pool[idx].head());
        selected_body.insert(selected_body.end(), pool[idx].body().begin(),
                             pool[idx].body().end());
      }
      if (AtomSet(std::move(selected_heads)) == rule.body()) {
        out.emplace_back(rule.head(), AtomSet(std::move(selected_body)));
      }
      // next k-combination of pool indices
      std::size_t i = k;
      bool advanced = false;
      while (i-- > 0) {
        if (comb[i] != i + pool.size() - k) {
          ++comb[i];
          for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return Theory(std::move(out));
}

// ---------------------------------------------------------------------------
// Rule universes and exhaustive enumeration
// ---------------------------------------------------------------------------

struct EnumerationConstraints {
  bool krom_only = false;
  bool proper_only = false;
  std::optional<std::size_t> max_body;
};

// Every rule over the alphabet meeting the constraints, in canonical order.
inline std::vector<Rule> rule_universe(
    const Alphabet& alphabet, const EnumerationConstraints& constraints = {}) {
  const std::vector<Atom>& atoms = alphabet.atoms();
  std::vector<Rule> rules;
  std::uint32_t body_limit = std::uint32_t{1} << atoms.size();
  for (std::uint32_t body_bits = 0; body_bits < body_limit; ++body_bits) {
    std::size_t body_size = static_cast<std::size_t>(std::popcount(body_bits));
    if (constraints.krom_only && body_size > 1) continue;
    if (constraints.proper_only && body_size == 0) continue;
    if (constraints.max_body && body_size > *constraints.max_body) continue;
    std::vector<Atom> body;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (body_bits & (std::uint32_t{1} << i)) body.push_back(atoms[i]);
    }
    AtomSet body_set(std::move(body));
    for (const Atom& head : atoms) {
      rules.emplace_back(head, body_set);
    }
  }
  std::sort(rules.begin(), rules.end());
  return rules;
}

// A deterministic stream of every theory over an alphabet, one per subset of
// the rule universe.  Refuses rule universes above 20 rules (2^20 theories).
class TheoryEnumeration {
 public:
  explicit TheoryEnumeration(const Alphabet& alphabet,
                             const EnumerationConstraints& constraints = {})
      : rules_(rule_universe(alphabet, constraints)) {
    if (rules_.size() > 20) {
      throw DomainTooLargeError(
          "rule universe has " + std::to_string(rules_.size()) +
          " rules; exhaustive enumeration is capped at 2^20 theories");
    }
  }

  std::uint64_t count() const {
    return std::uint64_t{1} << rules_.size();
  }

  Theory at(std::uint64_t index) const {
    std::vector<Rule> selected;
    for (std::uint64_t bits = index; bits != 0; bits &= bits - 1) {
      selected.push_back(rules_[std::countr_zero(bits)]);
    }
    return Theory(std::move(selected));
  }

  const std::vector<Rule>& rules() const noexcept { return rules_; }

  class const_iterator {
   public:
    using value_type = Theory;
    using difference_type = std::int64_t;

    const_iterator(const TheoryEnumeration* owner, std::uint64_t index)
        : owner_(owner), index_(index) {}

    Theory operator*() const { return owner_->at(index_); }
    const_iterator& operator++() {
      ++index_;
      return *this;
    }
    friend bool operator==(const const_iterator&, const const_iterator&) =
        default;

   private:
    const TheoryEnumeration* owner_;
    std::uint64_t index_;
  };

  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, count()}; }

 private:
  std::vector<Rule> rules_;
};

inline TheoryEnumeration enumerate_theories(
    const Alphabet& alphabet, const EnumerationConstraints& constraints = {}) {
  return TheoryEnumeration(alphabet, constraints);
}

// ---------------------------------------------------------------------------
// Seeded random theories
// ---------------------------------------------------------------------------

struct RandomTheoryParams {
  std::size_t rule_count = 4;
  std::size_t max_body = 3;
  bool acyclic = false;
};

namespace detail {

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
  }
  return result;
}

// Rules available for a head with `below` candidate body atoms.
inline std::uint64_t bodies_available(std::size_t below, std::size_t max_body) {
  std::uint64_t total = 0;
  for (std::size_t j = 0; j <= std::min(below, max_body); ++j) {
    total += binomial(below, j);
  }
  return total;
}

}  // namespace detail

// Deterministic in the seed.  With acyclic set, rules are generated against
// a random level assignment, so level_mapping always succeeds on the result.
inline Theory random_theory(std::uint64_t seed, const Alphabet& alphabet,
                            const RandomTheoryParams& params = {}) {
  if (alphabet.empty() && params.rule_count > 0) {
    throw UnsatisfiableParamsError("empty alphabet admits no rules");
  }
  std::mt19937_64 rng(seed);
  std::vector<Atom> atoms = alphabet.atoms();
  if (params.acyclic) {
    std::shuffle(atoms.begin(), atoms.end(), rng);
  }
  std::size_t max_body = std::min(params.max_body, atoms.size());
  std::uint64_t available = 0;
  for (std::size_t pos = 0; pos < atoms.size(); ++pos) {
    std::size_t below = params.acyclic ? pos : atoms.size();
    available += detail::bodies_available(below, max_body);
  }
  if (params.rule_count > available) {
    throw UnsatisfiableParamsError(
        "requested " + std::to_string(params.rule_count) + " rules but only " +
        std::to_string(available) + " distinct rules exist");
  }
  std::set<Rule> rules;
  std::size_t attempts = 0;
  std::size_t attempt_cap = 10000 + 1000 * params.rule_count;
  while (rules.size() < params.rule_count) {
    if (++attempts > attempt_cap) {
      throw InternalError("random_theory failed to fill the rule quota");
    }
    std::size_t head_pos = std::uniform_int_distribution<std::size_t>(
        0, atoms.size() - 1)(rng);
    std::size_t below = params.acyclic ? head_pos : atoms.size();
    std::size_t body_size = std::uniform_int_distribution<std::size_t>(
        0, std::min(below, max_body))(rng);
    std::vector<Atom> candidates(atoms.begin(),
                                 atoms.begin() +
                                     static_cast<std::ptrdiff_t>(below));
    std::shuffle(candidates.begin(), candidates.end(), rng);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(body_size),
                     candidates.end());
    rules.emplace(atoms[head_pos], AtomSet(std::move(candidates)));
  }
  return Theory(std::vector<Rule>(rules.begin(), rules.end()));
}

// ---------------------------------------------------------------------------
// Law checking
// ---------------------------------------------------------------------------

struct Counterexample {
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

struct LawReport {
  std::string law_id;
  std::size_t domain_size = 0;        // alphabet size
  std::uint64_t cases_checked = 0;
  std::uint64_t violations = 0;
  std::vector<Counterexample> counterexamples;  // capped at 10
  bool expects_counterexamples = false;

  // An expected-failure law demonstrates a non-law; finding counterexamples
  // there is not a defect.
  bool ok() const {
    return expects_counterexamples || violations == 0;
  }
};

struct CheckMode {
  enum class Kind { exhaustive, sampled };
  Kind kind = Kind::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;

  static CheckMode exhaustive() { return {}; }
  static CheckMode sampled(std::uint64_t seed, std::uint64_t count) {
    return {Kind::sampled, seed, count};
  }
};

namespace detail {

using TheoryMask = std::uint64_t;
using AtomMask = std::uint32_t;

constexpr std::size_t kCounterexampleCap = 10;

// Bit-level view of the full rule universe over a small alphabet: a theory
// is a subset of rules, i.e. a mask, union is bitwise or, and composition
// goes through a memo table when the universe is small enough.
class LawUniverse {
 public:
  explicit LawUniverse(const Alphabet& alphabet)
      : alphabet_(alphabet), atoms_(alphabet.atoms()),
        rules_(rule_universe(alphabet)) {
    if (rules_.size() > 64) {
      throw DomainTooLargeError(
          "law checking supports alphabets of at most 4 atoms (64 rules); "
          "got " + std::to_string(rules_.size()) + " rules");
    }
    std::size_t interp_count = std::size_t{1} << atoms_.size();
    rule_index_.assign(atoms_.size() * interp_count, kNoRule);
    head_atom_.resize(rules_.size());
    body_mask_.resize(rules_.size());
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const Rule& r = rules_[i];
      std::size_t head = atom_index(r.head());
      AtomMask body = atom_mask(r.body());
      head_atom_[i] = static_cast<AtomMask>(1u << head);
      body_mask_[i] = body;
      rule_index_[head * interp_count + body] = i;
      if (r.is_fact()) facts_mask_ |= bit(i);
      if (r.is_krom()) krom_mask_ |= bit(i);
    }
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t rule_count() const noexcept { return rules_.size(); }
  std::size_t atom_count() const noexcept { return atoms_.size(); }
  std::uint64_t theory_count() const {
    if (rules_.size() >= 64) {
      throw DomainTooLargeError("theory space does not fit a 64-bit count");
    }
    return std::uint64_t{1} << rules_.size();
  }
  AtomMask all_atoms() const {
    return static_cast<AtomMask>((std::uint64_t{1} << atoms_.size()) - 1);
  }
  TheoryMask facts_mask() const noexcept { return facts_mask_; }
  TheoryMask krom_mask() const noexcept { return krom_mask_; }

  std::size_t atom_index(const Atom& a) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
    return static_cast<std::size_t>(it - atoms_.begin());
  }

  AtomMask atom_mask(const AtomSet& set) const {
    AtomMask mask = 0;
    for (const Atom& a : set) {
      mask |= static_cast<AtomMask>(1u << atom_index(a));
    }
    return mask;
  }

  AtomSet atom_set(AtomMask mask) const {
    std::vector<Atom> out;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      out.push_back(atoms_[static_cast<std::size_t>(std::countr_zero(bits))]);
    }
    return AtomSet(std::move(out));
  }

  Theory decode(TheoryMask mask) const {
    std::vector<Rule> selected;
    for (TheoryMask bits = mask; bits != 0; bits &= bits - 1) {
      selected.push_back(
          rules_[static_cast<std::size_t>(std::countr_zero(bits))]);
    }
    return Theory(std::move(selected));
  }

  TheoryMask encode(const Theory& p) const {
    TheoryMask mask = 0;
    for (const Rule& r : p) {
      auto it = std::lower_bound(rules_.begin(), rules_.end(), r);
      if (it == rules_.end() || *it != r) {
        throw std::invalid_argument("rule outside the universe: " +
                                    rule_str(r));
      }
      mask |= bit(static_cast<std::size_t>(it - rules_.begin()));
    }
    return mask;
  }

  // Mask of the interpretation I viewed as a theory of facts.
  TheoryMask interp_rules(AtomMask atoms) const {
    return gather(atoms, 0);
  }

  // Mask of the unit theory 1_I.
  TheoryMask unit_rules(AtomMask atoms) const {
    TheoryMask mask = 0;
    std::size_t interp_count = std::size_t{1} << atoms_.size();
    for (std::uint32_t bits = atoms; bits != 0; bits &= bits - 1) {
      std::size_t a = static_cast<std::size_t>(std::countr_zero(bits));
      mask |= bit(rule_index_[a * interp_count + (1u << a)]);
    }
    return mask;
  }

  // Index of rule head <- body, if inside the universe.
  std::size_t rule_of(std::size_t head_index, AtomMask body) const {
    std::size_t interp_count = std::size_t{1} << atoms_.size();
    return rule_index_[head_index * interp_count + body];
  }

  TheoryMask bit(std::size_t i) const { return TheoryMask{1} << i; }

  AtomMask head_atoms(TheoryMask theory) const {
    AtomMask out = 0;
    for (TheoryMask bits = theory; bits != 0; bits &= bits - 1) {
      out |= head_atom_[static_cast<std::size_t>(std::countr_zero(bits))];
    }
    return out;
  }

  AtomMask body_atoms(TheoryMask theory) const {
    AtomMask out = 0;
    for (TheoryMask bits = theory; bits != 0; bits &= bits - 1) {
      out |= body_mask_[static_cast<std::size_t>(std::countr_zero(bits))];
    }
    return out;
  }

  // Heads of the fact rules of a theory, as an atom mask.
  AtomMask fact_atoms(TheoryMask theory) const {
    return head_atoms(theory & facts_mask_);
  }

  // T_P(I) at mask level.
  AtomMask tp(TheoryMask theory, AtomMask interp) const {
    AtomMask out = 0;
    for (TheoryMask bits = theory; bits != 0; bits &= bits - 1) {
      std::size_t i = static_cast<std::size_t>(std::countr_zero(bits));
      if ((body_mask_[i] & ~interp) == 0) out |= head_atom_[i];
    }
    return out;
  }

  TheoryMask rules_with_head_in(TheoryMask theory, AtomMask atoms) const {
    TheoryMask out = 0;
    for (TheoryMask bits = theory; bits != 0; bits &= bits - 1) {
      std::size_t i = static_cast<std::size_t>(std::countr_zero(bits));
      if (head_atom_[i] & atoms) out |= bit(i);
    }
    return out;
  }

  TheoryMask rules_with_body_in(TheoryMask theory, AtomMask atoms) const {
    TheoryMask out = 0;
    for (TheoryMask bits = theory; bits != 0; bits &= bits - 1) {
      std::size_t i = static_cast<std::size_t>(std::countr_zero(bits));
      if ((body_mask_[i] & ~atoms) == 0) out |= bit(i);
    }
    return out;
  }

  AtomMask rule_head(std::size_t i) const { return head_atom_[i]; }
  AtomMask rule_body(std::size_t i) const { return body_mask_[i]; }

  static constexpr std::size_t kNoRule = static_cast<std::size_t>(-1);

 private:
  TheoryMask gather(AtomMask atoms, AtomMask body) const {
    TheoryMask mask = 0;
    std::size_t interp_count = std::size_t{1} << atoms_.size();
    for (std::uint32_t bits = atoms; bits != 0; bits &= bits - 1) {
      std::size_t a = static_cast<std::size_t>(std::countr_zero(bits));
      mask |= bit(rule_index_[a * interp_count + body]);
    }
    return mask;
  }

  Alphabet alphabet_;
  std::vector<Atom> atoms_;
  std::vector<Rule> rules_;
  std::vector<std::size_t> rule_index_;
  std::vector<AtomMask> head_atom_;
  std::vector<AtomMask> body_mask_;
  TheoryMask facts_mask_ = 0;
  TheoryMask krom_mask_ = 0;
};

// Shared state for one law run: iteration over the chosen domain, mask
// composition (memoized when exhaustive), and counterexample recording.
class LawContext {
 public:
  LawContext(const Alphabet& alphabet, const CheckMode& mode,
             LawReport& report)
      : uni_(alphabet), mode_(mode), report_(report), rng_(mode.seed) {}

  const LawUniverse& uni() const { return uni_; }
  bool exhaustive() const {
    return mode_.kind == CheckMode::Kind::exhaustive;
  }
  std::uint64_t sample_count() const { return mode_.count; }
  std::mt19937_64& rng() { return rng_; }

  // Laws that sweep the whole theory space must stay within the memoizable
  // universe; laws over permutations or interpretations have no such limit.
  void require_small_exhaustive() {
    if (uni_.rule_count() > 8) {
      throw DomainTooLargeError(
          "exhaustive sweeps over the theory space need a rule universe of "
          "at most 8 rules (alphabet of 2 atoms); use sampled mode");
    }
  }

  Theory theory_of(TheoryMask mask) {
    if (exhaustive() && uni_.rule_count() <= 8) {
      ensure_decoded();
      return decoded_[static_cast<std::size_t>(mask)];
    }
    return uni_.decode(mask);
  }

  TheoryMask compose(TheoryMask a, TheoryMask b) {
    if (exhaustive()) {
      if (table_.empty()) build_table();
      return table_[static_cast<std::size_t>(a) * decoded_.size() +
                    static_cast<std::size_t>(b)];
    }
    return uni_.encode(horn::compose(uni_.decode(a), uni_.decode(b)));
  }

  TheoryMask sample_mask() {
    if (uni_.rule_count() <= 24) {
      return rng_() & (uni_.theory_count() - 1);
    }
    RandomTheoryParams params;
    params.rule_count = 2 * uni_.atom_count();
    params.max_body = std::min<std::size_t>(uni_.atom_count(), 3);
    return uni_.encode(random_theory(rng_(), uni_.alphabet(), params));
  }

  AtomMask sample_atoms() {
    return static_cast<AtomMask>(rng_()) & uni_.all_atoms();
  }

  template <typename F>
  void each_theory(F&& f) {
    if (exhaustive()) {
      require_small_exhaustive();
      for (TheoryMask p = 0; p < uni_.theory_count(); ++p) f(p);
    } else {
      for (std::uint64_t i = 0; i < mode_.count; ++i) f(sample_mask());
    }
  }

  template <typename F>
  void each_pair(F&& f) {
    if (exhaustive()) {
      require_small_exhaustive();
      for (TheoryMask p = 0; p < uni_.theory_count(); ++p) {
        for (TheoryMask q = 0; q < uni_.theory_count(); ++q) f(p, q);
      }
    } else {
      for (std::uint64_t i = 0; i < mode_.count; ++i) {
        f(sample_mask(), sample_mask());
      }
    }
  }

  template <typename F>
  void each_triple(F&& f) {
    if (exhaustive()) {
      require_small_exhaustive();
      for (TheoryMask p = 0; p < uni_.theory_count(); ++p) {
        for (TheoryMask q = 0; q < uni_.theory_count(); ++q) {
          for (TheoryMask r = 0; r < uni_.theory_count(); ++r) f(p, q, r);
        }
      }
    } else {
      for (std::uint64_t i = 0; i < mode_.count; ++i) {
        f(sample_mask(), sample_mask(), sample_mask());
      }
    }
  }

  template <typename F>
  void each_theory_interp(F&& f) {
    if (exhaustive()) {
      require_small_exhaustive();
      for (TheoryMask p = 0; p < uni_.theory_count(); ++p) {
        for (AtomMask i = 0; i <= uni_.all_atoms(); ++i) f(p, i);
      }
    } else {
      for (std::uint64_t i = 0; i < mode_.count; ++i) {
        f(sample_mask(), sample_atoms());
      }
    }
  }

  template <typename F>
  void each_pair_interp(F&& f) {
    if (exhaustive()) {
      require_small_exhaustive();
      for (TheoryMask p = 0; p < uni_.theory_count(); ++p) {
        for (TheoryMask q = 0; q < uni_.theory_count(); ++q) {
          for (AtomMask i = 0; i <= uni_.all_atoms(); ++i) f(p, q, i);
        }
      }
    } else {
      for (std::uint64_t i = 0; i < mode_.count; ++i) {
        f(sample_mask(), sample_mask(), sample_atoms());
      }
    }
  }

  template <typename F>
  void each_interp_pair(F&& f) {
    if (exhaustive()) {
      for (AtomMask i = 0; i <= uni_.all_atoms(); ++i) {
        for (AtomMask j = 0; j <= uni_.all_atoms(); ++j) f(i, j);
      }
    } else {
      for (std::uint64_t i = 0; i < mode_.count; ++i) {
        f(sample_atoms(), sample_atoms());
      }
    }
  }

  // Record one checked case; `make_cx` is only invoked on a violation that
  // still fits under the counterexample cap.
  template <typename MakeCx>
  void tally(bool holds, MakeCx&& make_cx) {
    ++report_.cases_checked;
    if (holds) return;
    ++report_.violations;
    if (report_.counterexamples.size() < kCounterexampleCap) {
      report_.counterexamples.push_back(make_cx());
    }
  }

  std::string describe(TheoryMask mask) {
    return inline_theory_str(theory_of(mask));
  }

  std::string describe_atoms(AtomMask atoms) {
    return "{" + uni_.atom_set(atoms).str() + "}";
  }

 private:
  void ensure_decoded() {
    if (!decoded_.empty()) return;
    std::size_t n = static_cast<std::size_t>(uni_.theory_count());
    decoded_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) decoded_.push_back(uni_.decode(i));
  }

  void build_table() {
    require_small_exhaustive();
    ensure_decoded();
    std::size_t n = decoded_.size();
    table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table_[a * n + b] = static_cast<std::uint8_t>(
            uni_.encode(horn::compose(decoded_[a], decoded_[b])));
      }
    }
  }

  LawUniverse uni_;
  CheckMode mode_;
  LawReport& report_;
  std::mt19937_64 rng_;
  std::vector<Theory> decoded_;
  std::vector<std::uint8_t> table_;
};

struct Law {
  std::string id;
  bool expects_counterexamples;
  std::function<void(LawContext&)> run;
};

inline const std::vector<Law>& law_registry();

}  // namespace detail

inline LawReport check_law(const std::string& law_id, const Alphabet& alphabet,
                           const CheckMode& mode) {
  for (const detail::Law& law : detail::law_registry()) {
    if (law.id != law_id) continue;
    LawReport report;
    report.law_id = law_id;
    report.domain_size = alphabet.size();
    report.expects_counterexamples = law.expects_counterexamples;
    detail::LawContext ctx(alphabet, mode, report);
    law.run(ctx);
    return report;
  }
  throw UnknownLawError(law_id);
}

inline std::vector<std::string> law_ids() {
  std::vector<std::string> ids;
  for (const detail::Law& law : detail::law_registry()) {
    ids.push_back(law.id);
  }
  return ids;
}

}  // namespace horn::oracle

#include "horn/oracle_laws.hpp"

#endif  // HORN_ORACLE_HPP_
