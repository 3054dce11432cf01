// atom.hpp -- propositional atoms and finite atom sets

#ifndef HORN_ATOM_HPP_
#define HORN_ATOM_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace horn {

// A propositional atom: a lowercase-initial identifier plus a prime level.
// Keeping the prime level structural (instead of baking apostrophes into the
// name) makes the disjoint copy a -> a' and its inverse total maps.
// Atoms are totally ordered by (name, primes).
class Atom {
 public:
  explicit Atom(std::string name, std::size_t primes = 0)
      : name_(std::move(name)), primes_(primes) {
    if (!valid_name(name_)) {
      throw std::invalid_argument("invalid atom name: '" + name_ + "'");
    }
  }

  static bool valid_name(std::string_view name) {
    if (name.empty() || name.front() < 'a' || name.front() > 'z') {
      return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
             (c >= '0' && c <= '9') || c == '_';
    });
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t primes() const noexcept { return primes_; }

  Atom primed(std::size_t n = 1) const { return Atom(name_, primes_ + n); }

  Atom unprimed(std::size_t n = 1) const {
    if (primes_ < n) {
      throw std::invalid_argument("cannot unprime atom '" + str() + "'");
    }
    return Atom(name_, primes_ - n);
  }

  std::string str() const { return name_ + std::string(primes_, '\''); }

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;

 private:
  std::string name_;
  std::size_t primes_;
};

// A finite set of atoms kept as a sorted duplicate-free vector.  Serves as
// both the Interpretation type (sets of atoms a theory can entail) and the
// Alphabet type (the ambient atom set of an alphabet-dependent operation).
class AtomSet {
 public:
  using const_iterator = std::vector<Atom>::const_iterator;

  AtomSet() = default;
  AtomSet(std::initializer_list<Atom> atoms) : atoms_(atoms) { canonicalize(); }
  explicit AtomSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    canonicalize();
  }

  bool empty() const noexcept { return atoms_.empty(); }
  std::size_t size() const noexcept { return atoms_.size(); }
  const_iterator begin() const noexcept { return atoms_.begin(); }
  const_iterator end() const noexcept { return atoms_.end(); }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  bool contains(const Atom& a) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), a);
  }

  bool subset_of(const AtomSet& other) const {
    return std::includes(other.atoms_.begin(), other.atoms_.end(),
                         atoms_.begin(), atoms_.end());
  }

  friend AtomSet operator|(const AtomSet& a, const AtomSet& b) {
    std::vector<Atom> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    return AtomSet(trusted{}, std::move(out));
  }

  friend AtomSet operator&(const AtomSet& a, const AtomSet& b) {
    std::vector<Atom> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return AtomSet(trusted{}, std::move(out));
  }

  friend AtomSet operator-(const AtomSet& a, const AtomSet& b) {
    std::vector<Atom> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return AtomSet(trusted{}, std::move(out));
  }

  // Rendered as "a, b, c" (sorted); used by error messages and the CLI.
  std::string str() const {
    std::string out;
    for (const Atom& a : atoms_) {
      if (!out.empty()) out += ", ";
      out += a.str();
    }
    return out;
  }

  friend auto operator<=>(const AtomSet&, const AtomSet&) = default;
  friend bool operator==(const AtomSet&, const AtomSet&) = default;

 private:
  struct trusted {};
  AtomSet(trusted, std::vector<Atom> sorted) : atoms_(std::move(sorted)) {}

  void canonicalize() {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  }

  std::vector<Atom> atoms_;
};

using Interpretation = AtomSet;
using Alphabet = AtomSet;

}  // namespace horn

#endif  // HORN_ATOM_HPP_
