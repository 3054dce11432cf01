// rule.hpp -- Horn rules: one head atom, a finite set of body atoms

#ifndef HORN_RULE_HPP_
#define HORN_RULE_HPP_

#include <compare>
#include <cstddef>
#include <utility>

#include "horn/atom.hpp"

namespace horn {

// A rule head <- body with the body kept as a set, so size(r) = |body(r)|
// and duplicate atoms written in source text collapse.  A fact is a rule
// with empty body.  Rules are ordered by (head, body lexicographically),
// which places facts before proper rules with the same head.
class Rule {
 public:
  explicit Rule(Atom head, AtomSet body = {})
      : head_(std::move(head)), body_(std::move(body)) {}

  const Atom& head() const noexcept { return head_; }
  const AtomSet& body() const noexcept { return body_; }
  std::size_t size() const noexcept { return body_.size(); }

  bool is_fact() const noexcept { return body_.empty(); }
  bool is_proper() const noexcept { return !body_.empty(); }
  bool is_tautology() const {
    return body_.size() == 1 && *body_.begin() == head_;
  }
  bool is_krom() const noexcept { return body_.size() <= 1; }
  bool is_binary() const noexcept { return body_.size() <= 2; }

  AtomSet atoms() const { return AtomSet{head_} | body_; }

  friend auto operator<=>(const Rule&, const Rule&) = default;
  friend bool operator==(const Rule&, const Rule&) = default;

 private:
  Atom head_;
  AtomSet body_;
};

}  // namespace horn

#endif  // HORN_RULE_HPP_
