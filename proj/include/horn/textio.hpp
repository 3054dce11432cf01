// textio.hpp -- theory file parsing and serialization, plus the expression
// language that exposes the algebra as a meta-calculus

#ifndef HORN_TEXTIO_HPP_
#define HORN_TEXTIO_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "horn/algebra.hpp"
#include "horn/atom.hpp"
#include "horn/errors.hpp"
#include "horn/rule.hpp"
#include "horn/semantics.hpp"
#include "horn/theory.hpp"

namespace horn {

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline std::string rule_str(const Rule& r) {
  std::string out = r.head().str();
  if (r.is_proper()) {
    out += " :- ";
    bool first = true;
    for (const Atom& b : r.body()) {
      if (!first) out += ", ";
      out += b.str();
      first = false;
    }
  }
  out += ".";
  return out;
}

// Canonical text: facts first, then proper rules, each in canonical rule
// order, one per line.  parse_theory round-trips this bit-exactly.
inline std::string serialize_theory(const Theory& p) {
  std::string out;
  for (const Rule& r : p.facts()) {
    out += rule_str(r);
    out += "\n";
  }
  for (const Rule& r : p.proper()) {
    out += rule_str(r);
    out += "\n";
  }
  return out;
}

inline std::string serialize_interpretation(const Interpretation& interp) {
  return interp.str();
}

// One-line rendering for reports and error messages; same facts-first
// order as serialize_theory.
inline std::string inline_theory_str(const Theory& p) {
  std::string out = "{";
  bool first = true;
  for (const Theory& part : {p.facts(), p.proper()}) {
    for (const Rule& r : part) {
      if (!first) out += " ";
      out += rule_str(r);
      first = false;
    }
  }
  out += "}";
  return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  char peek2() const {
    return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
  }

  char get() {
    char c = peek();
    advance();
    return c;
  }

  bool try_consume(char c) {
    skip();
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("'") + c + "'");
    advance();
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(line_, column_, expected);
  }

  static bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  }

  // [a-z][A-Za-z0-9_]* with optional trailing apostrophes.
  Atom read_atom() {
    skip();
    if (peek() < 'a' || peek() > 'z') fail("atom");
    std::string name;
    while (!eof() && is_ident_char(peek())) name += get();
    std::size_t primes = 0;
    while (peek() == '\'') {
      ++primes;
      advance();
    }
    return Atom(std::move(name), primes);
  }

  std::string read_ident() {
    skip();
    char c = peek();
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_')) {
      fail("identifier");
    }
    std::string name;
    while (!eof() && is_ident_char(peek())) name += get();
    return name;
  }

  std::size_t read_int() {
    skip();
    if (peek() < '0' || peek() > '9') fail("integer");
    std::size_t value = 0;
    while (peek() >= '0' && peek() <= '9') {
      value = value * 10 + static_cast<std::size_t>(get() - '0');
    }
    return value;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  void advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// fact `h.` or rule `h :- b1, ..., bk.`; the body must be non-empty.
inline Rule parse_rule(Cursor& cur) {
  Atom head = cur.read_atom();
  cur.skip();
  if (cur.try_consume('.')) return Rule(std::move(head));
  if (cur.peek() == ':' && cur.peek2() == '-') {
    cur.get();
    cur.get();
    std::vector<Atom> body;
    body.push_back(cur.read_atom());
    while (cur.try_consume(',')) body.push_back(cur.read_atom());
    cur.expect('.');
    return Rule(std::move(head), AtomSet(std::move(body)));
  }
  cur.fail("'.' or ':-'");
}

}  // namespace detail

struct TheoryDocument {
  Theory theory;
  std::optional<Alphabet> declared_alphabet;
};

inline TheoryDocument parse_theory(std::string_view text) {
  detail::Cursor cur(text);
  TheoryDocument doc;
  cur.skip();
  if (cur.peek() == '#') {
    cur.get();
    std::string keyword = cur.read_ident();
    if (keyword != "alphabet") cur.fail("'#alphabet'");
    std::vector<Atom> atoms;
    cur.skip();
    if (cur.peek() != '.') {
      atoms.push_back(cur.read_atom());
      while (cur.try_consume(',')) atoms.push_back(cur.read_atom());
    }
    cur.expect('.');
    doc.declared_alphabet = Alphabet(std::move(atoms));
  }
  std::vector<Rule> rules;
  cur.skip();
  while (!cur.eof()) {
    rules.push_back(detail::parse_rule(cur));
    cur.skip();
  }
  doc.theory = Theory(std::move(rules));
  if (doc.declared_alphabet) {
    AtomSet used = doc.theory.atoms();
    if (!used.subset_of(*doc.declared_alphabet)) {
      AtomSet outside = used - *doc.declared_alphabet;
      throw AlphabetError("theory uses atoms {" + outside.str() +
                          "} not in the declared alphabet {" +
                          doc.declared_alphabet->str() + "}");
    }
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Expression language
// ---------------------------------------------------------------------------
//
//   expr    := expr '+' term | term            ('+' is union)
//   term    := term '*' factor | factor        ('*' is composition)
//   factor  := primary postfix*
//   postfix := '^*' | '^+' | '^w' | '^' INT
//   primary := IDENT | '(' expr ')' | '{' inline-rules '}' | FN '(' args ')'
//
// An inline literal is either a theory ({a. b :- a.}) or, when it is a bare
// comma-separated atom list ({a, b}), an interpretation.

using Value = std::variant<Theory, Interpretation>;
using Bindings = std::map<std::string, Theory>;

inline Theory value_as_theory(const Value& v) {
  if (const Theory* t = std::get_if<Theory>(&v)) return *t;
  return to_theory(std::get<Interpretation>(v));
}

inline Interpretation value_as_interpretation(const Value& v,
                                              const std::string& context) {
  if (const Interpretation* i = std::get_if<Interpretation>(&v)) return *i;
  const Theory& t = std::get<Theory>(v);
  for (const Rule& r : t) {
    if (!r.is_fact()) {
      throw EvalError(context + ": expected an interpretation, got theory " +
                      inline_theory_str(t));
    }
  }
  return to_interpretation(t);
}

// Theory results print as canonical rule lines, interpretations as a
// comma-separated atom list.
inline std::string format_value(const Value& v) {
  if (const Theory* t = std::get_if<Theory>(&v)) return serialize_theory(*t);
  return serialize_interpretation(std::get<Interpretation>(v)) + "\n";
}

class Expression {
 public:
  static Expression parse(std::string_view src) {
    detail::Cursor cur(src);
    Expression e;
    e.root_ = parse_expr(cur);
    cur.skip();
    if (!cur.eof()) cur.fail("end of expression");
    return e;
  }

  Value evaluate(const Bindings& bindings, const Alphabet& alphabet) const {
    return eval_node(root_, bindings, alphabet);
  }

 private:
  struct Node {
    enum class Kind {
      compose,
      unite,
      star,
      plus,
      omega_as_theory,
      power,
      call,
      ident,
      theory_lit,
      interp_lit,
      int_lit
    };

    explicit Node(Kind k = Kind::ident) : kind(k) {}

    Kind kind;
    std::vector<Node> children;
    std::string name;
    Theory theory;
    Interpretation interp;
    std::size_t number = 0;
  };

  Expression() = default;

  static Node parse_expr(detail::Cursor& cur) {
    Node left = parse_term(cur);
    while (cur.try_consume('+')) {
      Node right = parse_term(cur);
      Node parent{Node::Kind::unite};
      parent.children.push_back(std::move(left));
      parent.children.push_back(std::move(right));
      left = std::move(parent);
    }
    return left;
  }

  static Node parse_term(detail::Cursor& cur) {
    Node left = parse_factor(cur);
    while (cur.try_consume('*')) {
      Node right = parse_factor(cur);
      Node parent{Node::Kind::compose};
      parent.children.push_back(std::move(left));
      parent.children.push_back(std::move(right));
      left = std::move(parent);
    }
    return left;
  }

  static Node parse_factor(detail::Cursor& cur) {
    Node node = parse_primary(cur);
    while (cur.try_consume('^')) {
      Node parent;
      if (cur.try_consume('*')) {
        parent.kind = Node::Kind::star;
      } else if (cur.try_consume('+')) {
        parent.kind = Node::Kind::plus;
      } else if (cur.peek() == 'w') {
        cur.get();
        parent.kind = Node::Kind::omega_as_theory;
      } else if (cur.peek() >= '0' && cur.peek() <= '9') {
        parent.kind = Node::Kind::power;
        parent.number = cur.read_int();
      } else {
        cur.fail("'*', '+', 'w' or integer after '^'");
      }
      parent.children.push_back(std::move(node));
      node = std::move(parent);
    }
    return node;
  }

  static Node parse_primary(detail::Cursor& cur) {
    cur.skip();
    char c = cur.peek();
    if (c == '(') {
      cur.get();
      Node inner = parse_expr(cur);
      cur.expect(')');
      return inner;
    }
    if (c == '{') {
      cur.get();
      return parse_braces(cur);
    }
    if (c >= '0' && c <= '9') {
      Node node{Node::Kind::int_lit};
      node.number = cur.read_int();
      return node;
    }
    std::string name = cur.read_ident();
    if (cur.try_consume('(')) {
      Node node{Node::Kind::call};
      node.name = std::move(name);
      cur.skip();
      if (cur.peek() != ')') {
        node.children.push_back(parse_expr(cur));
        while (cur.try_consume(',')) node.children.push_back(parse_expr(cur));
      }
      cur.expect(')');
      return node;
    }
    Node node{Node::Kind::ident};
    node.name = std::move(name);
    return node;
  }

  // After '{': empty braces give the empty theory; a bare atom list is an
  // interpretation literal; anything with '.' or ':-' is a theory literal.
  static Node parse_braces(detail::Cursor& cur) {
    cur.skip();
    if (cur.try_consume('}')) {
      Node node{Node::Kind::theory_lit};
      return node;
    }
    Atom first = cur.read_atom();
    cur.skip();
    if (cur.peek() == ',' || cur.peek() == '}') {
      std::vector<Atom> atoms{std::move(first)};
      while (cur.try_consume(',')) atoms.push_back(cur.read_atom());
      cur.expect('}');
      Node node{Node::Kind::interp_lit};
      node.interp = Interpretation(std::move(atoms));
      return node;
    }
    std::vector<Rule> rules;
    // finish the first rule, whose head we already consumed
    if (cur.try_consume('.')) {
      rules.emplace_back(std::move(first));
    } else if (cur.peek() == ':' && cur.peek2() == '-') {
      cur.get();
      cur.get();
      std::vector<Atom> body;
      body.push_back(cur.read_atom());
      while (cur.try_consume(',')) body.push_back(cur.read_atom());
      cur.expect('.');
      rules.emplace_back(std::move(first), AtomSet(std::move(body)));
    } else {
      cur.fail("',', '}', '.' or ':-'");
    }
    cur.skip();
    while (cur.peek() != '}') {
      rules.push_back(detail::parse_rule(cur));
      cur.skip();
    }
    cur.expect('}');
    Node node{Node::Kind::theory_lit};
    node.theory = Theory(std::move(rules));
    return node;
  }

  static const Node& arg(const Node& node, std::size_t i) {
    return node.children[i];
  }

  static void require_arity(const Node& node, std::size_t n) {
    if (node.children.size() != n) {
      throw ArityError(node.name + ": expected " + std::to_string(n) +
                       " argument(s), got " +
                       std::to_string(node.children.size()));
    }
  }

  static Value eval_node(const Node& node, const Bindings& bindings,
                         const Alphabet& alphabet) {
    auto theory_of = [&](const Node& n) {
      return value_as_theory(eval_node(n, bindings, alphabet));
    };
    switch (node.kind) {
      case Node::Kind::compose:
        return compose(theory_of(node.children[0]),
                       theory_of(node.children[1]));
      case Node::Kind::unite:
        return unite(theory_of(node.children[0]), theory_of(node.children[1]));
      case Node::Kind::star:
        return star(theory_of(node.children[0]), alphabet);
      case Node::Kind::plus:
        return plus(theory_of(node.children[0]), alphabet);
      case Node::Kind::omega_as_theory:
        return to_theory(omega(theory_of(node.children[0]), alphabet));
      case Node::Kind::power:
        return power(theory_of(node.children[0]), node.number, alphabet);
      case Node::Kind::ident: {
        auto it = bindings.find(node.name);
        if (it == bindings.end()) throw UnboundIdentifierError(node.name);
        return it->second;
      }
      case Node::Kind::theory_lit:
        return node.theory;
      case Node::Kind::interp_lit:
        return node.interp;
      case Node::Kind::int_lit:
        throw EvalError("integer literal is not a theory");
      case Node::Kind::call:
        return eval_call(node, bindings, alphabet);
    }
    throw EvalError("malformed expression node");
  }

  static Value eval_call(const Node& node, const Bindings& bindings,
                         const Alphabet& alphabet) {
    auto theory_arg = [&](std::size_t i) {
      return value_as_theory(eval_node(arg(node, i), bindings, alphabet));
    };
    auto interp_arg = [&](std::size_t i) {
      return value_as_interpretation(
          eval_node(arg(node, i), bindings, alphabet), node.name);
    };
    const std::string& fn = node.name;
    if (fn == "compose") {
      require_arity(node, 2);
      return compose(theory_arg(0), theory_arg(1));
    }
    if (fn == "union") {
      require_arity(node, 2);
      return unite(theory_arg(0), theory_arg(1));
    }
    if (fn == "star") {
      require_arity(node, 1);
      return star(theory_arg(0), alphabet);
    }
    if (fn == "plus") {
      require_arity(node, 1);
      return plus(theory_arg(0), alphabet);
    }
    if (fn == "omega") {
      require_arity(node, 1);
      return omega(theory_arg(0), alphabet);
    }
    if (fn == "power") {
      require_arity(node, 2);
      const Node& exponent = arg(node, 1);
      if (exponent.kind != Node::Kind::int_lit) {
        throw ArityError("power: second argument must be an integer");
      }
      return power(theory_arg(0), exponent.number, alphabet);
    }
    if (fn == "unit") {
      require_arity(node, 1);
      return unit(interp_arg(0));
    }
    if (fn == "facts") {
      require_arity(node, 1);
      return theory_arg(0).facts();
    }
    if (fn == "proper") {
      require_arity(node, 1);
      return theory_arg(0).proper();
    }
    if (fn == "rev") {
      require_arity(node, 1);
      return reverse(theory_arg(0));
    }
    if (fn == "lred") {
      require_arity(node, 2);
      return reduct(theory_arg(0), interp_arg(1), ReductSide::left);
    }
    if (fn == "rred") {
      require_arity(node, 2);
      return reduct(theory_arg(0), interp_arg(1), ReductSide::right);
    }
    if (fn == "restrict") {
      require_arity(node, 2);
      return reduct(theory_arg(0), interp_arg(1), ReductSide::both);
    }
    if (fn == "cl") {
      require_arity(node, 2);
      return closure(theory_arg(0), interp_arg(1));
    }
    if (fn == "ominus") {
      require_arity(node, 1);
      return ominus(interp_arg(0), alphabet);
    }
    if (fn == "oplus") {
      require_arity(node, 1);
      return oplus(interp_arg(0), alphabet);
    }
    if (fn == "heads") {
      require_arity(node, 1);
      return heads(theory_arg(0), alphabet);
    }
    if (fn == "bodies") {
      require_arity(node, 1);
      return bodies(theory_arg(0), alphabet);
    }
    if (fn == "lm") {
      require_arity(node, 1);
      return least_model(theory_arg(0));
    }
    if (fn == "tp") {
      require_arity(node, 2);
      return tp(theory_arg(0), interp_arg(1));
    }
    if (fn == "bridge_up") {
      require_arity(node, 1);
      return prime_bridge(interp_arg(0), alphabet, PrimeDirection::up);
    }
    if (fn == "bridge_down") {
      require_arity(node, 1);
      return prime_bridge(interp_arg(0), alphabet, PrimeDirection::down);
    }
    throw EvalError("unknown function: " + fn);
  }

  Node root_;
};

inline Value eval_expression(std::string_view src, const Bindings& bindings,
                             const Alphabet& alphabet) {
  return Expression::parse(src).evaluate(bindings, alphabet);
}

}  // namespace horn

#endif  // HORN_TEXTIO_HPP_
