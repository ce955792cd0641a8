#pragma once

#include "curvebound/bounds/interval.hpp"
#include "curvebound/exact.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvebound::bounds {

/// Real-valued expression in one integer variable g, built from rational
/// constants, + - * /, rational powers and exp. Immutable; subtrees are
/// shared.
class Expr {
public:
  enum class Kind { Const, Var, Add, Sub, Mul, Div, Pow, Exp };

  Expr(const Rational &c) : node_(std::make_shared<Node>(Node{Kind::Const, c, {}, nullptr, nullptr})) {}
  Expr(long c) : Expr(Rational(c)) {}

  static Expr g() { return Expr(std::make_shared<Node>(Node{Kind::Var, 0, {}, nullptr, nullptr})); }
  static Expr constant(const Rational &c) { return Expr(c); }
  static Expr decimal(std::string_view text) { return Expr(parse_decimal(text)); }

  friend Expr operator+(const Expr &a, const Expr &b) { return binary(Kind::Add, a, b); }
  friend Expr operator-(const Expr &a, const Expr &b) { return binary(Kind::Sub, a, b); }
  friend Expr operator*(const Expr &a, const Expr &b) { return binary(Kind::Mul, a, b); }
  friend Expr operator/(const Expr &a, const Expr &b) { return binary(Kind::Div, a, b); }

  friend Expr pow(const Expr &base, const Rational &exponent)
  {
    return Expr(std::make_shared<Node>(Node{Kind::Pow, 0, exponent, base.node_, nullptr}));
  }
  friend Expr sqrt(const Expr &x) { return pow(x, Rational(1, 2)); }
  friend Expr root(const Expr &x, long n) { return pow(x, Rational(1, n)); }
  friend Expr exp(const Expr &x) { return Expr(std::make_shared<Node>(Node{Kind::Exp, 0, {}, x.node_, nullptr})); }

  Kind kind() const { return node_->kind; }
  bool depends_on_g() const { return depends(*node_); }

  /// Enclosure of the value at g with roughly `bits` significant bits in
  /// each rounded intermediate.
  Interval eval(const BigInt &g, unsigned bits) const { return eval_node(*node_, Rational(g), bits); }

  std::string to_string() const { return print(*node_); }

  // Structural access, used by the asymptotic analysis.
  Expr left() const { return Expr(node_->a); }
  Expr right() const { return Expr(node_->b); }
  const Rational &value() const { return node_->value; }
  const Rational &exponent() const { return node_->exponent; }

private:
  struct Node {
    Kind kind;
    Rational value;
    Rational exponent;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
  };

  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Expr binary(Kind k, const Expr &a, const Expr &b)
  {
    return Expr(std::make_shared<Node>(Node{k, 0, {}, a.node_, b.node_}));
  }

  static bool depends(const Node &n)
  {
    if (n.kind == Kind::Var)
      return true;
    if (n.kind == Kind::Const)
      return false;
    return (n.a && depends(*n.a)) || (n.b && depends(*n.b));
  }

  static Interval eval_node(const Node &n, const Rational &g, unsigned bits)
  {
    switch (n.kind) {
    case Kind::Const: return Interval::point(n.value).rounded(bits + 8);
    case Kind::Var: return Interval::point(g);
    case Kind::Add: return (eval_node(*n.a, g, bits) + eval_node(*n.b, g, bits)).rounded(bits);
    case Kind::Sub: return (eval_node(*n.a, g, bits) - eval_node(*n.b, g, bits)).rounded(bits);
    case Kind::Mul: return (eval_node(*n.a, g, bits) * eval_node(*n.b, g, bits)).rounded(bits);
    case Kind::Div: return (eval_node(*n.a, g, bits) / eval_node(*n.b, g, bits)).rounded(bits);
    case Kind::Pow: return rational_power(eval_node(*n.a, g, bits), n.exponent, bits).rounded(bits);
    case Kind::Exp: return bounds::exp(eval_node(*n.a, g, bits), bits);
    }
    throw Error("unreachable expression kind");
  }

  static std::string print(const Node &n)
  {
    switch (n.kind) {
    case Kind::Const: return curvebound::to_string(n.value);
    case Kind::Var: return "g";
    case Kind::Add: return "(" + print(*n.a) + " + " + print(*n.b) + ")";
    case Kind::Sub: return "(" + print(*n.a) + " - " + print(*n.b) + ")";
    case Kind::Mul: return print(*n.a) + "*" + print(*n.b);
    case Kind::Div: return print(*n.a) + "/" + print(*n.b);
    case Kind::Pow: return print(*n.a) + "^(" + curvebound::to_string(n.exponent) + ")";
    case Kind::Exp: return "exp(" + print(*n.a) + ")";
    }
    return "?";
  }

  std::shared_ptr<const Node> node_;
};

/// Leading behaviour as g -> infinity: c·g^e, or faster than any power.
struct Asymptotic {
  bool exponential = false; // grows faster than every power of g
  std::optional<Expr> coeff;
  Rational exponent = 0;
};

namespace detail {

// Sign of a constant expression, decided by interval evaluation.
inline std::optional<int> sign_of(const Expr &c)
{
  for (unsigned bits = 64; bits <= 1024; bits *= 2) {
    Interval v = c.eval(0, bits);
    if (v.lo() > 0)
      return 1;
    if (v.hi() < 0)
      return -1;
  }
  return std::nullopt;
}

} // namespace detail

/// Leading term, or nullopt when it cannot be determined (cancellation,
/// negative coefficients under roots, exp of a decaying argument, ...).
inline std::optional<Asymptotic> asymptotic(const Expr &e)
{
  using Kind = Expr::Kind;
  using detail::sign_of;
  switch (e.kind()) {
  case Kind::Const:
    if (e.value() == 0)
      return std::nullopt;
    return Asymptotic{false, Expr(e.value()), 0};
  case Kind::Var: return Asymptotic{false, Expr(1), 1};
  case Kind::Add:
  case Kind::Sub: {
    auto x = asymptotic(e.left()), y = asymptotic(e.right());
    if (!x || !y)
      return std::nullopt;
    bool add = e.kind() == Kind::Add;
    if (x->exponential || y->exponential) {
      if (x->exponential && y->exponential)
        return std::nullopt;
      // Only a positive exponential term is accepted.
      if (x->exponential)
        return x;
      return add ? y : std::nullopt;
    }
    if (x->exponent > y->exponent)
      return x;
    if (y->exponent > x->exponent) {
      if (add)
        return y;
      return Asymptotic{false, Expr(0) - *y->coeff, y->exponent};
    }
    Expr c = add ? *x->coeff + *y->coeff : *x->coeff - *y->coeff;
    if (!sign_of(c))
      return std::nullopt;
    return Asymptotic{false, c, x->exponent};
  }
  case Kind::Mul:
  case Kind::Div: {
    auto x = asymptotic(e.left()), y = asymptotic(e.right());
    if (!x || !y)
      return std::nullopt;
    bool mul = e.kind() == Kind::Mul;
    if (x->exponential || y->exponential) {
      if (mul && !(x->exponential && y->exponential)) {
        const auto &poly = x->exponential ? y : x;
        if (sign_of(*poly->coeff) == 1)
          return Asymptotic{true, std::nullopt, 0};
      }
      if (!mul && x->exponential && !y->exponential && sign_of(*y->coeff) == 1)
        return Asymptotic{true, std::nullopt, 0};
      return std::nullopt;
    }
    if (mul)
      return Asymptotic{false, *x->coeff * *y->coeff, x->exponent + y->exponent};
    return Asymptotic{false, *x->coeff / *y->coeff, x->exponent - y->exponent};
  }
  case Kind::Pow: {
    auto x = asymptotic(e.left());
    if (!x || x->exponential || sign_of(*x->coeff) != 1)
      return std::nullopt;
    return Asymptotic{false, pow(*x->coeff, e.exponent()), x->exponent * e.exponent()};
  }
  case Kind::Exp: {
    auto x = asymptotic(e.left());
    if (!x || x->exponential)
      return std::nullopt;
    if (x->exponent == 0)
      return Asymptotic{false, exp(e.left()), 0};
    if (x->exponent > 0 && sign_of(*x->coeff) == 1)
      return Asymptotic{true, std::nullopt, 0};
    return std::nullopt;
  }
  }
  return std::nullopt;
}

enum class Relation { Less, LessEqual };

inline const char *relation_symbol(Relation r) { return r == Relation::Less ? "<" : "<="; }

/// Outcome of deciding lhs REL rhs at one g.
enum class Decision { True, False, Undecided };

/// Decides lhs REL rhs at g by interval evaluation, doubling the precision
/// from 64 to 4096 bits. Equality under a strict relation (or any tie the
/// intervals cannot separate) ends as Undecided.
inline Decision decide(const Expr &lhs, Relation rel, const Expr &rhs, const BigInt &g)
{
  for (unsigned bits = 64; bits <= 4096; bits *= 2) {
    Interval L = lhs.eval(g, bits), R = rhs.eval(g, bits);
    if (rel == Relation::Less) {
      if (L.hi() < R.lo())
        return Decision::True;
      if (L.lo() >= R.hi())
        return Decision::False;
    } else {
      if (L.hi() <= R.lo())
        return Decision::True;
      if (L.lo() > R.hi())
        return Decision::False;
    }
  }
  return Decision::Undecided;
}

} // namespace curvebound::bounds
