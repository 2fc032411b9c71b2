#include "asd/realcalc.hpp"

#include <algorithm>
#include <cctype>

namespace asd {

ExprPtr Expr::literal(const Rational& q) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::lit;
  e->value = q;
  return e;
}

ExprPtr Expr::var() {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::var;
  return e;
}

ExprPtr Expr::unary(Kind k, ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(a);
  return e;
}

ExprPtr Expr::binary(Kind k, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view t) : t_(t) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (i_ < t_.size()) throw ParseError(std::string("unexpected '") + t_[i_] + "'", i_);
    return e;
  }

 private:
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < t_.size() && t_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i_);
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      if (eat('+'))
        e = Expr::binary(Expr::Kind::add, e, term());
      else if (eat('-'))
        e = Expr::binary(Expr::Kind::sub, e, term());
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    while (eat('*')) e = Expr::binary(Expr::Kind::mul, e, unary());
    return e;
  }

  ExprPtr unary() {
    if (eat('-')) return Expr::unary(Expr::Kind::neg, unary());
    return primary();
  }

  std::string digits() {
    std::size_t start = i_;
    while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
    return std::string(t_.substr(start, i_ - start));
  }

  ExprPtr primary() {
    skip();
    if (i_ >= t_.size()) throw ParseError("unexpected end of input", i_);
    const char c = t_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      std::string num = digits();
      if (i_ < t_.size() && (t_[i_] == '.' || t_[i_] == 'e' || t_[i_] == 'E'))
        throw ParseError("non-rational literal", start);
      std::string den = "1";
      if (i_ < t_.size() && t_[i_] == '/') {
        ++i_;
        den = digits();
        if (den.empty()) throw ParseError("expected denominator", i_);
        if (i_ < t_.size() && t_[i_] == '.') throw ParseError("non-rational literal", start);
      }
      mpz_class dz{den};
      if (dz == 0) throw ParseError("zero denominator", start);
      Rational q{mpz_class{num}, dz};
      q.canonicalize();
      return Expr::literal(q);
    }
    if (c == '(') {
      ++i_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < t_.size() && std::isalpha(static_cast<unsigned char>(t_[i_]))) ++i_;
      std::string_view word = t_.substr(start, i_ - start);
      if (word == "x") return Expr::var();
      if (word == "min" || word == "max") {
        expect('(');
        ExprPtr a = expr();
        expect(',');
        ExprPtr b = expr();
        expect(')');
        return Expr::binary(word == "min" ? Expr::Kind::min : Expr::Kind::max, a, b);
      }
      throw ParseError("unknown identifier '" + std::string(word) + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", i_);
  }

  std::string_view t_;
  std::size_t i_ = 0;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return 1;
    case Expr::Kind::mul: return 2;
    case Expr::Kind::neg: return 3;
    default: return 4;
  }
}

std::string print(const Expr& e, int ctx) {
  std::string s;
  const int p = precedence(e.kind);
  switch (e.kind) {
    case Expr::Kind::lit:
      s = to_string(e.value);
      if (e.value < 0) return "(" + s + ")";
      return s;
    case Expr::Kind::var: return "x";
    case Expr::Kind::neg: s = "-" + print(*e.lhs, 3); break;
    case Expr::Kind::add: s = print(*e.lhs, 1) + " + " + print(*e.rhs, 2); break;
    case Expr::Kind::sub: s = print(*e.lhs, 1) + " - " + print(*e.rhs, 2); break;
    case Expr::Kind::mul: s = print(*e.lhs, 2) + " * " + print(*e.rhs, 3); break;
    case Expr::Kind::min: return "min(" + print(*e.lhs, 0) + ", " + print(*e.rhs, 0) + ")";
    case Expr::Kind::max: return "max(" + print(*e.lhs, 0) + ", " + print(*e.rhs, 0) + ")";
  }
  return p < ctx ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) { return print(e, 0); }

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::lit: return a.value == b.value;
    case Expr::Kind::var: return true;
    case Expr::Kind::neg: return same_tree(*a.lhs, *b.lhs);
    default: return same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
  }
}

Rational eval_rational(const Expr& e, const Rational& x) {
  switch (e.kind) {
    case Expr::Kind::lit: return e.value;
    case Expr::Kind::var: return x;
    case Expr::Kind::neg: return -eval_rational(*e.lhs, x);
    case Expr::Kind::add: return eval_rational(*e.lhs, x) + eval_rational(*e.rhs, x);
    case Expr::Kind::sub: return eval_rational(*e.lhs, x) - eval_rational(*e.rhs, x);
    case Expr::Kind::mul: return eval_rational(*e.lhs, x) * eval_rational(*e.rhs, x);
    case Expr::Kind::min: return std::min(eval_rational(*e.lhs, x), eval_rational(*e.rhs, x));
    case Expr::Kind::max: return std::max(eval_rational(*e.lhs, x), eval_rational(*e.rhs, x));
  }
  throw std::logic_error("bad expression");
}

RealMatrix compile(const Expr& e) {
  auto binary = [&](Builtin op, const RealMatrix& a, const RealMatrix& b) {
    return compose(builtin_plane_matrix(op), pair_matrix(a, b, shared_real_plane()));
  };
  switch (e.kind) {
    case Expr::Kind::lit: return builtin_real_matrix(Builtin::constant, {e.value});
    case Expr::Kind::var: return builtin_real_matrix(Builtin::identity);
    case Expr::Kind::neg: return compose(builtin_real_matrix(Builtin::negate), compile(*e.lhs));
    case Expr::Kind::add: return binary(Builtin::add, compile(*e.lhs), compile(*e.rhs));
    case Expr::Kind::sub:
      return binary(Builtin::add, compile(*e.lhs),
                    compose(builtin_real_matrix(Builtin::negate), compile(*e.rhs)));
    case Expr::Kind::mul: return binary(Builtin::mul, compile(*e.lhs), compile(*e.rhs));
    case Expr::Kind::min: return binary(Builtin::min, compile(*e.lhs), compile(*e.rhs));
    case Expr::Kind::max: return binary(Builtin::max, compile(*e.lhs), compile(*e.rhs));
  }
  throw std::logic_error("bad expression");
}

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  auto uni = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
  if (depth <= 0 || uni(0, 3) == 0) {
    if (uni(0, 1) == 0) return Expr::var();
    return Expr::literal(make_rational(uni(0, 12), uni(1, 4)));
  }
  switch (uni(0, 6)) {
    case 0: return Expr::unary(Expr::Kind::neg, random_expr(rng, depth - 1));
    case 1: return Expr::binary(Expr::Kind::add, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 2: return Expr::binary(Expr::Kind::sub, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 3:
    case 4: return Expr::binary(Expr::Kind::mul, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 5: return Expr::binary(Expr::Kind::min, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: return Expr::binary(Expr::Kind::max, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  }
}

}  // namespace asd
