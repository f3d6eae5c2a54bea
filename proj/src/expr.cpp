#include "wavenum/expr.hpp"

#include <cctype>
#include <sstream>

#include "wavenum/integral.hpp"
#include "wavenum/sieve.hpp"

namespace wavenum {

Expr Expr::rational(Rational r) {
  Expr e;
  e.kind = Kind::Rational;
  e.rat = std::move(r);
  return e;
}

Expr Expr::imag() {
  Expr e;
  e.kind = Kind::Imag;
  return e;
}

Expr Expr::wave_lit(MultWave w) {
  Expr e;
  e.kind = Kind::Wave;
  e.wave = std::move(w);
  return e;
}

Expr Expr::unary(UnaryOp op, Expr arg, unsigned n) {
  Expr e;
  e.kind = Kind::Unary;
  e.uop = op;
  e.root_n = n;
  e.a = std::make_unique<Expr>(std::move(arg));
  return e;
}

Expr Expr::binary(BinOp op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = Kind::Binary;
  e.bop = op;
  e.a = std::make_unique<Expr>(std::move(lhs));
  e.b = std::make_unique<Expr>(std::move(rhs));
  return e;
}

bool operator==(const Expr& x, const Expr& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Expr::Kind::Rational:
      return x.rat == y.rat;
    case Expr::Kind::Imag:
      return true;
    case Expr::Kind::Wave:
      return x.wave == y.wave;
    case Expr::Kind::Unary:
      return x.uop == y.uop && x.root_n == y.root_n && *x.a == *y.a;
    case Expr::Kind::Binary:
      return x.bop == y.bop && *x.a == *y.a && *x.b == *y.b;
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expr run() {
    Expr e = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    std::ostringstream os;
    os << "syntax error at offset " << (pos_ + 1) << ": expected " << expected;
    throw ParseError(os.str(), pos_ + 1, expected);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(what);
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string peek_ident() {
    skip_ws();
    std::size_t p = pos_;
    std::string s;
    while (p < text_.size() && std::isalpha(static_cast<unsigned char>(text_[p]))) {
      s += text_[p++];
    }
    return s;
  }

  void eat_ident(const std::string& s) {
    skip_ws();
    pos_ += s.size();
  }

  Expr sum() {
    Expr e = prod();
    while (true) {
      if (eat('+')) {
        e = Expr::binary(BinOp::Add, std::move(e), prod());
      } else if (eat('-')) {
        e = Expr::binary(BinOp::Sub, std::move(e), prod());
      } else {
        return e;
      }
    }
  }

  Expr prod() {
    Expr e = unary();
    while (true) {
      if (eat('*')) {
        e = Expr::binary(BinOp::Mul, std::move(e), unary());
      } else if (eat('/')) {
        e = Expr::binary(BinOp::Div, std::move(e), unary());
      } else if (peek_ident() == "circ") {
        eat_ident("circ");
        e = Expr::binary(BinOp::Circ, std::move(e), unary());
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    const std::string id = peek_ident();
    if (id == "conj" || id == "orthconj" || id == "inv" || id == "root" || id == "integral" ||
        id == "norm") {
      eat_ident(id);
      expect('(', "'('");
      Expr arg = sum();
      if (id == "root") {
        expect(',', "',' before root degree");
        const Rational n = rational_lit();
        if (!n.is_integer() || n.num() <= 0) fail("positive integer root degree");
        expect(')', "')'");
        return Expr::unary(UnaryOp::Root, std::move(arg), n.num().convert_to<unsigned>());
      }
      expect(')', "')'");
      if (id == "conj") return Expr::unary(UnaryOp::Conj, std::move(arg));
      if (id == "orthconj") return Expr::unary(UnaryOp::OrthConj, std::move(arg));
      if (id == "inv") return Expr::unary(UnaryOp::Inv, std::move(arg));
      if (id == "integral") return Expr::unary(UnaryOp::Integral, std::move(arg));
      return Expr::unary(UnaryOp::Norm, std::move(arg));
    }
    return atom();
  }

  Expr atom() {
    const std::string id = peek_ident();
    if (id == "w") {
      eat_ident(id);
      expect('(', "'(' after w");
      const Rational f = rational_lit();
      expect(',', "','");
      const Rational g = rational_lit();
      expect(')', "')'");
      return Expr::wave_lit(MultWave(f, g));
    }
    if (id == "i") {
      eat_ident(id);
      return Expr::imag();
    }
    if (eat('(')) {
      Expr e = sum();
      expect(')', "')'");
      return e;
    }
    if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
      return Expr::rational(rational_lit());
    }
    fail("'w(', rational, 'i', function, or '('");
  }

  Rational rational_lit() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("rational literal");
    }
    Int num = digits();
    Int den = 1;
    // '/' binds into the literal only when directly followed by digits;
    // otherwise it is the division operator.
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      den = digits();
      if (den == 0) fail("nonzero denominator");
    }
    return Rational(neg ? -num : num, den);
  }

  Int digits() {
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      s += text_[pos_++];
    }
    return Int(s);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  if (e.kind != Expr::Kind::Binary) return 2;
  return (e.bop == BinOp::Add || e.bop == BinOp::Sub) ? 0 : 1;
}

void print_to(const Expr& e, std::ostream& os) {
  switch (e.kind) {
    case Expr::Kind::Rational:
      os << e.rat.str();
      return;
    case Expr::Kind::Imag:
      os << 'i';
      return;
    case Expr::Kind::Wave:
      os << e.wave.str();
      return;
    case Expr::Kind::Unary: {
      switch (e.uop) {
        case UnaryOp::Conj: os << "conj"; break;
        case UnaryOp::OrthConj: os << "orthconj"; break;
        case UnaryOp::Inv: os << "inv"; break;
        case UnaryOp::Root: os << "root"; break;
        case UnaryOp::Integral: os << "integral"; break;
        case UnaryOp::Norm: os << "norm"; break;
      }
      os << '(';
      print_to(*e.a, os);
      if (e.uop == UnaryOp::Root) os << ", " << e.root_n;
      os << ')';
      return;
    }
    case Expr::Kind::Binary: {
      const int prec = precedence(e);
      auto side = [&](const Expr& child, bool right) {
        const bool parens = precedence(child) < prec || (right && precedence(child) == prec);
        if (parens) os << '(';
        print_to(child, os);
        if (parens) os << ')';
      };
      side(*e.a, false);
      switch (e.bop) {
        case BinOp::Add: os << " + "; break;
        case BinOp::Sub: os << " - "; break;
        case BinOp::Mul: os << " * "; break;
        case BinOp::Div: os << " / "; break;
        case BinOp::Circ: os << " circ "; break;
      }
      side(*e.b, true);
      return;
    }
  }
}

}  // namespace

Expr parse(const std::string& input) { return Parser(input).run(); }

std::string print(const Expr& e) {
  std::ostringstream os;
  print_to(e, os);
  return os.str();
}

MultWave parse_wave(const std::string& text) {
  const Expr e = parse(text);
  if (e.kind != Expr::Kind::Wave) {
    throw ArgumentError("expected a wave-number literal: '" + text + "'");
  }
  return e.wave;
}

namespace {

PeriodicSeq value_to_seq(const Value& v, Precision prec) {
  if (std::holds_alternative<PeriodicSeq>(v)) return std::get<PeriodicSeq>(v);
  if (std::holds_alternative<MultWave>(v)) return sample(std::get<MultWave>(v), prec);
  if (std::holds_alternative<Rational>(v)) {
    return PeriodicSeq::constant(Complex(std::get<Rational>(v).to_double(), 0.0));
  }
  return PeriodicSeq::constant(Complex(std::get<double>(v), 0.0));
}

Value eval_binary(const Expr& e, Precision prec) {
  Value lhs = evaluate(*e.a, prec);
  Value rhs = evaluate(*e.b, prec);
  const bool both_waves =
      std::holds_alternative<MultWave>(lhs) && std::holds_alternative<MultWave>(rhs);
  const bool both_rationals =
      std::holds_alternative<Rational>(lhs) && std::holds_alternative<Rational>(rhs);

  switch (e.bop) {
    case BinOp::Mul:
      if (both_waves) return product(std::get<MultWave>(lhs), std::get<MultWave>(rhs));
      if (both_rationals) return std::get<Rational>(lhs) * std::get<Rational>(rhs);
      return ew_product(value_to_seq(lhs, prec), value_to_seq(rhs, prec));
    case BinOp::Div:
      if (both_waves) {
        return product(std::get<MultWave>(lhs), inverse(std::get<MultWave>(rhs)));
      }
      if (both_rationals) return std::get<Rational>(lhs) / std::get<Rational>(rhs);
      return ew_quotient(value_to_seq(lhs, prec), value_to_seq(rhs, prec));
    case BinOp::Circ:
      if (!both_waves) {
        throw DomainError("'circ' requires two multiplicative wave-number operands");
      }
      return circ_product(std::get<MultWave>(lhs), std::get<MultWave>(rhs));
    case BinOp::Add:
      if (both_rationals) return std::get<Rational>(lhs) + std::get<Rational>(rhs);
      return ew_sum(value_to_seq(lhs, prec), value_to_seq(rhs, prec));
    case BinOp::Sub:
      if (both_rationals) return std::get<Rational>(lhs) - std::get<Rational>(rhs);
      return ew_difference(value_to_seq(lhs, prec), value_to_seq(rhs, prec));
  }
  throw DomainError("unreachable binary operator");
}

Value eval_unary(const Expr& e, Precision prec) {
  Value v = evaluate(*e.a, prec);
  switch (e.uop) {
    case UnaryOp::Conj:
      if (std::holds_alternative<MultWave>(v)) return reflect_real(std::get<MultWave>(v));
      if (std::holds_alternative<Rational>(v)) return v;
      if (std::holds_alternative<double>(v)) return v;
      return conjugate(std::get<PeriodicSeq>(v));
    case UnaryOp::OrthConj:
      if (std::holds_alternative<MultWave>(v)) return reflect_imag(std::get<MultWave>(v));
      if (std::holds_alternative<Rational>(v)) return -std::get<Rational>(v);
      if (std::holds_alternative<double>(v)) return -std::get<double>(v);
      return orth_conjugate(std::get<PeriodicSeq>(v));
    case UnaryOp::Inv:
      if (std::holds_alternative<MultWave>(v)) return inverse(std::get<MultWave>(v));
      if (std::holds_alternative<Rational>(v)) return Rational(1) / std::get<Rational>(v);
      return inverse(value_to_seq(v, prec));
    case UnaryOp::Root:
      if (std::holds_alternative<MultWave>(v)) return root(std::get<MultWave>(v), e.root_n);
      return root_n(value_to_seq(v, prec), e.root_n);
    case UnaryOp::Integral:
      return integral(value_to_seq(v, prec));
    case UnaryOp::Norm:
      return norm(value_to_seq(v, prec));
  }
  throw DomainError("unreachable unary operator");
}

}  // namespace

Value evaluate(const Expr& e, Precision prec) {
  switch (e.kind) {
    case Expr::Kind::Rational:
      return e.rat;
    case Expr::Kind::Imag:
      return PeriodicSeq::constant(Complex(0.0, 1.0));
    case Expr::Kind::Wave:
      return e.wave;
    case Expr::Kind::Unary:
      return eval_unary(e, prec);
    case Expr::Kind::Binary:
      return eval_binary(e, prec);
  }
  throw DomainError("unreachable expression kind");
}

std::variant<PeriodicSeq, double> to_result(const Value& v, Precision prec) {
  if (std::holds_alternative<double>(v)) return std::get<double>(v);
  if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v).to_double();
  return to_sequence(v, prec);
}

PeriodicSeq to_sequence(const Value& v, Precision prec) { return value_to_seq(v, prec); }

}  // namespace wavenum
