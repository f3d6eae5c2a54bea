#pragma once

#include <memory>
#include <string>
#include <variant>

#include "wavenum/multiplicative.hpp"
#include "wavenum/periodic_seq.hpp"
#include "wavenum/rational.hpp"

namespace wavenum {

enum class UnaryOp { Conj, OrthConj, Inv, Root, Integral, Norm };
enum class BinOp { Add, Sub, Mul, Div, Circ };

/// Expression tree over rational literals, the imaginary unit, wave-number
/// literals, the six unary operators, and the five binary operators.
struct Expr {
  enum class Kind { Rational, Imag, Wave, Unary, Binary };

  Kind kind = Kind::Rational;
  Rational rat;
  MultWave wave;
  UnaryOp uop = UnaryOp::Conj;
  unsigned root_n = 0;  // for UnaryOp::Root
  BinOp bop = BinOp::Add;
  std::unique_ptr<Expr> a;  // unary argument / binary lhs
  std::unique_ptr<Expr> b;  // binary rhs

  static Expr rational(Rational r);
  static Expr imag();
  static Expr wave_lit(MultWave w);
  static Expr unary(UnaryOp op, Expr arg, unsigned n = 0);
  static Expr binary(BinOp op, Expr lhs, Expr rhs);
};

bool operator==(const Expr& x, const Expr& y);

/// Grammar (precedence low to high):
///   sum   ::= prod (('+'|'-') prod)*
///   prod  ::= unary (('*'|'/'|'circ') unary)*
///   unary ::= func '(' args ')' | atom
///   atom  ::= 'w(' rational ',' rational ')' | rational | 'i' | '(' sum ')'
/// Syntax errors raise ParseError with a 1-based byte offset and the
/// expected-token set.
Expr parse(const std::string& input);

/// Canonical text; parse(print(e)) reproduces the tree.
std::string print(const Expr& e);

/// "w(f,g)" literal parser (also used for CLI arguments).
MultWave parse_wave(const std::string& text);

/// Evaluation result: scalars stay exact as long as possible.
using Value = std::variant<Rational, MultWave, PeriodicSeq, double>;

/// Evaluates with exact parameter arithmetic when both operands of '*' or
/// '/' are wave-number values, element-wise sampled arithmetic otherwise.
Value evaluate(const Expr& e, Precision prec = Precision::Double);

/// Collapses a value to the external result surface: wave numbers sample
/// to sequences, rationals become reals.
std::variant<PeriodicSeq, double> to_result(const Value& v, Precision prec = Precision::Double);

/// Coercion used by consumers that need a sequence.
PeriodicSeq to_sequence(const Value& v, Precision prec = Precision::Double);

}  // namespace wavenum
