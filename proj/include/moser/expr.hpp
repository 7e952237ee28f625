#pragma once

#include "moser/rational.hpp"

#include <memory>
#include <span>
#include <stdexcept>
#include <string>

namespace moser {

enum class ExprKind { Constant, Variable, Add, Mul, Neg, Div, Pow, Call };
enum class Analytic { Exp, Sin, Cos, Sqrt };

struct ExprNode;

/// Immutable expression tree over chart variables x1..xn with exact rational
/// constants.  Variables are stored as 0-based axes; the text form is 1-based
/// (`x1` is axis 0).  Nodes are shared and never mutated, so Expr values can
/// be copied and used concurrently without coordination.
class Expr {
 public:
  Expr();  // the zero constant

  static Expr constant(Rational value);
  static Expr constant(long value);
  static Expr variable(int axis);
  static Expr add(Expr lhs, Expr rhs);
  static Expr sub(Expr lhs, Expr rhs);
  static Expr mul(Expr lhs, Expr rhs);
  static Expr neg(Expr operand);
  static Expr div(Expr num, Expr den);
  static Expr pow(Expr base, int exponent);  // exponent >= 0
  static Expr call(Analytic fn, Expr arg);

  ExprKind kind() const;
  const Rational& constant_value() const;
  int axis() const;
  int exponent() const;
  Analytic analytic() const;
  const Expr& child(int index = 0) const;  // 0: lhs/operand, 1: rhs

  bool is_constant(const Rational& value) const;
  int max_axis() const;  // -1 when no variable occurs
  bool same_as(const Expr& other) const;

 private:
  explicit Expr(std::shared_ptr<const ExprNode> node);
  std::shared_ptr<const ExprNode> node_;
};

struct SourcePos {
  int line = 1;
  int column = 1;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, SourcePos where);
  SourcePos where() const { return where_; }

 private:
  SourcePos where_;
};

class eval_error : public std::runtime_error {
 public:
  eval_error(const std::string& message, std::string offending);
  const std::string& offending_subexpression() const { return offending_; }

 private:
  std::string offending_;
};

class not_polynomial_error : public std::runtime_error {
 public:
  explicit not_polynomial_error(const std::string& context);
};

/// Grammar: variables x1..x<dim>; integer, decimal and a/b literals (decimals
/// become exact rationals); operators + - * / ^ with the usual precedence,
/// unary minus, parentheses; calls exp( ) sin( ) cos( ) sqrt( ).
Expr parse(const std::string& text, int dim);

/// Canonical printer; emits the same grammar parse accepts, and
/// parse(print(parse(s))) == parse(s).
std::string print(const Expr& e);

Expr differentiate(const Expr& e, int axis);

/// IEEE binary64 evaluation; throws eval_error on division by zero or sqrt of
/// a negative value, naming the offending subexpression.
double evaluate(const Expr& e, std::span<const double> point);

}  // namespace moser
