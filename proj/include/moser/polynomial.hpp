#pragma once

#include "moser/expr.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace moser {

struct Monomial {
  Rational coeff;
  std::vector<int> exponents;
};

// Graded-lexicographic order on exponent vectors: total degree first, then
// lexicographic comparison.  Fixes the canonical term order for printing.
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Fully expanded polynomial with exact rational coefficients in canonical
/// form: no zero terms, unique exponent vectors, grlex-ordered.
class Polynomial {
 public:
  using TermMap = std::map<std::vector<int>, Rational, GrlexLess>;

  explicit Polynomial(int dim);
  static Polynomial constant(int dim, Rational c);
  static Polynomial variable(int dim, int axis);
  static Polynomial monomial(int dim, Rational coeff, std::vector<int> exponents);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // 0 for the zero polynomial
  const TermMap& terms() const { return terms_; }
  std::vector<Monomial> monomials() const;

  void add_term(const std::vector<int>& exponents, const Rational& coeff);

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(int k) const;
  bool operator==(const Polynomial& rhs) const;

  Polynomial derivative(int axis) const;
  Polynomial substitute_zero(std::span<const int> axes) const;
  Polynomial compose(std::span<const Polynomial> substitutions) const;

  double eval(std::span<const double> point) const;
  Expr to_expr() const;

 private:
  int dim_;
  TermMap terms_;
};

/// Expansion to canonical monomial form.  Returns nullopt (not a failure) when
/// the expression contains an analytic primitive or a division whose expanded
/// denominator is non-constant or zero.
std::optional<Polynomial> to_polynomial(const Expr& e, int dim);

/// Rational-function normal form (numerator, denominator), no gcd reduction.
/// Used for exact zero-testing of identities whose terms carry polynomial
/// denominators: e == 0 as a rational function iff the numerator expands to
/// the zero polynomial.  nullopt when an analytic primitive occurs or some
/// denominator expands to zero.
std::optional<std::pair<Polynomial, Polynomial>> to_rational(const Expr& e, int dim);

}  // namespace moser
