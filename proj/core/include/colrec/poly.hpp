#pragma once

#include <colrec/rational.hpp>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace colrec {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending powers with no trailing zeros (the zero polynomial is empty).
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  RationalPoly(long constant) : RationalPoly(Rational(constant)) {}  // NOLINT
  explicit RationalPoly(std::vector<Rational> ascending);
  RationalPoly(std::initializer_list<long> ascending);

  static RationalPoly variable() { return monomial(Rational(1), 1); }
  static RationalPoly monomial(const Rational& coefficient, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of x^k; zero beyond the degree.
  Rational coefficient(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;
  /// p(a + b x), used for the 1 - r substitution.
  RationalPoly compose_affine(const Rational& a, const Rational& b) const;
  RationalPoly pow(unsigned k) const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const RationalPoly& rhs);
  RationalPoly operator-() const;

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical ascending rendering, e.g. "1 - 5r + 10r^2 - 8r^3"; non-integer
  /// coefficients are parenthesized: "(9/4)r^2".
  std::string to_string(std::string_view var = "r") const;

  /// Inverse of to_string. Accepts any term order, optional '*', and repeated
  /// powers (which are summed). Throws std::invalid_argument.
  static RationalPoly parse(std::string_view text, std::string_view var = "r");

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace colrec
