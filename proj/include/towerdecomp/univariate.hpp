#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "towerdecomp/rational_function.hpp"

namespace towerdecomp {

/// Dense polynomial in one distinguished variable whose coefficients are
/// rational functions free of that variable. This is the K[t] view of a
/// tower level with K the field below it.
class UnivariatePolynomial {
 public:
  explicit UnivariatePolynomial(std::size_t nvars) : nvars_(nvars) {}
  UnivariatePolynomial(std::size_t nvars, std::vector<RationalFunction> coeffs);

  /// Reads a polynomial in v (denominator must be free of v).
  static UnivariatePolynomial from(const RationalFunction& p, std::size_t v);
  static UnivariatePolynomial from(const Polynomial& p, std::size_t v);
  static UnivariatePolynomial constant(const RationalFunction& c);

  RationalFunction to_rational_function(std::size_t v) const;

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RationalFunction>& coefficients() const { return coeffs_; }
  const RationalFunction& operator[](std::size_t k) const { return coeffs_[k]; }
  const RationalFunction& leading_coefficient() const { return coeffs_.back(); }

  UnivariatePolynomial monic() const;

  UnivariatePolynomial operator-() const;
  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const RationalFunction& c);
  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  UnivariatePolynomial pow(unsigned e) const;

 private:
  void trim();

  std::size_t nvars_;
  std::vector<RationalFunction> coeffs_;
};

struct QuotientRemainder {
  UnivariatePolynomial quotient;
  UnivariatePolynomial remainder;
};
QuotientRemainder divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

/// Monic gcd over the coefficient field.
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

/// Solves s*a + t*b = c with deg s < deg b, assuming gcd(a, b) divides c.
std::pair<UnivariatePolynomial, UnivariatePolynomial> solve_bezout(const UnivariatePolynomial& a,
                                                                   const UnivariatePolynomial& b,
                                                                   const UnivariatePolynomial& c);

/// Resultant over the coefficient field.
RationalFunction resultant(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

}  // namespace towerdecomp
