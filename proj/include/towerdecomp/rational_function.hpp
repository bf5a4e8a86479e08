#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "towerdecomp/polynomial.hpp"

namespace towerdecomp {

/// Normalized quotient num/den over Q: gcd(num, den) = 1 and the leading
/// coefficient of den (graded order) is 1. Equality is structural.
class RationalFunction {
 public:
  explicit RationalFunction(std::size_t nvars = 0);
  RationalFunction(Polynomial num);  // NOLINT: polynomials embed implicitly
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(std::size_t nvars, const Rational& c);
  static RationalFunction variable(std::size_t nvars, std::size_t v);

  std::size_t nvars() const { return num_.nvars(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Rational constant_value() const;

  bool depends_on(std::size_t v) const { return num_.depends_on(v) || den_.depends_on(v); }
  /// True when only variables with index <= v occur.
  bool only_involves_up_to(std::size_t v) const;
  std::optional<std::size_t> main_variable() const;

  /// Formal partial derivative.
  RationalFunction derivative(std::size_t v) const;
  RationalFunction with_nvars(std::size_t nvars) const;
  RationalFunction permuted(const std::vector<std::size_t>& perm, std::size_t nvars) const;

  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator*(RationalFunction a, const Rational& c);
  friend RationalFunction operator*(const Rational& c, RationalFunction a) { return std::move(a) * c; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Normalized {};
  RationalFunction(Polynomial num, Polynomial den, Normalized);
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// Substitutes `values[i]` for variable i of `p`.
RationalFunction substitute(const Polynomial& p, const std::vector<RationalFunction>& values);
RationalFunction substitute(const RationalFunction& f, const std::vector<RationalFunction>& values);

/// Least common multiple normalized with leading coefficient 1.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/// The decomposition f = proper + poly in variable v: `proper` has
/// numerator degree below denominator degree in v, and the denominator of
/// `poly` is free of v.
struct ProperSplit {
  RationalFunction proper;
  RationalFunction poly;
};
ProperSplit split_proper_poly(const RationalFunction& f, std::size_t v);

/// True when f is v-proper: deg_v num < deg_v den (zero is proper).
bool is_proper_in(const RationalFunction& f, std::size_t v);

/// Coefficients of f as a polynomial in v; requires den free of v.
std::vector<RationalFunction> coefficients_in(const RationalFunction& f, std::size_t v);

}  // namespace towerdecomp
