#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace towerdecomp {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponents = std::vector<std::uint32_t>;

/// Graded order over the global variable order x < t1 < ... < tn: total
/// degree first, then the exponent of the highest variable. Sorting with
/// this comparator puts the leading term first.
struct GradedDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse distributed polynomial over Q. Variable 0 is x, variable i is t_i.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedDescending>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t v, std::uint32_t power = 1);
  static Polynomial monomial(Exponents exps, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Value of a constant polynomial; zero for the zero polynomial.
  Rational constant_value() const;

  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  std::uint32_t degree(std::size_t v) const;
  std::uint32_t total_degree() const;
  bool depends_on(std::size_t v) const;
  /// Highest variable index present, or nullopt for constants.
  std::optional<std::size_t> main_variable() const;

  /// Coefficients as a polynomial in variable `v`: entry k multiplies v^k.
  std::vector<Polynomial> coefficients_in(std::size_t v) const;
  static Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, std::size_t v,
                                      std::size_t nvars);
  /// Leading coefficient in `v` (a polynomial free of v).
  Polynomial leading_coefficient_in(std::size_t v) const;

  Polynomial derivative(std::size_t v) const;
  Polynomial with_nvars(std::size_t nvars) const;
  /// Renames variables: variable i becomes `perm[i]`.
  Polynomial permuted(const std::vector<std::size_t>& perm, std::size_t nvars) const;

  /// Scales so the leading coefficient (graded order) is 1.
  Polynomial monic() const;

  void add_term(const Exponents& exps, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned e) const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Polynomial> divide(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws InexactDivision when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Multivariate gcd over Q, normalized with leading coefficient 1.
/// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Content of `a` viewed as a polynomial in `v` (gcd of its coefficients).
Polynomial content_in(const Polynomial& a, std::size_t v);
Polynomial primitive_part_in(const Polynomial& a, std::size_t v);

/// Gcd of a and b as univariate polynomials in `v` over the fraction field
/// of the remaining variables. The result is primitive in v, so it is monic
/// in v whenever its leading coefficient in v is a rational number.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b, std::size_t v);

/// Pseudo-division in `v`: returns (q, r, m) with m * a = q * b + r,
/// deg_v r < deg_v b and m a power of the leading coefficient of b in v.
struct PseudoDivision {
  Polynomial quotient;
  Polynomial remainder;
  Polynomial multiplier;
};
PseudoDivision pseudo_divide(const Polynomial& a, const Polynomial& b, std::size_t v);

struct SquarefreeFactor {
  Polynomial factor;
  unsigned multiplicity;
};

/// Yun's algorithm in `v`. Factors are primitive in v, pairwise coprime and
/// squarefree with strictly increasing multiplicities; p equals their
/// product up to a factor free of v.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p, std::size_t v);

/// True when p and dp/dv have no common factor of positive degree in v.
bool is_squarefree_in(const Polynomial& p, std::size_t v);

}  // namespace towerdecomp
