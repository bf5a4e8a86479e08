#include "towerdecomp/univariate.hpp"

#include <cassert>

#include "towerdecomp/error.hpp"

namespace towerdecomp {

UnivariatePolynomial::UnivariatePolynomial(std::size_t nvars, std::vector<RationalFunction> coeffs)
    : nvars_(nvars), coeffs_(std::move(coeffs)) {
  trim();
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::from(const RationalFunction& p, std::size_t v) {
  return UnivariatePolynomial(p.nvars(), coefficients_in(p, v));
}

UnivariatePolynomial UnivariatePolynomial::from(const Polynomial& p, std::size_t v) {
  std::vector<RationalFunction> cs;
  for (auto& c : p.coefficients_in(v)) cs.emplace_back(std::move(c));
  return UnivariatePolynomial(p.nvars(), std::move(cs));
}

UnivariatePolynomial UnivariatePolynomial::constant(const RationalFunction& c) {
  return UnivariatePolynomial(c.nvars(), {c});
}

RationalFunction UnivariatePolynomial::to_rational_function(std::size_t v) const {
  RationalFunction out(nvars_);
  const RationalFunction t = RationalFunction::variable(nvars_, v);
  for (std::size_t k = coeffs_.size(); k-- > 0;) out = out * t + coeffs_[k];
  return out;
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return *this;
  const RationalFunction inv = leading_coefficient().inverse();
  return *this * inv;
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
  UnivariatePolynomial out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<RationalFunction> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                    RationalFunction(a.nvars_));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return UnivariatePolynomial(a.nvars_, std::move(out));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  return a + (-b);
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return UnivariatePolynomial(a.nvars_);
  std::vector<RationalFunction> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                                    RationalFunction(a.nvars_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePolynomial(a.nvars_, std::move(out));
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const RationalFunction& c) {
  std::vector<RationalFunction> out;
  out.reserve(a.coeffs_.size());
  for (const auto& k : a.coeffs_) out.push_back(k * c);
  return UnivariatePolynomial(a.nvars_, std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::pow(unsigned e) const {
  UnivariatePolynomial result = constant(RationalFunction::constant(nvars_, 1));
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

QuotientRemainder divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "univariate division by zero");
  const std::size_t nv = a.nvars();
  if (a.degree() < b.degree()) return {UnivariatePolynomial(nv), a};
  std::vector<RationalFunction> r = a.coefficients();
  std::vector<RationalFunction> q(static_cast<std::size_t>(a.degree() - b.degree() + 1),
                                  RationalFunction(nv));
  const RationalFunction lb_inv = b.leading_coefficient().inverse();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = q.size(); k-- > 0;) {
    const RationalFunction& lead = r[k + db];
    if (lead.is_zero()) continue;
    const RationalFunction s = lead * lb_inv;
    q[k] = s;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= s * b[j];
    assert(r[k + db].is_zero());
  }
  r.resize(db);
  return {UnivariatePolynomial(nv, std::move(q)), UnivariatePolynomial(nv, std::move(r))};
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial p = a;
  UnivariatePolynomial q = b;
  while (!q.is_zero()) {
    UnivariatePolynomial r = divmod(p, q).remainder;
    p = std::move(q);
    q = std::move(r);
  }
  return p.monic();
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> solve_bezout(const UnivariatePolynomial& a,
                                                                   const UnivariatePolynomial& b,
                                                                   const UnivariatePolynomial& c) {
  const std::size_t nv = a.nvars();
  // Extended Euclid tracking the cofactor of a only.
  UnivariatePolynomial r0 = a, r1 = b;
  UnivariatePolynomial s0 = UnivariatePolynomial::constant(RationalFunction::constant(nv, 1));
  UnivariatePolynomial s1(nv);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UnivariatePolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // s0*a = g (mod b) with g = r0.
  auto [cq, crem] = divmod(c, r0);
  if (!crem.is_zero()) throw Error(ErrorCode::Internal, "solve_bezout: gcd does not divide c");
  UnivariatePolynomial s = s0 * cq;
  if (!b.is_zero() && b.degree() > 0) s = divmod(s, b).remainder;
  auto [t, trem] = divmod(c - s * a, b);
  if (!trem.is_zero()) throw Error(ErrorCode::Internal, "solve_bezout: inexact cofactor");
  return {std::move(s), std::move(t)};
}

RationalFunction resultant(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  const std::size_t nv = a.nvars();
  if (a.is_zero() || b.is_zero()) return RationalFunction(nv);
  RationalFunction scale = RationalFunction::constant(nv, 1);
  UnivariatePolynomial p = a;
  UnivariatePolynomial q = b;
  while (true) {
    const int dp = p.degree();
    const int dq = q.degree();
    if (dq == 0) return scale * q.leading_coefficient().pow(dp);
    if (dp == 0) return scale * p.leading_coefficient().pow(dq);
    UnivariatePolynomial r = divmod(p, q).remainder;
    if (r.is_zero()) return RationalFunction(nv);
    // res(p, q) = (-1)^(dp dq) lc(q)^(dp - dr) res(q, r)
    if ((dp * dq) % 2 != 0) scale = -scale;
    scale *= q.leading_coefficient().pow(dp - r.degree());
    p = std::move(q);
    q = std::move(r);
  }
}

}  // namespace towerdecomp
