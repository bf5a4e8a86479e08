#include "towerdecomp/rational_function.hpp"

#include <cassert>

#include "towerdecomp/error.hpp"

namespace towerdecomp {

RationalFunction::RationalFunction(std::size_t nvars)
    : num_(nvars), den_(Polynomial::constant(nvars, 1)) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.nvars(), 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  assert(num_.nvars() == den_.nvars());
  normalize();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Normalized)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.nvars(), 1);
    return;
  }
  const Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.nvars(), 1);
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  const Rational inv = 1 / den_.leading_coefficient();
  num_ *= inv;
  den_ *= inv;
}

RationalFunction RationalFunction::constant(std::size_t nvars, const Rational& c) {
  return RationalFunction(Polynomial::constant(nvars, c));
}

RationalFunction RationalFunction::variable(std::size_t nvars, std::size_t v) {
  return RationalFunction(Polynomial::variable(nvars, v));
}

Rational RationalFunction::constant_value() const {
  assert(is_constant());
  return num_.constant_value() / den_.constant_value();
}

bool RationalFunction::only_involves_up_to(std::size_t v) const {
  auto mv = main_variable();
  return !mv || *mv <= v;
}

std::optional<std::size_t> RationalFunction::main_variable() const {
  auto a = num_.main_variable();
  auto b = den_.main_variable();
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

RationalFunction RationalFunction::derivative(std::size_t v) const {
  if (!depends_on(v)) return RationalFunction(nvars());
  if (den_.is_constant()) return RationalFunction(num_.derivative(v), den_, Normalized{});
  Polynomial n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
  return RationalFunction(std::move(n), den_ * den_);
}

RationalFunction RationalFunction::with_nvars(std::size_t nvars) const {
  return RationalFunction(num_.with_nvars(nvars), den_.with_nvars(nvars), Normalized{});
}

RationalFunction RationalFunction::permuted(const std::vector<std::size_t>& perm,
                                            std::size_t nvars) const {
  // Renaming variables keeps coprimality but can move the leading term.
  return RationalFunction(num_.permuted(perm, nvars), den_.permuted(perm, nvars), Normalized{});
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return RationalFunction(den_, num_, Normalized{});
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  const auto u = static_cast<unsigned>(e);
  return RationalFunction(num_.pow(u), den_.pow(u), Normalized{});
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out(*this);
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  assert(nvars() == o.nvars());
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  const Polynomial g = gcd(den_, o.den_);
  const Polynomial d1 = exact_divide(den_, g);
  const Polynomial d2 = exact_divide(o.den_, g);
  Polynomial n = num_ * d2 + o.num_ * d1;
  Polynomial d = den_ * d2;
  if (n.is_zero()) return *this = RationalFunction(nvars());
  if (!g.is_constant()) {
    const Polynomial h = gcd(n, g);
    if (!h.is_constant()) {
      n = exact_divide(n, h);
      d = exact_divide(d, h);
    }
  }
  *this = RationalFunction(std::move(n), std::move(d), Normalized{});
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  assert(nvars() == o.nvars());
  if (is_zero() || o.is_zero()) return *this = RationalFunction(nvars());
  const Polynomial g1 = gcd(num_, o.den_);
  const Polynomial g2 = gcd(o.num_, den_);
  Polynomial n = exact_divide(num_, g1) * exact_divide(o.num_, g2);
  Polynomial d = exact_divide(den_, g2) * exact_divide(o.den_, g1);
  *this = RationalFunction(std::move(n), std::move(d), Normalized{});
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this *= o.inverse();
}

RationalFunction operator*(RationalFunction a, const Rational& c) {
  if (c == 0) return RationalFunction(a.nvars());
  a.num_ *= c;
  return a;
}

RationalFunction substitute(const Polynomial& p, const std::vector<RationalFunction>& values) {
  assert(values.size() == p.nvars());
  const std::size_t target = values.empty() ? 0 : values.front().nvars();
  std::vector<std::vector<RationalFunction>> powers(values.size());
  auto power_of = [&](std::size_t v, std::uint32_t e) -> const RationalFunction& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(RationalFunction::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * values[v]);
    return cache[e];
  };
  RationalFunction out(target);
  for (const auto& [e, c] : p.terms()) {
    RationalFunction t = RationalFunction::constant(target, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) t *= power_of(v, e[v]);
    out += t;
  }
  return out;
}

RationalFunction substitute(const RationalFunction& f, const std::vector<RationalFunction>& values) {
  return substitute(f.num(), values) / substitute(f.den(), values);
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars());
  return (exact_divide(a, gcd(a, b)) * b).monic();
}

ProperSplit split_proper_poly(const RationalFunction& f, std::size_t v) {
  const std::size_t nv = f.nvars();
  if (f.den().degree(v) == 0) return {RationalFunction(nv), f};
  if (f.num().degree(v) < f.den().degree(v)) return {f, RationalFunction(nv)};
  const PseudoDivision pd = pseudo_divide(f.num(), f.den(), v);
  RationalFunction poly(pd.quotient, pd.multiplier);
  RationalFunction proper(pd.remainder, pd.multiplier * f.den());
  return {std::move(proper), std::move(poly)};
}

bool is_proper_in(const RationalFunction& f, std::size_t v) {
  return f.is_zero() || f.num().degree(v) < f.den().degree(v);
}

std::vector<RationalFunction> coefficients_in(const RationalFunction& f, std::size_t v) {
  if (f.den().depends_on(v))
    throw Error(ErrorCode::Internal, "coefficients_in: denominator depends on the variable");
  std::vector<RationalFunction> out;
  for (auto& c : f.num().coefficients_in(v)) out.emplace_back(std::move(c), f.den());
  if (f.is_zero()) out.clear();
  return out;
}

}  // namespace towerdecomp
