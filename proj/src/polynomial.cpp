#include "towerdecomp/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "towerdecomp/error.hpp"

namespace towerdecomp {

namespace {

std::uint32_t sum_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

}  // namespace

bool GradedDescending::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = sum_of(a);
  const auto db = sum_of(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t v, std::uint32_t power) {
  assert(v < nvars);
  Exponents e(nvars, 0);
  e[v] = power;
  Polynomial p(nvars);
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(Exponents exps, const Rational& c) {
  Polynomial p(exps.size());
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
}

bool Polynomial::is_one() const { return is_constant() && !is_zero() && leading_coefficient() == 1; }

Rational Polynomial::constant_value() const {
  assert(is_constant());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::uint32_t Polynomial::degree(std::size_t v) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : sum_of(terms_.begin()->first);
}

bool Polynomial::depends_on(std::size_t v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] != 0; });
}

std::optional<std::size_t> Polynomial::main_variable() const {
  std::optional<std::size_t> best;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = e.size(); i-- > 0;) {
      if (e[i] != 0) {
        if (!best || i > *best) best = i;
        break;
      }
    }
  }
  return best;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t v) const {
  std::vector<Polynomial> out(degree(v) + 1, Polynomial(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[v] = 0;
    out[e[v]].terms_.emplace(std::move(rest), c);
  }
  return out;
}

Polynomial Polynomial::from_coefficients(const std::vector<Polynomial>& coeffs, std::size_t v,
                                         std::size_t nvars) {
  Polynomial p(nvars);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms_) {
      Exponents shifted = e;
      shifted[v] += static_cast<std::uint32_t>(k);
      p.add_term(shifted, c);
    }
  }
  return p;
}

Polynomial Polynomial::leading_coefficient_in(std::size_t v) const {
  const auto d = degree(v);
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == d) {
      Exponents rest = e;
      rest[v] = 0;
      out.terms_.emplace(std::move(rest), c);
    }
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t v) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    --d[v];
    out.add_term(d, c * e[v]);
  }
  return out;
}

Polynomial Polynomial::with_nvars(std::size_t nvars) const {
  Polynomial out(nvars);
  for (const auto& [e, c] : terms_) {
    Exponents r(nvars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i < nvars) {
        r[i] = e[i];
      } else if (e[i] != 0) {
        throw Error(ErrorCode::Internal, "with_nvars would drop a used variable");
      }
    }
    out.terms_.emplace(std::move(r), c);
  }
  return out;
}

Polynomial Polynomial::permuted(const std::vector<std::size_t>& perm, std::size_t nvars) const {
  Polynomial out(nvars);
  for (const auto& [e, c] : terms_) {
    Exponents r(nvars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) r[perm[i]] += e[i];
    out.add_term(r, c);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  assert(nvars_ == o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  assert(nvars_ == o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, k] : terms_) k *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  assert(a.nvars_ == b.nvars_);
  Polynomial out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

std::optional<Polynomial> divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (b.is_constant()) return a * (1 / b.constant_value());
  Polynomial q(a.nvars());
  Polynomial r = a;
  const Exponents& lb = b.leading_exponents();
  const Rational& cb = b.leading_coefficient();
  Exponents shift(a.nvars());
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    if (!divides(lb, lr)) return std::nullopt;
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = lr[i] - lb[i];
    const Rational c = r.leading_coefficient() / cb;
    q.add_term(shift, c);
    Exponents e(a.nvars());
    for (const auto& [eb, kb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = eb[i] + shift[i];
      r.add_term(e, -c * kb);
    }
  }
  return q;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto q = divide(a, b);
  if (!q) throw Error(ErrorCode::InexactDivision, "inexact polynomial division");
  return std::move(*q);
}

PseudoDivision pseudo_divide(const Polynomial& a, const Polynomial& b, std::size_t v) {
  const std::size_t nv = a.nvars();
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "pseudo-division by zero");
  std::vector<Polynomial> A = a.coefficients_in(v);
  const std::vector<Polynomial> B = b.coefficients_in(v);
  const std::size_t db = B.size() - 1;
  const Polynomial& lb = B.back();
  const bool unit_lead = lb.is_constant();
  const Rational lb_inv = unit_lead ? Rational(1 / lb.constant_value()) : Rational(1);

  std::vector<Polynomial> Q(A.size() >= B.size() ? A.size() - db : 0, Polynomial(nv));
  Polynomial mult = Polynomial::constant(nv, 1);
  auto trim = [](std::vector<Polynomial>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(A);
  while (!A.empty() && A.size() - 1 >= db) {
    const std::size_t k = A.size() - 1 - db;
    const Polynomial la = A.back();
    if (unit_lead) {
      const Polynomial s = la * lb_inv;
      Q[k] += s;
      for (std::size_t j = 0; j <= db; ++j) A[j + k] -= s * B[j];
    } else {
      for (auto& q : Q) q = q * lb;
      Q[k] += la;
      for (auto& c : A) c = c * lb;
      for (std::size_t j = 0; j <= db; ++j) A[j + k] -= la * B[j];
      mult = mult * lb;
    }
    assert(A.back().is_zero());
    trim(A);
  }
  return {Polynomial::from_coefficients(Q, v, nv), Polynomial::from_coefficients(A, v, nv), mult};
}

namespace {

// Gcd of g with every coefficient of a in v, smallest coefficients first,
// stopping early at 1.
Polynomial gcd_with_coefficients(const Polynomial& a, std::size_t v, Polynomial g) {
  std::vector<Polynomial> cs;
  for (auto& c : a.coefficients_in(v)) {
    if (c.is_zero()) continue;
    if (c.is_constant()) return Polynomial::constant(a.nvars(), 1);
    cs.push_back(std::move(c));
  }
  std::sort(cs.begin(), cs.end(), [](const Polynomial& x, const Polynomial& y) {
    return x.total_degree() != y.total_degree() ? x.total_degree() < y.total_degree() : x.size() < y.size();
  });
  for (const auto& c : cs) {
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t v) {
  return pseudo_divide(a, b, v).remainder;
}

// Scales to integer coefficients with gcd 1 and a positive leading term,
// so remainder sequences do not grow numerically.
Polynomial integer_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den = 1;
  Integer num = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (p.leading_coefficient() < 0) scale = -scale;
  return p * scale;
}

// Image of p with every variable except v replaced by point[i].
Polynomial evaluate_except(const Polynomial& p, std::size_t v, const std::vector<Integer>& point) {
  Polynomial out(p.nvars());
  Exponents e(p.nvars(), 0);
  for (const auto& [exps, c] : p.terms()) {
    Rational val = c;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (i == v || exps[i] == 0) continue;
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), exps[i]);
      val *= pw;
    }
    e[v] = exps[v];
    out.add_term(e, val);
  }
  return out;
}

// Degree in v of gcd(a, b) at an evaluation point that keeps both leading
// coefficients; this bounds the true degree from above. nullopt when no
// tried point is usable.
std::optional<std::uint32_t> image_gcd_degree(const Polynomial& a, const Polynomial& b, std::size_t v) {
  const Polynomial la = a.leading_coefficient_in(v);
  const Polynomial lb = b.leading_coefficient_in(v);
  std::vector<Integer> point(a.nvars());
  for (int attempt = 0; attempt < 3; ++attempt) {
    for (std::size_t i = 0; i < point.size(); ++i) point[i] = static_cast<long>(2 + 3 * i + 7 * attempt + 11 * (i % 2));
    if (evaluate_except(la, v, point).is_zero() || evaluate_except(lb, v, point).is_zero()) continue;
    Polynomial p = evaluate_except(a, v, point);
    Polynomial q = evaluate_except(b, v, point);
    if (p.degree(v) < q.degree(v)) std::swap(p, q);
    while (true) {
      Polynomial r = integer_primitive(pseudo_remainder(p, q, v));
      if (r.is_zero()) return q.degree(v);
      if (r.degree(v) == 0) return 0;
      p = std::move(q);
      q = std::move(r);
    }
  }
  return std::nullopt;
}

// Variable for the remainder sequence: one present in only one operand if
// any (the gcd is then free of it), else the lowest common degree.
std::size_t gcd_variable(const Polynomial& a, const Polynomial& b) {
  std::size_t best = a.nvars();
  std::uint32_t best_deg = 0;
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    const std::uint32_t da = a.degree(v);
    const std::uint32_t db = b.degree(v);
    if ((da == 0) != (db == 0)) return v;
    if (da == 0) continue;
    const std::uint32_t d = std::max(da, db);
    if (best == a.nvars() || d < best_deg) {
      best = v;
      best_deg = d;
    }
  }
  return best;
}

}  // namespace

Polynomial content_in(const Polynomial& a, std::size_t v) {
  if (a.is_zero()) return a;
  return gcd_with_coefficients(a, v, Polynomial(a.nvars()));
}

Polynomial primitive_part_in(const Polynomial& a, std::size_t v) {
  if (a.is_zero()) return a;
  return exact_divide(a, content_in(a, v));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  assert(a.nvars() == b.nvars());
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.nvars(), 1);
  if (a == b) return a.monic();

  const std::size_t v = gcd_variable(a, b);
  if (!b.depends_on(v)) return gcd_with_coefficients(a, v, b).monic();
  if (!a.depends_on(v)) return gcd_with_coefficients(b, v, a).monic();

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  const Polynomial c = gcd(ca, cb);
  Polynomial p = integer_primitive(exact_divide(a, ca));
  Polynomial q = integer_primitive(exact_divide(b, cb));
  if (p.degree(v) < q.degree(v)) std::swap(p, q);
  if (auto bound = image_gcd_degree(p, q, v)) {
    if (*bound == 0) return c.monic();
    if (*bound == q.degree(v) && divide(p, q)) return (c * q).monic();
  }

  // Subresultant remainder sequence; only the last member is made primitive.
  const std::size_t nv = a.nvars();
  Polynomial g = Polynomial::constant(nv, 1);
  Polynomial h = Polynomial::constant(nv, 1);
  while (true) {
    const std::uint32_t delta = p.degree(v) - q.degree(v);
    Polynomial r = pseudo_remainder(p, q, v);
    if (r.is_zero()) return (c * integer_primitive(primitive_part_in(q, v))).monic();
    if (r.degree(v) == 0) return c.monic();
    p = std::move(q);
    q = exact_divide(r, g * h.pow(delta));
    g = p.leading_coefficient_in(v);
    if (delta > 0) h = exact_divide(g.pow(delta), h.pow(delta - 1));
  }
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b, std::size_t v) {
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return primitive_part_in(b, v).monic();
  if (b.is_zero()) return primitive_part_in(a, v).monic();
  return gcd(primitive_part_in(a, v), primitive_part_in(b, v));
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p, std::size_t v) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (p.degree(v) == 0) return out;
  const Polynomial P = primitive_part_in(p, v);
  const Polynomial dP = P.derivative(v);
  const Polynomial a0 = gcd(P, dP);
  Polynomial b = exact_divide(P, a0);
  Polynomial c = exact_divide(dP, a0);
  Polynomial d = c - b.derivative(v);
  unsigned i = 1;
  while (b.degree(v) > 0) {
    const Polynomial a = gcd(b, d);
    if (a.degree(v) > 0) out.push_back({a.monic(), i});
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - b.derivative(v);
    ++i;
  }
  return out;
}

bool is_squarefree_in(const Polynomial& p, std::size_t v) {
  if (p.degree(v) == 0) return true;
  return poly_gcd(p, p.derivative(v), v).degree(v) == 0;
}

}  // namespace towerdecomp
