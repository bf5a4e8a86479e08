#include "towerdecomp/decomp.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "towerdecomp/error.hpp"
#include "towerdecomp/hermite.hpp"

namespace towerdecomp {

std::optional<std::vector<Rational>> solve_linear_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || a[q][c] == 0) continue;
      const Rational s = a[q][c];
      for (std::size_t k = c; k < cols; ++k) a[q][k] -= s * a[r][k];
      b[q] -= s * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q)
    if (b[q] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t q = 0; q < r; ++q) x[pivot_cols[q]] = b[q];
  return x;
}

std::optional<std::vector<Rational>> solve_constant_combination(
    const RationalFunction& h, const std::vector<RationalFunction>& basis) {
  const std::size_t m = basis.size();
  if (h.is_zero()) return std::vector<Rational>(m, Rational(0));
  if (m == 0) return std::nullopt;
  Polynomial common = h.den();
  for (const auto& b : basis) common = lcm(common, b.den());
  auto scaled = [&common](const RationalFunction& f) { return f.num() * exact_divide(common, f.den()); };

  std::map<Exponents, std::size_t> row_of;
  std::vector<Polynomial> nums;
  for (const auto& b : basis) nums.push_back(scaled(b));
  const Polynomial target = scaled(h);
  auto row = [&row_of](const Exponents& e) { return row_of.emplace(e, row_of.size()).first->second; };
  for (const auto& p : nums)
    for (const auto& [e, c] : p.terms()) row(e);
  for (const auto& [e, c] : target.terms()) row(e);

  std::vector<std::vector<Rational>> a(row_of.size(), std::vector<Rational>(m, Rational(0)));
  std::vector<Rational> rhs(row_of.size(), Rational(0));
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& [e, c] : nums[j].terms()) a[row_of[e]][j] = c;
  for (const auto& [e, c] : target.terms()) rhs[row_of[e]] = c;
  return solve_linear_system(std::move(a), std::move(rhs));
}

namespace {

std::vector<RationalFunction> derivatives_up_to(const Tower& tower, std::size_t m) {
  std::vector<RationalFunction> out;
  for (std::size_t j = 1; j <= m; ++j) out.push_back(tower.derivative_of_variable(j));
  return out;
}

struct Absorption {
  std::vector<bool> absorbed;
  std::vector<Rational> coeffs;
};

// Absorb the Hermitian remainders of the candidate levels into span{t_1',...,t_m'}:
// all of them when their sum lies in the span, otherwise the largest subset
// that does (first such subset in mask order on ties).
Absorption absorb(const std::vector<RationalFunction>& hs, const std::vector<std::size_t>& candidates,
                  const std::vector<RationalFunction>& span) {
  Absorption out;
  out.absorbed.assign(hs.size(), false);
  out.coeffs.assign(span.size(), Rational(0));
  std::vector<std::size_t> nonzero;
  for (std::size_t c : candidates)
    if (!hs[c].is_zero()) nonzero.push_back(c);
  if (nonzero.empty()) return out;
  const std::size_t k = nonzero.size();
  if (k > 20) throw Error(ErrorCode::Internal, "too many candidate levels");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa > pb;
    return a < b;
  });
  const std::size_t nv = hs[nonzero[0]].nvars();
  for (std::uint32_t mask : masks) {
    RationalFunction sum(nv);
    for (std::size_t q = 0; q < k; ++q)
      if (mask & (1u << q)) sum += hs[nonzero[q]];
    auto sol = solve_constant_combination(sum, span);
    if (!sol) continue;
    for (std::size_t q = 0; q < k; ++q)
      if (mask & (1u << q)) out.absorbed[nonzero[q]] = true;
    out.coeffs = std::move(*sol);
    return out;
  }
  return out;
}

}  // namespace

Decomposition add_decomp_in_field(const Tower& tower, const RationalFunction& f0) {
  tower.require_s_primitive();
  const std::size_t n = tower.size();
  const std::size_t nv = tower.nvars();
  Decomposition out{tower.embed(f0), tower.zero(), tower.zero(), {}};

  RationalFunction f = out.input;
  OrderKey key = order_key(f);
  out.trace.push_back(key);
  while (!f.is_zero()) {
    const Matryoshka mat = project(f);
    const HeadData hd = head_data(mat);
    const Monomial& hm = *hd.hm;
    const std::size_t m = indicator(hm, n);
    const std::uint32_t d = n == 0 ? 0 : hm[m - 1];

    std::vector<RationalFunction> bs(n + 1, RationalFunction(nv));
    std::vector<RationalFunction> hs(n + 1, RationalFunction(nv));
    std::vector<std::size_t> candidates;
    for (std::size_t i : hd.index_set) {
      HermiteReduction hr = hermite_reduce_proper(tower, hd.level_coefficients[i], i);
      bs[i] = std::move(hr.g);
      hs[i] = std::move(hr.h);
      if (i < n) candidates.push_back(i);
    }
    const std::vector<RationalFunction> span = derivatives_up_to(tower, m);
    const Absorption ab = absorb(hs, candidates, span);

    RationalFunction big_b(nv);
    RationalFunction big_h(nv);
    for (std::size_t i : hd.index_set) {
      big_b += bs[i];
      if (!ab.absorbed[i]) big_h += hs[i];
    }
    for (std::size_t j = 1; j < m; ++j)
      if (ab.coeffs[j - 1] != 0) big_b += tower.variable(j) * ab.coeffs[j - 1];
    const Rational c_tilde = m >= 1 ? ab.coeffs[m - 1] : Rational(0);

    const RationalFunction mono = monomial_element(hm);
    RationalFunction g_local = big_b * mono;
    if (c_tilde != 0) g_local += tower.variable(m) * mono * (c_tilde / Rational(d + 1));
    const RationalFunction r_local = big_h * mono;

    RationalFunction lower = f - tower.differentiate(g_local) - r_local;
    OrderKey lower_key = order_key(lower);
    if (!lower.is_zero() && compare_keys(lower_key, key) != Order::Lower)
      throw Error(ErrorCode::Internal, "decomposition order did not decrease");
    out.g += g_local;
    out.r += r_local;
    out.trace.push_back(lower_key);
    f = std::move(lower);
    key = std::move(lower_key);
  }
  if (tower.differentiate(out.g) + out.r != out.input)
    throw Error(ErrorCode::Internal, "decomposition does not reconstruct the input");
  return out;
}

RemainderCheck is_remainder(const Tower& tower, const RationalFunction& r0) {
  tower.require_s_primitive();
  const RationalFunction r = tower.embed(r0);
  if (r.is_zero()) return {true, "zero"};
  const std::size_t n = tower.size();
  const Matryoshka mat = project(r);
  const RationalFunction pn = mat.projection(n);
  if (!is_level_simple(pn, n)) return {false, "top projection is not simple"};
  const RationalFunction rest = r - pn;
  if (rest.is_zero()) return {true, "top projection only"};
  const HeadData hd = head_data(rest);
  if (!is_simple(hd.hc)) return {false, "head coefficient is not simple"};
  const std::size_t m = indicator(*head_data(mat).hm, n);
  auto sol = solve_constant_combination(hd.hc, derivatives_up_to(tower, m));
  if (sol) return {false, "head coefficient lies in the span of generator derivatives"};
  return {true, "head coefficient outside the span"};
}

InFieldIntegral integrate_in_field(const Tower& tower, const RationalFunction& f) {
  Decomposition d = add_decomp_in_field(tower, f);
  std::optional<RationalFunction> g;
  if (d.r.is_zero()) g = d.g;
  return {std::move(g), std::move(d)};
}

}  // namespace towerdecomp
