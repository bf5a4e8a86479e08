#include "towerdecomp/elem.hpp"

#include <algorithm>

#include "towerdecomp/error.hpp"
#include "towerdecomp/hermite.hpp"
#include "towerdecomp/matryoshka.hpp"
#include "towerdecomp/univariate.hpp"

namespace towerdecomp {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Undecided: return "Undecided";
  }
  return "Unknown";
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Synthetic division by (z - r); returns the remainder.
Rational deflate(QPoly& p, const Rational& r) {
  Rational carry = 0;
  QPoly q(p.size() > 0 ? p.size() - 1 : 0);
  for (std::size_t k = p.size(); k-- > 0;) {
    carry = carry * r + p[k];
    if (k > 0) q[k - 1] = carry;
  }
  p = std::move(q);
  return carry;
}

Rational evaluate(const QPoly& p, const Rational& z) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
  return acc;
}

constexpr unsigned long kTrialLimit = 1000000;
constexpr std::size_t kCandidateLimit = 200000;

// Positive divisors of |n| by trial division; nullopt when n has a cofactor
// too large to factor within the limit.
std::optional<std::vector<Integer>> divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> factors;
  for (unsigned long p = 2; p <= kTrialLimit && Integer(p) * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(Integer(p), e);
  }
  if (n > 1) {
    if (n > Integer(kTrialLimit) * kTrialLimit) return std::nullopt;
    factors.emplace_back(n, 1);
  }
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
    if (out.size() > kCandidateLimit) return std::nullopt;
  }
  return out;
}

std::vector<Rational> lagrange_basis_coeffs(std::size_t k, std::size_t count) {
  QPoly basis{Rational(1)};
  Rational scale = 1;
  for (std::size_t j = 0; j < count; ++j) {
    if (j == k) continue;
    QPoly next(basis.size() + 1, Rational(0));
    for (std::size_t a = 0; a < basis.size(); ++a) {
      next[a + 1] += basis[a];
      next[a] -= basis[a] * Rational(static_cast<long>(j));
    }
    basis = std::move(next);
    scale *= Rational(static_cast<long>(k) - static_cast<long>(j));
  }
  for (auto& c : basis) c /= scale;
  return basis;
}

}  // namespace

std::optional<std::vector<std::pair<Rational, unsigned>>> rational_roots(std::vector<Rational> coeffs) {
  trim(coeffs);
  std::vector<std::pair<Rational, unsigned>> roots;
  if (coeffs.empty()) return std::nullopt;
  unsigned zero_mult = 0;
  while (coeffs.size() > 1 && coeffs.front() == 0) {
    coeffs.erase(coeffs.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
  if (coeffs.size() == 1) return roots;
  // Integer coefficients with the same roots.
  Integer l = 1;
  for (const auto& c : coeffs) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> ints;
  for (const auto& c : coeffs) ints.push_back(Integer(c * l));
  auto ps = divisors(ints.front());
  auto qs = divisors(ints.back());
  if (!ps || !qs || ps->size() * qs->size() > kCandidateLimit) return std::nullopt;
  std::vector<Rational> candidates;
  for (const auto& p : *ps) {
    for (const auto& q : *qs) {
      Rational r(p, q);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    if (coeffs.size() <= 1) break;
    if (evaluate(coeffs, r) != 0) continue;
    unsigned mult = 0;
    while (coeffs.size() > 1 && evaluate(coeffs, r) == 0) {
      deflate(coeffs, r);
      ++mult;
    }
    roots.emplace_back(r, mult);
  }
  if (coeffs.size() > 1) return std::nullopt;
  return roots;
}

LogRecognition recognize_log_derivative_combo(const Tower& tower, const RationalFunction& h0, std::size_t i) {
  const RationalFunction h = tower.embed(h0);
  const std::size_t nv = h.nvars();
  LogRecognition out;
  if (h.is_zero()) {
    out.status = Verdict::Yes;
    out.reason = "zero";
    return out;
  }
  if (!is_level_simple(h, i)) throw Error(ErrorCode::NotSimple, "recognizer input is not simple", i);

  UnivariatePolynomial q = UnivariatePolynomial::from(h.den(), i);
  UnivariatePolynomial p = UnivariatePolynomial::from(h.num(), i);
  const RationalFunction lc_inv = q.leading_coefficient().inverse();
  q = q * lc_inv;
  p = p * lc_inv;
  const UnivariatePolynomial dq = derive_in(tower, q, i);

  // R(z) = res_t(p - z Dq, q) by interpolation at z = 0..deg q.
  const std::size_t count = static_cast<std::size_t>(q.degree()) + 1;
  std::vector<RationalFunction> values;
  for (std::size_t k = 0; k < count; ++k) {
    const RationalFunction z = RationalFunction::constant(nv, Rational(static_cast<long>(k)));
    values.push_back(resultant(p - dq * z, q));
  }
  std::vector<RationalFunction> rz(count, RationalFunction(nv));
  for (std::size_t k = 0; k < count; ++k) {
    const QPoly basis = lagrange_basis_coeffs(k, count);
    for (std::size_t m = 0; m < basis.size(); ++m)
      if (basis[m] != 0) rz[m] += values[k] * basis[m];
  }
  while (!rz.empty() && rz.back().is_zero()) rz.pop_back();
  if (rz.empty()) throw Error(ErrorCode::Internal, "residue polynomial vanished");
  const RationalFunction lead_inv = rz.back().inverse();
  for (auto& c : rz) c *= lead_inv;
  out.residue_polynomial = rz;

  QPoly rq;
  for (const auto& c : rz) {
    if (!c.is_constant()) {
      const RationalFunction dc = tower.differentiate(c);
      if (dc.is_zero()) throw Error(ErrorCode::Internal, "non-rational constant coefficient");
      out.status = Verdict::No;
      out.reason = "residue polynomial has a non-constant coefficient";
      // A linear residue polynomial names the residue itself.
      out.certificate = rz.size() == 2 ? -rz[0] : c;
      return out;
    }
    rq.push_back(c.constant_value());
  }
  auto roots = rational_roots(rq);
  if (!roots) {
    out.status = Verdict::Undecided;
    out.reason = "residues are not all rational";
    return out;
  }
  RationalFunction sum(nv);
  for (const auto& [c, mult] : *roots) {
    if (c == 0) continue;
    const UnivariatePolynomial g = gcd(p - dq * RationalFunction::constant(nv, c), q);
    if (g.degree() < 1) continue;
    const RationalFunction arg = g.to_rational_function(i);
    sum += log_derivative(tower, arg) * c;
    out.logs.push_back(LogTerm{c, arg});
  }
  if (sum != h) {
    out.logs.clear();
    out.status = Verdict::No;
    out.reason = "constant residues do not reconstruct the input";
    return out;
  }
  out.status = Verdict::Yes;
  out.reason = "rational residues";
  return out;
}

namespace {

struct LevelRecognition {
  bool all_yes = true;
  std::vector<LogTerm> logs;
  std::vector<std::size_t> failing;
  std::vector<LogRecognition> results;
};

LevelRecognition recognize_levels(const Tower& tower, const Matryoshka& mat) {
  LevelRecognition out;
  out.results.resize(mat.n + 1);
  for (std::size_t i = 0; i <= mat.n; ++i) {
    const RationalFunction pi = mat.projection(i);
    if (pi.is_zero()) {
      out.results[i].status = Verdict::Yes;
      continue;
    }
    if (!is_level_simple(pi, i)) {
      out.results[i].status = Verdict::Undecided;
      out.results[i].reason = "projection is not simple";
    } else {
      out.results[i] = recognize_log_derivative_combo(tower, pi, i);
    }
    if (out.results[i].status == Verdict::Yes) {
      out.logs.insert(out.logs.end(), out.results[i].logs.begin(), out.results[i].logs.end());
    } else {
      out.all_yes = false;
      out.failing.push_back(i);
    }
  }
  return out;
}

}  // namespace

ElementaryVerdict elementary_integrability(const Tower& tower, const RationalFunction& f) {
  ElementaryVerdict out;
  out.decomposition = add_decomp_in_field(tower, f);
  const std::size_t n = tower.size();
  const RationalFunction& r = out.decomposition.r;
  out.span_coeffs.assign(n, Rational(0));

  auto finish_yes = [&](std::vector<LogTerm> logs) {
    RationalFunction check = r;
    RationalFunction rational = out.decomposition.g;
    for (std::size_t j = 1; j <= n; ++j) {
      if (out.span_coeffs[j - 1] == 0) continue;
      check -= tower.derivative_of_variable(j) * out.span_coeffs[j - 1];
      rational += tower.variable(j) * out.span_coeffs[j - 1];
    }
    for (const LogTerm& t : logs) check -= log_derivative(tower, t.argument) * t.coefficient;
    if (!check.is_zero()) throw Error(ErrorCode::Internal, "elementary witness does not verify");
    out.status = Verdict::Yes;
    out.logs = std::move(logs);
    out.rational_part = std::move(rational);
  };

  if (r.is_zero()) {
    out.reason = "integrable in the tower";
    finish_yes({});
    return out;
  }
  const Matryoshka mat = project(r);
  const HeadData hd = head_data(mat);
  if (!is_unit(*hd.hm)) {
    out.status = Verdict::No;
    out.reason = "remainder has a head monomial above 1";
    return out;
  }
  LevelRecognition first = recognize_levels(tower, mat);
  if (first.all_yes) {
    out.reason = "remainder is a combination of logarithmic derivatives";
    finish_yes(std::move(first.logs));
    return out;
  }

  // Try to cancel the failing projections with generator derivatives.
  std::vector<RationalFunction> projected_span;
  RationalFunction target = tower.zero();
  for (std::size_t i : first.failing) target += mat.projection(i);
  std::vector<Matryoshka> deriv_mats;
  for (std::size_t j = 1; j <= n; ++j) {
    deriv_mats.push_back(project(tower.derivative_of_variable(j)));
    RationalFunction s = tower.zero();
    for (std::size_t i : first.failing) s += deriv_mats.back().projection(i);
    projected_span.push_back(std::move(s));
  }
  if (auto c = solve_constant_combination(target, projected_span)) {
    RationalFunction residual = r;
    for (std::size_t j = 1; j <= n; ++j)
      if ((*c)[j - 1] != 0) residual -= tower.derivative_of_variable(j) * (*c)[j - 1];
    LevelRecognition second = recognize_levels(tower, project(residual));
    if (second.all_yes) {
      out.span_coeffs = *c;
      out.reason = "remainder is a generator-derivative combination plus logarithmic derivatives";
      finish_yes(std::move(second.logs));
      return out;
    }
  }

  for (std::size_t i : first.failing) {
    const LogRecognition& lr = first.results[i];
    if (lr.status != Verdict::No || !lr.certificate) continue;
    const bool touched = std::any_of(deriv_mats.begin(), deriv_mats.end(),
                                     [i](const Matryoshka& m) { return !m.levels[i].empty(); });
    if (touched) continue;
    out.status = Verdict::No;
    out.reason = "non-constant residue at level " + std::to_string(i);
    out.certificate = lr.certificate;
    return out;
  }
  out.status = Verdict::Undecided;
  out.reason = first.results[first.failing.front()].reason;
  return out;
}

}  // namespace towerdecomp
