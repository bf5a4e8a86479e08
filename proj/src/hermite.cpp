#include "towerdecomp/hermite.hpp"

#include "towerdecomp/error.hpp"
#include "towerdecomp/matryoshka.hpp"

namespace towerdecomp {

UnivariatePolynomial derive_in(const Tower& tower, const UnivariatePolynomial& p, std::size_t i) {
  const std::size_t nv = p.nvars();
  if (p.is_zero()) return p;
  const RationalFunction& tp = tower.derivative_of_variable(i);
  std::vector<RationalFunction> out(p.coefficients().size(), RationalFunction(nv));
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const RationalFunction& c = p[k];
    if (c.is_zero()) continue;
    out[k] += tower.differentiate(c);
    if (k > 0) out[k - 1] += c * tp * Rational(static_cast<long>(k));
  }
  return UnivariatePolynomial(nv, std::move(out));
}

namespace {

RationalFunction integrate_in_x(const RationalFunction& p) {
  const std::size_t nv = p.nvars();
  const std::vector<RationalFunction> cs = coefficients_in(p, 0);
  RationalFunction out(nv);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].is_zero()) continue;
    out += cs[k] * RationalFunction(Polynomial::variable(nv, 0, static_cast<std::uint32_t>(k + 1))) *
           Rational(1, static_cast<long>(k + 1));
  }
  return out;
}

}  // namespace

HermiteReduction hermite_reduce_proper(const Tower& tower, const RationalFunction& f0, std::size_t i) {
  const RationalFunction f = tower.embed(f0);
  const std::size_t nv = f.nvars();
  if (!f.only_involves_up_to(i))
    throw Error(ErrorCode::NotProper, "hermite_reduce_proper: later generator present", i);

  RationalFunction g(nv);
  RationalFunction proper = f;
  if (i == 0) {
    ProperSplit s = split_proper_poly(f, 0);
    g = integrate_in_x(s.poly);
    proper = std::move(s.proper);
  } else if (!is_proper_in(f, i)) {
    throw Error(ErrorCode::NotProper, "hermite_reduce_proper: input is not proper", i);
  }
  if (proper.is_zero()) return {g, proper};

  UnivariatePolynomial a = UnivariatePolynomial::from(proper.num(), i);
  UnivariatePolynomial d = UnivariatePolynomial::from(proper.den(), i);
  for (const SquarefreeFactor& sf : squarefree_decomposition(proper.den(), i)) {
    if (sf.multiplicity < 2 || sf.factor.degree(i) == 0) continue;
    const UnivariatePolynomial v = UnivariatePolynomial::from(sf.factor, i);
    const unsigned k = sf.multiplicity;
    const QuotientRemainder qr = divmod(d, v.pow(k));
    if (!qr.remainder.is_zero()) throw Error(ErrorCode::Internal, "hermite: factor does not divide");
    const UnivariatePolynomial u = qr.quotient;
    const UnivariatePolynomial udv = u * derive_in(tower, v, i);
    const RationalFunction vf = v.to_rational_function(i);
    for (unsigned j = k - 1; j >= 1; --j) {
      const RationalFunction inv_j = RationalFunction::constant(nv, Rational(-1, static_cast<long>(j)));
      auto [b, c] = solve_bezout(udv, v, a * inv_j);
      g += b.to_rational_function(i) / vf.pow(static_cast<int>(j));
      a = c * RationalFunction::constant(nv, -static_cast<long>(j)) - u * derive_in(tower, b, i);
    }
    d = u * v;
  }
  RationalFunction h = a.to_rational_function(i) / d.to_rational_function(i);
  if (!is_level_simple(h, i)) throw Error(ErrorCode::Internal, "hermite: remainder is not simple", i);
  return {std::move(g), std::move(h)};
}

HermitianPart hermitian_part(const Tower& tower, const RationalFunction& f0, std::size_t i) {
  const RationalFunction f = tower.embed(f0);
  if (!f.only_involves_up_to(i))
    throw Error(ErrorCode::HigherGeneratorPresent, "hermitian_part: later generator present", i);
  ProperSplit s = split_proper_poly(f, i);
  HermiteReduction r = hermite_reduce_proper(tower, s.proper, i);
  return {std::move(r.h), std::move(r.g), std::move(s.poly)};
}

}  // namespace towerdecomp
