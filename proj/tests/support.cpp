#include "support.hpp"

#include <algorithm>

#include "towerdecomp/render.hpp"

namespace towerdecomp {

void PrintTo(const RationalFunction& f, std::ostream* os) {
  std::vector<std::string> names = {"x"};
  for (std::size_t i = 1; i < f.nvars(); ++i) names.push_back("t" + std::to_string(i));
  *os << render(f, names);
}

}  // namespace towerdecomp

namespace towerdecomp::testing {

Tower li_tower() {
  return validated(parse_tower_file("gen t1 : log(x)\ngen t2 : prim 1/t1\ngen t3 : prim 1/(x*t1)\n"));
}

Tower finer_tower() {
  return validated(parse_tower_file("gen u1 : log(x)\ngen u2 : log(x+1)\ngen u3 : log(u1)\n"));
}

Tower cli_failing_tower() {
  return validated(parse_tower_file("gen t1 : log(x)\ngen t2 : log(t1)\ngen t3 : log((x+1)*t1)\n"));
}

Tower f_tower() {
  return validated(parse_tower_file("gen t1 : log(x)\ngen t2 : log(x*t1)\ngen t3 : log((x+1)*(t1+1)*t2)\n"));
}

Tower e_tower() {
  return validated(parse_tower_file(
      "gen u1 : log(x)\ngen u2 : log(x+1)\ngen u3 : log(u1)\ngen u4 : log(u1+1)\ngen u5 : log(u1+u3)\n"));
}

RationalFunction el(const Tower& t, const std::string& src) { return parse_expression(src, t); }

Rational small_rational(Rng& rng, int bound, bool nonzero) {
  std::uniform_int_distribution<int> d(-bound, bound);
  for (;;) {
    int v = d(rng);
    if (!nonzero || v != 0) return Rational(v);
  }
}

Polynomial random_polynomial(Rng& rng, std::size_t nvars, std::size_t max_var, unsigned max_degree,
                             unsigned terms) {
  std::uniform_int_distribution<std::size_t> var(0, max_var);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  Polynomial p(nvars);
  for (unsigned k = 0; k < terms; ++k) {
    Exponents e(nvars, 0);
    unsigned total = deg(rng);
    for (unsigned d = 0; d < total; ++d) ++e[var(rng)];
    p.add_term(e, small_rational(rng, 3, true));
  }
  return p;
}

namespace {

// t_k + (small polynomial in x), or x + c at the base level
Polynomial linear_factor(Rng& rng, std::size_t nvars, std::size_t k) {
  std::uniform_int_distribution<int> c(-2, 2);
  Polynomial p = Polynomial::variable(nvars, k) + Polynomial::constant(nvars, Rational(c(rng)));
  if (k > 0 && c(rng) > 0) p += Polynomial::variable(nvars, 0) * Rational(c(rng));
  return p;
}

}  // namespace

RationalFunction random_element(Rng& rng, const Tower& t) {
  std::size_t nv = t.nvars();
  std::uniform_int_distribution<std::size_t> level(0, t.size());
  std::uniform_int_distribution<unsigned> count(0, 2);
  Polynomial num = random_polynomial(rng, nv, t.size(), 3, 3);
  Polynomial den = Polynomial::constant(nv, 1);
  unsigned k = count(rng);
  for (unsigned j = 0; j < k; ++j) den = den * linear_factor(rng, nv, level(rng));
  if (den.total_degree() < 3 && count(rng) == 2) den = den * Polynomial::variable(nv, 0);
  return RationalFunction(num, den);
}

Tower random_s_primitive_tower(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<int> coin(0, 1);
  for (;;) {
    Tower t;
    for (std::size_t i = 1; i <= n; ++i) {
      std::size_t nv = i;  // variables x, t1..t_{i-1}
      std::uniform_int_distribution<std::size_t> level(0, i - 1);
      std::string name = "t" + std::to_string(i);
      if (coin(rng)) {
        Polynomial arg = linear_factor(rng, nv, level(rng));
        if (coin(rng)) arg = arg * linear_factor(rng, nv, level(rng));
        t.add_logarithmic(name, RationalFunction(arg));
      } else {
        RationalFunction d(Polynomial::constant(nv, small_rational(rng, 2, true)), linear_factor(rng, nv, level(rng)));
        if (coin(rng)) {
          d += RationalFunction(Polynomial::constant(nv, small_rational(rng, 2, true)),
                                linear_factor(rng, nv, level(rng)));
        }
        t.add_primitive(name, d);
      }
    }
    t = validated(std::move(t));
    if (t.is_s_primitive()) return t;
  }
}

Tower random_log_tower(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<int> coin(0, 2);
  for (;;) {
    Tower t;
    for (std::size_t i = 1; i <= n; ++i) {
      std::size_t nv = i;
      std::uniform_int_distribution<std::size_t> level(0, i - 1);
      Polynomial arg = linear_factor(rng, nv, level(rng));
      if (coin(rng) == 0) arg = arg * linear_factor(rng, nv, level(rng));
      if (coin(rng) == 0) arg = arg * Polynomial::variable(nv, level(rng));
      t.add_logarithmic("t" + std::to_string(i), RationalFunction(arg));
    }
    t = validated(std::move(t));
    if (t.is_s_primitive()) return t;
  }
}

RationalFunction random_proper(Rng& rng, const Tower& t, std::size_t i) {
  std::size_t nv = t.nvars();
  std::uniform_int_distribution<unsigned> mult(1, 2);
  std::uniform_int_distribution<unsigned> count(1, 2);
  if (i == 0) {
    Polynomial num = random_polynomial(rng, nv, 0, 3, 3);
    Polynomial den = Polynomial::constant(nv, 1);
    unsigned k = count(rng);
    for (unsigned j = 0; j < k; ++j) den = den * linear_factor(rng, nv, 0).pow(mult(rng));
    return RationalFunction(num, den);
  }
  Polynomial den = Polynomial::constant(nv, 1);
  unsigned k = count(rng);
  for (unsigned j = 0; j < k && den.degree(i) < 3; ++j) {
    Polynomial f = linear_factor(rng, nv, i);
    if (i > 1 && mult(rng) == 2) f += Polynomial::variable(nv, i - 1);
    den = den * f.pow(std::min<unsigned>(mult(rng), 3 - den.degree(i)));
  }
  Polynomial num(nv);
  for (unsigned e = 0; e < den.degree(i); ++e) {
    num += random_polynomial(rng, nv, i - 1, 1, 2) * Polynomial::variable(nv, i, e);
  }
  if (num.is_zero()) num = Polynomial::constant(nv, 1);
  // a coefficient denominator from the field below
  if (mult(rng) == 2) den = den * linear_factor(rng, nv, std::uniform_int_distribution<std::size_t>(0, i - 1)(rng));
  return RationalFunction(num, den);
}

}  // namespace towerdecomp::testing
