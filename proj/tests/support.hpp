#pragma once

#include <cstddef>
#include <ostream>
#include <random>
#include <string>

#include "towerdecomp/parse.hpp"
#include "towerdecomp/tower.hpp"

namespace towerdecomp {
// readable gtest failure output
void PrintTo(const RationalFunction& f, std::ostream* os);
}  // namespace towerdecomp

namespace towerdecomp::testing {

// t1 = log x, t2 = Li(x), t3 = log log x
Tower li_tower();
// u1 = log x, u2 = log(x+1), u3 = log u1
Tower finer_tower();
// t1 = log x, t2 = log t1, t3 = log((x+1) t1)
Tower cli_failing_tower();
// F: t1 = log x, t2 = log(x t1), t3 = log((x+1)(t1+1) t2)
Tower f_tower();
// E: the well-generated target of F
Tower e_tower();

RationalFunction el(const Tower& t, const std::string& src);

using Rng = std::mt19937;

Rational small_rational(Rng& rng, int bound = 3, bool nonzero = false);

// Polynomial over nvars variables with up to `terms` terms, each variable
// only among `allowed_max_var` and below, total degree <= max_degree.
Polynomial random_polynomial(Rng& rng, std::size_t nvars, std::size_t max_var, unsigned max_degree,
                             unsigned terms);

// Element of the tower with numerator and denominator of total degree <= 3.
RationalFunction random_element(Rng& rng, const Tower& t);

// An S-primitive tower with n generators, mixing log and prim kinds.
Tower random_s_primitive_tower(Rng& rng, std::size_t n);
// Validated logarithmic tower with n generators.
Tower random_log_tower(Rng& rng, std::size_t n);

// A t_i-proper element free of t_{i+1}..t_n (any element of Q(x) for i = 0).
RationalFunction random_proper(Rng& rng, const Tower& t, std::size_t i);

}  // namespace towerdecomp::testing
