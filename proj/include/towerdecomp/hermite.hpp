#pragma once

#include <cstddef>

#include "towerdecomp/tower.hpp"
#include "towerdecomp/univariate.hpp"

namespace towerdecomp {

/// Tower derivation of a polynomial in t_i with coefficients in K_{i-1}.
UnivariatePolynomial derive_in(const Tower& tower, const UnivariatePolynomial& p, std::size_t i);

struct HermiteReduction {
  RationalFunction g;
  RationalFunction h;
};

/// f = g' + h with h t_i-simple. For i >= 1, f must be t_i-proper and free
/// of later generators; g is then t_i-proper too. For i = 0 any element of
/// Q(x) is accepted and its polynomial part is integrated directly.
HermiteReduction hermite_reduce_proper(const Tower& tower, const RationalFunction& f, std::size_t i);

struct HermitianPart {
  RationalFunction h;
  RationalFunction g;
  /// Polynomial in t_i over K_{i-1}.
  RationalFunction p;
};

/// f = g' + h + p with h the Hermitian part in t_i.
HermitianPart hermitian_part(const Tower& tower, const RationalFunction& f, std::size_t i);

}  // namespace towerdecomp
