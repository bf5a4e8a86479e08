#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towerdecomp/matryoshka.hpp"
#include "towerdecomp/tower.hpp"

namespace towerdecomp {

/// Exact solve of A c = b over Q. Returns one solution (free unknowns set
/// to zero) or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b);

/// Constants c with h = sum_j c_j basis_j, or nullopt.
std::optional<std::vector<Rational>> solve_constant_combination(
    const RationalFunction& h, const std::vector<RationalFunction>& basis);

struct Decomposition {
  RationalFunction input;
  RationalFunction g;
  RationalFunction r;
  /// Order keys of the successive lower terms, starting with the input.
  std::vector<OrderKey> trace;
};

/// f = g' + r with r a remainder. Throws TowerNotSPrimitive unless the
/// tower has been validated.
Decomposition add_decomp_in_field(const Tower& tower, const RationalFunction& f);

struct RemainderCheck {
  bool ok;
  std::string reason;
};
RemainderCheck is_remainder(const Tower& tower, const RationalFunction& r);

struct InFieldIntegral {
  std::optional<RationalFunction> g;
  Decomposition decomposition;
};
InFieldIntegral integrate_in_field(const Tower& tower, const RationalFunction& f);

}  // namespace towerdecomp
