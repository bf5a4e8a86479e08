#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "towerdecomp/tower.hpp"

namespace towerdecomp {

/// entries[i][j-1] = pi_i(t_j') for 0 <= i < n and 1 <= j <= n.
struct AssociatedMatrix {
  std::size_t n = 0;
  std::vector<std::vector<RationalFunction>> entries;

  const RationalFunction& at(std::size_t i, std::size_t j) const { return entries[i][j - 1]; }
};

AssociatedMatrix associated_matrix(const Tower& tower);

struct SignificantData {
  /// sv[j-1] = largest i with pi_i(t_j') nonzero.
  std::vector<std::size_t> sv;
  std::vector<RationalFunction> sc;
};

SignificantData significant_data(const Tower& tower);

enum class WellGeneratedFailure { None, CLI, MI, ONE };
const char* to_string(WellGeneratedFailure f);

struct WellGeneratedCheck {
  bool ok = true;
  WellGeneratedFailure failure = WellGeneratedFailure::None;
  /// CLI: the first dependent generator; MI: the first descent position;
  /// ONE: every column without exactly one nonzero entry. 1-based.
  std::vector<std::size_t> positions;
};

WellGeneratedCheck is_well_generated(const Tower& tower);

struct TowerChange {
  enum class Kind { Eliminate, Swap } kind;
  /// Eliminate: t_index -> t_index - sum_j coeffs[j-1] t_j.
  /// Swap: generators index and index + 1 exchange places.
  std::size_t index;
  std::vector<Rational> coeffs;
};

struct NormalizedTower {
  Tower tower;
  std::vector<TowerChange> changes;
  /// Image of each original variable (x first) in the new tower.
  std::vector<RationalFunction> old_to_new;
};

/// Eliminates dependent significant components, then sorts the significant
/// vector by adjacent swaps, until (CLI) and (MI) hold. Throws NotLogarithmic
/// and Degenerate.
NormalizedTower normalize_tower(const Tower& tower);

struct Embedding {
  Tower source;
  Tower target;
  /// b_1..b_w in source variables, with their matrix positions.
  std::vector<RationalFunction> basis;
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  /// 1-based, strictly increasing.
  std::vector<std::size_t> ell;
  /// coeffs[j-1][k-1] for k < ell_j.
  std::vector<std::vector<Rational>> coeffs;
  /// phi(x) = x, then phi(t_j), all over the target variables.
  std::vector<RationalFunction> images;
};

/// Throws NotLogarithmic or PreconditionCLIMI.
Embedding embed_well_generated(const Tower& tower);

RationalFunction apply_homomorphism(const Embedding& e, const RationalFunction& f);

}  // namespace towerdecomp
