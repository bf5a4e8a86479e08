#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towerdecomp/decomp.hpp"
#include "towerdecomp/tower.hpp"

namespace towerdecomp {

enum class Verdict { Yes, No, Undecided };
const char* to_string(Verdict v);

struct LogRecognition {
  Verdict status = Verdict::Undecided;
  std::string reason;
  /// For Yes: h = sum c * arg'/arg.
  std::vector<LogTerm> logs;
  /// For No: the residue when the residue polynomial is linear, otherwise a
  /// coefficient of it; either way its derivative is nonzero.
  std::optional<RationalFunction> certificate;
  /// Monic residue polynomial, coefficients in K_{i-1} (index = power of z).
  std::vector<RationalFunction> residue_polynomial;
};

/// Rothstein-Trager residue test for a t_i-simple h. Throws NotSimple.
LogRecognition recognize_log_derivative_combo(const Tower& tower, const RationalFunction& h, std::size_t i);

struct ElementaryVerdict {
  Verdict status = Verdict::Undecided;
  std::string reason;
  Decomposition decomposition;
  /// For Yes: r = sum span_coeffs[j-1] t_j' + sum c_k arg_k'/arg_k.
  std::vector<Rational> span_coeffs;
  std::vector<LogTerm> logs;
  /// For Yes: g + sum span_coeffs[j-1] t_j, the non-logarithmic part of the integral.
  std::optional<RationalFunction> rational_part;
  std::optional<RationalFunction> certificate;
};

ElementaryVerdict elementary_integrability(const Tower& tower, const RationalFunction& f);

/// Rational roots of a polynomial over Q (coefficients low to high) with
/// multiplicities; nullopt when some root is not rational or the search
/// exceeds the built-in bound.
std::optional<std::vector<std::pair<Rational, unsigned>>> rational_roots(std::vector<Rational> coeffs);

}  // namespace towerdecomp
