#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "towerdecomp/rational_function.hpp"

namespace towerdecomp {

/// One summand c * arg'/arg of a logarithmic derivative.
struct LogTerm {
  Rational coefficient;
  RationalFunction argument;
};

/// t' = sum of c_k * arg_k' / arg_k; `log(arg)` is the single-term case.
struct Logarithmic {
  std::vector<LogTerm> terms;
};

/// t' given explicitly, e.g. Li(x) with t' = 1/log(x).
struct ExplicitPrimitive {
  RationalFunction derivative;
};

using GeneratorKind = std::variant<Logarithmic, ExplicitPrimitive>;

struct Generator {
  std::string name;
  GeneratorKind kind;
  RationalFunction derivative;

  bool is_logarithmic() const { return std::holds_alternative<Logarithmic>(kind); }
};

enum class ValidationStatus { Unchecked, SPrimitive, Rejected };
enum class RejectionKind { None, ZeroDerivative, NotSimple, Dependence };

struct Validation {
  ValidationStatus status = ValidationStatus::Unchecked;
  RejectionKind kind = RejectionKind::None;
  /// 1-based index of the offending generator.
  std::size_t generator = 0;
  std::string reason;
  /// For Dependence: t_i' = sum_j dependence[j-1] * t_j' over j < i.
  std::vector<Rational> dependence;
};

/// A differential tower Q(x)(t1, ..., tn) with x' = 1 and each t_i' in
/// Q(x)(t1, ..., t_{i-1}). Variable 0 is x and variable i is t_i; every
/// element of the tower is a RationalFunction over n + 1 variables.
class Tower {
 public:
  explicit Tower(std::string base_name = "x");

  std::size_t size() const { return gens_.size(); }
  std::size_t nvars() const { return gens_.size() + 1; }
  /// 1-based.
  const Generator& generator(std::size_t i) const { return gens_.at(i - 1); }
  const std::vector<Generator>& generators() const { return gens_; }
  /// Variable names, x first.
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Appending invalidates a previous validation. Expressions may use any
  /// number of variables up to the current ones; they are widened.
  void add_logarithmic(std::string name, std::vector<LogTerm> terms);
  void add_logarithmic(std::string name, const RationalFunction& argument);
  void add_primitive(std::string name, const RationalFunction& derivative);

  /// Total derivative: df/dx + sum_i (df/dt_i) t_i'.
  RationalFunction differentiate(const RationalFunction& f) const;
  /// x' = 1 for v = 0, t_v' otherwise.
  const RationalFunction& derivative_of_variable(std::size_t v) const { return var_derivs_.at(v); }

  RationalFunction zero() const { return RationalFunction(nvars()); }
  RationalFunction constant(const Rational& c) const { return RationalFunction::constant(nvars(), c); }
  RationalFunction variable(std::size_t v) const { return RationalFunction::variable(nvars(), v); }
  /// Widens an expression over fewer variables into this tower.
  RationalFunction embed(const RationalFunction& f) const { return f.with_nvars(nvars()); }

  const Validation& validation() const { return validation_; }
  bool is_s_primitive() const { return validation_.status == ValidationStatus::SPrimitive; }
  bool is_logarithmic() const;
  /// Throws TowerNotSPrimitive unless validated as S-primitive.
  void require_s_primitive() const;

  void set_validation(Validation v) { validation_ = std::move(v); }

 private:
  void append(Generator g);

  std::vector<std::string> names_;
  std::vector<Generator> gens_;
  std::vector<RationalFunction> var_derivs_;
  Validation validation_;
};

/// d(arg)/arg; throws ZeroArgument for arg = 0.
RationalFunction log_derivative(const Tower& tower, const RationalFunction& arg);

/// Checks that every t_i' is simple and that t_1', ..., t_n' are linearly
/// independent over Q.
Validation validate_s_primitive(const Tower& tower);

/// Returns the tower with its validation result attached.
Tower validated(Tower tower);

struct GeneratorShift {
  /// 1-based generator index.
  std::size_t index;
  /// Old t_i = new t_i + shift (shift written in the new coordinates).
  RationalFunction shift;
};

struct NormalizedGenerators {
  Tower tower;
  std::vector<GeneratorShift> shifts;
  /// Image of each old variable (x first) in the new coordinates.
  std::vector<RationalFunction> old_to_new;
};

/// Rewrites t_i' = g_i' + h_i with h_i simple and replaces t_i by t_i - g_i.
/// Throws HeadMonomialNotOne when some t_i' has a nontrivial polynomial
/// part in a higher generator. The result carries its validation.
NormalizedGenerators normalize_generators(const Tower& tower);

}  // namespace towerdecomp
