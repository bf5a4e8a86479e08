#include "towerdecomp/tower.hpp"

#include <algorithm>

#include "towerdecomp/error.hpp"

namespace towerdecomp {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::HigherGeneratorPresent: return "HigherGeneratorPresent";
    case ErrorCode::HeadMonomialNotOne: return "HeadMonomialNotOne";
    case ErrorCode::TowerNotSPrimitive: return "TowerNotSPrimitive";
    case ErrorCode::NotLogarithmic: return "NotLogarithmic";
    case ErrorCode::PreconditionCLIMI: return "PreconditionCLIMI";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvalidTower: return "InvalidTower";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Tower::Tower(std::string base_name) {
  names_.push_back(std::move(base_name));
  var_derivs_.push_back(RationalFunction::constant(1, 1));
}

std::optional<std::size_t> Tower::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

bool Tower::is_logarithmic() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Generator& g) { return g.is_logarithmic(); });
}

void Tower::require_s_primitive() const {
  if (!is_s_primitive()) {
    throw Error(ErrorCode::TowerNotSPrimitive,
                "tower is not validated S-primitive" +
                    (validation_.reason.empty() ? std::string() : ": " + validation_.reason));
  }
}

void Tower::append(Generator g) {
  if (index_of(g.name)) throw Error(ErrorCode::InvalidTower, "duplicate generator name " + g.name);
  const std::size_t nv = nvars() + 1;
  if (!g.derivative.only_involves_up_to(nvars() - 1) || g.derivative.nvars() > nvars())
    throw Error(ErrorCode::InvalidTower, "derivative of " + g.name + " uses later variables");
  auto widen = [nv](RationalFunction& f) { f = f.with_nvars(nv); };
  for (auto& d : var_derivs_) widen(d);
  for (auto& gen : gens_) {
    widen(gen.derivative);
    if (auto* log = std::get_if<Logarithmic>(&gen.kind)) {
      for (auto& t : log->terms) widen(t.argument);
    } else {
      widen(std::get<ExplicitPrimitive>(gen.kind).derivative);
    }
  }
  widen(g.derivative);
  if (auto* log = std::get_if<Logarithmic>(&g.kind)) {
    for (auto& t : log->terms) widen(t.argument);
  } else {
    widen(std::get<ExplicitPrimitive>(g.kind).derivative);
  }
  names_.push_back(g.name);
  var_derivs_.push_back(g.derivative);
  gens_.push_back(std::move(g));
  validation_ = Validation{};
}

void Tower::add_logarithmic(std::string name, std::vector<LogTerm> terms) {
  RationalFunction d = zero();
  for (auto& t : terms) {
    if (t.argument.nvars() > nvars() || !t.argument.only_involves_up_to(nvars() - 1))
      throw Error(ErrorCode::InvalidTower, "argument of " + name + " uses later variables");
    t.argument = embed(t.argument);
    d += log_derivative(*this, t.argument) * t.coefficient;
  }
  append(Generator{std::move(name), Logarithmic{std::move(terms)}, std::move(d)});
}

void Tower::add_logarithmic(std::string name, const RationalFunction& argument) {
  add_logarithmic(std::move(name), std::vector<LogTerm>{LogTerm{Rational(1), argument}});
}

void Tower::add_primitive(std::string name, const RationalFunction& derivative) {
  if (derivative.nvars() > nvars() || !derivative.only_involves_up_to(nvars() - 1))
    throw Error(ErrorCode::InvalidTower, "derivative of " + name + " uses later variables");
  const RationalFunction d = embed(derivative);
  append(Generator{std::move(name), ExplicitPrimitive{d}, d});
}

RationalFunction Tower::differentiate(const RationalFunction& f) const {
  const RationalFunction g = f.nvars() == nvars() ? f : embed(f);
  auto total = [this](const Polynomial& p) {
    RationalFunction out = zero();
    for (std::size_t v = 0; v < nvars(); ++v) {
      if (!p.depends_on(v)) continue;
      out += RationalFunction(p.derivative(v)) * var_derivs_[v];
    }
    return out;
  };
  if (g.is_polynomial()) return total(g.num()) * (1 / g.den().constant_value());
  // (N/D)' = (N' - f D') / D
  return (total(g.num()) - g * total(g.den())) / RationalFunction(g.den());
}

RationalFunction log_derivative(const Tower& tower, const RationalFunction& arg) {
  if (arg.is_zero()) throw Error(ErrorCode::ZeroArgument, "logarithm of zero");
  const RationalFunction a = tower.embed(arg);
  return tower.differentiate(a) / a;
}

Tower validated(Tower tower) {
  tower.set_validation(validate_s_primitive(tower));
  return tower;
}

}  // namespace towerdecomp
