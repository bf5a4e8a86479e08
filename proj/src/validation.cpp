#include "towerdecomp/decomp.hpp"
#include "towerdecomp/error.hpp"
#include "towerdecomp/hermite.hpp"
#include "towerdecomp/matryoshka.hpp"
#include "towerdecomp/tower.hpp"

namespace towerdecomp {

Validation validate_s_primitive(const Tower& tower) {
  Validation v;
  std::vector<RationalFunction> previous;
  for (std::size_t i = 1; i <= tower.size(); ++i) {
    const RationalFunction& d = tower.derivative_of_variable(i);
    const std::string& name = tower.names()[i];
    if (d.is_zero()) {
      v.status = ValidationStatus::Rejected;
      v.kind = RejectionKind::ZeroDerivative;
      v.generator = i;
      v.reason = "zero derivative: " + name;
      return v;
    }
    if (!is_simple(d)) {
      v.status = ValidationStatus::Rejected;
      v.kind = RejectionKind::NotSimple;
      v.generator = i;
      v.reason = "not simple: " + name;
      return v;
    }
    if (auto dep = solve_constant_combination(d, previous)) {
      v.status = ValidationStatus::Rejected;
      v.kind = RejectionKind::Dependence;
      v.generator = i;
      v.reason = "dependence: " + name;
      v.dependence = std::move(*dep);
      return v;
    }
    previous.push_back(d);
  }
  v.status = ValidationStatus::SPrimitive;
  return v;
}

NormalizedGenerators normalize_generators(const Tower& tower) {
  const std::size_t n = tower.size();
  const std::size_t nv = tower.nvars();
  Tower out(tower.names()[0]);
  std::vector<GeneratorShift> shifts;
  std::vector<RationalFunction> images{RationalFunction::variable(nv, 0)};

  for (std::size_t i = 1; i <= n; ++i) {
    const Generator& gen = tower.generator(i);
    // Old derivative rewritten in the new coordinates u_1..u_{i-1}.
    std::vector<RationalFunction> partial(images);
    for (std::size_t k = i; k < nv; ++k) partial.push_back(RationalFunction::variable(nv, k));
    const RationalFunction d = out.embed(substitute(gen.derivative, partial).with_nvars(i));
    const Matryoshka mat = project(d);
    for (const Level& lv : mat.levels) {
      for (const auto& [m, c] : lv)
        if (!is_unit(m)) throw Error(ErrorCode::HeadMonomialNotOne, "head monomial of " + gen.name + "' is not 1", i);
    }
    RationalFunction shift = out.zero();
    RationalFunction h = out.zero();
    for (std::size_t k = 0; k < i; ++k) {
      if (mat.levels[k].empty()) continue;
      HermiteReduction hr = hermite_reduce_proper(out, mat.levels[k].begin()->second, k);
      shift += hr.g;
      h += hr.h;
    }
    if (shift.is_zero()) {
      if (const auto* log = std::get_if<Logarithmic>(&gen.kind)) {
        std::vector<LogTerm> terms;
        for (const LogTerm& t : log->terms) {
          const RationalFunction arg = substitute(t.argument, partial).with_nvars(i);
          terms.push_back(LogTerm{t.coefficient, arg});
        }
        out.add_logarithmic(gen.name, std::move(terms));
      } else {
        out.add_primitive(gen.name, h);
      }
    } else {
      out.add_primitive(gen.name, h);
      shifts.push_back(GeneratorShift{i, shift.with_nvars(nv)});
    }
    images.push_back(RationalFunction::variable(nv, i) + shift.with_nvars(nv));
  }
  return {validated(std::move(out)), std::move(shifts), std::move(images)};
}

}  // namespace towerdecomp
