#pragma once

#include <string>
#include <vector>

#include "towerdecomp/tower.hpp"

namespace towerdecomp {

/// Text in the expression grammar; parsing it back gives an equal value.
std::string render(const Polynomial& p, const std::vector<std::string>& names);
std::string render(const RationalFunction& f, const std::vector<std::string>& names);
std::string render_rational(const Rational& c);

std::string render_latex(const RationalFunction& f, const std::vector<std::string>& names);
/// t12 -> t_{12}; other names unchanged.
std::string latex_name(const std::string& name);

/// Right-hand side of a `gen` line: `log(...)` sums or `prim <expr>`.
std::string render_generator(const Generator& g, const std::vector<std::string>& names);
/// A tower file accepted by parse_tower_file.
std::string render_tower_file(const Tower& tower);

}  // namespace towerdecomp
