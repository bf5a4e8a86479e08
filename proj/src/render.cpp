#include "towerdecomp/render.hpp"

#include <cctype>

namespace towerdecomp {

namespace {

std::string monomial_text(const Exponents& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[v];
    if (e[v] > 1) out += '^' + std::to_string(e[v]);
  }
  return out;
}

std::string monomial_latex(const Exponents& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = e.size(); v-- > 0;) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += ' ';
    out += latex_name(names[v]);
    if (e[v] > 1) out += "^{" + std::to_string(e[v]) + '}';
  }
  return out;
}

bool is_single_power(const Polynomial& p) {
  if (p.size() != 1 || p.leading_coefficient() != 1) return false;
  int vars = 0;
  for (auto k : p.leading_exponents()) vars += k != 0;
  return vars == 1;
}

std::string latex_poly(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    const std::string mono = monomial_latex(e, names);
    std::string coeff;
    if (mono.empty() || a != 1) {
      coeff = a.get_den() == 1 ? a.get_num().get_str()
                                : "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    }
    if (first) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += ' ';
    out += mono;
  }
  return out;
}

}  // namespace

std::string render_rational(const Rational& c) { return c.get_str(); }

std::string render(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    const std::string mono = monomial_text(e, names);
    std::string term;
    if (mono.empty()) {
      term = render_rational(a);
    } else if (a == 1) {
      term = mono;
    } else {
      term = render_rational(a) + '*' + mono;
    }
    if (first) {
      out += neg ? "-" + term : term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

std::string render(const RationalFunction& f, const std::vector<std::string>& names) {
  if (f.is_polynomial()) return render(f.num() * (1 / f.den().constant_value()), names);
  std::string num = render(f.num(), names);
  if (f.num().size() > 1) num = '(' + num + ')';
  std::string den = render(f.den(), names);
  if (!is_single_power(f.den())) den = '(' + den + ')';
  return num + '/' + den;
}

std::string latex_name(const std::string& name) {
  std::size_t k = name.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
  if (k == 0 || k == name.size()) return name;
  return name.substr(0, k) + "_{" + name.substr(k) + '}';
}

std::string render_latex(const RationalFunction& f, const std::vector<std::string>& names) {
  if (f.is_polynomial()) return latex_poly(f.num() * (1 / f.den().constant_value()), names);
  return "\\frac{" + latex_poly(f.num(), names) + "}{" + latex_poly(f.den(), names) + '}';
}

std::string render_generator(const Generator& g, const std::vector<std::string>& names) {
  if (const auto* log = std::get_if<Logarithmic>(&g.kind)) {
    std::string out;
    bool first = true;
    for (const LogTerm& t : log->terms) {
      const bool neg = t.coefficient < 0;
      const Rational a = neg ? Rational(-t.coefficient) : t.coefficient;
      if (first) {
        out += neg ? "-" : "";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      if (a != 1) out += render_rational(a) + '*';
      out += "log(" + render(t.argument, names) + ')';
    }
    return out;
  }
  return "prim " + render(std::get<ExplicitPrimitive>(g.kind).derivative, names);
}

std::string render_tower_file(const Tower& tower) {
  std::string out = "var " + tower.names()[0] + '\n';
  for (const Generator& g : tower.generators())
    out += "gen " + g.name + " : " + render_generator(g, tower.names()) + '\n';
  return out;
}

}  // namespace towerdecomp
