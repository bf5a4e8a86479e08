#include "towerdecomp/matryoshka.hpp"

#include <algorithm>

namespace towerdecomp {

int compare_monomials(const Monomial& a, const Monomial& b) {
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

int compare_heads(const HeadMonomial& a, const HeadMonomial& b) {
  if (!a) return b ? -1 : 0;
  if (!b) return 1;
  return compare_monomials(*a, *b);
}

bool is_unit(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial unit_monomial(std::size_t n) { return Monomial(n, 0); }

RationalFunction monomial_element(const Monomial& m) {
  Exponents e(m.size() + 1, 0);
  std::copy(m.begin(), m.end(), e.begin() + 1);
  return RationalFunction(Polynomial::monomial(std::move(e), 1));
}

RationalFunction Matryoshka::projection(std::size_t i) const {
  RationalFunction out(n + 1);
  for (const auto& [m, c] : levels.at(i)) out += is_unit(m) ? c : c * monomial_element(m);
  return out;
}

std::vector<RationalFunction> Matryoshka::projections() const {
  std::vector<RationalFunction> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(projection(i));
  return out;
}

HeadMonomial Matryoshka::head_monomial(std::size_t i) const {
  const Level& lv = levels.at(i);
  if (lv.empty()) return std::nullopt;
  return lv.rbegin()->first;
}

RationalFunction Matryoshka::head_coefficient(std::size_t i) const {
  const Level& lv = levels.at(i);
  if (lv.empty()) return RationalFunction(n + 1);
  return lv.rbegin()->second;
}

Matryoshka project(const RationalFunction& f) {
  const std::size_t n = f.nvars() - 1;
  Matryoshka out;
  out.n = n;
  out.levels.resize(n + 1);
  Level current;
  if (!f.is_zero()) current.emplace(unit_monomial(n), f);
  for (std::size_t i = n; i >= 1; --i) {
    Level next;
    for (const auto& [m, c] : current) {
      ProperSplit s = split_proper_poly(c, i);
      if (!s.proper.is_zero()) out.levels[i].emplace(m, std::move(s.proper));
      if (s.poly.is_zero()) continue;
      const std::vector<RationalFunction> cs = coefficients_in(s.poly, i);
      for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k].is_zero()) continue;
        Monomial mk = m;
        mk[i - 1] += static_cast<std::uint32_t>(k);
        auto [it, inserted] = next.emplace(std::move(mk), cs[k]);
        if (!inserted) {
          it->second += cs[k];
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    current = std::move(next);
  }
  out.levels[0] = std::move(current);
  return out;
}

HeadData head_data(const Matryoshka& mat) {
  HeadData hd;
  hd.hc = RationalFunction(mat.n + 1);
  for (std::size_t i = 0; i <= mat.n; ++i) {
    hd.level_monomials.push_back(mat.head_monomial(i));
    hd.level_coefficients.push_back(mat.head_coefficient(i));
    if (compare_heads(hd.level_monomials.back(), hd.hm) > 0) hd.hm = hd.level_monomials.back();
  }
  if (!hd.hm) return hd;
  for (std::size_t i = 0; i <= mat.n; ++i) {
    if (compare_heads(hd.level_monomials[i], hd.hm) == 0) {
      hd.index_set.push_back(i);
      hd.hc += hd.level_coefficients[i];
    }
  }
  return hd;
}

HeadData head_data(const RationalFunction& f) { return head_data(project(f)); }

std::size_t indicator(const Monomial& m, std::size_t n) {
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m[k] != 0) return k + 1;
  return n;
}

OrderKey order_key(const RationalFunction& f) {
  const std::size_t n = f.nvars() - 1;
  return OrderKey{f.den().degree(n), head_data(f).hm};
}

Order compare_keys(const OrderKey& a, const OrderKey& b) {
  if (a.den_degree != b.den_degree) return a.den_degree < b.den_degree ? Order::Lower : Order::Higher;
  const int c = compare_heads(a.hm, b.hm);
  return c < 0 ? Order::Lower : c > 0 ? Order::Higher : Order::Equal;
}

Order compare_order(const RationalFunction& f, const RationalFunction& g) {
  return compare_keys(order_key(f), order_key(g));
}

bool is_level_simple(const RationalFunction& f, std::size_t v) {
  if (f.is_zero()) return true;
  if (!f.only_involves_up_to(v)) return false;
  if (f.num().degree(v) >= f.den().degree(v)) return false;
  return is_squarefree_in(f.den(), v);
}

bool is_simple(const Matryoshka& mat) {
  for (std::size_t i = 0; i <= mat.n; ++i) {
    const Level& lv = mat.levels[i];
    if (lv.empty()) continue;
    if (lv.size() != 1 || !is_unit(lv.begin()->first)) return false;
    if (!is_level_simple(lv.begin()->second, i)) return false;
  }
  return true;
}

bool is_simple(const RationalFunction& f) { return is_simple(project(f)); }

}  // namespace towerdecomp
