#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "towerdecomp/rational_function.hpp"

namespace towerdecomp {

/// Exponents over t1..tn (x excluded). Entry k belongs to t_{k+1}.
using Monomial = std::vector<std::uint32_t>;

/// Pure lex with t1 < t2 < ... < tn: t_n is compared first.
int compare_monomials(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_monomials(a, b) < 0; }
};

/// nullopt is the zero marker, lower than every monomial.
using HeadMonomial = std::optional<Monomial>;
int compare_heads(const HeadMonomial& a, const HeadMonomial& b);

bool is_unit(const Monomial& m);
Monomial unit_monomial(std::size_t n);
/// The monomial as an element over n + 1 variables.
RationalFunction monomial_element(const Monomial& m);

/// Level i holds pairs (M, c) with M a monomial in t_{i+1}..t_n and c a
/// t_i-proper coefficient free of t_{i+1}..t_n; level 0 holds coefficients
/// in Q(x).
using Level = std::map<Monomial, RationalFunction, MonomialLess>;

struct Matryoshka {
  std::size_t n = 0;
  std::vector<Level> levels;

  /// pi_i(f) as an element.
  RationalFunction projection(std::size_t i) const;
  std::vector<RationalFunction> projections() const;
  /// i-th head monomial (zero marker for an empty level).
  HeadMonomial head_monomial(std::size_t i) const;
  /// i-th head coefficient (zero for an empty level).
  RationalFunction head_coefficient(std::size_t i) const;
};

/// The element is taken over n + 1 variables with n = f.nvars() - 1.
Matryoshka project(const RationalFunction& f);

struct HeadData {
  std::vector<HeadMonomial> level_monomials;
  std::vector<RationalFunction> level_coefficients;
  HeadMonomial hm;
  RationalFunction hc;
  std::vector<std::size_t> index_set;
};

HeadData head_data(const Matryoshka& mat);
HeadData head_data(const RationalFunction& f);

/// n for the unit monomial, otherwise the smallest i with t_i present.
std::size_t indicator(const Monomial& m, std::size_t n);

struct OrderKey {
  std::uint32_t den_degree = 0;
  HeadMonomial hm;
};
OrderKey order_key(const RationalFunction& f);

enum class Order { Lower, Equal, Higher };
Order compare_keys(const OrderKey& a, const OrderKey& b);
Order compare_order(const RationalFunction& f, const RationalFunction& g);

/// t-proper with squarefree denominator in variable v, free of later variables.
bool is_level_simple(const RationalFunction& f, std::size_t v);
/// Every projection pi_i(f) is t_i-simple (t_0 = x).
bool is_simple(const RationalFunction& f);
bool is_simple(const Matryoshka& mat);

}  // namespace towerdecomp
