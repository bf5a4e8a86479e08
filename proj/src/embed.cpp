#include "towerdecomp/embed.hpp"

#include <algorithm>

#include "towerdecomp/decomp.hpp"
#include "towerdecomp/elem.hpp"
#include "towerdecomp/error.hpp"
#include "towerdecomp/matryoshka.hpp"

namespace towerdecomp {

const char* to_string(WellGeneratedFailure f) {
  switch (f) {
    case WellGeneratedFailure::None: return "none";
    case WellGeneratedFailure::CLI: return "CLI";
    case WellGeneratedFailure::MI: return "MI";
    case WellGeneratedFailure::ONE: return "ONE";
  }
  return "unknown";
}

AssociatedMatrix associated_matrix(const Tower& tower) {
  const std::size_t n = tower.size();
  AssociatedMatrix out;
  out.n = n;
  out.entries.assign(n, std::vector<RationalFunction>(n, tower.zero()));
  for (std::size_t j = 1; j <= n; ++j) {
    const Matryoshka mat = project(tower.derivative_of_variable(j));
    for (std::size_t i = 0; i < n; ++i) out.entries[i][j - 1] = mat.projection(i);
  }
  return out;
}

SignificantData significant_data(const Tower& tower) {
  const AssociatedMatrix a = associated_matrix(tower);
  SignificantData out;
  for (std::size_t j = 1; j <= a.n; ++j) {
    std::size_t sv = 0;
    for (std::size_t i = 0; i < a.n; ++i)
      if (!a.at(i, j).is_zero()) sv = i;
    out.sv.push_back(sv);
    out.sc.push_back(a.at(sv, j));
  }
  return out;
}

namespace {

// First j whose significant component depends on the earlier ones.
std::optional<std::pair<std::size_t, std::vector<Rational>>> first_dependence(const SignificantData& sd) {
  for (std::size_t j = 1; j <= sd.sc.size(); ++j) {
    const std::vector<RationalFunction> prev(sd.sc.begin(), sd.sc.begin() + static_cast<long>(j - 1));
    if (auto c = solve_constant_combination(sd.sc[j - 1], prev)) return std::make_pair(j, std::move(*c));
  }
  return std::nullopt;
}

std::optional<std::size_t> first_descent(const SignificantData& sd) {
  for (std::size_t j = 1; j < sd.sv.size(); ++j)
    if (sd.sv[j] < sd.sv[j - 1]) return j;
  return std::nullopt;
}

void require_logarithmic(const Tower& tower) {
  for (std::size_t i = 1; i <= tower.size(); ++i)
    if (!tower.generator(i).is_logarithmic())
      throw Error(ErrorCode::NotLogarithmic, "generator " + tower.names()[i] + " is not logarithmic", i);
}

struct GenDef {
  std::string name;
  std::vector<LogTerm> terms;
};

Tower build(const std::string& base, const std::vector<GenDef>& defs) {
  Tower t(base);
  for (std::size_t i = 0; i < defs.size(); ++i) {
    std::vector<LogTerm> terms;
    for (const LogTerm& lt : defs[i].terms) terms.push_back(LogTerm{lt.coefficient, lt.argument.with_nvars(i + 1)});
    t.add_logarithmic(defs[i].name, std::move(terms));
  }
  return t;
}

std::vector<LogTerm> simplify_terms(const std::vector<LogTerm>& in) {
  std::vector<LogTerm> merged;
  for (const LogTerm& t : in) {
    if (t.coefficient == 0) continue;
    auto it = std::find_if(merged.begin(), merged.end(), [&t](const LogTerm& m) { return m.argument == t.argument; });
    if (it == merged.end()) {
      merged.push_back(t);
    } else {
      it->coefficient += t.coefficient;
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const LogTerm& t) { return t.coefficient == 0; }),
               merged.end());
  if (merged.empty()) return merged;
  const bool integral = std::all_of(merged.begin(), merged.end(), [](const LogTerm& t) {
    return t.coefficient.get_den() == 1 && t.coefficient.get_num().fits_sint_p();
  });
  if (!integral) return merged;
  RationalFunction product = RationalFunction::constant(merged[0].argument.nvars(), 1);
  for (const LogTerm& t : merged) product *= t.argument.pow(static_cast<int>(t.coefficient.get_num().get_si()));
  return {LogTerm{Rational(1), product}};
}

}  // namespace

WellGeneratedCheck is_well_generated(const Tower& tower) {
  const SignificantData sd = significant_data(tower);
  WellGeneratedCheck out;
  if (auto dep = first_dependence(sd)) {
    out.ok = false;
    out.failure = WellGeneratedFailure::CLI;
    out.positions = {dep->first};
    return out;
  }
  if (auto d = first_descent(sd)) {
    out.ok = false;
    out.failure = WellGeneratedFailure::MI;
    out.positions = {*d};
    return out;
  }
  const AssociatedMatrix a = associated_matrix(tower);
  for (std::size_t j = 1; j <= a.n; ++j) {
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < a.n; ++i) nonzero += !a.at(i, j).is_zero();
    if (nonzero != 1) out.positions.push_back(j);
  }
  if (!out.positions.empty()) {
    out.ok = false;
    out.failure = WellGeneratedFailure::ONE;
  }
  return out;
}

NormalizedTower normalize_tower(const Tower& tower) {
  require_logarithmic(tower);
  const Validation v = validate_s_primitive(tower);
  if (v.status != ValidationStatus::SPrimitive)
    throw Error(ErrorCode::Degenerate, "tower is not S-primitive: " + v.reason, v.generator);
  const std::size_t n = tower.size();
  const std::size_t nv = tower.nvars();
  std::vector<GenDef> defs;
  for (const Generator& g : tower.generators()) {
    GenDef s{g.name, {}};
    for (const LogTerm& t : std::get<Logarithmic>(g.kind).terms) s.terms.push_back(LogTerm{t.coefficient, t.argument});
    defs.push_back(std::move(s));
  }
  std::vector<RationalFunction> images;
  for (std::size_t k = 0; k < nv; ++k) images.push_back(RationalFunction::variable(nv, k));
  std::vector<TowerChange> changes;

  Tower current = validated(build(tower.names()[0], defs));
  SignificantData sd = significant_data(current);
  while (true) {
    if (auto dep = first_dependence(sd)) {
      const auto& [i, c] = *dep;
      std::vector<LogTerm> terms = defs[i - 1].terms;
      for (std::size_t j = 1; j < i; ++j) {
        if (c[j - 1] == 0) continue;
        for (const LogTerm& t : defs[j - 1].terms) terms.push_back(LogTerm{-c[j - 1] * t.coefficient, t.argument});
      }
      defs[i - 1].terms = simplify_terms(terms);
      if (defs[i - 1].terms.empty() ||
          (defs[i - 1].terms.size() == 1 && defs[i - 1].terms[0].argument.is_constant()))
        throw Error(ErrorCode::Degenerate, "elimination produced a constant generator", i);
      // Old t_i = new t_i + sum c_j t_j.
      std::vector<RationalFunction> sigma;
      for (std::size_t k = 0; k < nv; ++k) sigma.push_back(RationalFunction::variable(nv, k));
      for (std::size_t j = 1; j < i; ++j) sigma[i] += RationalFunction::variable(nv, j) * c[j - 1];
      for (std::size_t k = i; k < n; ++k)
        for (LogTerm& t : defs[k].terms) t.argument = substitute(t.argument.with_nvars(nv), sigma);
      for (auto& img : images) img = substitute(img, sigma);
      changes.push_back(TowerChange{TowerChange::Kind::Eliminate, i, c});
    } else if (auto d = first_descent(sd)) {
      const std::size_t i = *d;  // swap generators i and i + 1
      std::vector<std::size_t> perm(nv);
      for (std::size_t k = 0; k < nv; ++k) perm[k] = k;
      std::swap(perm[i], perm[i + 1]);
      std::swap(defs[i - 1], defs[i]);
      for (GenDef& s : defs)
        for (LogTerm& t : s.terms) t.argument = t.argument.with_nvars(nv).permuted(perm, nv);
      for (auto& img : images) img = img.permuted(perm, nv);
      changes.push_back(TowerChange{TowerChange::Kind::Swap, i, {}});
    } else {
      break;
    }
    Tower next = validated(build(tower.names()[0], defs));
    if (!next.is_s_primitive()) throw Error(ErrorCode::Degenerate, "normalization lost S-primitivity");
    SignificantData nsd = significant_data(next);
    if (!std::lexicographical_compare(nsd.sv.begin(), nsd.sv.end(), sd.sv.begin(), sd.sv.end()))
      throw Error(ErrorCode::Internal, "significant vector did not decrease");
    current = std::move(next);
    sd = std::move(nsd);
  }
  return {std::move(current), std::move(changes), std::move(images)};
}

Embedding embed_well_generated(const Tower& tower) {
  require_logarithmic(tower);
  const Tower source = tower.is_s_primitive() ? tower : validated(tower);
  source.require_s_primitive();
  const std::size_t n = source.size();
  const SignificantData sd = significant_data(source);
  if (first_dependence(sd) || first_descent(sd))
    throw Error(ErrorCode::PreconditionCLIMI, "tower violates (CLI) or (MI)");
  const AssociatedMatrix a = associated_matrix(source);

  Embedding e{source, Tower(source.names()[0]), {}, {}, {}, {}, {}};
  // Row-major scan keeping entries independent of the basis so far.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const RationalFunction& entry = a.at(i, j);
      if (entry.is_zero() || solve_constant_combination(entry, e.basis)) continue;
      e.basis.push_back(entry);
      e.positions.emplace_back(i, j);
    }
  }
  const std::size_t w = e.basis.size();
  for (std::size_t j = 1; j <= n; ++j) {
    auto it = std::find(e.positions.begin(), e.positions.end(), std::make_pair(sd.sv[j - 1], j));
    if (it == e.positions.end()) throw Error(ErrorCode::Internal, "significant component missing from basis", j);
    const std::size_t l = static_cast<std::size_t>(it - e.positions.begin()) + 1;
    if (!e.ell.empty() && l <= e.ell.back()) throw Error(ErrorCode::Internal, "index map is not increasing", j);
    e.ell.push_back(l);
    const std::vector<RationalFunction> lower(e.basis.begin(), e.basis.begin() + static_cast<long>(l - 1));
    auto c = solve_constant_combination(source.derivative_of_variable(j) - e.basis[l - 1], lower);
    if (!c) throw Error(ErrorCode::Internal, "generator derivative outside the basis span", j);
    e.coeffs.push_back(std::move(*c));
  }
  if (e.ell.front() != 1 || e.ell.back() != w) throw Error(ErrorCode::Internal, "index map bounds violated");

  // phi(t_j) over w + 1 variables; t_j with ell_j <= k is available once u_k exists.
  const std::size_t tv = w + 1;
  std::vector<RationalFunction> images{RationalFunction::variable(tv, 0)};
  for (std::size_t j = 1; j <= n; ++j) {
    RationalFunction img = RationalFunction::variable(tv, e.ell[j - 1]);
    for (std::size_t k = 1; k < e.ell[j - 1]; ++k)
      if (e.coeffs[j - 1][k - 1] != 0) img += RationalFunction::variable(tv, k) * e.coeffs[j - 1][k - 1];
    images.push_back(std::move(img));
  }
  auto phi = [&images, n](const RationalFunction& f) {
    std::vector<RationalFunction> vals(images.begin(), images.begin() + static_cast<long>(n + 1));
    return substitute(f.with_nvars(n + 1), vals);
  };

  for (std::size_t k = 1; k <= w; ++k) {
    const std::string name = "u" + std::to_string(k);
    const RationalFunction target_derivative = phi(e.basis[k - 1]).with_nvars(k);
    const std::size_t row = e.positions[k - 1].first;
    bool added = false;
    const LogRecognition lr = recognize_log_derivative_combo(source, e.basis[k - 1], row);
    if (lr.status == Verdict::Yes && !lr.logs.empty()) {
      std::vector<LogTerm> terms;
      for (const LogTerm& t : lr.logs) terms.push_back(LogTerm{t.coefficient, phi(t.argument).with_nvars(k)});
      Tower attempt = e.target;
      attempt.add_logarithmic(name, simplify_terms(terms));
      if (attempt.derivative_of_variable(k) == target_derivative.with_nvars(k + 1)) {
        e.target = std::move(attempt);
        added = true;
      }
    }
    if (!added) e.target.add_primitive(name, target_derivative);
  }
  e.target = validated(std::move(e.target));
  e.images = std::move(images);

  e.target.require_s_primitive();
  if (w < n || w > n * (n + 1) / 2) throw Error(ErrorCode::Internal, "embedding size outside bounds");
  if (!is_well_generated(e.target).ok) throw Error(ErrorCode::Internal, "target is not well generated");
  for (std::size_t j = 1; j <= n; ++j) {
    if (e.target.differentiate(e.images[j]) != apply_homomorphism(e, source.derivative_of_variable(j)))
      throw Error(ErrorCode::Internal, "embedding does not commute with the derivation", j);
  }
  return e;
}

RationalFunction apply_homomorphism(const Embedding& e, const RationalFunction& f) {
  return substitute(e.source.embed(f), e.images);
}

}  // namespace towerdecomp
