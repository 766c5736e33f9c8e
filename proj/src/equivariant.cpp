#include "equisplit/equivariant.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace equisplit {

void Character::add(const Weight& w, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = mult_.try_emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) mult_.erase(it);
  }
}

std::int64_t Character::multiplicity(const Weight& w) const {
  auto it = mult_.find(w);
  return it == mult_.end() ? 0 : it->second;
}

std::int64_t Character::dimension() const {
  std::int64_t total = 0;
  for (const auto& [w, k] : mult_) total += k;
  return total;
}

Character& Character::operator+=(const Character& rhs) {
  for (const auto& [w, k] : rhs.mult_) add(w, k);
  return *this;
}

Character& Character::operator-=(const Character& rhs) {
  for (const auto& [w, k] : rhs.mult_) add(w, -k);
  return *this;
}

std::string Character::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [w, k] : mult_) {
    os << (first ? "" : ", ") << w.to_string() << ':' << k;
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<Violation> check_equivariance(const EquivariantBundle& E) {
  auto report = validate(E);
  std::vector<Violation> out;
  for (auto& v : report.violations) {
    if (v.kind == Violation::Kind::Equivariance) out.push_back(std::move(v));
  }
  return out;
}

EquivariantBundle standard_linearization(int n, const Weight& lam, const TorusAction& torus) {
  return split_bundle({LineSummand{n, lam}}, torus);
}

Weight monomial_weight(const EquivariantBundle& E, Chart chart, std::size_t i, int exponent) {
  if (i >= E.rank()) throw std::out_of_range("monomial_weight: frame index out of range");
  const Weight step = static_cast<std::int64_t>(exponent) * E.torus.a;
  return chart == Chart::Zero ? E.lambda0[i] - step : E.lambdaInf[i] + step;
}

bool is_bundle_map(const HomElement& h) {
  const std::size_t rows = h.target.rank(), cols = h.source.rank();
  if (h.F0.rows() != rows || h.F0.cols() != cols) return false;
  if (h.FInf.rows() != rows || h.FInf.cols() != cols) return false;
  if (!h.F0.is_polynomial() || !h.FInf.is_polynomial()) return false;
  return h.target.A * h.F0 == h.FInf.reflected() * h.source.A;
}

Weight hom_monomial_weight(const HomElement& h, Chart chart, std::size_t i, std::size_t j, int exponent) {
  const Weight step = static_cast<std::int64_t>(exponent) * h.source.torus.a;
  if (chart == Chart::Zero) return h.target.lambda0.at(i) - h.source.lambda0.at(j) - step;
  return h.target.lambdaInf.at(i) - h.source.lambdaInf.at(j) + step;
}

namespace {

LaurentMatrix project_chart(const HomElement& h, Chart chart, const Weight& chi) {
  const LaurentMatrix& M = chart == Chart::Zero ? h.F0 : h.FInf;
  LaurentMatrix out(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      for (const auto& [e, c] : M(i, j).terms()) {
        if (hom_monomial_weight(h, chart, i, j, e) == chi) out(i, j).add_term(c, e);
      }
    }
  }
  return out;
}

}  // namespace

HomElement weight_project_hom(const HomElement& h, const Weight& chi) {
  if (!(h.source.torus == h.target.torus)) throw std::invalid_argument("weight_project_hom: torus mismatch");
  if (chi.size() != h.source.torus.rank()) throw std::invalid_argument("weight_project_hom: weight length");
  if (!is_bundle_map(h)) throw std::invalid_argument("weight_project_hom: input is not a bundle map");
  HomElement out{h.source, h.target, project_chart(h, Chart::Zero, chi),
                 project_chart(h, Chart::Infinity, chi)};
  return out;
}

std::vector<Weight> hom_weights(const HomElement& h) {
  std::set<Weight> seen;
  for (Chart chart : {Chart::Zero, Chart::Infinity}) {
    const LaurentMatrix& M = chart == Chart::Zero ? h.F0 : h.FInf;
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j)
        for (const auto& [e, c] : M(i, j).terms()) seen.insert(hom_monomial_weight(h, chart, i, j, e));
  }
  return {seen.begin(), seen.end()};
}

HomElement compose(const HomElement& second, const HomElement& first) {
  if (second.source.rank() != first.target.rank()) throw std::invalid_argument("compose: shape mismatch");
  return {first.source, second.target, second.F0 * first.F0, second.FInf * first.FInf};
}

HomElement identity_hom(const EquivariantBundle& E) {
  const auto I = LaurentMatrix::identity(E.rank());
  return {E, E, I, I};
}

HomElement hom_from_section(const EquivariantBundle& source, const EquivariantBundle& target,
                            const std::vector<LaurentPoly>& f, const std::vector<LaurentPoly>& g) {
  const std::size_t ms = source.rank(), mt = target.rank();
  if (f.size() != ms * mt || g.size() != ms * mt) throw std::invalid_argument("hom_from_section: length");
  HomElement h{source, target, LaurentMatrix(mt, ms), LaurentMatrix(mt, ms)};
  for (std::size_t p = 0; p < ms; ++p) {
    for (std::size_t q = 0; q < mt; ++q) {
      h.F0(q, p) = f[p * mt + q];
      h.FInf(q, p) = g[p * mt + q];
    }
  }
  return h;
}

}  // namespace equisplit
