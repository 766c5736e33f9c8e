#include "equisplit/random.hpp"

#include <optional>
#include <stdexcept>

namespace equisplit {

namespace {

using Engine = std::mt19937_64;

std::size_t pick(Engine& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

// Exponent d in [0, max] with d*a == diff; a free exponent is drawn when
// the torus imposes no constraint.
std::optional<int> legal_exponent(Engine& rng, const Weight& diff, const TorusAction& torus, int max) {
  if (torus.rank() == 0 || torus.acts_trivially()) {
    if (!diff.is_zero()) return std::nullopt;
    return static_cast<int>(pick(rng, static_cast<std::size_t>(max) + 1));
  }
  const auto d = solve_multiple(diff, torus.a);
  if (!d || *d < 0 || *d > max) return std::nullopt;
  return static_cast<int>(*d);
}

// A <- A * (I - c z^d E_ij): column j -= c z^d column i.
bool chart0_unipotent(Engine& rng, EquivariantBundle& E, int max) {
  const std::size_t m = E.rank();
  const std::size_t i = pick(rng, m), j = pick(rng, m);
  if (i == j) return false;
  const auto d = legal_exponent(rng, E.lambda0[i] - E.lambda0[j], E.torus, max);
  if (!d) return false;
  const Rational c = multiplier_pool()[pick(rng, multiplier_pool().size())];
  const LaurentPoly mult = LaurentPoly::monomial(-c, *d);
  for (std::size_t k = 0; k < m; ++k) E.A(k, j) += mult * E.A(k, i);
  return true;
}

// A <- (I + c w^k E_ij) * A: row i += c z^{-k} row j.
bool chart_inf_unipotent(Engine& rng, EquivariantBundle& E, int max) {
  const std::size_t m = E.rank();
  const std::size_t i = pick(rng, m), j = pick(rng, m);
  if (i == j) return false;
  const auto k = legal_exponent(rng, E.lambdaInf[j] - E.lambdaInf[i], E.torus, max);
  if (!k) return false;
  const Rational c = multiplier_pool()[pick(rng, multiplier_pool().size())];
  const LaurentPoly mult = LaurentPoly::monomial(c, -*k);
  for (std::size_t l = 0; l < m; ++l) E.A(i, l) += mult * E.A(j, l);
  return true;
}

bool chart0_swap(Engine& rng, EquivariantBundle& E) {
  const std::size_t m = E.rank();
  const std::size_t i = pick(rng, m), j = pick(rng, m);
  if (i == j) return false;
  for (std::size_t k = 0; k < m; ++k) std::swap(E.A(k, i), E.A(k, j));
  std::swap(E.lambda0[i], E.lambda0[j]);
  return true;
}

bool chart_inf_swap(Engine& rng, EquivariantBundle& E) {
  const std::size_t m = E.rank();
  const std::size_t i = pick(rng, m), j = pick(rng, m);
  if (i == j) return false;
  for (std::size_t l = 0; l < m; ++l) std::swap(E.A(i, l), E.A(j, l));
  std::swap(E.lambdaInf[i], E.lambdaInf[j]);
  return true;
}

bool scale(Engine& rng, EquivariantBundle& E) {
  const std::size_t m = E.rank();
  const std::size_t i = pick(rng, m);
  const Rational c = multiplier_pool()[pick(rng, multiplier_pool().size())];
  if (rng() % 2 == 0) {
    for (std::size_t k = 0; k < m; ++k) E.A(k, i) *= c;
  } else {
    for (std::size_t l = 0; l < m; ++l) E.A(i, l) *= c;
  }
  return true;
}

}  // namespace

const std::vector<Rational>& multiplier_pool() {
  static const std::vector<Rational> pool = {Rational(1),     Rational(-1), Rational(2),
                                             Rational(-2),    Rational(3),  Rational(1, 2),
                                             Rational(-1, 3)};
  return pool;
}

EquivariantBundle reframe(const EquivariantBundle& E, std::uint64_t seed, int ops,
                          const ReframeOptions& options) {
  Engine rng(seed);
  EquivariantBundle out = E;
  constexpr int kAttempts = 32;
  for (int op = 0; op < ops; ++op) {
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      const std::size_t kind = pick(rng, 10);
      bool applied = false;
      if (kind < 4) {
        applied = chart0_unipotent(rng, out, options.max_exponent);
      } else if (kind < 8) {
        applied = chart_inf_unipotent(rng, out, options.max_exponent);
      } else if (kind == 8) {
        applied = (rng() % 2 == 0) ? chart0_swap(rng, out) : chart_inf_swap(rng, out);
      } else {
        applied = scale(rng, out);
      }
      if (applied) break;
    }
  }
  return out;
}

RandomInstance random_instance(std::uint64_t seed, const std::vector<LineSummand>& summands,
                               const TorusAction& torus, int complexity,
                               const ReframeOptions& options) {
  if (summands.empty()) throw std::invalid_argument("random_instance needs at least one summand");
  const EquivariantBundle base = split_bundle(summands, torus);
  return {reframe(base, seed, complexity, options), summands};
}

}  // namespace equisplit
