#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "equisplit/bundle.hpp"
#include "equisplit/laurent.hpp"
#include "equisplit/random.hpp"

namespace equisplit::testing {

inline LaurentPoly z(int e, Rational c = 1) { return LaurentPoly::monomial(c, e); }

inline LaurentMatrix mat(std::initializer_list<std::initializer_list<LaurentPoly>> rows) {
  const std::size_t n = rows.size();
  const std::size_t m = rows.begin()->size();
  LaurentMatrix M(n, m);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& p : row) M(i, j++) = p;
    ++i;
  }
  return M;
}

inline TorusAction torus(std::initializer_list<std::int64_t> a) { return TorusAction{Weight(a)}; }

inline EquivariantBundle bundle(LaurentMatrix A, std::vector<Weight> lambda0, std::vector<Weight> lambdaInf,
                                TorusAction t) {
  return EquivariantBundle{std::move(A), std::move(lambda0), std::move(lambdaInf), std::move(t)};
}

// Bundle without torus (r = 0).
inline EquivariantBundle plain_bundle(LaurentMatrix A) {
  const std::size_t m = A.rows();
  return bundle(std::move(A), std::vector<Weight>(m), std::vector<Weight>(m), TorusAction{});
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, int lo, int hi, int max_terms) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % static_cast<unsigned>(max_terms + 1));
  for (int t = 0; t < terms; ++t) {
    const int e = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    const long num = static_cast<long>(rng() % 7) - 3;
    const long den = static_cast<long>(rng() % 3) + 1;
    p.add_term(make_rational(num, den), e);
  }
  return p;
}

inline LaurentMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi, int max_terms) {
  LaurentMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M(i, j) = random_laurent(rng, lo, hi, max_terms);
  return M;
}

// Random summand list for a torus; weights in a small box.
inline std::vector<LineSummand> random_summands(std::mt19937_64& rng, std::size_t rank, const TorusAction& t,
                                                int max_degree = 3) {
  std::vector<LineSummand> out;
  for (std::size_t i = 0; i < rank; ++i) {
    LineSummand s;
    s.n = static_cast<int>(rng() % static_cast<unsigned>(2 * max_degree + 1)) - max_degree;
    std::vector<std::int64_t> lam;
    for (std::size_t k = 0; k < t.rank(); ++k) lam.push_back(static_cast<std::int64_t>(rng() % 5) - 2);
    s.lam = Weight(lam);
    out.push_back(s);
  }
  return out;
}

inline TorusAction random_torus(std::mt19937_64& rng, std::size_t r, bool allow_trivial = true) {
  std::vector<std::int64_t> a;
  for (std::size_t k = 0; k < r; ++k) a.push_back(static_cast<std::int64_t>(rng() % 5) - 2);
  TorusAction t{Weight(a)};
  if (!allow_trivial && r > 0 && t.acts_trivially()) return random_torus(rng, r, false);
  return t;
}

}  // namespace equisplit::testing
