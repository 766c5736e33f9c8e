#include "equisplit/cohomology.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "equisplit/linalg.hpp"

namespace equisplit {

bool is_global_section(const EquivariantBundle& E, const Section& s) {
  const std::size_t m = E.rank();
  if (s.f.size() != m || s.g.size() != m) return false;
  LaurentMatrix f(m, 1), h(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (!s.f[i].is_polynomial() || !s.g[i].is_polynomial()) return false;
    f(i, 0) = s.f[i];
    h(i, 0) = s.g[i].reflected();
  }
  if (!(E.A * f == h)) return false;
  if (!s.weight) return true;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [d, c] : s.f[i].terms()) {
      if (monomial_weight(E, Chart::Zero, i, d) != *s.weight) return false;
    }
    for (const auto& [k, c] : s.g[i].terms()) {
      if (monomial_weight(E, Chart::Infinity, i, k) != *s.weight) return false;
    }
  }
  return true;
}

std::vector<Section> h0_sections(const EquivariantBundle& E) {
  require_valid(E);
  const std::size_t m = E.rank();
  const int o = E.A.min_exponent();
  if (o > 0) return {};

  const LaurentPoly det = mat_det(E.A);
  const int dt = det.ord();
  const Rational det_coeff = det.leading_coeff();
  const LaurentMatrix adj = mat_adjugate(E.A);

  // Unknowns h[i][e], e in [o, 0].
  const std::size_t span = static_cast<std::size_t>(-o) + 1;
  auto unknown = [&](std::size_t i, int e) { return i * span + static_cast<std::size_t>(e - o); };

  // Coefficient of z^t (t < dt) in row r of adj(A) h must vanish.
  std::map<std::pair<std::size_t, int>, std::map<std::size_t, Rational>> constraints;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& [d, c] : adj(r, i).terms()) {
        for (int e = o; e <= 0; ++e) {
          if (d + e < dt) constraints[{r, d + e}][unknown(i, e)] += c;
        }
      }
    }
  }

  std::map<Weight, std::vector<std::size_t>> classes;
  std::vector<Weight> weight_of(m * span);
  for (std::size_t i = 0; i < m; ++i) {
    for (int e = o; e <= 0; ++e) {
      const Weight w = monomial_weight(E, Chart::Infinity, i, -e);
      weight_of[unknown(i, e)] = w;
      classes[w].push_back(unknown(i, e));
    }
  }

  const LaurentPoly normalizer = LaurentPoly::monomial(1 / det_coeff, -dt);
  std::vector<Section> sections;
  for (const auto& [w, cols] : classes) {
    std::map<std::size_t, std::size_t> local;
    for (std::size_t k = 0; k < cols.size(); ++k) local.emplace(cols[k], k);

    std::vector<const std::map<std::size_t, Rational>*> rows;
    for (const auto& [key, row] : constraints) {
      for (const auto& [col, v] : row) {
        if (v != 0 && local.count(col)) {
          rows.push_back(&row);
          break;
        }
      }
    }
    RationalMatrix M(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (const auto& [col, v] : *rows[r]) {
        auto it = local.find(col);
        if (it != local.end()) M(r, it->second) = v;
      }
    }

    for (const auto& v : solve_rational_kernel(M)) {
      LaurentMatrix h(m, 1);
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (v[k] == 0) continue;
        const std::size_t i = cols[k] / span;
        const int e = static_cast<int>(cols[k] % span) + o;
        h(i, 0).add_term(v[k], e);
      }
      const LaurentMatrix f = normalizer * (adj * h);
      Section s;
      for (std::size_t i = 0; i < m; ++i) {
        s.f.push_back(f(i, 0));
        s.g.push_back(h(i, 0).reflected());
      }
      s.weight = w;
      sections.push_back(std::move(s));
    }
  }
  return sections;
}

std::size_t h0_dimension(const EquivariantBundle& E) { return h0_sections(E).size(); }

Character h0_character(const EquivariantBundle& E) {
  Character chi;
  for (const auto& s : h0_sections(E)) chi.add(*s.weight);
  return chi;
}

CechResult cech_window(const EquivariantBundle& E, int window) {
  require_valid(E);
  if (window < 0) throw std::invalid_argument("cech_window: negative window");
  const std::size_t m = E.rank();
  const LaurentMatrix inverse = mat_inverse(E.A);
  // Every element of (image of C^0) that lands inside the overlap window has
  // a preimage with exponents at most window + pad.
  const int pad = E.A.max_abs_exponent() + inverse.max_abs_exponent();
  const int top = window + pad;

  // Overlap coordinate (i, t) in the chart-infinity frame.
  const int lowest = -top;
  const std::size_t stride = static_cast<std::size_t>(2 * top + E.A.max_abs_exponent()) + 1;
  auto coord = [&](std::size_t i, int t) { return i * stride + static_cast<std::size_t>(t - lowest); };
  auto inside = [&](int t) { return t >= -window && t <= window; };

  struct ClassData {
    std::vector<SparseEchelon::SparseVector> columns;
    std::int64_t window_coords = 0;
  };
  std::map<Weight, ClassData> classes;

  for (std::size_t j = 0; j < m; ++j) {
    for (int e = 0; e <= top; ++e) {
      SparseEchelon::SparseVector col;
      for (std::size_t i = 0; i < m; ++i) {
        for (const auto& [d, c] : E.A(i, j).terms()) col[coord(i, d + e)] += c;
      }
      classes[monomial_weight(E, Chart::Zero, j, e)].columns.push_back(std::move(col));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (int k = 0; k <= top; ++k) {
      SparseEchelon::SparseVector col;
      col[coord(i, -k)] = -1;
      classes[monomial_weight(E, Chart::Infinity, i, k)].columns.push_back(std::move(col));
    }
    for (int t = -window; t <= window; ++t) {
      classes[monomial_weight(E, Chart::Infinity, i, -t)].window_coords += 1;
    }
  }

  CechResult result;
  result.window = window;
  for (auto& [w, data] : classes) {
    SparseEchelon full, outside;
    for (auto& col : data.columns) {
      SparseEchelon::SparseVector out;
      for (const auto& [key, v] : col) {
        const int t = static_cast<int>(key % stride) + lowest;
        if (!inside(t)) out.emplace(key, v);
      }
      full.insert(std::move(col));
      outside.insert(std::move(out));
    }
    const auto rank_full = static_cast<std::int64_t>(full.rank());
    const auto rank_out = static_cast<std::int64_t>(outside.rank());
    result.kernel.add(w, static_cast<std::int64_t>(data.columns.size()) - rank_full);
    result.cokernel.add(w, data.window_coords - (rank_full - rank_out));
  }
  return result;
}

namespace {

int window_cap(int initial, const CechOptions& options) {
  if (options.max_window > 0) return options.max_window;
  if (const char* env = std::getenv("EQUISPLIT_MAX_WINDOW")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 64 * initial;
}

}  // namespace

CechResult cech_cohomology(const EquivariantBundle& E, const CechOptions& options) {
  require_valid(E);
  const int initial = E.A.max_abs_exponent() + static_cast<int>(E.rank());
  const int cap = window_cap(initial, options);
  const std::int64_t euler = degree(E) + static_cast<std::int64_t>(E.rank());

  CechResult previous = cech_window(E, initial);
  for (int w = 2 * initial; w <= cap; w *= 2) {
    CechResult current = cech_window(E, w);
    const bool agree = current.kernel == previous.kernel && current.cokernel == previous.cokernel;
    if (agree && current.kernel.dimension() - current.cokernel.dimension() == euler) return current;
    previous = std::move(current);
  }
  throw std::runtime_error("Cech complex did not stabilize within window " + std::to_string(cap));
}

Character h1_character(const EquivariantBundle& E, const CechOptions& options) {
  return cech_cohomology(E, options).cokernel;
}

EulerReport euler_check(const EquivariantBundle& E, const CechOptions& options) {
  EulerReport r;
  r.rank = E.rank();
  r.degree = degree(E);
  r.h0 = static_cast<std::int64_t>(h0_dimension(E));
  r.h1 = h1_character(E, options).dimension();
  r.serre_dual_h0 = static_cast<std::int64_t>(
      h0_dimension(twist(hom_bundle(E, trivial_line(E.torus)), -2, Weight::zero(E.torus.rank()))));
  r.riemann_roch = r.h0 - r.h1 == r.degree + static_cast<std::int64_t>(r.rank);
  r.serre_duality = r.h1 == r.serre_dual_h0;
  return r;
}

Character line_h0_character(const LineSummand& s, const TorusAction& torus) {
  Character chi;
  for (int d = 0; d <= s.n; ++d) chi.add(s.lam - static_cast<std::int64_t>(d) * torus.a);
  return chi;
}

Character line_h1_character(const LineSummand& s, const TorusAction& torus) {
  Character chi;
  for (int d = s.n + 1; d < 0; ++d) chi.add(s.lam - static_cast<std::int64_t>(d) * torus.a);
  return chi;
}

}  // namespace equisplit
