#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equisplit/bundle.hpp"
#include "equisplit/equivariant.hpp"

namespace equisplit {

// A global section: f over k[z] in the chart-0 frame, g over k[w] in the
// chart-infinity frame (stored with w-exponents), g(1/z) == A(z) f(z).
struct Section {
  std::vector<LaurentPoly> f;
  std::vector<LaurentPoly> g;
  std::optional<Weight> weight;  // set iff the section is a weight vector
};

// Compatibility, polynomiality, and (when weighted) homogeneity.
bool is_global_section(const EquivariantBundle& E, const Section& s);

// Basis of H^0(E), grouped by weight class in increasing weight order;
// within a class, kernel vectors in echelon order. Every returned section
// carries its weight (the empty weight when the torus has rank 0).
//
// Writing h(z) = g(1/z) = A f, the exponents of h lie in [o, 0] where o is
// the lowest exponent of A, and f = det(A)^{-1} adj(A) h is polynomial iff
// the coefficients of z^e, e < ord det(A), in adj(A) h vanish. That finite
// linear system is solved one weight class at a time.
std::vector<Section> h0_sections(const EquivariantBundle& E);
std::size_t h0_dimension(const EquivariantBundle& E);
Character h0_character(const EquivariantBundle& E);

struct CechOptions {
  // Largest overlap window tried; 0 means 64 * initial window, or the value
  // of EQUISPLIT_MAX_WINDOW when that is set.
  int max_window = 0;
};

struct CechResult {
  Character kernel;    // H^0 as the kernel of C^0 -> C^1
  Character cokernel;  // H^1
  int window = 0;      // overlap window [-W, W] at which the result stabilized
};

// Truncated Cech complex C^0 -> C^1, (f, g) |-> A f - g(1/z), evaluated for
// a single overlap window [-W, W].
CechResult cech_window(const EquivariantBundle& E, int window);

// Doubles the window from max|exp A| + rank until two consecutive windows
// agree and h0 - h1 == degree + rank. Throws std::runtime_error if the cap
// is reached first.
CechResult cech_cohomology(const EquivariantBundle& E, const CechOptions& options = {});

Character h1_character(const EquivariantBundle& E, const CechOptions& options = {});

struct EulerReport {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  int degree = 0;
  std::size_t rank = 0;
  std::int64_t serre_dual_h0 = 0;  // h0(dual(E) (x) O(-2))
  bool riemann_roch = false;       // h0 - h1 == degree + rank
  bool serre_duality = false;      // h1 == serre_dual_h0
  bool ok() const { return riemann_roch && serre_duality; }
};

EulerReport euler_check(const EquivariantBundle& E, const CechOptions& options = {});

// Closed forms for O(n) with chart-0 weight lam:
// H^0 = {lam - d*a : 0 <= d <= n}, H^1 = {lam - d*a : n < d < 0}.
Character line_h0_character(const LineSummand& s, const TorusAction& torus);
Character line_h1_character(const LineSummand& s, const TorusAction& torus);

}  // namespace equisplit
