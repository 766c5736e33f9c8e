#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "equisplit/laurent.hpp"
#include "equisplit/weight.hpp"

namespace equisplit {

// Torus T of rank r acting on P^1 through the diagonal character with
// exponent vector `a`. r == 0 is the plain (non-equivariant) setting.
struct TorusAction {
  Weight a;

  std::size_t rank() const { return a.size(); }
  bool acts_trivially() const { return a.is_zero(); }
  friend bool operator==(const TorusAction&, const TorusAction&) = default;
};

// Rank-m equivariant bundle on P^1 given by its transition matrix and the
// torus weights of the two chart frames.
//
// Chart conventions used throughout:
//   * a global section is (f, g) with f in k[z]^m, g in k[w]^m, w = 1/z,
//     and g(1/z) = A(z) f(z);
//   * O(n) has transition z^{-n}, so H^0(O(n)) = span{1, z, ..., z^n};
//   * the monomial z^d in component i has weight lambda0[i] - d*a on chart 0,
//     and w^j in component i has weight lambdaInf[i] + j*a on chart infinity.
// Equivariance then requires every monomial c*z^d of A(i, j) to satisfy
// d*a == lambdaInf[i] - lambda0[j].
struct EquivariantBundle {
  LaurentMatrix A;
  std::vector<Weight> lambda0;
  std::vector<Weight> lambdaInf;
  TorusAction torus;

  std::size_t rank() const { return A.rows(); }
  friend bool operator==(const EquivariantBundle&, const EquivariantBundle&) = default;
};

// O(n) with chart-0 linearization weight `lam`.
struct LineSummand {
  int n = 0;
  Weight lam;

  // Chart-infinity weight forced by the transition z^{-n}.
  Weight lam_inf(const TorusAction& torus) const { return lam - static_cast<std::int64_t>(n) * torus.a; }

  friend bool operator==(const LineSummand&, const LineSummand&) = default;
  friend auto operator<=>(const LineSummand&, const LineSummand&) = default;
};

struct Violation {
  enum class Kind { Shape, WeightLength, Determinant, Equivariance };
  Kind kind;
  std::size_t row = 0;
  std::size_t col = 0;
  int exponent = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const EquivariantBundle& E);

// Throws std::invalid_argument carrying the first violation.
void require_valid(const EquivariantBundle& E);

// -(exponent of z in det A). Throws std::domain_error if det A is not a
// nonzero monomial.
int degree(const EquivariantBundle& E);

// E tensored with O(n) linearized by chart-0 weight lam.
EquivariantBundle twist(const EquivariantBundle& E, int n, const Weight& lam);

EquivariantBundle dual(const EquivariantBundle& E);
EquivariantBundle direct_sum(const EquivariantBundle& E, const EquivariantBundle& F);

// Hom(E, F) = dual(E) (x) F. Frame index p*rank(F) + q pairs frame vector p
// of E with q of F; a section of it is the column-major flattening of the
// rank(F) x rank(E) chart-0 matrix of a bundle map E -> F.
EquivariantBundle hom_bundle(const EquivariantBundle& E, const EquivariantBundle& F);

// diag(z^{-n_i}) with the summands' weights.
EquivariantBundle split_bundle(const std::vector<LineSummand>& summands, const TorusAction& torus);

// Trivial rank-1 bundle with weight zero.
EquivariantBundle trivial_line(const TorusAction& torus);

}  // namespace equisplit
