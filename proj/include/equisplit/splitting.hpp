#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "equisplit/bundle.hpp"
#include "equisplit/cohomology.hpp"
#include "equisplit/equivariant.hpp"

namespace equisplit {

// One induction step: the top-degree equivariant line subbundle L and the
// quotient E/L, in the frame where the transition is block upper-triangular:
//   V(1/z) * A * U^{-1} = [[z^{-n}, beta], [0, quotient.A]].
struct PeelStep {
  LineSummand summand;
  LaurentMatrix U;     // over k[z], constant nonzero determinant
  LaurentMatrix V;     // over k[w] (w-exponents), constant nonzero determinant
  LaurentMatrix beta;  // 1 x (m-1) extension data
  EquivariantBundle quotient;
  EquivariantBundle framed;  // E in the new frame, quotient in the lower block
};

// Chart matrices of an isomorphism from the split bundle to E:
//   MInf(1/z) * A * M0 == diag(z^{-n_i}).
struct SplittingCertificate {
  std::vector<LineSummand> summands;  // non-increasing degree
  LaurentMatrix M0;                   // over k[z]
  LaurentMatrix MInf;                 // over k[w] (w-exponents)
};

struct SplitResult {
  std::vector<LineSummand> summands;
  SplittingCertificate certificate;
  std::vector<PeelStep> steps;
};

// Largest n with h^0(E(-n)) > 0.
int max_twist(const EquivariantBundle& E);

// First basis vector of the lexicographically smallest nonempty weight class
// of H^0(E). Throws std::domain_error when H^0(E) = 0.
Section eigen_section(const EquivariantBundle& E);

PeelStep peel(const EquivariantBundle& E);

struct TriangularClearing {
  LaurentMatrix W0;     // over k[z], unipotent upper-triangular
  LaurentMatrix W0inv;  // its inverse
  LaurentMatrix WInf;   // over k[w] (w-exponents), unipotent upper-triangular
};

// For R upper-triangular with diagonal z^{-n_1}, ..., z^{-n_m} and
// n_1 >= ... >= n_m: WInf(1/z) * R * W0^{-1} == diag(z^{-n_i}).
// Throws std::invalid_argument if R does not have that shape.
TriangularClearing triangular_clear(const EquivariantBundle& R);

SplitResult equivariant_split(const EquivariantBundle& E);

struct CertificateReport {
  bool product = false;        // (i) MInf * A * M0 == diag(z^{-n_i})
  bool determinants = false;   // (ii) polynomial frames with nonzero constant determinants
  bool equivariance = false;   // (iii) weight law for every monomial of M0 and MInf
  bool degrees = false;        // (iv) sorted degrees summing to deg E
  bool infinity_weights = false;  // (v) chart-infinity weights are lam_i - n_i*a
  std::vector<std::string> notes;

  bool ok() const { return product && determinants && equivariance && degrees && infinity_weights; }
};

CertificateReport verify_certificate(const EquivariantBundle& E, const SplittingCertificate& cert);

struct SplittingMaps {
  HomElement s;  // split bundle -> E
  HomElement p;  // E -> split bundle
};

// Throws std::invalid_argument if the certificate does not verify.
SplittingMaps splitting_hom(const EquivariantBundle& E, const SplittingCertificate& cert);

struct InvariantLiftReport {
  std::size_t source_dim = 0;  // dim Hom(Q, E)^T
  std::size_t target_dim = 0;  // dim Hom(Q, Q)^T
  std::size_t image_rank = 0;  // rank of composition with E -> Q
  bool surjective() const { return image_rank == target_dim; }
};

// Rank of Hom(Q, E)^T -> Hom(Q, Q)^T, h |-> (E -> Q) o h, for the quotient
// Q of a peel step.
InvariantLiftReport invariant_lift(const PeelStep& step);

}  // namespace equisplit
