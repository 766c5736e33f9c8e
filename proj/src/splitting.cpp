#include "equisplit/splitting.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "equisplit/errors.hpp"
#include "equisplit/linalg.hpp"

namespace equisplit {

namespace {

int ceil_div(int a, int b) {
  const int q = a / b;
  return (a % b != 0 && ((a > 0) == (b > 0))) ? q + 1 : q;
}

// Weights of the new frame after a change of frame M (new = M * old) on the
// given chart, read off from the monomials of M; throws if M is not
// homogeneous row by row.
std::vector<Weight> row_weights(const LaurentMatrix& M, const std::vector<Weight>& old,
                                const TorusAction& torus, Chart chart, const char* what) {
  std::vector<Weight> out;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    std::optional<Weight> w;
    for (std::size_t j = 0; j < M.cols(); ++j) {
      for (const auto& [e, c] : M(i, j).terms()) {
        const Weight step = static_cast<std::int64_t>(e) * torus.a;
        Weight candidate = chart == Chart::Zero ? old[j] + step : old[j] - step;
        if (!w) {
          w = std::move(candidate);
        } else if (*w != candidate) {
          raise_invariant(std::string(what) + " is not equivariant (row " + std::to_string(i + 1) + ")");
        }
      }
    }
    if (!w) raise_invariant(std::string(what) + " has a zero row");
    out.push_back(std::move(*w));
  }
  return out;
}

EquivariantBundle sub_bundle(const EquivariantBundle& E, std::size_t from) {
  const std::size_t m = E.rank();
  EquivariantBundle out;
  out.A = E.A.block(from, from, m - from, m - from);
  out.lambda0.assign(E.lambda0.begin() + static_cast<std::ptrdiff_t>(from), E.lambda0.end());
  out.lambdaInf.assign(E.lambdaInf.begin() + static_cast<std::ptrdiff_t>(from), E.lambdaInf.end());
  out.torus = E.torus;
  return out;
}

}  // namespace

int max_twist(const EquivariantBundle& E) {
  require_valid(E);
  const int m = static_cast<int>(E.rank());
  const int top = -E.A.min_exponent();
  const int bottom = ceil_div(degree(E), m);
  const Weight zero = Weight::zero(E.torus.rank());
  for (int k = top; k >= bottom; --k) {
    if (h0_dimension(twist(E, -k, zero)) > 0) return k;
  }
  raise_invariant("max_twist: no sections found down to ceil(deg/rank)");
}

Section eigen_section(const EquivariantBundle& E) {
  auto sections = h0_sections(E);
  if (sections.empty()) throw std::domain_error("eigen_section: H^0(E) = 0");
  return std::move(sections.front());
}

PeelStep peel(const EquivariantBundle& E) {
  require_valid(E);
  const std::size_t m = E.rank();
  const TorusAction& torus = E.torus;
  const int n1 = max_twist(E);
  const Section sigma = eigen_section(twist(E, -n1, Weight::zero(torus.rank())));

  // A nonzero section of E(-n1) vanishes nowhere: its chart vectors are unimodular.
  const ExtGcdResult u = poly_ext_gcd(sigma.f);
  if (u.gcd != LaurentPoly(1)) raise_invariant("section vanishes on chart 0 (gcd " + u.gcd.to_string() + ")");
  const ExtGcdResult v = poly_ext_gcd(sigma.g);
  if (v.gcd != LaurentPoly(1)) {
    raise_invariant("section vanishes on chart infinity (gcd " + v.gcd.to_string('w') + ")");
  }

  PeelStep step;
  step.U = u.U;
  step.V = v.U;
  const std::vector<Weight> mu0 = row_weights(step.U, E.lambda0, torus, Chart::Zero, "chart-0 frame");
  const std::vector<Weight> muInf = row_weights(step.V, E.lambdaInf, torus, Chart::Infinity, "chart-infinity frame");

  const LaurentMatrix B = step.V.reflected() * E.A * mat_inverse(step.U);
  if (B(0, 0) != LaurentPoly::monomial(1, -n1)) raise_invariant("peel: leading entry is not z^{-n1}");
  for (std::size_t i = 1; i < m; ++i) {
    if (!B(i, 0).is_zero()) raise_invariant("peel: first column not cleared");
  }

  step.framed = EquivariantBundle{B, mu0, muInf, torus};
  if (!validate(step.framed).ok()) raise_invariant("peel: reframed bundle is not equivariant");
  step.summand = LineSummand{n1, mu0[0]};
  if (muInf[0] != step.summand.lam_inf(torus)) raise_invariant("peel: summand weights inconsistent");

  step.beta = B.block(0, 1, 1, m - 1);
  step.quotient = sub_bundle(step.framed, 1);
  return step;
}

TriangularClearing triangular_clear(const EquivariantBundle& R) {
  const std::size_t m = R.rank();
  if (!R.A.is_square()) throw std::invalid_argument("triangular_clear: non-square input");
  std::vector<int> n(m);
  for (std::size_t i = 0; i < m; ++i) {
    const LaurentPoly& d = R.A(i, i);
    if (!d.is_monomial() || d.leading_coeff() != 1) {
      throw std::invalid_argument("triangular_clear: diagonal entry is not a power of z");
    }
    n[i] = -d.ord();
    for (std::size_t j = 0; j < i; ++j) {
      if (!R.A(i, j).is_zero()) throw std::invalid_argument("triangular_clear: not upper-triangular");
    }
    if (i > 0 && n[i] > n[i - 1]) throw std::invalid_argument("triangular_clear: degrees not sorted");
  }

  LaurentMatrix work = R.A;
  TriangularClearing out{LaurentMatrix::identity(m), LaurentMatrix::identity(m), LaurentMatrix::identity(m)};
  for (std::size_t gap = 1; gap < m; ++gap) {
    for (std::size_t i = 0; i + gap < m; ++i) {
      const std::size_t j = i + gap;
      // beta + gamma z^{-n_i} + delta z^{-n_j} = 0 with gamma in k[z], delta in k[w].
      LaurentPoly gamma, delta;
      for (const auto& [e, c] : work(i, j).terms()) {
        if (e >= -n[i]) {
          gamma.add_term(-c, e + n[i]);
        } else {
          delta.add_term(-c, e + n[j]);
        }
      }
      if (!gamma.is_zero()) {
        for (std::size_t k = 0; k < m; ++k) {
          work(k, j) += gamma * work(k, i);
          out.W0inv(k, j) += gamma * out.W0inv(k, i);
        }
      }
      if (!delta.is_zero()) {
        const LaurentPoly delta_w = delta.reflected();
        for (std::size_t l = 0; l < m; ++l) {
          work(i, l) += delta * work(j, l);
          out.WInf(i, l) += delta_w * out.WInf(j, l);
        }
      }
      if (!work(i, j).is_zero()) raise_invariant("triangular_clear: entry not cleared");
    }
  }
  out.W0 = mat_inverse(out.W0inv);
  return out;
}

SplitResult equivariant_split(const EquivariantBundle& E) {
  require_valid(E);
  const std::size_t m = E.rank();
  const TorusAction& torus = E.torus;

  SplitResult result;
  LaurentMatrix U = LaurentMatrix::identity(m);
  LaurentMatrix V = LaurentMatrix::identity(m);
  EquivariantBundle current = E;
  for (std::size_t level = 0; level < m; ++level) {
    PeelStep step = peel(current);
    if (!result.summands.empty() && step.summand.n > result.summands.back().n) {
      raise_invariant("peel degrees increased along the recursion");
    }
    U = block_diagonal(LaurentMatrix::identity(level), step.U) * U;
    V = block_diagonal(LaurentMatrix::identity(level), step.V) * V;
    result.summands.push_back(step.summand);
    current = step.quotient;
    result.steps.push_back(std::move(step));
  }

  const LaurentMatrix Uinv = mat_inverse(U);
  EquivariantBundle R;
  R.A = V.reflected() * E.A * Uinv;
  R.torus = torus;
  for (const auto& s : result.summands) {
    R.lambda0.push_back(s.lam);
    R.lambdaInf.push_back(s.lam_inf(torus));
  }
  if (!validate(R).ok()) raise_invariant("triangularized bundle is not equivariant");

  TriangularClearing clearing;
  try {
    clearing = triangular_clear(R);
  } catch (const std::invalid_argument& e) {
    raise_invariant(std::string("triangularization failed: ") + e.what());
  }
  result.certificate.summands = result.summands;
  result.certificate.M0 = Uinv * clearing.W0inv;
  result.certificate.MInf = clearing.WInf * V;
  return result;
}

// The checker below deliberately avoids the bundle/cohomology code paths and
// works directly with Laurent arithmetic.
CertificateReport verify_certificate(const EquivariantBundle& E, const SplittingCertificate& cert) {
  CertificateReport report;
  const std::size_t m = E.A.rows();
  const std::size_t r = E.torus.a.size();
  auto shapes_ok = [&] {
    if (!E.A.is_square() || m == 0) return false;
    if (E.lambda0.size() != m || E.lambdaInf.size() != m || cert.summands.size() != m) return false;
    if (cert.M0.rows() != m || cert.M0.cols() != m || cert.MInf.rows() != m || cert.MInf.cols() != m) {
      return false;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (E.lambda0[i].size() != r || E.lambdaInf[i].size() != r || cert.summands[i].lam.size() != r) {
        return false;
      }
    }
    return true;
  };
  if (!shapes_ok()) {
    report.notes.push_back("shape mismatch between bundle and certificate");
    return report;
  }

  std::vector<LaurentPoly> diag;
  for (const auto& s : cert.summands) diag.push_back(LaurentPoly::monomial(1, -s.n));
  report.product = cert.MInf.reflected() * E.A * cert.M0 == LaurentMatrix::diagonal(diag);
  if (!report.product) report.notes.push_back("(i) MInf * A * M0 != diag(z^{-n_i})");

  auto constant_det = [](const LaurentMatrix& M) {
    if (!M.is_polynomial()) return false;
    const LaurentPoly d = mat_det(M);
    return !d.is_zero() && d.is_constant();
  };
  report.determinants = constant_det(cert.M0) && constant_det(cert.MInf);
  if (!report.determinants) report.notes.push_back("(ii) frame not polynomial with constant determinant");

  // (iii) M0 maps summand chart-0 coordinates to bundle coordinates; MInf
  // maps bundle chart-infinity coordinates to summand ones, so each row of
  // MInf carries one weight.
  report.equivariance = true;
  std::vector<std::optional<Weight>> inf_row_weight(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& [d, c] : cert.M0(i, j).terms()) {
        if (E.lambda0[i] - cert.summands[j].lam != static_cast<std::int64_t>(d) * E.torus.a) {
          report.equivariance = false;
        }
      }
      for (const auto& [k, c] : cert.MInf(i, j).terms()) {
        Weight w = E.lambdaInf[j] - static_cast<std::int64_t>(k) * E.torus.a;
        if (!inf_row_weight[i]) {
          inf_row_weight[i] = std::move(w);
        } else if (*inf_row_weight[i] != w) {
          report.equivariance = false;
        }
      }
    }
  }
  if (!report.equivariance) report.notes.push_back("(iii) frame monomial violates the weight law");

  const LaurentPoly det = mat_det(E.A);
  long total = 0;
  bool sorted = true;
  for (std::size_t i = 0; i < m; ++i) {
    total += cert.summands[i].n;
    if (i > 0 && cert.summands[i].n > cert.summands[i - 1].n) sorted = false;
  }
  report.degrees = sorted && det.is_monomial() && total == -det.ord();
  if (!report.degrees) report.notes.push_back("(iv) degrees unsorted or not summing to deg E");

  report.infinity_weights = true;
  for (std::size_t i = 0; i < m; ++i) {
    const Weight expected = cert.summands[i].lam - static_cast<std::int64_t>(cert.summands[i].n) * E.torus.a;
    if (!inf_row_weight[i] || *inf_row_weight[i] != expected) report.infinity_weights = false;
  }
  if (!report.infinity_weights) report.notes.push_back("(v) chart-infinity weights differ from lam_i - n_i*a");
  return report;
}

SplittingMaps splitting_hom(const EquivariantBundle& E, const SplittingCertificate& cert) {
  if (!verify_certificate(E, cert).ok()) throw std::invalid_argument("splitting_hom: certificate does not verify");
  const EquivariantBundle D = split_bundle(cert.summands, E.torus);
  SplittingMaps maps{{D, E, cert.M0, mat_inverse(cert.MInf)}, {E, D, mat_inverse(cert.M0), cert.MInf}};
  return maps;
}

InvariantLiftReport invariant_lift(const PeelStep& step) {
  InvariantLiftReport report;
  const EquivariantBundle& E = step.framed;
  const EquivariantBundle& Q = step.quotient;
  const std::size_t m = E.rank();
  if (m < 2) return report;
  const std::size_t q = m - 1;
  const Weight zero = Weight::zero(E.torus.rank());

  for (const auto& s : h0_sections(hom_bundle(Q, Q))) {
    if (*s.weight == zero) ++report.target_dim;
  }

  // In the framed coordinates E -> Q is the projection onto the last m-1
  // components on both charts. Image vectors are flattened over
  // (component, chart, exponent) for the rank count.
  SparseEchelon image;
  for (const auto& s : h0_sections(hom_bundle(Q, E))) {
    if (*s.weight != zero) continue;
    ++report.source_dim;
    const HomElement h = hom_from_section(Q, E, s.f, s.g);
    SparseEchelon::SparseVector flat;
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        const std::size_t slot = (i * q + j) * 2;
        for (const auto& [e, c] : h.F0(i + 1, j).terms()) {
          flat.emplace(slot + 2 * q * q * static_cast<std::size_t>(e), c);
        }
        for (const auto& [e, c] : h.FInf(i + 1, j).terms()) {
          flat.emplace(slot + 1 + 2 * q * q * static_cast<std::size_t>(e), c);
        }
      }
    }
    image.insert(std::move(flat));
  }
  report.image_rank = image.rank();
  return report;
}

}  // namespace equisplit
