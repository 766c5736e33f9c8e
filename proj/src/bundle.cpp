#include "equisplit/bundle.hpp"

#include <sstream>
#include <stdexcept>

namespace equisplit {

namespace {

std::string describe_monomial(std::size_t i, std::size_t j, int d) {
  std::ostringstream os;
  os << "entry (" << i + 1 << "," << j + 1 << "), monomial z^" << d;
  return os.str();
}

}  // namespace

ValidationReport validate(const EquivariantBundle& E) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::size_t i, std::size_t j, int d, std::string msg) {
    report.violations.push_back({kind, i, j, d, std::move(msg)});
  };

  const std::size_t m = E.A.rows();
  if (!E.A.is_square() || m == 0) {
    add(Violation::Kind::Shape, 0, 0, 0, "transition matrix must be square and nonempty");
    return report;
  }
  if (E.lambda0.size() != m || E.lambdaInf.size() != m) {
    add(Violation::Kind::Shape, 0, 0, 0, "need one weight per frame vector on each chart");
    return report;
  }
  const std::size_t r = E.torus.rank();
  bool lengths_ok = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (E.lambda0[i].size() != r) {
      add(Violation::Kind::WeightLength, i, 0, 0, "lambda0[" + std::to_string(i + 1) + "] has wrong length");
      lengths_ok = false;
    }
    if (E.lambdaInf[i].size() != r) {
      add(Violation::Kind::WeightLength, i, 0, 0, "lambdaInf[" + std::to_string(i + 1) + "] has wrong length");
      lengths_ok = false;
    }
  }

  const LaurentPoly det = mat_det(E.A);
  if (!det.is_monomial()) {
    add(Violation::Kind::Determinant, 0, 0, 0,
        "det A = " + det.to_string() + " is not a nonzero monomial");
  }

  if (!lengths_ok || r == 0) return report;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Weight expected = E.lambdaInf[i] - E.lambda0[j];
      for (const auto& [d, c] : E.A(i, j).terms()) {
        if (static_cast<std::int64_t>(d) * E.torus.a != expected) {
          add(Violation::Kind::Equivariance, i, j, d,
              describe_monomial(i, j, d) + " violates d*a = lambdaInf[i] - lambda0[j]");
        }
      }
    }
  }
  return report;
}

void require_valid(const EquivariantBundle& E) {
  const auto report = validate(E);
  if (!report.ok()) throw std::invalid_argument("invalid bundle: " + report.violations.front().message);
}

int degree(const EquivariantBundle& E) {
  const LaurentPoly det = mat_det(E.A);
  if (!det.is_monomial()) throw std::domain_error("det A is not a nonzero monomial");
  return -det.ord();
}

EquivariantBundle twist(const EquivariantBundle& E, int n, const Weight& lam) {
  EquivariantBundle out = E;
  out.A = E.A.shifted(-n);
  const Weight inf_shift = lam - static_cast<std::int64_t>(n) * E.torus.a;
  for (auto& w : out.lambda0) w += lam;
  for (auto& w : out.lambdaInf) w += inf_shift;
  return out;
}

EquivariantBundle dual(const EquivariantBundle& E) {
  EquivariantBundle out;
  out.A = mat_inverse(E.A).transposed();
  out.torus = E.torus;
  for (const auto& w : E.lambda0) out.lambda0.push_back(-w);
  for (const auto& w : E.lambdaInf) out.lambdaInf.push_back(-w);
  return out;
}

EquivariantBundle direct_sum(const EquivariantBundle& E, const EquivariantBundle& F) {
  if (!(E.torus == F.torus)) throw std::invalid_argument("direct_sum: torus mismatch");
  EquivariantBundle out;
  out.A = block_diagonal(E.A, F.A);
  out.torus = E.torus;
  out.lambda0 = E.lambda0;
  out.lambda0.insert(out.lambda0.end(), F.lambda0.begin(), F.lambda0.end());
  out.lambdaInf = E.lambdaInf;
  out.lambdaInf.insert(out.lambdaInf.end(), F.lambdaInf.begin(), F.lambdaInf.end());
  return out;
}

EquivariantBundle hom_bundle(const EquivariantBundle& E, const EquivariantBundle& F) {
  if (!(E.torus == F.torus)) throw std::invalid_argument("hom_bundle: torus mismatch");
  const EquivariantBundle Ed = dual(E);
  EquivariantBundle out;
  out.A = kronecker(Ed.A, F.A);
  out.torus = E.torus;
  for (std::size_t p = 0; p < E.rank(); ++p) {
    for (std::size_t q = 0; q < F.rank(); ++q) {
      out.lambda0.push_back(Ed.lambda0[p] + F.lambda0[q]);
      out.lambdaInf.push_back(Ed.lambdaInf[p] + F.lambdaInf[q]);
    }
  }
  return out;
}

EquivariantBundle split_bundle(const std::vector<LineSummand>& summands, const TorusAction& torus) {
  EquivariantBundle out;
  std::vector<LaurentPoly> diag;
  for (const auto& s : summands) {
    if (s.lam.size() != torus.rank()) throw std::invalid_argument("summand weight length mismatch");
    diag.push_back(LaurentPoly::monomial(1, -s.n));
    out.lambda0.push_back(s.lam);
    out.lambdaInf.push_back(s.lam_inf(torus));
  }
  out.A = LaurentMatrix::diagonal(diag);
  out.torus = torus;
  return out;
}

EquivariantBundle trivial_line(const TorusAction& torus) {
  return split_bundle({LineSummand{0, Weight::zero(torus.rank())}}, torus);
}

}  // namespace equisplit
