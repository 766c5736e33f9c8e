#include "equisplit/acceptance.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>

#include "equisplit/cohomology.hpp"
#include "equisplit/errors.hpp"
#include "equisplit/random.hpp"
#include "equisplit/serialize.hpp"
#include "equisplit/splitting.hpp"

namespace equisplit {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

TorusAction draw_torus(std::mt19937_64& rng, std::size_t r) {
  std::vector<std::int64_t> a;
  for (std::size_t k = 0; k < r; ++k) a.push_back(uniform(rng, -2, 2));
  return TorusAction{Weight(std::move(a))};
}

std::vector<LineSummand> draw_summands(std::mt19937_64& rng, std::size_t m, const TorusAction& t, int max_degree) {
  std::vector<LineSummand> out;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::int64_t> lam;
    for (std::size_t k = 0; k < t.rank(); ++k) lam.push_back(uniform(rng, -2, 2));
    out.push_back({uniform(rng, -max_degree, max_degree), Weight(std::move(lam))});
  }
  return out;
}

struct Shape {
  int max_rank = 5;
  int max_torus_rank = 2;
  int max_ops = 10;
  int max_degree = 3;
};

RandomInstance draw_instance(std::mt19937_64& rng, const Shape& shape) {
  const auto r = static_cast<std::size_t>(uniform(rng, 0, shape.max_torus_rank));
  const TorusAction t = draw_torus(rng, r);
  const auto m = static_cast<std::size_t>(uniform(rng, 1, shape.max_rank));
  const auto summands = draw_summands(rng, m, t, shape.max_degree);
  return random_instance(rng(), summands, t, uniform(rng, 0, shape.max_ops));
}

std::vector<LineSummand> sorted(std::vector<LineSummand> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> degree_multiset(const std::vector<LineSummand>& v) {
  std::vector<int> out;
  for (const auto& s : v) out.push_back(s.n);
  std::sort(out.begin(), out.end());
  return out;
}

// Tallies a property over many cases; the first failure is kept for the report.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (ok) return;
    if (failures_++ == 0) first_ = describe();
  }
  void error(const std::string& what) {
    ++cases_;
    if (failures_++ == 0) first_ = what;
  }
  CriterionResult result(int id, std::string name, const std::string& extra = "") const {
    std::ostringstream detail;
    detail << cases_ - failures_ << "/" << cases_ << " cases";
    if (!extra.empty()) detail << ", " << extra;
    if (failures_ > 0) detail << "; first failure: " << first_;
    return {id, std::move(name), cases_ > 0 && failures_ == 0, detail.str()};
  }

 private:
  int cases_ = 0;
  int failures_ = 0;
  std::string first_;
};

std::string describe(const EquivariantBundle& E) { return bundle_to_json(E).dump(); }

template <typename F>
void guarded(Tally& tally, const EquivariantBundle& E, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    tally.error(std::string(e.what()) + " on " + describe(E));
  }
}

Character summand_character(const std::vector<LineSummand>& summands, const TorusAction& t, bool h1) {
  Character chi;
  for (const auto& s : summands) chi = chi + (h1 ? line_h1_character(s, t) : line_h0_character(s, t));
  return chi;
}

struct Criterion1Data {
  std::vector<EquivariantBundle> bundles;
  std::vector<SplitResult> results;
};

CriterionResult round_trip(std::uint64_t seed, Criterion1Data& data) {
  std::mt19937_64 rng(seed);
  Tally tally;
  for (int k = 0; k < 200; ++k) {
    const auto inst = draw_instance(rng, Shape{});
    guarded(tally, inst.bundle, [&] {
      auto result = equivariant_split(inst.bundle);
      const auto report = verify_certificate(inst.bundle, result.certificate);
      tally.check(sorted(result.summands) == sorted(inst.expected) && report.ok(),
                  [&] { return "summand or certificate mismatch on " + describe(inst.bundle); });
      data.bundles.push_back(inst.bundle);
      data.results.push_back(std::move(result));
    });
  }
  return tally.result(1, "equivariant splitting round trip");
}

CriterionResult uniqueness(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally tally;
  const Shape shape{5, 0, 10, 3};
  for (int k = 0; k < 100; ++k) {
    const auto inst = draw_instance(rng, shape);
    const auto reframed = reframe(inst.bundle, rng(), uniform(rng, 1, 10));
    guarded(tally, inst.bundle, [&] {
      const auto a = degree_multiset(equivariant_split(inst.bundle).summands);
      const auto b = degree_multiset(equivariant_split(reframed).summands);
      tally.check(a == b && a == degree_multiset(inst.expected),
                  [&] { return "splitting type changed under reframing of " + describe(inst.bundle); });
    });
  }
  return tally.result(2, "splitting type invariant under reframing");
}

CriterionResult riemann_roch(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally tally;
  int plain = 0, fixed_base = 0;
  for (int k = 0; k < 500; ++k) {
    const auto inst = draw_instance(rng, Shape{});
    if (inst.bundle.torus.rank() == 0) ++plain;
    else if (inst.bundle.torus.acts_trivially()) ++fixed_base;
    guarded(tally, inst.bundle, [&] {
      const auto cech = cech_cohomology(inst.bundle);
      const std::int64_t lhs = cech.kernel.dimension() - cech.cokernel.dimension();
      const std::int64_t rhs = degree(inst.bundle) + static_cast<std::int64_t>(inst.bundle.rank());
      tally.check(lhs == rhs, [&] { return "h0 - h1 != degree + rank on " + describe(inst.bundle); });
    });
  }
  return tally.result(3, "Riemann-Roch",
                      std::to_string(plain) + " without torus, " + std::to_string(fixed_base) + " with a = 0");
}

CriterionResult characters(const Criterion1Data& data) {
  Tally tally;
  for (std::size_t k = 0; k < data.bundles.size(); ++k) {
    const auto& E = data.bundles[k];
    guarded(tally, E, [&] {
      const auto& s = data.results[k].summands;
      const bool h0 = h0_character(E) == summand_character(s, E.torus, false);
      const bool h1 = h1_character(E) == summand_character(s, E.torus, true);
      tally.check(h0 && h1, [&] { return "character mismatch on " + describe(E); });
    });
  }
  return tally.result(4, "cohomology characters match split summands");
}

CriterionResult oracle_equivalence(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally tally;
  for (int k = 0; k < 100; ++k) {
    const auto inst = draw_instance(rng, Shape{4, 2, 10, 3});
    guarded(tally, inst.bundle, [&] {
      const auto adjugate = h0_character(inst.bundle);
      const auto cech = cech_cohomology(inst.bundle).kernel;
      tally.check(adjugate == cech && static_cast<std::int64_t>(h0_dimension(inst.bundle)) == cech.dimension(),
                  [&] { return "adjugate and Cech H^0 differ on " + describe(inst.bundle); });
    });
  }
  return tally.result(5, "adjugate H^0 equals Cech kernel");
}

CriterionResult invariant_lifts(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally tally;
  int steps = 0;
  for (int attempt = 0; steps < 50 && attempt < 1000; ++attempt) {
    const auto inst = draw_instance(rng, Shape{3, 2, 8, 2});
    if (inst.bundle.rank() < 2) continue;
    guarded(tally, inst.bundle, [&] {
      for (const auto& step : equivariant_split(inst.bundle).steps) {
        if (step.quotient.rank() == 0 || steps == 50) continue;
        ++steps;
        const auto report = invariant_lift(step);
        tally.check(report.target_dim > 0 && report.surjective(), [&] {
          return "rank " + std::to_string(report.image_rank) + " < " + std::to_string(report.target_dim) + " on " +
                 describe(inst.bundle);
        });
      }
    });
  }
  return tally.result(6, "invariant homs lift through the quotient");
}

CriterionResult fixtures(const std::string& dir) {
  Tally tally;
  namespace fs = std::filesystem;
  std::vector<fs::path> cases;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_directory()) cases.push_back(entry.path());
  }
  std::sort(cases.begin(), cases.end());
  if (ec) tally.error("cannot read fixture directory " + dir);
  for (const auto& path : cases) {
    const std::string name = path.filename().string();
    try {
      const auto E = instance_from_json(read_json_file((path / "instance.json").string())).bundle;
      const Json expected = read_json_file((path / "expected.json").string());
      const auto cech = cech_cohomology(E);
      const auto h0 = h0_character(E);
      const auto split = equivariant_split(E);
      bool ok = h0 == cech.kernel && verify_certificate(E, split.certificate).ok();
      ok = ok && summand_character(split.summands, E.torus, false) == h0;
      ok = ok && summand_character(split.summands, E.torus, true) == cech.cokernel;
      if (expected.contains("h0")) ok = ok && expected["h0"].get<std::int64_t>() == h0.dimension();
      if (expected.contains("h1")) ok = ok && expected["h1"].get<std::int64_t>() == cech.cokernel.dimension();
      if (expected.contains("h0_character")) ok = ok && character_from_json(expected["h0_character"]) == h0;
      if (expected.contains("h1_character")) ok = ok && character_from_json(expected["h1_character"]) == cech.cokernel;
      if (expected.contains("summands")) {
        ok = ok && sorted(summands_from_json(expected["summands"], E.torus.rank())) == sorted(split.summands);
      }
      tally.check(ok, [&] { return "fixture " + name + " disagrees"; });
    } catch (const std::exception& e) {
      tally.error("fixture " + name + ": " + e.what());
    }
  }
  return tally.result(7, "golden fixtures");
}

CriterionResult mutations(std::uint64_t seed, const Criterion1Data& data) {
  std::mt19937_64 rng(seed);
  Tally tally;
  for (std::size_t k = 0; k < data.bundles.size(); ++k) {
    const auto& E = data.bundles[k];
    for (int chart = 0; chart < 2; ++chart) {
      auto cert = data.results[k].certificate;
      LaurentMatrix& M = chart == 0 ? cert.M0 : cert.MInf;
      const std::size_t i = rng() % M.rows(), j = rng() % M.cols();
      LaurentPoly& entry = M(i, j);
      if (!entry.is_zero() && rng() % 2 == 0) {
        // Change the coefficient of an existing monomial.
        const auto it = std::next(entry.terms().begin(), static_cast<long>(rng() % entry.term_count()));
        entry.add_term(Rational(1), it->first);
      } else {
        entry.add_term(multiplier_pool()[rng() % multiplier_pool().size()], uniform(rng, 0, 3));
      }
      if (cert.M0 == data.results[k].certificate.M0 && cert.MInf == data.results[k].certificate.MInf) continue;
      tally.check(!verify_certificate(E, cert).ok(), [&] { return "tampered certificate accepted for " + describe(E); });
    }
  }
  return tally.result(9, "tampered certificates rejected");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  const std::uint64_t base = options.seed;
  const std::size_t violations_before = invariant_violation_count();
  Criterion1Data data;
  std::vector<CriterionResult> out;
  out.push_back(round_trip(base, data));
  out.push_back(uniqueness(base + 1));
  out.push_back(riemann_roch(base + 2));
  out.push_back(characters(data));
  out.push_back(oracle_equivalence(base + 3));
  out.push_back(invariant_lifts(base + 4));
  out.push_back(fixtures(options.fixture_dir));
  out.push_back(mutations(base + 5, data));
  const std::size_t fired = invariant_violation_count() - violations_before;
  out.push_back({8, "internal invariants never fire", fired == 0, std::to_string(fired) + " violations"});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

}  // namespace equisplit
