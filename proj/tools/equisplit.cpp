// Command-line front end. stdout carries exactly one JSON document; logging
// goes to stderr. Exit codes: 0 success, 1 check failure, 2 usage or parse error.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "equisplit/acceptance.hpp"
#include "equisplit/cohomology.hpp"
#include "equisplit/random.hpp"
#include "equisplit/serialize.hpp"
#include "equisplit/splitting.hpp"

using namespace equisplit;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

EquivariantBundle load_bundle(const std::string& path) { return instance_from_json(read_json_file(path)).bundle; }

const char* kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::Shape: return "shape";
    case Violation::Kind::WeightLength: return "weight_length";
    case Violation::Kind::Determinant: return "determinant";
    case Violation::Kind::Equivariance: return "equivariance";
  }
  return "unknown";
}

// Returns false (after printing the report) when E is invalid.
bool report_if_invalid(const EquivariantBundle& E) {
  const auto report = validate(E);
  if (report.ok()) return true;
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"kind", kind_name(v.kind)},
                          {"row", v.row},
                          {"col", v.col},
                          {"exponent", v.exponent},
                          {"message", v.message}});
  }
  emit({{"valid", false}, {"violations", violations}});
  return false;
}

int cmd_validate(const std::string& file) {
  const auto E = load_bundle(file);
  if (!report_if_invalid(E)) return kCheckFailed;
  emit({{"valid", true}, {"violations", Json::array()}, {"degree", degree(E)}, {"rank", E.rank()}});
  return kOk;
}

int cmd_cohomology(const std::string& file) {
  const auto E = load_bundle(file);
  if (!report_if_invalid(E)) return kCheckFailed;
  const auto h0 = h0_character(E);
  const auto cech = cech_cohomology(E);
  const auto euler = euler_check(E);
  const bool consistent = h0 == cech.kernel && euler.ok();
  emit({{"h0", h0.dimension()},
        {"h1", cech.cokernel.dimension()},
        {"h0_character", character_to_json(h0)},
        {"h1_character", character_to_json(cech.cokernel)},
        {"degree", degree(E)},
        {"rank", E.rank()},
        {"cech_window", cech.window},
        {"riemann_roch", euler.riemann_roch},
        {"serre_duality", euler.serre_duality},
        {"oracles_agree", h0 == cech.kernel}});
  return consistent ? kOk : kCheckFailed;
}

int cmd_split(const std::string& file, const std::string& certificate_path) {
  const auto E = load_bundle(file);
  if (!report_if_invalid(E)) return kCheckFailed;
  const auto result = equivariant_split(E);
  if (!certificate_path.empty()) {
    std::ofstream out(certificate_path);
    if (!out) throw std::runtime_error("cannot write " + certificate_path);
    out << certificate_to_json(result.certificate).dump(2) << "\n";
    std::cerr << "certificate written to " << certificate_path << "\n";
  }
  emit({{"summands", summands_to_json(result.summands)}});
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& certificate_path) {
  const auto E = load_bundle(file);
  if (!report_if_invalid(E)) return kCheckFailed;
  const auto cert = certificate_from_json(read_json_file(certificate_path), E.torus.rank());
  const auto report = verify_certificate(E, cert);
  emit({{"ok", report.ok()},
        {"checks",
         {{"product", report.product},
          {"determinants", report.determinants},
          {"equivariance", report.equivariance},
          {"degrees", report.degrees},
          {"infinity_weights", report.infinity_weights}}},
        {"notes", report.notes}});
  return report.ok() ? kOk : kCheckFailed;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("bad integer '" + s + "' in " + what);
  }
  if (used != s.size()) throw UsageError("bad integer '" + s + "' in " + what);
  return v;
}

// "a1,a2" -> torus; empty -> rank 0.
TorusAction parse_torus(const std::string& text) {
  std::vector<std::int64_t> a;
  if (!text.empty()) {
    for (const auto& part : split_on(text, ',')) a.push_back(parse_int(part, "--torus"));
  }
  return TorusAction{Weight(std::move(a))};
}

// "n:l1:l2,n:l1:l2,..." with one weight component per torus coordinate.
std::vector<LineSummand> parse_summands(const std::string& text, const TorusAction& torus) {
  std::vector<LineSummand> out;
  for (const auto& item : split_on(text, ',')) {
    const auto fields = split_on(item, ':');
    if (fields.empty() || fields[0].empty()) throw UsageError("empty summand in --summands");
    std::vector<std::int64_t> lam;
    for (std::size_t k = 1; k < fields.size(); ++k) lam.push_back(parse_int(fields[k], "--summands"));
    if (lam.size() != torus.rank()) {
      throw UsageError("summand '" + item + "' needs " + std::to_string(torus.rank()) + " weight components");
    }
    out.push_back({static_cast<int>(parse_int(fields[0], "--summands")), Weight(std::move(lam))});
  }
  if (out.empty()) throw UsageError("--summands is empty");
  return out;
}

int cmd_random(std::uint64_t seed, const std::string& summands, int ops, const std::string& torus_text) {
  if (ops < 0) throw UsageError("--ops must be nonnegative");
  const TorusAction torus = parse_torus(torus_text);
  const auto inst = random_instance(seed, parse_summands(summands, torus), torus, ops);
  Json j = bundle_to_json(inst.bundle);
  j["expected"] = {{"summands", summands_to_json(inst.expected)}};
  emit(j);
  return kOk;
}

int cmd_selftest(const std::string& fixtures, std::uint64_t seed) {
  AcceptanceOptions options;
  options.fixture_dir = fixtures;
  options.seed = seed;
  Json criteria = Json::array();
  bool all = true;
  for (const auto& r : run_acceptance(options)) {
    std::cerr << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " (" << r.detail
              << ")\n";
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  emit({{"passed", all}, {"criteria", criteria}});
  return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant splitting of torus-equivariant vector bundles on P^1"};
  app.require_subcommand(1);

  std::string file, certificate, summands, torus_text;
  std::string fixtures = EQUISPLIT_FIXTURE_DIR;
  std::uint64_t seed = 1;
  int ops = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check an instance file");
  validate_cmd->add_option("file", file, "instance JSON")->required();

  auto* cohomology_cmd = app.add_subcommand("cohomology", "H^0 and H^1 with characters");
  cohomology_cmd->add_option("file", file, "instance JSON")->required();

  auto* split_cmd = app.add_subcommand("split", "equivariant splitting type");
  split_cmd->add_option("file", file, "instance JSON")->required();
  split_cmd->add_option("--certificate", certificate, "write the splitting certificate here");

  auto* verify_cmd = app.add_subcommand("verify", "check a splitting certificate");
  verify_cmd->add_option("file", file, "instance JSON")->required();
  verify_cmd->add_option("cert", certificate, "certificate JSON")->required();

  auto* random_cmd = app.add_subcommand("random", "generate a disguised split instance");
  random_cmd->add_option("--seed", seed, "generator seed")->required();
  random_cmd->add_option("--summands", summands, "comma-separated n:l1:...:lr")->required();
  random_cmd->add_option("--ops", ops, "number of elementary frame changes")->required();
  random_cmd->add_option("--torus", torus_text, "comma-separated torus weights a1,...,ar");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  selftest_cmd->add_option("--fixtures", fixtures, "golden fixture directory");
  selftest_cmd->add_option("--seed", seed, "base seed for random cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*cohomology_cmd) return cmd_cohomology(file);
    if (*split_cmd) return cmd_split(file, certificate);
    if (*verify_cmd) return cmd_verify(file, certificate);
    if (*random_cmd) return cmd_random(seed, summands, ops, torus_text);
    if (*selftest_cmd) return cmd_selftest(fixtures, seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << (e.pointer().empty() ? "/" : e.pointer()) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
