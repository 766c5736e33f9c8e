#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "equisplit/bundle.hpp"
#include "equisplit/equivariant.hpp"
#include "equisplit/splitting.hpp"

namespace equisplit {

using Json = nlohmann::json;

// Malformed input; pointer() is the JSON pointer of the offending value.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string pointer, const std::string& message);
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

// Matrix entries are lists of [exponent, numerator, denominator] monomials.
// Numerators and denominators are written as integers when they fit in 64
// bits and as decimal strings otherwise; both forms are accepted on input.
Json matrix_to_json(const LaurentMatrix& M);
LaurentMatrix matrix_from_json(const Json& j, const std::string& pointer = "");

Json weight_to_json(const Weight& w);
Json summands_to_json(const std::vector<LineSummand>& summands);
std::vector<LineSummand> summands_from_json(const Json& j, std::size_t torus_rank,
                                            const std::string& pointer = "");

// {"rank", "torus": {"rank", "a"}, "lambda0", "lambdaInf", "A"}
Json bundle_to_json(const EquivariantBundle& E);
EquivariantBundle bundle_from_json(const Json& j);

struct InstanceFile {
  EquivariantBundle bundle;
  std::optional<std::vector<LineSummand>> expected;  // from {"expected": {"summands": [...]}}
};

InstanceFile instance_from_json(const Json& j);

// [{"weight": [...], "mult": n}, ...] sorted by weight.
Json character_to_json(const Character& chi);
Character character_from_json(const Json& j, const std::string& pointer = "");

// {"summands", "M0", "MInf"}
Json certificate_to_json(const SplittingCertificate& cert);
SplittingCertificate certificate_from_json(const Json& j, std::size_t torus_rank);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace equisplit
