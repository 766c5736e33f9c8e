#include "equisplit/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace equisplit {

ParseError::ParseError(std::string pointer, const std::string& message)
    : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + message),
      pointer_(std::move(pointer)) {}

namespace {

std::string at(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string at(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const Json& field(const Json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) throw ParseError(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(pointer, key), "missing field");
  return *it;
}

const Json& array(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw ParseError(pointer, "expected an array");
  return j;
}

std::int64_t integer(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) throw ParseError(pointer, "expected an integer");
  return j.get<std::int64_t>();
}

int small_integer(const Json& j, const std::string& pointer) {
  const std::int64_t v = integer(j, pointer);
  if (v < std::numeric_limits<int>::min() / 4 || v > std::numeric_limits<int>::max() / 4) {
    throw ParseError(pointer, "integer out of range");
  }
  return static_cast<int>(v);
}

mpz_class big_integer(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()), 10);
  if (j.is_string()) {
    try {
      const Rational q = parse_rational(j.get<std::string>());
      if (q.get_den() != 1) throw std::invalid_argument("not an integer");
      return q.get_num();
    } catch (const std::invalid_argument&) {
      throw ParseError(pointer, "expected a decimal integer string");
    }
  }
  throw ParseError(pointer, "expected an integer");
}

Json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Weight weight_from_json(const Json& j, std::size_t r, const std::string& pointer) {
  array(j, pointer);
  if (j.size() != r) throw ParseError(pointer, "weight must have length " + std::to_string(r));
  std::vector<std::int64_t> v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(integer(j[k], at(pointer, k)));
  return Weight(std::move(v));
}

std::vector<Weight> weights_from_json(const Json& j, std::size_t m, std::size_t r, const std::string& pointer) {
  array(j, pointer);
  if (j.size() != m) throw ParseError(pointer, "expected " + std::to_string(m) + " weights");
  std::vector<Weight> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(weight_from_json(j[i], r, at(pointer, i)));
  return out;
}

}  // namespace

Json matrix_to_json(const LaurentMatrix& M) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) {
      Json entry = Json::array();
      for (const auto& [e, c] : M(i, j).terms()) {
        entry.push_back(Json::array({e, integer_to_json(c.get_num()), integer_to_json(c.get_den())}));
      }
      row.push_back(std::move(entry));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

LaurentMatrix matrix_from_json(const Json& j, const std::string& pointer) {
  array(j, pointer);
  if (j.empty()) throw ParseError(pointer, "matrix has no rows");
  const std::size_t rows = j.size();
  const std::size_t cols = array(j[0], at(pointer, 0)).size();
  LaurentMatrix M(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = at(pointer, i);
    array(j[i], rp);
    if (j[i].size() != cols) throw ParseError(rp, "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string ep = at(rp, c);
      const Json& entry = array(j[i][c], ep);
      for (std::size_t t = 0; t < entry.size(); ++t) {
        const std::string tp = at(ep, t);
        const Json& mono = array(entry[t], tp);
        if (mono.size() != 3) throw ParseError(tp, "monomial must be [exponent, numerator, denominator]");
        const int e = small_integer(mono[0], at(tp, 0));
        const mpz_class num = big_integer(mono[1], at(tp, 1));
        const mpz_class den = big_integer(mono[2], at(tp, 2));
        if (den == 0) throw ParseError(at(tp, 2), "zero denominator");
        M(i, c).add_term(make_rational(num, den), e);
      }
    }
  }
  return M;
}

Json weight_to_json(const Weight& w) { return Json(w.values()); }

Json summands_to_json(const std::vector<LineSummand>& summands) {
  Json out = Json::array();
  for (const auto& s : summands) out.push_back({{"n", s.n}, {"lam", weight_to_json(s.lam)}});
  return out;
}

std::vector<LineSummand> summands_from_json(const Json& j, std::size_t torus_rank, const std::string& pointer) {
  array(j, pointer);
  std::vector<LineSummand> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = at(pointer, k);
    out.push_back({small_integer(field(j[k], "n", p), at(p, "n")),
                   weight_from_json(field(j[k], "lam", p), torus_rank, at(p, "lam"))});
  }
  return out;
}

Json bundle_to_json(const EquivariantBundle& E) {
  Json lambda0 = Json::array(), lambdaInf = Json::array();
  for (const auto& w : E.lambda0) lambda0.push_back(weight_to_json(w));
  for (const auto& w : E.lambdaInf) lambdaInf.push_back(weight_to_json(w));
  return {{"rank", E.rank()},
          {"torus", {{"rank", E.torus.rank()}, {"a", weight_to_json(E.torus.a)}}},
          {"lambda0", lambda0},
          {"lambdaInf", lambdaInf},
          {"A", matrix_to_json(E.A)}};
}

EquivariantBundle bundle_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("", "expected an object");
  const std::int64_t m = integer(field(j, "rank", ""), "/rank");
  if (m <= 0) throw ParseError("/rank", "rank must be positive");
  const Json& torus = field(j, "torus", "");
  const std::int64_t r = integer(field(torus, "rank", "/torus"), "/torus/rank");
  if (r < 0) throw ParseError("/torus/rank", "torus rank must be nonnegative");

  EquivariantBundle E;
  E.torus.a = weight_from_json(field(torus, "a", "/torus"), static_cast<std::size_t>(r), "/torus/a");
  E.lambda0 = weights_from_json(field(j, "lambda0", ""), static_cast<std::size_t>(m), static_cast<std::size_t>(r),
                                "/lambda0");
  E.lambdaInf = weights_from_json(field(j, "lambdaInf", ""), static_cast<std::size_t>(m),
                                  static_cast<std::size_t>(r), "/lambdaInf");
  E.A = matrix_from_json(field(j, "A", ""), "/A");
  if (E.A.rows() != static_cast<std::size_t>(m) || E.A.cols() != static_cast<std::size_t>(m)) {
    throw ParseError("/A", "transition matrix must be rank x rank");
  }
  return E;
}

InstanceFile instance_from_json(const Json& j) {
  InstanceFile file;
  file.bundle = bundle_from_json(j);
  if (j.contains("expected")) {
    const Json& expected = j["expected"];
    file.expected = summands_from_json(field(expected, "summands", "/expected"), file.bundle.torus.rank(),
                                       "/expected/summands");
  }
  return file;
}

Json character_to_json(const Character& chi) {
  Json out = Json::array();
  for (const auto& [w, k] : chi.entries()) out.push_back({{"weight", weight_to_json(w)}, {"mult", k}});
  return out;
}

Character character_from_json(const Json& j, const std::string& pointer) {
  array(j, pointer);
  Character chi;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = at(pointer, k);
    const Json& w = array(field(j[k], "weight", p), at(p, "weight"));
    chi.add(weight_from_json(w, w.size(), at(p, "weight")), integer(field(j[k], "mult", p), at(p, "mult")));
  }
  return chi;
}

Json certificate_to_json(const SplittingCertificate& cert) {
  return {{"summands", summands_to_json(cert.summands)},
          {"M0", matrix_to_json(cert.M0)},
          {"MInf", matrix_to_json(cert.MInf)}};
}

SplittingCertificate certificate_from_json(const Json& j, std::size_t torus_rank) {
  SplittingCertificate cert;
  cert.summands = summands_from_json(field(j, "summands", ""), torus_rank, "/summands");
  cert.M0 = matrix_from_json(field(j, "M0", ""), "/M0");
  cert.MInf = matrix_from_json(field(j, "MInf", ""), "/MInf");
  return cert;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

}  // namespace equisplit
