#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "equisplit/bundle.hpp"

namespace equisplit {

enum class Chart { Zero, Infinity };

// Finite (possibly virtual) multiset of weights.
class Character {
 public:
  using Map = std::map<Weight, std::int64_t>;

  Character() = default;

  void add(const Weight& w, std::int64_t mult = 1);
  std::int64_t multiplicity(const Weight& w) const;
  // Sum of multiplicities.
  std::int64_t dimension() const;
  bool empty() const { return mult_.empty(); }
  const Map& entries() const { return mult_; }

  Character& operator+=(const Character& rhs);
  Character& operator-=(const Character& rhs);
  friend Character operator+(Character lhs, const Character& rhs) { return lhs += rhs; }
  friend Character operator-(Character lhs, const Character& rhs) { return lhs -= rhs; }
  friend bool operator==(const Character&, const Character&) = default;

  std::string to_string() const;

 private:
  Map mult_;  // no zero multiplicities
};

// Monomials violating d*a == lambdaInf[i] - lambda0[j]; empty when r == 0.
std::vector<Violation> check_equivariance(const EquivariantBundle& E);

// O(n) with chart-0 weight lam: transition z^{-n}, chart-infinity weight lam - n*a.
EquivariantBundle standard_linearization(int n, const Weight& lam, const TorusAction& torus);

// Weight of the monomial z^exponent (chart 0) or w^exponent (chart
// infinity) in frame component i.
Weight monomial_weight(const EquivariantBundle& E, Chart chart, std::size_t i, int exponent);

// A bundle map source -> target: F0 over k[z] and FInf over k[w]
// (FInf stored with w-exponents), both of shape rank(target) x rank(source),
// intertwining the transitions: target.A * F0 == FInf(1/z) * source.A.
struct HomElement {
  EquivariantBundle source;
  EquivariantBundle target;
  LaurentMatrix F0;
  LaurentMatrix FInf;
};

// Shape, polynomiality and the intertwining identity.
bool is_bundle_map(const HomElement& h);

// target weight - source weight - d*a on chart 0; target weight - source
// weight + j*a for w^j on chart infinity.
Weight hom_monomial_weight(const HomElement& h, Chart chart, std::size_t i, std::size_t j, int exponent);

// Keeps exactly the monomials of Hom-weight chi. Throws std::invalid_argument
// if h is not a bundle map.
HomElement weight_project_hom(const HomElement& h, const Weight& chi);

// Hom-weights occurring in h, sorted.
std::vector<Weight> hom_weights(const HomElement& h);

// second o first.
HomElement compose(const HomElement& second, const HomElement& first);

HomElement identity_hom(const EquivariantBundle& E);

// Reads a section (f, g) of hom_bundle(source, target) as a bundle map.
HomElement hom_from_section(const EquivariantBundle& source, const EquivariantBundle& target,
                            const std::vector<LaurentPoly>& f, const std::vector<LaurentPoly>& g);

}  // namespace equisplit
