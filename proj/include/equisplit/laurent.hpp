#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "equisplit/rational.hpp"

namespace equisplit {

// Sparse univariate Laurent polynomial over Q in the affine coordinate z.
// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT: implicit scalar embedding
  LaurentPoly(int constant);              // NOLINT

  static LaurentPoly monomial(const Rational& coeff, int exponent);

  bool is_zero() const { return terms_.empty(); }
  // Minimum / maximum exponent. Throw std::domain_error on zero.
  int ord() const;
  int deg() const;

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(int exponent) const;
  Rational leading_coeff() const;
  void add_term(const Rational& coeff, int exponent);

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  // True for zero or when every exponent is >= 0.
  bool is_polynomial() const;

  // Multiplication by z^k.
  LaurentPoly shifted(int k) const;
  // Substitution z -> 1/z.
  LaurentPoly reflected() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const Rational& c) { return lhs *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly rhs) { return rhs *= c; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string(char var = 'z') const;

 private:
  Terms terms_;
};

// Division with remainder for ordinary polynomials (no negative exponents).
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& num, const LaurentPoly& den);

// Exact quotient of Laurent polynomials; throws std::domain_error if den does not divide num.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

struct XgcdResult {
  LaurentPoly gcd;  // monic, or zero when both inputs are zero
  LaurentPoly s;
  LaurentPoly t;    // s*a + t*b = gcd
};

XgcdResult poly_xgcd(const LaurentPoly& a, const LaurentPoly& b);

class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols);

  static LaurentMatrix identity(std::size_t n);
  static LaurentMatrix diagonal(const std::vector<LaurentPoly>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  LaurentPoly& operator()(std::size_t i, std::size_t j);
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const;

  LaurentMatrix transposed() const;
  LaurentMatrix reflected() const;
  LaurentMatrix shifted(int k) const;
  LaurentMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

  // Extremes over all stored monomials; throw std::domain_error if the matrix is zero.
  int min_exponent() const;
  int max_exponent() const;
  int max_abs_exponent() const;
  bool is_zero() const;
  bool is_polynomial() const;
  std::size_t term_count() const;

  friend LaurentMatrix operator*(const LaurentMatrix& lhs, const LaurentMatrix& rhs);
  friend LaurentMatrix operator+(const LaurentMatrix& lhs, const LaurentMatrix& rhs);
  friend LaurentMatrix operator-(const LaurentMatrix& lhs, const LaurentMatrix& rhs);
  friend LaurentMatrix operator*(const LaurentPoly& c, const LaurentMatrix& m);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  std::string to_string(char var = 'z') const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

// Block-diagonal matrix [[a, 0], [0, b]].
LaurentMatrix block_diagonal(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix kronecker(const LaurentMatrix& a, const LaurentMatrix& b);

// Fraction-free (Bareiss) determinant, after clearing denominators by a
// global power of z. Throws std::invalid_argument on a non-square matrix.
LaurentPoly mat_det(const LaurentMatrix& m);

// adj(M) with adj(M)*M = M*adj(M) = det(M)*I.
LaurentMatrix mat_adjugate(const LaurentMatrix& m);

// Inverse of a matrix whose determinant is a nonzero monomial.
// Throws std::domain_error otherwise.
LaurentMatrix mat_inverse(const LaurentMatrix& m);

struct ExtGcdResult {
  LaurentPoly gcd;  // monic
  LaurentMatrix U;  // det(U) a nonzero constant, U*f = (gcd, 0, ..., 0)^T
};

// Unimodular column reduction of a polynomial vector. Entries are folded
// left to right through 2x2 Bezout blocks acting on position 0 and the
// current position. Throws std::invalid_argument on an all-zero vector or
// negative exponents.
ExtGcdResult poly_ext_gcd(const std::vector<LaurentPoly>& f);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const LaurentMatrix& m);

}  // namespace equisplit
