#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "equisplit/rational.hpp"

namespace equisplit {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector apply(const RationalVector& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduces m in place to reduced row-echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

// Kernel basis read off the reduced row-echelon form: one vector per free
// column, in increasing column order, with a 1 in that column.
std::vector<RationalVector> solve_rational_kernel(const RationalMatrix& m);

// Incremental row echelon form over sparse vectors, used for rank counts
// on large sparse systems.
class SparseEchelon {
 public:
  using SparseVector = std::map<std::size_t, Rational>;

  // Reduces v against the stored pivots; stores it if independent.
  // Returns true iff v increased the rank.
  bool insert(SparseVector v);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseVector> pivots_;  // leading column -> row with leading 1
};

}  // namespace equisplit
