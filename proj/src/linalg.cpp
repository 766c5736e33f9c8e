#include "equisplit/linalg.hpp"

#include <stdexcept>

namespace equisplit {

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RationalMatrix::apply shape mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = (*this)(i, j);
      if (a != 0 && v[j] != 0) out[i] += a * v[j];
    }
  }
  return out;
}

std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (m(row, j) != 0) m(row, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (m(row, j) != 0) m(i, j) -= factor * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

std::vector<RationalVector> solve_rational_kernel(const RationalMatrix& m) {
  RationalMatrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool SparseEchelon::insert(SparseVector v) {
  while (!v.empty()) {
    auto lead = v.begin();
    auto pivot = pivots_.find(lead->first);
    if (pivot == pivots_.end()) {
      const Rational inv = 1 / lead->second;
      for (auto& [c, x] : v) x *= inv;
      const std::size_t key = lead->first;
      pivots_.emplace(key, std::move(v));
      return true;
    }
    const Rational factor = lead->second;
    for (const auto& [c, x] : pivot->second) {
      auto [it, inserted] = v.try_emplace(c, 0);
      it->second -= factor * x;
      if (it->second == 0) v.erase(it);
    }
  }
  return false;
}

}  // namespace equisplit
