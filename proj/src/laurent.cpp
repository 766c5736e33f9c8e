#include "equisplit/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace equisplit {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exponent) {
  LaurentPoly p;
  p.add_term(coeff, exponent);
  return p;
}

int LaurentPoly::ord() const {
  if (terms_.empty()) throw std::domain_error("ord of zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::deg() const {
  if (terms_.empty()) throw std::domain_error("deg of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero");
  return terms_.rbegin()->second;
}

void LaurentPoly::add_term(const Rational& coeff, int exponent) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::is_polynomial() const {
  return terms_.empty() || terms_.begin()->first >= 0;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (k == 0) return *this;
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.begin(), -e, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(c1 * c2, e1 + e2);
  }
  return out;
}

std::string LaurentPoly::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!num.is_polynomial() || !den.is_polynomial()) {
    throw std::invalid_argument("poly_divmod expects polynomials without negative exponents");
  }
  LaurentPoly q;
  LaurentPoly r = num;
  const int dl = den.deg();
  const Rational lc = den.leading_coeff();
  while (!r.is_zero() && r.deg() >= dl) {
    const Rational c = r.leading_coeff() / lc;
    const int e = r.deg() - dl;
    q.add_term(c, e);
    r -= den.shifted(e) * c;
  }
  return {q, r};
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (num.is_zero()) return {};
  const int shift = num.ord() - den.ord();
  auto [q, r] = poly_divmod(num.shifted(-num.ord()), den.shifted(-den.ord()));
  if (!r.is_zero()) throw std::domain_error("inexact Laurent polynomial division");
  return q.shifted(shift);
}

XgcdResult poly_xgcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r0 = a, r1 = b;
  LaurentPoly s0 = 1, s1 = 0;
  LaurentPoly t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    LaurentPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    LaurentPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {LaurentPoly{}, LaurentPoly{}, LaurentPoly{}};
  const Rational inv = 1 / r0.leading_coeff();
  return {r0 * inv, s0 * inv, t0 * inv};
}

// ---------------------------------------------------------------------------

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LaurentMatrix LaurentMatrix::diagonal(const std::vector<LaurentPoly>& entries) {
  LaurentMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

LaurentPoly& LaurentMatrix::operator()(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("LaurentMatrix index");
  return entries_[i * cols_ + j];
}

const LaurentPoly& LaurentMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("LaurentMatrix index");
  return entries_[i * cols_ + j];
}

LaurentMatrix LaurentMatrix::transposed() const {
  LaurentMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

LaurentMatrix LaurentMatrix::reflected() const {
  LaurentMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].reflected();
  return out;
}

LaurentMatrix LaurentMatrix::shifted(int k) const {
  LaurentMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].shifted(k);
  return out;
}

LaurentMatrix LaurentMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                                   std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw std::out_of_range("block out of range");
  LaurentMatrix out(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  return out;
}

int LaurentMatrix::min_exponent() const {
  bool found = false;
  int best = 0;
  for (const auto& p : entries_) {
    if (p.is_zero()) continue;
    best = found ? std::min(best, p.ord()) : p.ord();
    found = true;
  }
  if (!found) throw std::domain_error("min_exponent of zero matrix");
  return best;
}

int LaurentMatrix::max_exponent() const {
  bool found = false;
  int best = 0;
  for (const auto& p : entries_) {
    if (p.is_zero()) continue;
    best = found ? std::max(best, p.deg()) : p.deg();
    found = true;
  }
  if (!found) throw std::domain_error("max_exponent of zero matrix");
  return best;
}

int LaurentMatrix::max_abs_exponent() const {
  return std::max(std::abs(min_exponent()), std::abs(max_exponent()));
}

bool LaurentMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& p) { return p.is_zero(); });
}

bool LaurentMatrix::is_polynomial() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& p) { return p.is_polynomial(); });
}

std::size_t LaurentMatrix::term_count() const {
  std::size_t n = 0;
  for (const auto& p : entries_) n += p.term_count();
  return n;
}

LaurentMatrix operator*(const LaurentMatrix& lhs, const LaurentMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  LaurentMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const LaurentPoly& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const LaurentPoly& b = rhs(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

LaurentMatrix operator+(const LaurentMatrix& lhs, const LaurentMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix sum shape mismatch");
  }
  LaurentMatrix out = lhs;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += rhs.entries_[k];
  return out;
}

LaurentMatrix operator-(const LaurentMatrix& lhs, const LaurentMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix difference shape mismatch");
  }
  LaurentMatrix out = lhs;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= rhs.entries_[k];
  return out;
}

LaurentMatrix operator*(const LaurentPoly& c, const LaurentMatrix& m) {
  LaurentMatrix out(m.rows_, m.cols_);
  for (std::size_t k = 0; k < m.entries_.size(); ++k) out.entries_[k] = c * m.entries_[k];
  return out;
}

std::string LaurentMatrix::to_string(char var) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string(var);
    os << ']';
  }
  os << ']';
  return os.str();
}

LaurentMatrix block_diagonal(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

LaurentMatrix kronecker(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

// ---------------------------------------------------------------------------

LaurentPoly mat_det(const LaurentMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (m.is_zero()) return {};
  if (n == 1) return m(0, 0);

  // Bareiss needs exact polynomial division, so clear negative powers first.
  const int low = std::min(0, m.min_exponent());
  LaurentMatrix work = m.shifted(-low);

  bool negate = false;
  LaurentPoly prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (work(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && work(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return {};
      for (std::size_t j = k; j < n; ++j) std::swap(work(k, j), work(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = work(k, k) * work(i, j) - work(i, k) * work(k, j);
        work(i, j) = exact_divide(num, prev);
      }
      work(i, k) = LaurentPoly{};
    }
    prev = work(k, k);
  }
  LaurentPoly det = work(n - 1, n - 1);
  if (negate) det = -det;
  return det.shifted(low * static_cast<int>(n));
}

namespace {

LaurentMatrix adjugate_by_cofactors(const LaurentMatrix& m) {
  const std::size_t n = m.rows();
  LaurentMatrix adj(n, n);
  LaurentMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      LaurentPoly cof = mat_det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = std::move(cof);
    }
  }
  return adj;
}

}  // namespace

LaurentMatrix mat_adjugate(const LaurentMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("adjugate of non-square matrix");
  const std::size_t n = m.rows();
  LaurentMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  if (m.is_zero()) return adj;

  // Fraction-free Gauss-Jordan on [B | I] with B = z^{-low} m polynomial.
  // It ends at [p*I | p*B^{-1}] where p = +-det(B); every division is exact.
  const int low = std::min(0, m.min_exponent());
  LaurentMatrix work(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work(i, j) = m(i, j).shifted(-low);
    work(i, n + i) = 1;
  }
  bool negate = false;
  LaurentPoly prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (work(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && work(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return adjugate_by_cofactors(m);  // singular
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(work(k, j), work(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        LaurentPoly num = work(k, k) * work(i, j) - work(i, k) * work(k, j);
        work(i, j) = exact_divide(num, prev);
      }
      work(i, k) = LaurentPoly{};
    }
    prev = work(k, k);
  }
  // p*B^{-1} = (p/det B) adj(B); adj(m) = z^{low (n-1)} adj(B).
  const int scale = low * static_cast<int>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly v = work(i, n + j).shifted(scale);
      adj(i, j) = negate ? -v : v;
    }
  }
  return adj;
}

LaurentMatrix mat_inverse(const LaurentMatrix& m) {
  const LaurentPoly det = mat_det(m);
  if (!det.is_monomial()) {
    throw std::domain_error("matrix is not invertible over the Laurent ring (det = " +
                            det.to_string() + ")");
  }
  const auto& [e, c] = *det.terms().begin();
  return LaurentPoly::monomial(1 / c, -e) * mat_adjugate(m);
}

ExtGcdResult poly_ext_gcd(const std::vector<LaurentPoly>& f) {
  if (f.empty()) throw std::invalid_argument("poly_ext_gcd on empty vector");
  for (const auto& p : f) {
    if (!p.is_polynomial()) throw std::invalid_argument("poly_ext_gcd expects polynomials");
  }
  if (std::all_of(f.begin(), f.end(), [](const auto& p) { return p.is_zero(); })) {
    throw std::invalid_argument("poly_ext_gcd on all-zero vector");
  }
  const std::size_t k = f.size();
  LaurentMatrix U = LaurentMatrix::identity(k);
  LaurentPoly g = f[0];
  if (!g.is_zero()) {
    const Rational inv = 1 / g.leading_coeff();
    g *= inv;
    U(0, 0) = inv;
  }
  for (std::size_t i = 1; i < k; ++i) {
    if (f[i].is_zero()) continue;
    XgcdResult x = poly_xgcd(g, f[i]);
    const LaurentPoly lower_left = -exact_divide(f[i], x.gcd);
    const LaurentPoly lower_right = g.is_zero() ? LaurentPoly{} : exact_divide(g, x.gcd);
    for (std::size_t c = 0; c < k; ++c) {
      LaurentPoly top = x.s * U(0, c) + x.t * U(i, c);
      LaurentPoly bottom = lower_left * U(0, c) + lower_right * U(i, c);
      U(0, c) = std::move(top);
      U(i, c) = std::move(bottom);
    }
    g = std::move(x.gcd);
  }
  return {g, U};
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const LaurentMatrix& m) { return os << m.to_string(); }

}  // namespace equisplit
