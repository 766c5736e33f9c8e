#include "equisplit/weight.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace equisplit {

bool Weight::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](auto x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& rhs) {
  if (rhs.size() != size()) throw std::invalid_argument("weight length mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += rhs.v_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
  if (rhs.size() != size()) throw std::invalid_argument("weight length mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= rhs.v_[i];
  return *this;
}

Weight operator*(std::int64_t k, const Weight& w) {
  Weight out = w;
  for (auto& x : out.v_) x *= k;
  return out;
}

Weight Weight::operator-() const { return -1 * *this; }

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << ')';
  return os.str();
}

std::optional<std::int64_t> solve_multiple(const Weight& diff, const Weight& a) {
  if (diff.size() != a.size()) throw std::invalid_argument("weight length mismatch");
  std::size_t k = 0;
  while (k < a.size() && a[k] == 0) ++k;
  if (k == a.size()) {
    if (diff.is_zero()) return 0;
    return std::nullopt;
  }
  if (diff[k] % a[k] != 0) return std::nullopt;
  const std::int64_t d = diff[k] / a[k];
  if (d * a != diff) return std::nullopt;
  return d;
}

}  // namespace equisplit
