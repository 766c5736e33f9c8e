#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace equisplit {

// A character of the torus, as an integer exponent vector.
class Weight {
 public:
  Weight() = default;
  Weight(std::initializer_list<std::int64_t> v) : v_(v) {}
  explicit Weight(std::vector<std::int64_t> v) : v_(std::move(v)) {}
  static Weight zero(std::size_t r) { return Weight(std::vector<std::int64_t>(r, 0)); }

  std::size_t size() const { return v_.size(); }
  bool is_zero() const;
  std::int64_t operator[](std::size_t i) const { return v_.at(i); }
  const std::vector<std::int64_t>& values() const { return v_; }

  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
  friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
  friend Weight operator*(std::int64_t k, const Weight& w);
  Weight operator-() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> v_;
};

// Integer d with d*a == diff, if one exists. For a == 0 this requires
// diff == 0 and returns 0 (every d works); callers handle that case.
std::optional<std::int64_t> solve_multiple(const Weight& diff, const Weight& a);

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

}  // namespace equisplit
