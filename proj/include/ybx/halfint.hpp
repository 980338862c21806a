// Exact half-integer spin and magnetic labels, stored as doubled integers so
// label arithmetic never touches floating point.
#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybx {

struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

  static constexpr HalfInt from_twice(int t) { return HalfInt(t); }
  static constexpr HalfInt whole(int n) { return HalfInt(2 * n); }

  constexpr double value() const { return twice / 2.0; }
  constexpr HalfInt operator-() const { return HalfInt(-twice); }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

inline bool is_valid_spin(HalfInt j) { return j.twice >= 1; }

inline bool is_valid_magnetic(HalfInt j, HalfInt m) {
  return std::abs(m.twice) <= j.twice && (m.twice - j.twice) % 2 == 0;
}

inline void require_spin(HalfInt j, const char* who) {
  if (!is_valid_spin(j))
    throw std::invalid_argument(std::string(who) + ": invalid spin label " + j.str());
}

inline void require_magnetic(HalfInt j, HalfInt m, const char* who) {
  if (!is_valid_magnetic(j, m))
    throw std::invalid_argument(std::string(who) + ": magnetic label " + m.str() +
                                " out of range for spin " + j.str());
}

/// Magnetic labels of spin j in descending order: j, j-1, ..., -j.
inline std::vector<HalfInt> magnetic_labels(HalfInt j) {
  require_spin(j, "magnetic_labels");
  std::vector<HalfInt> out;
  out.reserve(static_cast<std::size_t>(j.twice) + 1);
  for (int t = j.twice; t >= -j.twice; t -= 2) out.push_back(HalfInt(t));
  return out;
}

inline std::size_t multiplicity(HalfInt j) {
  return static_cast<std::size_t>(j.twice) + 1;  // 2j+1
}

}  // namespace ybx
