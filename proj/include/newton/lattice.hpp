#pragma once

#include <compare>
#include <cstdint>

namespace newton {

// Exponent pair (l,m) of a monomial z^l w^m. Ordinary polynomials only:
// both coordinates non-negative.
struct LatticeExponent {
  std::int64_t l = 0;
  std::int64_t m = 0;

  friend auto operator<=>(const LatticeExponent&,
                          const LatticeExponent&) = default;
};

// Integer point or vector in the exponent plane (may be negative:
// normals, directions).
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

  friend LatticePoint operator+(LatticePoint a, LatticePoint b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) {
    return {a.x - b.x, a.y - b.y};
  }
};

inline std::int64_t dot(LatticePoint a, LatticePoint b) {
  return a.x * b.x + a.y * b.y;
}

// z-component of the cross product; > 0 iff (a,b) is a left turn.
inline std::int64_t cross(LatticePoint a, LatticePoint b) {
  return a.x * b.y - a.y * b.x;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline LatticePoint as_point(LatticeExponent e) { return {e.l, e.m}; }

}  // namespace newton
