#pragma once

#include <cmath>
#include <compare>
#include <cstdlib>
#include <string>

namespace vbslab {

// Half-integer spin value stored as twice its value, so 3/2 is twice=3.
// Keeps spins, projections and bond-spin labels exact and hashable.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
    static constexpr HalfInt whole(int n) { return HalfInt{2 * n}; }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    // valid only when is_integer()
    constexpr int as_int() const { return twice / 2; }
    double value() const { return 0.5 * static_cast<double>(twice); }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.twice - b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt{-a.twice}; }
    friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice <=> b.twice; }

  private:
    explicit constexpr HalfInt(int t) : twice(t) {}
};

constexpr HalfInt abs(HalfInt a) { return HalfInt::from_twice(a.twice < 0 ? -a.twice : a.twice); }
constexpr HalfInt min(HalfInt a, HalfInt b) { return a < b ? a : b; }
constexpr HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }

// dimension of the spin-S irrep
constexpr int dimension(HalfInt s) { return s.twice + 1; }

// true when m is a valid projection of spin j: |m| <= j and j-m integral
constexpr bool valid_projection(HalfInt j, HalfInt m) {
    return abs(m) <= j && (j.twice - m.twice) % 2 == 0;
}

inline std::string to_string(HalfInt a) {
    if (a.is_integer()) return std::to_string(a.as_int());
    return std::to_string(a.twice) + "/2";
}

}  // namespace vbslab
