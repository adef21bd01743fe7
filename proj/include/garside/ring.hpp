#pragma once

// Exact coefficient rings for root systems.
//
// Root coordinates only ever need ring operations, equality and a sign test,
// so descent computations never touch floating point.

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace garside {

/// Element a + b*phi of Z[phi], phi = (1 + sqrt 5) / 2, phi^2 = phi + 1.
class GoldenInteger {
 public:
  constexpr GoldenInteger() = default;
  constexpr GoldenInteger(std::int64_t a) : a_(a) {}  // NOLINT: implicit from integers
  constexpr GoldenInteger(std::int64_t a, std::int64_t b) : a_(a), b_(b) {}

  static constexpr GoldenInteger phi() { return {0, 1}; }

  constexpr std::int64_t rational_part() const { return a_; }
  constexpr std::int64_t phi_part() const { return b_; }

  friend constexpr GoldenInteger operator+(GoldenInteger x, GoldenInteger y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend constexpr GoldenInteger operator-(GoldenInteger x, GoldenInteger y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend constexpr GoldenInteger operator-(GoldenInteger x) { return {-x.a_, -x.b_}; }
  friend constexpr GoldenInteger operator*(GoldenInteger x, GoldenInteger y) {
    // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
    return {x.a_ * y.a_ + x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_};
  }
  GoldenInteger& operator+=(GoldenInteger y) { return *this = *this + y; }
  GoldenInteger& operator-=(GoldenInteger y) { return *this = *this - y; }
  GoldenInteger& operator*=(GoldenInteger y) { return *this = *this * y; }

  friend constexpr bool operator==(GoldenInteger, GoldenInteger) = default;
  // Lexicographic on (a, b); used for container keys, not for magnitude.
  friend constexpr auto operator<=>(GoldenInteger, GoldenInteger) = default;

  /// Exact sign of the real number a + b*phi: -1, 0 or +1.
  constexpr int sign() const {
    // 2(a + b phi) = p + q sqrt5 with p = 2a + b, q = b.
    const std::int64_t p = 2 * a_ + b_;
    const std::int64_t q = b_;
    const int sp = (p > 0) - (p < 0);
    const int sq = (q > 0) - (q < 0);
    if (sp == 0) return sq;
    if (sq == 0 || sp == sq) return sp;
    // Opposite signs: compare p^2 with 5 q^2.
    const auto p2 = static_cast<__int128>(p) * p;
    const auto q2 = 5 * static_cast<__int128>(q) * q;
    if (p2 == q2) return 0;  // unreachable for integers (sqrt5 irrational)
    return p2 > q2 ? sp : sq;
  }

  double to_double() const { return static_cast<double>(a_) + static_cast<double>(b_) * 1.6180339887498949; }

  friend std::ostream& operator<<(std::ostream& os, GoldenInteger x) {
    return os << x.a_ << (x.b_ < 0 ? "-" : "+") << (x.b_ < 0 ? -x.b_ : x.b_) << "phi";
  }

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

/// Sign helper usable for both the integer and the golden ring.
constexpr int sign_of(std::int64_t x) { return (x > 0) - (x < 0); }
constexpr int sign_of(GoldenInteger x) { return x.sign(); }

}  // namespace garside

template <>
struct std::hash<garside::GoldenInteger> {
  std::size_t operator()(const garside::GoldenInteger& x) const noexcept {
    return std::hash<std::int64_t>{}(x.rational_part()) * 1000003u ^ std::hash<std::int64_t>{}(x.phi_part());
  }
};
