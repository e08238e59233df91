#pragma once

/**
 * @file quadratic_integer.hpp
 * @brief Exact arithmetic in Z[i] and Z[w], w^2 + w + 1 = 0.
 *
 * Both rings are Euclidean, imaginary quadratic and share everything except
 * the multiplication rule, the unit group and the notion of "primary"; those
 * live in the ring traits below. Elements are a + b*t with t = i or t = w.
 */

#include <array>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>

#include "resmat/error.hpp"
#include "resmat/integer.hpp"

namespace resmat {

struct gaussian_ring {
  static constexpr char symbol = 'i';
  /// Residue symbols take values in the 4th roots of unity.
  static constexpr int symbol_order = 4;
  /// The only ramified rational prime.
  static constexpr std::int64_t ramified_prime = 2;

  static constexpr std::array<std::pair<std::int64_t, std::int64_t>, 4> units{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

  // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
  static constexpr std::pair<i128, i128> mul(i128 a, i128 b, i128 c, i128 d) { return {a * c - b * d, a * d + b * c}; }
  static constexpr i128 norm(i128 a, i128 b) { return a * a + b * b; }
  static constexpr std::pair<i128, i128> conj(i128 a, i128 b) { return {a, -b}; }
  /// Rational primes that stay prime.
  static constexpr bool is_inert(std::int64_t p) { return p % 4 == 3; }
  /// 2-primary: a + bi = 1 or 3 + 2i (mod 4).
  static constexpr bool is_primary(std::int64_t a, std::int64_t b) {
    const auto ra = mod_floor(a, 4), rb = mod_floor(b, 4);
    return (ra == 1 && rb == 0) || (ra == 3 && rb == 2);
  }
  /// r is a root of x^2 + 1 mod p.
  static constexpr bool root_satisfies_min_poly(std::uint64_t r, std::uint64_t p) {
    return (mulmod(r, r, p) + 1) % p == 0;
  }
};

struct eisenstein_ring {
  static constexpr char symbol = 'w';
  static constexpr int symbol_order = 3;
  static constexpr std::int64_t ramified_prime = 3;

  // +-1, +-w, +-w^2 with w^2 = -1 - w
  static constexpr std::array<std::pair<std::int64_t, std::int64_t>, 6> units{
      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}, {1, 1}}};

  // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2 = (ac - bd) + (ad + bc - bd)w
  static constexpr std::pair<i128, i128> mul(i128 a, i128 b, i128 c, i128 d) {
    return {a * c - b * d, a * d + b * c - b * d};
  }
  static constexpr i128 norm(i128 a, i128 b) { return a * a - a * b + b * b; }
  // conj(w) = w^2 = -1 - w
  static constexpr std::pair<i128, i128> conj(i128 a, i128 b) { return {a - b, -b}; }
  static constexpr bool is_inert(std::int64_t p) { return p % 3 == 2; }
  /// 3-primary: a + bw = 1 (mod 3).
  static constexpr bool is_primary(std::int64_t a, std::int64_t b) {
    return mod_floor(a, 3) == 1 && mod_floor(b, 3) == 0;
  }
  /// r is a root of x^2 + x + 1 mod p.
  static constexpr bool root_satisfies_min_poly(std::uint64_t r, std::uint64_t p) {
    return (mulmod(r, r, p) + r + 1) % p == 0;
  }
};

template <class Ring>
class QuadraticInteger {
 public:
  using ring = Ring;

  constexpr QuadraticInteger() = default;
  constexpr QuadraticInteger(std::int64_t a, std::int64_t b = 0) : a_(a), b_(b) {}

  constexpr std::int64_t a() const { return a_; }
  constexpr std::int64_t b() const { return b_; }

  constexpr std::int64_t norm() const { return narrow(Ring::norm(a_, b_)); }
  constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }
  constexpr bool is_unit() const { return norm() == 1; }

  constexpr QuadraticInteger conj() const {
    auto [a, b] = Ring::conj(a_, b_);
    return {narrow(a), narrow(b)};
  }

  constexpr QuadraticInteger operator-() const { return {-a_, -b_}; }

  friend constexpr QuadraticInteger operator+(QuadraticInteger x, QuadraticInteger y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend constexpr QuadraticInteger operator-(QuadraticInteger x, QuadraticInteger y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend constexpr QuadraticInteger operator*(QuadraticInteger x, QuadraticInteger y) {
    auto [a, b] = Ring::mul(x.a_, x.b_, y.a_, y.b_);
    return {narrow(a), narrow(b)};
  }

  friend constexpr bool operator==(QuadraticInteger, QuadraticInteger) = default;
  friend constexpr auto operator<=>(QuadraticInteger, QuadraticInteger) = default;

  /// The four (Gaussian) or six (Eisenstein) associates u * x.
  constexpr auto associates() const {
    std::array<QuadraticInteger, Ring::units.size()> out{};
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = *this * QuadraticInteger(Ring::units[k].first, Ring::units[k].second);
    return out;
  }

  std::string to_string() const {
    if (b_ == 0) return std::to_string(a_);
    std::string out = a_ == 0 ? std::string() : std::to_string(a_);
    if (b_ < 0) out += '-';
    else if (a_ != 0) out += '+';
    const auto mag = b_ < 0 ? -b_ : b_;
    if (mag != 1) out += std::to_string(mag);
    out += Ring::symbol;
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, QuadraticInteger x) { return os << x.to_string(); }

 private:
  static constexpr std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) fail(errc::invalid_argument, "quadratic integer overflows 64 bits");
    return static_cast<std::int64_t>(v);
  }

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

using GaussianInt = QuadraticInteger<gaussian_ring>;
using EisensteinInt = QuadraticInteger<eisenstein_ring>;

namespace detail {
// nearest integer to num/den, den > 0, ties toward +infinity
inline i128 round_div(i128 num, i128 den) {
  i128 twice = 2 * num + den;
  i128 q = twice / (2 * den);
  if (twice % (2 * den) != 0 && twice < 0) --q;
  return q;
}
}  // namespace detail

/// Euclidean division x = q*y + r with N(r) < N(y): the quotient rounds
/// x * conj(y) / N(y) coordinatewise.
template <class Ring>
std::pair<QuadraticInteger<Ring>, QuadraticInteger<Ring>> divmod(QuadraticInteger<Ring> x, QuadraticInteger<Ring> y) {
  require(!y.is_zero(), errc::invalid_argument, "division by zero");
  const auto [ca, cb] = Ring::conj(y.a(), y.b());
  const auto [na, nb] = Ring::mul(x.a(), x.b(), ca, cb);
  const i128 n = Ring::norm(y.a(), y.b());
  const QuadraticInteger<Ring> q(static_cast<std::int64_t>(detail::round_div(na, n)),
                                 static_cast<std::int64_t>(detail::round_div(nb, n)));
  return {q, x - q * y};
}

/// True iff y divides x exactly.
template <class Ring>
bool divides(QuadraticInteger<Ring> y, QuadraticInteger<Ring> x) {
  require(!y.is_zero(), errc::invalid_argument, "division by zero");
  const auto [ca, cb] = Ring::conj(y.a(), y.b());
  const auto [na, nb] = Ring::mul(x.a(), x.b(), ca, cb);
  const i128 n = Ring::norm(y.a(), y.b());
  return na % n == 0 && nb % n == 0;
}

/// A greatest common divisor (defined up to units).
template <class Ring>
QuadraticInteger<Ring> gcd(QuadraticInteger<Ring> x, QuadraticInteger<Ring> y) {
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x;
}

}  // namespace resmat
