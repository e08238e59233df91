#pragma once

/**
 * @file integer.hpp
 * @brief Rational-integer number theory: primality, Legendre and Jacobi
 * symbols, the Chinese remainder theorem, primes in progressions.
 *
 * All values are 64-bit; products go through unsigned __int128.
 */

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "resmat/error.hpp"

namespace resmat {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

constexpr std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// a mod m in [0, m) for any sign of a.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Deterministic Miller-Rabin; the base set is exact for every 64-bit input.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r && composite; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

inline bool is_prime(std::int64_t n) { return n > 1 && is_prime(static_cast<std::uint64_t>(n)); }

/// Primes p <= bound in ascending order (Eratosthenes, odd-only).
inline std::vector<std::int64_t> sieve_primes(std::int64_t bound) {
  std::vector<std::int64_t> primes;
  if (bound < 2) return primes;
  primes.push_back(2);
  const auto half = static_cast<std::size_t>((bound - 1) / 2);  // index k <-> 2k + 1
  std::vector<bool> composite(half + 1, false);
  for (std::size_t k = 1; k <= half; ++k) {
    if (composite[k]) continue;
    const auto p = static_cast<std::int64_t>(2 * k + 1);
    primes.push_back(p);
    for (auto q = static_cast<std::size_t>(p) * static_cast<std::size_t>(p); q <= static_cast<std::size_t>(bound);
         q += 2 * static_cast<std::size_t>(p))
      composite[q / 2] = true;
  }
  return primes;
}

/// A positive odd rational prime.
class OddPrime {
 public:
  explicit OddPrime(std::int64_t value) : value_(value) {
    require(value >= 3 && (value & 1) && is_prime(value), errc::invalid_argument,
            "expected an odd prime");
  }

  std::int64_t value() const { return value_; }
  operator std::int64_t() const { return value_; }

  friend bool operator==(OddPrime, OddPrime) = default;
  friend auto operator<=>(OddPrime, OddPrime) = default;

 private:
  std::int64_t value_;
};

/// Legendre symbol (a / p) by Euler's criterion: a^((p-1)/2) mod p.
inline int legendre(std::int64_t a, OddPrime p) {
  const auto pv = static_cast<std::uint64_t>(p.value());
  const auto r = static_cast<std::uint64_t>(mod_floor(a, p.value()));
  if (r == 0) return 0;
  return powmod(r, (pv - 1) / 2, pv) == 1 ? 1 : -1;
}

/// Jacobi symbol (a / n) for odd n >= 1, via binary reciprocity (no factoring).
inline int jacobi(std::int64_t a, std::int64_t n) {
  require(n >= 1 && (n & 1), errc::invalid_argument, "Jacobi symbol needs an odd positive modulus");
  auto x = static_cast<std::uint64_t>(mod_floor(a, n));
  auto m = static_cast<std::uint64_t>(n);
  int result = 1;
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      const auto r = m & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, m);
    if ((x & 3) == 3 && (m & 3) == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

/// The unique x in [0, prod moduli) with x = residues[k] mod moduli[k].
inline std::int64_t crt(std::span<const std::int64_t> residues, std::span<const std::int64_t> moduli) {
  require(residues.size() == moduli.size(), errc::invalid_argument, "residue and modulus counts differ");
  for (std::size_t a = 0; a < moduli.size(); ++a) {
    require(moduli[a] >= 1, errc::invalid_argument, "moduli must be positive");
    for (std::size_t b = a + 1; b < moduli.size(); ++b)
      require(std::gcd(moduli[a], moduli[b]) == 1, errc::invalid_argument, "moduli are not pairwise coprime");
  }
  i128 x = 0;
  i128 modulus = 1;
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    const i128 mk = moduli[k];
    require(modulus * mk <= INT64_MAX, errc::invalid_argument, "product of moduli overflows 64 bits");
    // x + modulus * t = r (mod mk)  =>  t = (r - x) * modulus^-1 (mod mk)
    const auto m64 = static_cast<std::int64_t>(mk);
    const std::int64_t diff = mod_floor(static_cast<std::int64_t>(mod_floor(residues[k], m64) - x % mk), m64);
    std::int64_t inv = 1 % m64;
    if (m64 > 1) {
      // extended Euclid on (modulus mod mk, mk)
      std::int64_t r0 = static_cast<std::int64_t>(modulus % mk), r1 = m64, s0 = 1, s1 = 0;
      while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::swap(r0 -= q * r1, r1);
        std::swap(s0 -= q * s1, s1);
      }
      inv = mod_floor(s0, m64);
    }
    const i128 t = static_cast<i128>(diff) * inv % mk;
    x += modulus * t;
    modulus *= mk;
  }
  return static_cast<std::int64_t>(x);
}

inline std::int64_t crt(std::initializer_list<std::int64_t> residues, std::initializer_list<std::int64_t> moduli) {
  return crt(std::span<const std::int64_t>(residues.begin(), residues.size()),
             std::span<const std::int64_t>(moduli.begin(), moduli.size()));
}

/// Smallest prime p = residue (mod modulus) with floor < p <= limit.
inline OddPrime first_prime_in_progression(std::int64_t residue, std::int64_t modulus, std::int64_t floor,
                                           std::int64_t limit) {
  require(modulus >= 1, errc::invalid_argument, "modulus must be positive");
  require(std::gcd(mod_floor(residue, modulus), modulus) == 1, errc::invalid_argument,
          "residue and modulus are not coprime");
  floor = std::max<std::int64_t>(floor, 2);
  const std::int64_t r = mod_floor(residue, modulus);
  // first term of the progression exceeding floor
  std::int64_t x = r + (floor - r >= 0 ? ((floor - r) / modulus + 1) * modulus : 0);
  for (; x <= limit; x += modulus) {
    if (is_prime(x)) return OddPrime(x);
    if (limit - x < modulus) break;
  }
  throw search_exhausted(r, modulus, limit);
}

/// Smallest prime p = residue (mod modulus) with max(modulus, 2) < p <= limit.
inline OddPrime prime_in_progression(std::int64_t residue, std::int64_t modulus, std::int64_t limit) {
  return first_prime_in_progression(residue, modulus, std::max<std::int64_t>(modulus, 2), limit);
}

}  // namespace resmat
