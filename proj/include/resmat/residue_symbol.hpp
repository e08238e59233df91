#pragma once

/**
 * @file residue_symbol.hpp
 * @brief Primary generators and the cubic / quartic residue symbols.
 *
 * For a prime q of Z[w] (resp. Z[i]) not dividing 3 (resp. 2), the symbol
 * (x / q) is the unique root of unity zeta^e congruent to x^((Nq - 1)/m)
 * modulo q, with m = 3 (resp. 4). Exponents cross every interface.
 *
 * Two residue-ring routes are implemented:
 *  - degree-1 primes (Nq = p rational prime): Z[t]/(q) = F_p, with t sent to
 *    -a/b mod p for q = a + bt;
 *  - any prime: Euclidean reduction in Z[t] modulo q, matching the result
 *    against zeta^e by divisibility.
 */

#include <cstdint>
#include <optional>

#include "resmat/error.hpp"
#include "resmat/integer.hpp"
#include "resmat/quadratic_integer.hpp"
#include "resmat/root_matrix.hpp"

namespace resmat {

/// True iff x is a prime element: N(x) is a rational prime, or x is an
/// associate of an inert rational prime.
template <class Ring>
bool is_prime_element(QuadraticInteger<Ring> x) {
  require(!x.is_zero() && !x.is_unit(), errc::invalid_argument, "zero and units are not prime elements");
  if (is_prime(x.norm())) return true;
  for (auto y : x.associates()) {
    if (y.b() == 0 && y.a() > 0) return is_prime(y.a()) && Ring::is_inert(y.a());
  }
  return false;
}

template <class Ring>
bool is_primary(QuadraticInteger<Ring> x) {
  return Ring::is_primary(x.a(), x.b());
}

/// A prime element not over the ramified prime, normalized to its unique
/// primary associate (1 mod 3 in Z[w]; 1 or 3+2i mod 4 in Z[i]).
template <class Ring>
class PrimaryPrime {
 public:
  using element_type = QuadraticInteger<Ring>;

  /// Accepts x only if it already is a primary prime.
  static PrimaryPrime from_primary(element_type x) {
    check_prime(x);
    require(is_primary(x), errc::invalid_argument, "element is not primary");
    return PrimaryPrime(x);
  }

  element_type element() const { return x_; }
  std::int64_t norm() const { return x_.norm(); }
  bool is_degree_one() const { return is_prime(x_.norm()); }

  friend bool operator==(const PrimaryPrime&, const PrimaryPrime&) = default;
  friend auto operator<=>(const PrimaryPrime&, const PrimaryPrime&) = default;
  friend std::ostream& operator<<(std::ostream& os, const PrimaryPrime& p) { return os << p.x_; }

 private:
  template <class R>
  friend PrimaryPrime<R> primary_generator(QuadraticInteger<R>);

  explicit PrimaryPrime(element_type x) : x_(x) {}

  static void check_prime(element_type x) {
    require(is_prime_element(x), errc::invalid_argument, "element is not prime");
    if (x.norm() % Ring::ramified_prime == 0)
      fail(errc::ramified_prime, "prime " + x.to_string() + " lies over the ramified prime");
  }

  element_type x_;
};

using GaussianPrimary = PrimaryPrime<gaussian_ring>;
using EisensteinPrimary = PrimaryPrime<eisenstein_ring>;

/// The unique primary associate of the prime element x.
template <class Ring>
PrimaryPrime<Ring> primary_generator(QuadraticInteger<Ring> x) {
  PrimaryPrime<Ring>::check_prime(x);
  for (auto y : x.associates())
    if (is_primary(y)) return PrimaryPrime<Ring>(y);
  fail(errc::internal, "no primary associate of " + x.to_string());
}

namespace detail {

template <class Ring>
using SymbolRoot = Root<Ring::symbol_order>;

template <class Ring>
QuadraticInteger<Ring> zeta_power(int e) {
  // i^e or w^e
  QuadraticInteger<Ring> z(1, 0);
  for (int k = 0; k < e; ++k) z = z * QuadraticInteger<Ring>(0, 1);
  return z;
}

/// F_p route; requires N(q) = p prime.
template <class Ring>
SymbolRoot<Ring> symbol_degree_one(QuadraticInteger<Ring> x, QuadraticInteger<Ring> q) {
  const auto p = static_cast<std::uint64_t>(q.norm());
  const auto b = static_cast<std::uint64_t>(mod_floor(q.b(), q.norm()));
  const auto a = static_cast<std::uint64_t>(mod_floor(q.a(), q.norm()));
  // b != 0 mod p, else p | a and p | b, so p^2 | N(q)
  const std::uint64_t t = mulmod((p - a) % p, powmod(b, p - 2, p), p);
  if (!Ring::root_satisfies_min_poly(t, p)) fail(errc::internal, "residue field map is inconsistent");
  auto image = [&](QuadraticInteger<Ring> y) {
    return (static_cast<std::uint64_t>(mod_floor(y.a(), q.norm())) +
            mulmod(static_cast<std::uint64_t>(mod_floor(y.b(), q.norm())), t, p)) %
           p;
  };
  const std::uint64_t base = image(x);
  if (base == 0) fail(errc::not_coprime, x.to_string() + " is divisible by " + q.to_string());
  const std::uint64_t v = powmod(base, (p - 1) / Ring::symbol_order, p);
  std::uint64_t z = 1;
  for (int e = 0; e < Ring::symbol_order; ++e, z = mulmod(z, t, p))
    if (v == z) return SymbolRoot<Ring>::power(e);
  fail(errc::internal, "power is not a root of unity modulo " + q.to_string());
}

template <class Ring>
QuadraticInteger<Ring> reduce(QuadraticInteger<Ring> x, QuadraticInteger<Ring> q) {
  return divmod(x, q).second;
}

/// Euclidean route; valid for every prime q, degree 1 or inert.
template <class Ring>
SymbolRoot<Ring> symbol_euclidean(QuadraticInteger<Ring> x, QuadraticInteger<Ring> q) {
  auto base = reduce(x, q);
  if (base.is_zero()) fail(errc::not_coprime, x.to_string() + " is divisible by " + q.to_string());
  auto exp = static_cast<std::uint64_t>((q.norm() - 1) / Ring::symbol_order);
  QuadraticInteger<Ring> acc(1, 0);
  while (exp) {
    if (exp & 1) acc = reduce(acc * base, q);
    base = reduce(base * base, q);
    exp >>= 1;
  }
  for (int e = 0; e < Ring::symbol_order; ++e)
    if (divides(q, acc - zeta_power<Ring>(e))) return SymbolRoot<Ring>::power(e);
  fail(errc::internal, "power is not a root of unity modulo " + q.to_string());
}

template <class Ring>
SymbolRoot<Ring> power_residue(QuadraticInteger<Ring> x, const PrimaryPrime<Ring>& q) {
  return q.is_degree_one() ? symbol_degree_one(x, q.element()) : symbol_euclidean(x, q.element());
}

}  // namespace detail

/// (x / q)_3 as the exponent e of w^e.
inline Root<3> cubic_symbol(EisensteinInt x, const EisensteinPrimary& q) { return detail::power_residue(x, q); }

/// (x / q)_4 as the exponent e of i^e.
inline Root<4> quartic_symbol(GaussianInt x, const GaussianPrimary& q) { return detail::power_residue(x, q); }

/// Quartic reciprocity for distinct primary p, q:
/// (p/q)_4 * conj((q/p)_4) = (-1)^(((Np-1)/4) ((Nq-1)/4)).
inline bool check_quartic_reciprocity(const GaussianPrimary& p, const GaussianPrimary& q) {
  require(p != q, errc::invalid_argument, "quartic reciprocity needs two distinct primes");
  const auto lhs = quartic_symbol(p.element(), q) * quartic_symbol(q.element(), p).conj();
  const std::int64_t parity = (((p.norm() - 1) / 4) % 2) * (((q.norm() - 1) / 4) % 2);
  return lhs == Root<4>::power(parity == 0 ? 0 : 2);
}

}  // namespace resmat
