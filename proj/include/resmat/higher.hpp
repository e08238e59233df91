#pragma once

/**
 * @file higher.hpp
 * @brief Cubic and quartic residue matrices.
 *
 * A cubic sign matrix is a cubic residue matrix iff it is symmetric. A
 * quartic sign matrix is a quartic residue matrix iff m[j][k] = +-m[k][j]
 * everywhere and the diagonal of M * conj(M) has the same s-pattern as the
 * quadratic criterion; the skew indices are the generators = 3 + 2i mod 4.
 *
 * Witnesses are found by ordered search over degree-one primes (rational
 * p = 1 mod 3, resp. 1 mod 4), each column of the matrix filtering the
 * candidates by their symbols against the primes already chosen.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resmat/error.hpp"
#include "resmat/integer.hpp"
#include "resmat/qr.hpp"
#include "resmat/quadratic_integer.hpp"
#include "resmat/residue_symbol.hpp"
#include "resmat/root_matrix.hpp"

namespace resmat {

inline constexpr std::int64_t default_norm_limit = 1'000'000;

namespace detail {

template <class Ring>
void require_distinct(std::span<const PrimaryPrime<Ring>> primes) {
  require(!primes.empty(), errc::invalid_argument, "need at least one prime");
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      require(primes[i] != primes[j], errc::invalid_argument, "prime ideals must be distinct");
}

template <class Ring>
RootMatrix<Ring::symbol_order> residue_matrix(std::span<const PrimaryPrime<Ring>> primes) {
  require_distinct(primes);
  return RootMatrix<Ring::symbol_order>::generate(primes.size(), [&](std::size_t i, std::size_t j) {
    return power_residue(primes[i].element(), primes[j]);
  });
}

}  // namespace detail

/// Primary degree-one primes in ascending norm. The two conjugate primes of
/// each norm come in order of their primary generator's a (ascending), then
/// b (descending).
template <class Ring>
class DegreeOnePrimes {
 public:
  explicit DegreeOnePrimes(std::int64_t norm_limit) : limit_(norm_limit) {}

  /// Next candidate, or nullopt once norms would exceed the limit.
  std::optional<PrimaryPrime<Ring>> next() {
    while (pending_.empty()) {
      p_ = next_split_prime(p_);
      if (p_ > limit_) return std::nullopt;
      fill(p_);
    }
    auto out = pending_.back();
    pending_.pop_back();
    return out;
  }

 private:
  static constexpr std::int64_t split_modulus = Ring::symbol_order;  // p = 1 mod 4 / 1 mod 3

  static std::int64_t next_split_prime(std::int64_t p) {
    for (++p;; ++p)
      if (p % split_modulus == 1 && is_prime(p)) return p;
  }

  // A root t of the minimal polynomial mod p; then gcd(p, t - generator)
  // is a prime of norm p.
  static std::uint64_t min_poly_root(std::uint64_t p) {
    for (std::uint64_t c = 2;; ++c) {
      const std::uint64_t t = powmod(c, (p - 1) / split_modulus, p);
      if (Ring::root_satisfies_min_poly(t, p)) return t;
    }
  }

  void fill(std::int64_t p) {
    const auto t = static_cast<std::int64_t>(min_poly_root(static_cast<std::uint64_t>(p)));
    const auto g = gcd(QuadraticInteger<Ring>(p, 0), QuadraticInteger<Ring>(t, -1));
    if (g.norm() != p) fail(errc::internal, "failed to split " + std::to_string(p));
    auto a = primary_generator(g);
    auto b = primary_generator(g.conj());
    auto before = [](const PrimaryPrime<Ring>& x, const PrimaryPrime<Ring>& y) {
      if (x.element().a() != y.element().a()) return x.element().a() < y.element().a();
      return x.element().b() > y.element().b();
    };
    if (before(b, a)) std::swap(a, b);
    pending_ = {b, a};  // popped from the back
  }

  std::int64_t limit_;
  std::int64_t p_ = 1;
  std::vector<PrimaryPrime<Ring>> pending_;
};

// ---------------------------------------------------------------------------
// Cubic

inline CubicMatrix cubic_matrix(std::span<const EisensteinPrimary> primes) {
  return detail::residue_matrix<eisenstein_ring>(primes);
}

inline bool is_cubic_residue_matrix(const CubicMatrix& m) { return m.is_symmetric(); }

/// Distinct primary Eisenstein primes realizing the symmetric matrix m.
inline std::vector<EisensteinPrimary> cubic_witness(const CubicMatrix& m, std::int64_t norm_limit = default_norm_limit) {
  if (!is_cubic_residue_matrix(m)) fail(errc::not_a_member, "not a cubic residue matrix (not symmetric)");
  std::vector<EisensteinPrimary> chosen;
  for (std::size_t l = 0; l < m.size(); ++l) {
    DegreeOnePrimes<eisenstein_ring> candidates(norm_limit);
    for (;;) {
      auto c = candidates.next();
      if (!c) throw search_exhausted("no Eisenstein prime matches column " + std::to_string(l + 1), norm_limit);
      if (std::find(chosen.begin(), chosen.end(), *c) != chosen.end()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < l && ok; ++j) ok = cubic_symbol(chosen[j].element(), *c) == m.at(j, l);
      if (ok) {
        chosen.push_back(*c);
        break;
      }
    }
  }
  if (cubic_matrix(chosen) != m) fail(errc::internal, "cubic witness does not reproduce the matrix");
  return chosen;
}

// ---------------------------------------------------------------------------
// Quartic

struct QuarticDecision {
  bool verdict = false;
  std::optional<std::size_t> s;
  bool pairwise_ok = false;        // m[j][k] = +-m[k][j] everywhere
  std::vector<std::int64_t> diag;  // diagonal of M conj(M); empty unless pairwise_ok
};

inline QuarticMatrix quartic_matrix(std::span<const GaussianPrimary> primes) {
  return detail::residue_matrix<gaussian_ring>(primes);
}

inline QuarticDecision is_quartic_residue_matrix(const QuarticMatrix& m) {
  QuarticDecision d;
  const std::size_t n = m.size();
  d.pairwise_ok = true;
  for (std::size_t j = 0; j < n && d.pairwise_ok; ++j)
    for (std::size_t k = j + 1; k < n && d.pairwise_ok; ++k)
      d.pairwise_ok = (m.at(j, k) * m.at(k, j).conj()).exponent() % 2 == 0;
  if (!d.pairwise_ok) return d;
  d.diag.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) sum += (m.at(j, k) * m.at(k, j).conj()).exponent() == 0 ? 1 : -1;
    d.diag[j] = sum;
  }
  d.s = split_size(d.diag);
  d.verdict = d.s.has_value();
  return d;
}

inline BlockDecomposition quartic_block_form(const QuarticMatrix& m) {
  const auto d = is_quartic_residue_matrix(m);
  if (!d.verdict) fail(errc::not_a_member, "not a quartic residue matrix");
  return detail::block_form_from_diag(d.diag, *d.s);
}

/// True iff the primary generator is = 3 + 2i mod 4 (the other primary class
/// is 1 mod 4).
inline bool is_three_plus_two_i(const GaussianPrimary& p) { return mod_floor(p.element().a(), 4) == 3; }

/// Distinct primary Gaussian primes realizing m. In block order, the first s
/// generators are = 3 + 2i mod 4 and the rest = 1 mod 4.
inline std::vector<GaussianPrimary> quartic_witness(const QuarticMatrix& m, std::int64_t norm_limit = default_norm_limit) {
  const auto bf = quartic_block_form(m);
  const auto b = conjugate(m, bf.perm);
  std::vector<GaussianPrimary> chosen;
  for (std::size_t l = 0; l < m.size(); ++l) {
    const bool want_skew = l < bf.s;
    DegreeOnePrimes<gaussian_ring> candidates(norm_limit);
    for (;;) {
      auto c = candidates.next();
      if (!c) throw search_exhausted("no Gaussian prime matches column " + std::to_string(l + 1), norm_limit);
      if (is_three_plus_two_i(*c) != want_skew) continue;
      if (std::find(chosen.begin(), chosen.end(), *c) != chosen.end()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < l && ok; ++j) ok = quartic_symbol(chosen[j].element(), *c) == b.at(j, l);
      if (ok) {
        chosen.push_back(*c);
        break;
      }
    }
  }
  std::vector<GaussianPrimary> out(chosen);
  for (std::size_t k = 0; k < chosen.size(); ++k) out[bf.perm(k)] = chosen[k];
  if (quartic_matrix(out) != m) fail(errc::internal, "quartic witness does not reproduce the matrix");
  return out;
}

}  // namespace resmat
