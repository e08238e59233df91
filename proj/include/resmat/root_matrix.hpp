#pragma once

/**
 * @file root_matrix.hpp
 * @brief Sign matrices over mth roots of unity.
 *
 * An entry is either zero or a root of unity zeta_m^e, stored as the exponent
 * e in [0, m). There is no floating-point representation anywhere: products
 * add exponents, complex conjugation negates them. For m = 2 the exponent 0 is
 * +1 and the exponent 1 is -1.
 *
 * Entries are totally ordered ZERO < zeta^0 < zeta^1 < ... < zeta^(m-1); the
 * canonical form of a matrix is the least row-major entry sequence over all
 * simultaneous row/column permutations under that order.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resmat/error.hpp"

namespace resmat {

template <int M>
concept supported_modulus = (M >= 2 && M <= 4);

/// Zero or an mth root of unity, by exponent.
template <int M>
  requires supported_modulus<M>
class Root {
 public:
  static constexpr int modulus = M;

  constexpr Root() = default;

  static constexpr Root zero() { return Root{}; }

  /// zeta^e, with e reduced mod M.
  static constexpr Root power(int e) {
    Root r;
    r.code_ = static_cast<std::uint8_t>(((e % M) + M) % M + 1);
    return r;
  }

  static constexpr Root one() { return power(0); }

  constexpr bool is_zero() const { return code_ == 0; }

  /// Exponent in [0, M). Meaningless for zero.
  constexpr int exponent() const { return code_ - 1; }

  /// Position in the fixed total order, 0 for ZERO.
  constexpr std::uint8_t code() const { return code_; }

  constexpr Root conj() const { return is_zero() ? *this : power(-exponent()); }

  constexpr Root operator-() const { return is_zero() ? *this : power(exponent() + M / 2); }

  friend constexpr Root operator*(Root a, Root b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return power(a.exponent() + b.exponent());
  }

  friend constexpr bool operator==(Root, Root) = default;
  friend constexpr auto operator<=>(Root a, Root b) { return a.code_ <=> b.code_; }

 private:
  std::uint8_t code_ = 0;
};

/// Display name of an entry: 0, 1, -1 for m=2; 0, 1, w, w2 for m=3;
/// 0, 1, i, -1, -i for m=4.
template <int M>
std::string_view root_name(Root<M> r) {
  if (r.is_zero()) return "0";
  if constexpr (M == 2) {
    constexpr std::string_view names[] = {"1", "-1"};
    return names[r.exponent()];
  } else if constexpr (M == 3) {
    constexpr std::string_view names[] = {"1", "w", "w2"};
    return names[r.exponent()];
  } else {
    constexpr std::string_view names[] = {"1", "i", "-1", "-i"};
    return names[r.exponent()];
  }
}

/// A bijection of {0, ..., n-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
      require(v < image_.size() && !seen[v], errc::invalid_argument,
              "permutation image is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return Permutation(std::move(image));
  }

  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b) {
    auto p = identity(n);
    require(a < n && b < n, errc::invalid_argument, "transposition index out of range");
    std::swap(p.image_[a], p.image_[b]);
    return p;
  }

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }

  Permutation inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// Standard composition: (a o b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  require(a.size() == b.size(), errc::invalid_argument, "permutation sizes differ");
  std::vector<std::size_t> image(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) image[i] = a(b(i));
  return Permutation(std::move(image));
}

/// n x n matrix with zero diagonal and root-of-unity off-diagonal entries.
template <int M>
  requires supported_modulus<M>
class RootMatrix {
 public:
  using entry_type = Root<M>;
  static constexpr int modulus = M;

  RootMatrix() = default;

  RootMatrix(std::size_t n, std::vector<entry_type> entries) : n_(n), entries_(std::move(entries)) {
    require(n_ >= 1, errc::invalid_argument, "matrix dimension must be at least 1");
    require(entries_.size() == n_ * n_, errc::invalid_argument, "entry count is not n*n");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        require((i == j) == at(i, j).is_zero(), errc::invalid_argument,
                "sign matrix needs a zero diagonal and nonzero off-diagonal entries");
  }

  /// Builds from f(i, j) evaluated off the diagonal.
  template <class F>
  static RootMatrix generate(std::size_t n, F&& f) {
    std::vector<entry_type> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) entries[i * n + j] = f(i, j);
    return RootMatrix(n, std::move(entries));
  }

  /// Builds from exponents; diagonal values are ignored.
  static RootMatrix from_exponents(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t n = rows.size();
    std::vector<entry_type> entries;
    entries.reserve(n * n);
    std::size_t i = 0;
    for (const auto& row : rows) {
      require(row.size() == n, errc::invalid_argument, "matrix is not square");
      std::size_t j = 0;
      for (int e : row) entries.push_back(i == j++ ? entry_type::zero() : entry_type::power(e));
      ++i;
    }
    return RootMatrix(n, std::move(entries));
  }

  /// m = 2 only: builds from 0/+1/-1 values.
  static RootMatrix from_signs(std::initializer_list<std::initializer_list<int>> rows)
    requires(M == 2)
  {
    std::vector<std::vector<int>> v;
    for (const auto& row : rows) v.emplace_back(row);
    return from_signs(v);
  }

  static RootMatrix from_signs(const std::vector<std::vector<int>>& rows)
    requires(M == 2)
  {
    const std::size_t n = rows.size();
    std::vector<entry_type> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
      require(row.size() == n, errc::invalid_argument, "matrix is not square");
      for (int v : row) {
        require(v == 0 || v == 1 || v == -1, errc::invalid_argument, "sign entries must be 0 or +-1");
        entries.push_back(v == 0 ? entry_type::zero() : entry_type::power(v == 1 ? 0 : 1));
      }
    }
    return RootMatrix(n, std::move(entries));
  }

  std::size_t size() const { return n_; }
  entry_type at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<entry_type>& entries() const { return entries_; }

  /// m = 2 only: the entry as 0, +1 or -1.
  int sign(std::size_t i, std::size_t j) const
    requires(M == 2)
  {
    const auto e = at(i, j);
    return e.is_zero() ? 0 : (e.exponent() == 0 ? 1 : -1);
  }

  RootMatrix transpose() const {
    return generate(n_, [&](std::size_t i, std::size_t j) { return at(j, i); });
  }

  /// Negates every off-diagonal entry.
  RootMatrix negate() const {
    return generate(n_, [&](std::size_t i, std::size_t j) { return -at(i, j); });
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  bool is_skew_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (at(i, j) != -at(j, i)) return false;
    return true;
  }

  friend bool operator==(const RootMatrix&, const RootMatrix&) = default;

  /// Orders by dimension, then row-major by the entry order.
  friend std::strong_ordering operator<=>(const RootMatrix& a, const RootMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                  b.entries_.begin(), b.entries_.end());
  }

 private:
  std::size_t n_ = 0;
  std::vector<entry_type> entries_;
};

using SignMatrix = RootMatrix<2>;
using CubicMatrix = RootMatrix<3>;
using QuarticMatrix = RootMatrix<4>;

template <int M>
std::ostream& operator<<(std::ostream& os, const RootMatrix<M>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? " " : "") << root_name(m.at(i, j));
  }
  return os << ']';
}

/// A permutation and split size s taking a matrix to block form
/// [[A, B], [B^t, S]] with A an s x s skew-symmetric block and S symmetric.
struct BlockDecomposition {
  Permutation perm;
  std::size_t s = 1;
};

/// result[i][j] = m[sigma(i)][sigma(j)].
template <int M>
RootMatrix<M> conjugate(const RootMatrix<M>& m, const Permutation& sigma) {
  require(sigma.size() == m.size(), errc::invalid_argument, "permutation and matrix dimensions differ");
  return RootMatrix<M>::generate(m.size(), [&](std::size_t i, std::size_t j) { return m.at(sigma(i), sigma(j)); });
}

inline constexpr std::size_t max_canonical_dimension = 8;

namespace detail {

// Branch and bound over the positions of sigma, pruning on the known part of
// row 0; complete permutations are compared entry by entry.
template <int M>
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const RootMatrix<M>& m)
      : m_(m), n_(m.size()), sigma_(n_), used_(n_, false), best_(m.entries()) {}

  std::vector<Root<M>> run() {
    descend(0);
    return best_;
  }

 private:
  void descend(std::size_t k) {
    if (k == n_) {
      for (std::size_t pos = 0; pos < n_ * n_; ++pos) {
        auto v = m_.at(sigma_[pos / n_], sigma_[pos % n_]);
        if (best_[pos] < v) return;
        if (v < best_[pos]) {
          for (; pos < n_ * n_; ++pos) best_[pos] = m_.at(sigma_[pos / n_], sigma_[pos % n_]);
          return;
        }
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      sigma_[k] = v;
      if (prefix_exceeds_best(k)) continue;
      used_[v] = true;
      descend(k + 1);
      used_[v] = false;
    }
  }

  // Row 0 entries (0, 1..k) are fixed once sigma(0..k) is.
  bool prefix_exceeds_best(std::size_t k) const {
    for (std::size_t t = 1; t <= k; ++t) {
      auto cur = m_.at(sigma_[0], sigma_[t]);
      if (cur < best_[t]) return false;
      if (best_[t] < cur) return true;
    }
    return false;
  }

  const RootMatrix<M>& m_;
  std::size_t n_;
  std::vector<std::size_t> sigma_;
  std::vector<bool> used_;
  std::vector<Root<M>> best_;
};

}  // namespace detail

/// Least row-major conjugate of m over all n! permutations. Idempotent and
/// constant on conjugation orbits.
template <int M>
RootMatrix<M> canonical_form(const RootMatrix<M>& m) {
  if (m.size() > max_canonical_dimension)
    fail(errc::unsupported_dimension, "canonical form supports n <= 8");
  return RootMatrix<M>(m.size(), detail::CanonicalSearch<M>(m).run());
}

template <int M>
struct EquivalenceClass {
  RootMatrix<M> representative;
  std::size_t orbit_count = 0;
};

/// Partitions `matrices` by canonical form. Classes come back in ascending
/// order of their representative; orbit counts sum to the input size.
template <int M>
std::vector<EquivalenceClass<M>> equivalence_classes(const std::vector<RootMatrix<M>>& matrices) {
  std::map<RootMatrix<M>, std::size_t> classes;
  for (const auto& m : matrices) {
    require(m.size() == matrices.front().size(), errc::invalid_argument, "matrices have mixed dimensions");
    ++classes[canonical_form(m)];
  }
  std::vector<EquivalenceClass<M>> out;
  out.reserve(classes.size());
  for (auto& [rep, count] : classes) out.push_back({rep, count});
  return out;
}

}  // namespace resmat
