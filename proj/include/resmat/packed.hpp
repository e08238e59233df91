#pragma once

/**
 * @file packed.hpp
 * @brief Sign matrices of dimension n <= 8 packed into one 64-bit word.
 *
 * Two layouts are used:
 *
 *  - the row-major code: the n(n-1) off-diagonal entries in row-major order,
 *    first entry in the most significant position, bit set for -1. Numeric
 *    order of codes equals the canonical-form order on matrices, so the least
 *    code in an orbit is the canonical form.
 *
 *  - the pair layout used by the counting kernels: for each unordered pair
 *    p = {i < j} one "upper" bit (entry (i,j)) and one "lower" bit (entry
 *    (j,i)). Their XOR marks the pairs where m[i][j] m[j][i] = -1, so
 *    diag(M^2)_i = (n - 1) - 2 * popcount(disagree & incident(i)).
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "resmat/error.hpp"
#include "resmat/root_matrix.hpp"

namespace resmat::packed {

inline constexpr std::size_t max_dimension = 8;

class Layout {
 public:
  explicit Layout(std::size_t n) : n_(n) {
    require(n >= 1 && n <= max_dimension, errc::unsupported_dimension, "packed layout supports 1 <= n <= 8");
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        pair_index_[i][j] = pair_index_[j][i] = p;
        pairs_[p] = {i, j};
        incident_[i] |= std::uint64_t{1} << p;
        incident_[j] |= std::uint64_t{1} << p;
        ++p;
      }
  }

  std::size_t dimension() const { return n_; }
  std::size_t code_bits() const { return n_ * (n_ - 1); }
  std::size_t pair_count() const { return n_ * (n_ - 1) / 2; }

  /// Bit position of entry (i, j), i != j, in the row-major code.
  std::size_t bit(std::size_t i, std::size_t j) const {
    const std::size_t idx = i * (n_ - 1) + (j < i ? j : j - 1);
    return code_bits() - 1 - idx;
  }

  std::size_t pair_index(std::size_t i, std::size_t j) const { return pair_index_[i][j]; }
  std::array<std::size_t, 2> pair(std::size_t p) const { return pairs_[p]; }

  /// Pair-layout mask of the n - 1 pairs touching vertex i.
  std::uint64_t incident(std::size_t i) const { return incident_[i]; }

  /// Row-major code of the matrix with the given upper/lower pair bits.
  std::uint64_t code_from_pairs(std::uint64_t upper, std::uint64_t lower) const {
    std::uint64_t code = 0;
    for (std::size_t p = 0; p < pair_count(); ++p) {
      const auto [i, j] = pairs_[p];
      if ((upper >> p) & 1) code |= std::uint64_t{1} << bit(i, j);
      if ((lower >> p) & 1) code |= std::uint64_t{1} << bit(j, i);
    }
    return code;
  }

 private:
  std::size_t n_;
  std::array<std::array<std::size_t, max_dimension>, max_dimension> pair_index_{};
  std::array<std::array<std::size_t, 2>, max_dimension*(max_dimension - 1) / 2> pairs_{};
  std::array<std::uint64_t, max_dimension> incident_{};
};

inline std::uint64_t pack(const SignMatrix& m) {
  const Layout layout(m.size());
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j && m.sign(i, j) < 0) code |= std::uint64_t{1} << layout.bit(i, j);
  return code;
}

inline SignMatrix unpack(const Layout& layout, std::uint64_t code) {
  return SignMatrix::generate(layout.dimension(), [&](std::size_t i, std::size_t j) {
    return SignMatrix::entry_type::power(static_cast<int>((code >> layout.bit(i, j)) & 1));
  });
}

/// Split size s for a matrix whose pair-disagreement degrees are `degree`.
///
/// diag(M^2)_i = n - 1 - 2 degree_i, so the diagonal pattern "s copies of
/// n + 1 - 2s, the rest n - 1" says exactly: s vertices of degree s - 1 and
/// every other vertex of degree 0. Returns the smallest such s.
inline std::optional<std::size_t> split_from_degrees(const std::uint32_t* degree, std::size_t n) {
  std::size_t touched = 0;
  std::uint32_t common = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] == 0) continue;
    if (touched++ == 0) common = degree[i];
    else if (degree[i] != common) return std::nullopt;
  }
  if (touched == 0) return std::size_t{1};
  if (common + 1 != touched) return std::nullopt;
  return touched;
}

/// Criterion on a pair-disagreement mask.
inline std::optional<std::size_t> split_from_disagreement(const Layout& layout, std::uint64_t disagree) {
  std::array<std::uint32_t, max_dimension> degree{};
  for (std::size_t i = 0; i < layout.dimension(); ++i)
    degree[i] = static_cast<std::uint32_t>(std::popcount(disagree & layout.incident(i)));
  return split_from_degrees(degree.data(), layout.dimension());
}

/// All n! conjugations as bit maps on the row-major code.
class ConjugationTable {
 public:
  explicit ConjugationTable(const Layout& layout) : layout_(layout) {
    const std::size_t n = layout.dimension();
    const std::size_t bits = layout.code_bits();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    do {
      // result[i][j] = m[sigma(i)][sigma(j)]: source bit (sigma i, sigma j)
      // lands on target bit (i, j).
      std::array<std::uint8_t, max_dimension*(max_dimension - 1)> target{};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) target[layout.bit(sigma[i], sigma[j])] = static_cast<std::uint8_t>(layout.bit(i, j));
      maps_.emplace_back(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(bits));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  std::size_t size() const { return maps_.size(); }

  std::uint64_t apply(std::size_t which, std::uint64_t code) const {
    const auto& target = maps_[which];
    std::uint64_t out = 0;
    while (code) {
      const int b = std::countr_zero(code);
      out |= std::uint64_t{1} << target[static_cast<std::size_t>(b)];
      code &= code - 1;
    }
    return out;
  }

 private:
  Layout layout_;
  std::vector<std::vector<std::uint8_t>> maps_;
};

struct Orbit {
  std::uint64_t representative = 0;  // least code in the orbit
  std::size_t size = 0;
};

/// Orbits of a conjugation-closed set of codes. `codes` must be sorted and
/// unique; orbits are returned in ascending order of representative.
inline std::vector<Orbit> orbits(const Layout& layout, const std::vector<std::uint64_t>& codes) {
  const ConjugationTable table(layout);
  std::vector<bool> seen(codes.size(), false);
  std::vector<Orbit> out;
  for (std::size_t k = 0; k < codes.size(); ++k) {
    if (seen[k]) continue;
    Orbit orbit{codes[k], 0};
    for (std::size_t t = 0; t < table.size(); ++t) {
      const std::uint64_t image = table.apply(t, codes[k]);
      const auto it = std::lower_bound(codes.begin(), codes.end(), image);
      if (it == codes.end() || *it != image) fail(errc::internal, "code set is not closed under conjugation");
      const auto idx = static_cast<std::size_t>(it - codes.begin());
      if (!seen[idx]) {
        seen[idx] = true;
        ++orbit.size;
      }
    }
    out.push_back(orbit);
  }
  return out;
}

}  // namespace resmat::packed
