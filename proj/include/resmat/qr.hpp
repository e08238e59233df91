#pragma once

/**
 * @file qr.hpp
 * @brief Quadratic residue matrices.
 *
 * The QR matrix of distinct odd primes p_1..p_n has (i,j) entry (p_i / p_j).
 * A sign matrix is a QR matrix iff the diagonal of M^2 consists of s copies
 * of n + 1 - 2s and n - s copies of n - 1 for some 1 <= s <= n; equivalently
 * iff it is conjugate to [[A, B], [B^t, S]] with A (s x s) skew-symmetric and
 * S symmetric. The s skew indices are the primes = 3 mod 4.
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
#include "resmat/packed.hpp"
#include "resmat/parallel.hpp"
#include "resmat/root_matrix.hpp"

namespace resmat {

struct QrDecision {
  bool verdict = false;
  std::optional<std::size_t> s;
  std::vector<std::int64_t> diag;  // diagonal of M^2
};

/// Smallest s in 1..n for which `diag` is a permutation of s copies of
/// n + 1 - 2s and n - s copies of n - 1. Shared with the quartic criterion.
inline std::optional<std::size_t> split_size(std::span<const std::int64_t> diag) {
  const auto n = static_cast<std::int64_t>(diag.size());
  for (std::int64_t s = 1; s <= n; ++s) {
    const std::int64_t skew_value = n + 1 - 2 * s;
    const auto skew = std::count(diag.begin(), diag.end(), skew_value);
    const auto sym = std::count(diag.begin(), diag.end(), n - 1);
    const bool ok = skew_value == n - 1 ? sym == n : (skew == s && sym == n - s);
    if (ok) return static_cast<std::size_t>(s);
  }
  return std::nullopt;
}

/// Entry (i,j) = (p_i / p_j); zero diagonal.
inline SignMatrix qr_matrix_from_primes(std::span<const std::int64_t> primes) {
  require(!primes.empty(), errc::invalid_argument, "need at least one prime");
  std::vector<OddPrime> ps;
  for (auto p : primes) ps.emplace_back(p);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      require(ps[i] != ps[j], errc::invalid_argument, "primes must be distinct");
  return SignMatrix::generate(ps.size(), [&](std::size_t i, std::size_t j) {
    return SignMatrix::entry_type::power(legendre(ps[i], ps[j]) == 1 ? 0 : 1);
  });
}

inline SignMatrix qr_matrix_from_primes(std::initializer_list<std::int64_t> primes) {
  return qr_matrix_from_primes(std::span<const std::int64_t>(primes.begin(), primes.size()));
}

inline QrDecision is_qr_matrix(const SignMatrix& m) {
  QrDecision d;
  const std::size_t n = m.size();
  d.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < n; ++j) sum += m.sign(i, j) * m.sign(j, i);
    d.diag[i] = sum;
  }
  d.s = split_size(d.diag);
  d.verdict = d.s.has_value();
  return d;
}

namespace detail {

// Skew indices first (stable), then the rest. With s = 1 every diagonal
// entry equals n - 1 and index 0 is designated the skew singleton.
inline BlockDecomposition block_form_from_diag(std::span<const std::int64_t> diag, std::size_t s) {
  const auto n = static_cast<std::int64_t>(diag.size());
  if (s == 1) return {Permutation::identity(diag.size()), 1};
  std::vector<std::size_t> image;
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (diag[i] == n + 1 - 2 * static_cast<std::int64_t>(s)) image.push_back(i);
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (diag[i] != n + 1 - 2 * static_cast<std::int64_t>(s)) image.push_back(i);
  return {Permutation(std::move(image)), s};
}

}  // namespace detail

/// Permutation and s such that conjugate(m, perm) has block form.
inline BlockDecomposition block_form(const SignMatrix& m) {
  const auto d = is_qr_matrix(m);
  if (!d.verdict) fail(errc::not_a_member, "not a QR matrix");
  return detail::block_form_from_diag(d.diag, *d.s);
}

/// Distinct odd primes whose QR matrix is exactly m.
///
/// Inductive construction on the block form: the first prime is = 3 mod 4;
/// each next prime q_k satisfies q_k = 3 or 1 mod 4 (inside or outside the
/// skew block) and q_k = u_j mod q_j, u_j the least positive residue with
/// (u_j / q_j) equal to the required entry. It is the least prime of that
/// progression. Reciprocity then fixes the entries (q_j / q_k).
inline std::vector<OddPrime> witness_primes(const SignMatrix& m, std::int64_t limit) {
  const auto bf = block_form(m);
  const auto b = conjugate(m, bf.perm);
  const std::size_t n = m.size();
  std::vector<std::int64_t> q;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::int64_t> residues{k < bf.s ? 3 : 1};
    std::vector<std::int64_t> moduli{4};
    for (std::size_t j = 0; j < k; ++j) {
      const OddPrime qj(q[j]);
      std::int64_t u = 1;
      while (legendre(u, qj) != b.sign(k, j)) ++u;
      residues.push_back(u);
      moduli.push_back(q[j]);
    }
    const std::int64_t x = crt(residues, moduli);
    std::int64_t modulus = 1;
    for (auto md : moduli) modulus *= md;
    q.push_back(first_prime_in_progression(x, modulus, 2, limit).value());
  }
  std::vector<std::int64_t> p(n);
  for (std::size_t k = 0; k < n; ++k) p[bf.perm(k)] = q[k];
  if (qr_matrix_from_primes(p) != m) fail(errc::internal, "witness primes do not reproduce the matrix");
  std::vector<OddPrime> out;
  for (auto v : p) out.emplace_back(v);
  return out;
}

/// Entry (i,j) = Jacobi symbol (P_i / P_j) for pairwise coprime odd P_i > 1.
inline SignMatrix jacobi_matrix(std::span<const std::int64_t> values) {
  require(!values.empty(), errc::invalid_argument, "need at least one value");
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(values[i] > 1 && (values[i] & 1), errc::invalid_argument, "values must be odd and greater than 1");
    for (std::size_t j = i + 1; j < values.size(); ++j)
      require(std::gcd(values[i], values[j]) == 1, errc::invalid_argument, "values must be pairwise coprime");
  }
  return SignMatrix::generate(values.size(), [&](std::size_t i, std::size_t j) {
    return SignMatrix::entry_type::power(jacobi(values[i], values[j]) == 1 ? 0 : 1);
  });
}

inline SignMatrix jacobi_matrix(std::initializer_list<std::int64_t> values) {
  return jacobi_matrix(std::span<const std::int64_t>(values.begin(), values.size()));
}

// ---------------------------------------------------------------------------
// Counting

enum class MatrixKind { all, qr, symmetric, skew };

inline constexpr std::size_t min_count_dimension = 2;
inline constexpr std::size_t max_count_dimension = 6;

namespace detail {

inline packed::Layout count_layout(std::size_t n) {
  if (n < min_count_dimension || n > max_count_dimension)
    fail(errc::unsupported_dimension, "counting supports 2 <= n <= 6, got " + std::to_string(n));
  return packed::Layout(n);
}

// Row-major codes of every matrix of the given kind, sorted.
inline std::vector<std::uint64_t> kind_codes(const packed::Layout& layout, MatrixKind kind) {
  const std::size_t pairs = layout.pair_count();
  const std::uint64_t span = std::uint64_t{1} << pairs;
  const std::uint64_t mask = span - 1;
  std::vector<std::uint64_t> codes;
  switch (kind) {
    case MatrixKind::all:
      for (std::uint64_t c = 0; c < (std::uint64_t{1} << layout.code_bits()); ++c) codes.push_back(c);
      break;
    case MatrixKind::symmetric:
      for (std::uint64_t u = 0; u < span; ++u) codes.push_back(layout.code_from_pairs(u, u));
      break;
    case MatrixKind::skew:
      for (std::uint64_t u = 0; u < span; ++u) codes.push_back(layout.code_from_pairs(u, ~u & mask));
      break;
    case MatrixKind::qr:
      // A QR matrix is fixed by its upper triangle and its disagreement mask.
      for (std::uint64_t d = 0; d < span; ++d) {
        if (!packed::split_from_disagreement(layout, d)) continue;
        for (std::uint64_t u = 0; u < span; ++u) codes.push_back(layout.code_from_pairs(u, u ^ d));
      }
      break;
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

}  // namespace detail

/// Exhaustive count of n x n QR matrices over all 2^(n(n-1)) sign matrices.
/// The upper triangles are split across `threads` workers.
inline std::uint64_t count_qr_matrices(std::size_t n, unsigned threads = default_thread_count()) {
  const auto layout = detail::count_layout(n);
  const std::uint64_t span = std::uint64_t{1} << layout.pair_count();
  std::array<std::uint64_t, packed::max_dimension> incident{};
  for (std::size_t i = 0; i < n; ++i) incident[i] = layout.incident(i);
  return parallel_sum(span, threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    std::array<std::uint32_t, packed::max_dimension> degree{};
    for (std::uint64_t upper = begin; upper < end; ++upper) {
      for (std::uint64_t lower = 0; lower < span; ++lower) {
        const std::uint64_t disagree = upper ^ lower;
        for (std::size_t i = 0; i < n; ++i)
          degree[i] = static_cast<std::uint32_t>(std::popcount(disagree & incident[i]));
        count += packed::split_from_degrees(degree.data(), n).has_value();
      }
    }
    return count;
  });
}

/// Number of n x n matrices of the given kind.
inline std::uint64_t count_matrices(MatrixKind kind, std::size_t n, unsigned threads = default_thread_count()) {
  const auto layout = detail::count_layout(n);
  switch (kind) {
    case MatrixKind::qr:
      return count_qr_matrices(n, threads);
    case MatrixKind::all:
      return std::uint64_t{1} << layout.code_bits();
    case MatrixKind::symmetric:
    case MatrixKind::skew:
      return detail::kind_codes(layout, kind).size();
  }
  return 0;
}

/// Permutation-equivalence classes of the given kind, ascending by
/// canonical representative, with orbit sizes.
inline std::vector<EquivalenceClass<2>> matrix_classes(MatrixKind kind, std::size_t n) {
  const auto layout = detail::count_layout(n);
  std::vector<EquivalenceClass<2>> out;
  for (const auto& orbit : packed::orbits(layout, detail::kind_codes(layout, kind)))
    out.push_back({packed::unpack(layout, orbit.representative), orbit.size});
  return out;
}

inline std::uint64_t count_classes(MatrixKind kind, std::size_t n) { return matrix_classes(kind, n).size(); }

inline std::uint64_t count_qr_classes(std::size_t n) { return count_classes(MatrixKind::qr, n); }

/// Every n x n sign matrix of the given kind, ascending (n <= 6).
inline std::vector<SignMatrix> sign_matrices(MatrixKind kind, std::size_t n) {
  const packed::Layout layout(n);
  std::vector<SignMatrix> out;
  if (n == 1) {
    out.push_back(SignMatrix::from_signs({{0}}));
    return out;
  }
  for (auto code : detail::kind_codes(layout, kind)) out.push_back(packed::unpack(layout, code));
  return out;
}

// ---------------------------------------------------------------------------
// Configuration graphs

enum class VertexColor { red, blue };

/// One edge per unordered pair {u < v}. Red-red pairs carry a direction,
/// every other pair a +-1 label.
struct ConfigEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  bool directed = false;
  bool forward = true;  // directed: u -> v when true, v -> u otherwise
  int label = 1;        // undirected: +1 or -1

  friend bool operator==(const ConfigEdge&, const ConfigEdge&) = default;
};

/// Red vertices are primes = 3 mod 4, blue ones = 1 mod 4. An edge a -> b
/// means (p_a / p_b) = +1 and (p_b / p_a) = -1; a label is the common value
/// of both symbols.
struct ConfigGraph {
  std::vector<VertexColor> colors;
  std::vector<ConfigEdge> edges;  // pairs in order (0,1), (0,2), ..., (n-2,n-1)

  std::size_t size() const { return colors.size(); }

  bool is_well_formed() const {
    const std::size_t n = colors.size();
    if (n == 0 || edges.size() != n * (n - 1) / 2) return false;
    std::size_t k = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v, ++k) {
        const auto& e = edges[k];
        if (e.u != u || e.v != v) return false;
        const bool red_pair = colors[u] == VertexColor::red && colors[v] == VertexColor::red;
        if (e.directed != red_pair) return false;
        if (!e.directed && e.label != 1 && e.label != -1) return false;
      }
    return true;
  }

  /// The normal form produced from matrices: at least two red vertices, or
  /// vertex 0 as the only red one. Colourings with at most one red vertex
  /// all encode symmetric matrices and are identified.
  bool is_normalized() const {
    const auto red = std::count(colors.begin(), colors.end(), VertexColor::red);
    return red >= 2 || (red == 1 && colors[0] == VertexColor::red);
  }

  friend bool operator==(const ConfigGraph&, const ConfigGraph&) = default;
};

inline ConfigGraph to_config_graph(const SignMatrix& m) {
  const auto bf = block_form(m);
  const std::size_t n = m.size();
  ConfigGraph g;
  g.colors.assign(n, VertexColor::blue);
  for (std::size_t k = 0; k < bf.s; ++k) g.colors[bf.perm(k)] = VertexColor::red;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      ConfigEdge e{u, v};
      if (g.colors[u] == VertexColor::red && g.colors[v] == VertexColor::red) {
        e.directed = true;
        e.forward = m.sign(u, v) == 1;
      } else {
        e.label = m.sign(u, v);
      }
      g.edges.push_back(e);
    }
  return g;
}

inline SignMatrix from_config_graph(const ConfigGraph& g) {
  require(g.is_well_formed(), errc::invalid_argument, "malformed configuration graph");
  const std::size_t n = g.size();
  std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges) {
    if (e.directed) {
      s[e.u][e.v] = e.forward ? 1 : -1;
      s[e.v][e.u] = -s[e.u][e.v];
    } else {
      s[e.u][e.v] = s[e.v][e.u] = e.label;
    }
  }
  return SignMatrix::from_signs(s);
}

}  // namespace resmat
