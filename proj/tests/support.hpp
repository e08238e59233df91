#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "resmat/resmat.hpp"

// Asserts that `stmt` throws resmat::error with the given code.
#define EXPECT_ERRC(stmt, expected)                                  \
  do {                                                               \
    try {                                                            \
      stmt;                                                          \
      ADD_FAILURE() << "no exception from " #stmt;                   \
    } catch (const resmat::error& e) {                               \
      EXPECT_EQ(e.code(), expected) << e.what();                     \
    }                                                                \
  } while (0)

inline oracle::Grid to_grid(const resmat::SignMatrix& m) {
  oracle::Grid g(m.size(), std::vector<int>(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) g[i][j] = m.sign(i, j);
  return g;
}

inline std::vector<resmat::SignMatrix> all_sign_matrices(std::size_t n) {
  std::vector<resmat::SignMatrix> out;
  for (const auto& g : oracle::all_sign_grids(n)) out.push_back(resmat::SignMatrix::from_signs(g));
  return out;
}

template <int M>
resmat::RootMatrix<M> random_root_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, M - 1);
  return resmat::RootMatrix<M>::generate(n, [&](std::size_t, std::size_t) { return resmat::Root<M>::power(e(rng)); });
}

template <int M>
resmat::RootMatrix<M> random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, M - 1);
  std::vector<std::vector<int>> exps(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) exps[i][j] = exps[j][i] = e(rng);
  return resmat::RootMatrix<M>::generate(n, [&](std::size_t i, std::size_t j) { return resmat::Root<M>::power(exps[i][j]); });
}

inline resmat::Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> image(n);
  for (std::size_t k = 0; k < n; ++k) image[k] = k;
  std::shuffle(image.begin(), image.end(), rng);
  return resmat::Permutation(image);
}
