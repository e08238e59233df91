#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"

using namespace resmat;

namespace {

template <class Ring>
std::vector<PrimaryPrime<Ring>> degree_one_primes(std::size_t count) {
  DegreeOnePrimes<Ring> gen(1'000'000);
  std::vector<PrimaryPrime<Ring>> out;
  while (out.size() < count) out.push_back(*gen.next());
  return out;
}

template <class Ring>
std::vector<PrimaryPrime<Ring>> random_distinct(const std::vector<PrimaryPrime<Ring>>& pool, std::size_t n,
                                                std::mt19937_64& rng) {
  std::vector<PrimaryPrime<Ring>> pick;
  std::sample(pool.begin(), pool.end(), std::back_inserter(pick), n, rng);
  std::shuffle(pick.begin(), pick.end(), rng);
  return pick;
}

// A quartic matrix shaped like a residue matrix: choose a skew set, then
// entries with m[k][j] = -m[j][k] inside it and m[k][j] = m[j][k] elsewhere.
QuarticMatrix random_quartic_member(std::size_t n, std::mt19937_64& rng) {
  std::vector<bool> skew(n);
  for (std::size_t k = 0; k < n; ++k) skew[k] = rng() & 1;
  std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      e[j][k] = static_cast<int>(rng() % 4);
      e[k][j] = skew[j] && skew[k] ? (e[j][k] + 2) % 4 : e[j][k];
    }
  return QuarticMatrix::generate(n, [&](std::size_t j, std::size_t k) { return Root<4>::power(e[j][k]); });
}

}  // namespace

TEST(DegreeOnePrimes, OrderAndCoverage) {
  const auto cubic = degree_one_primes<eisenstein_ring>(6);
  EXPECT_EQ(cubic[0].element(), EisensteinInt(-2, -3));
  EXPECT_EQ(cubic[0].norm(), 7);
  EXPECT_EQ(cubic[1].norm(), 7);
  EXPECT_EQ(cubic[2].norm(), 13);
  const auto quartic = degree_one_primes<gaussian_ring>(6);
  EXPECT_EQ(quartic[0].element(), GaussianInt(-1, 2));
  EXPECT_EQ(quartic[1].element(), GaussianInt(-1, -2));
  EXPECT_EQ(quartic[2].norm(), 13);

  // every primary prime of prime norm below 2000 appears exactly once
  std::set<GaussianInt> seen;
  DegreeOnePrimes<gaussian_ring> gen(2000);
  std::int64_t last = 0;
  while (auto p = gen.next()) {
    EXPECT_GE(p->norm(), last);
    last = p->norm();
    EXPECT_TRUE(seen.insert(p->element()).second);
  }
  std::size_t expected = 0;
  for (std::int64_t a = -50; a <= 50; ++a)
    for (std::int64_t b = -50; b <= 50; ++b) {
      const GaussianInt x(a, b);
      if (x.norm() > 2 && x.norm() <= 2000 && oracle::is_prime(x.norm()) && is_primary(x)) ++expected;
    }
  EXPECT_EQ(seen.size(), expected);
}

TEST(CubicMatrix, Fixtures) {
  const auto p = EisensteinPrimary::from_primary({-2, -3});
  const auto q = EisensteinPrimary::from_primary({4, 3});
  const std::vector<EisensteinPrimary> pair{p, q};
  EXPECT_EQ(cubic_matrix(pair), CubicMatrix::from_exponents({{0, 1}, {1, 0}}));
  const std::vector<EisensteinPrimary> single{q};
  EXPECT_EQ(cubic_matrix(single), CubicMatrix::from_exponents({{0}}));
  const std::vector<EisensteinPrimary> repeated{p, p};
  EXPECT_ERRC(cubic_matrix(repeated), errc::invalid_argument);
}

TEST(CubicMatrix, MembershipIsSymmetry) {
  EXPECT_TRUE(is_cubic_residue_matrix(CubicMatrix::from_exponents({{0, 1}, {1, 0}})));
  EXPECT_FALSE(is_cubic_residue_matrix(CubicMatrix::from_exponents({{0, 1}, {2, 0}})));
  EXPECT_TRUE(is_cubic_residue_matrix(CubicMatrix::from_exponents({{0}})));
}

TEST(CubicMatrix, FromPrimesAlwaysSymmetric) {
  std::mt19937_64 rng(61);
  DegreeOnePrimes<eisenstein_ring> gen(10000);
  std::vector<EisensteinPrimary> pool;
  while (auto p = gen.next()) pool.push_back(*p);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pick = random_distinct(pool, 2 + trial % 2, rng);
    ASSERT_TRUE(is_cubic_residue_matrix(cubic_matrix(pick)));
  }
}

TEST(CubicWitness, Fixtures) {
  const auto w = cubic_witness(CubicMatrix::from_exponents({{0}}));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].element(), EisensteinInt(-2, -3));
  EXPECT_ERRC(cubic_witness(CubicMatrix::from_exponents({{0, 1}, {2, 0}})), errc::not_a_member);
  EXPECT_ERRC(cubic_witness(CubicMatrix::from_exponents({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}), 10), errc::search_exhausted);
}

TEST(CubicWitness, RoundTripAllSymmetricUpToThree) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
    const std::size_t pairs = n * (n - 1) / 2;
    std::size_t total = 1;
    for (std::size_t k = 0; k < pairs; ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, c /= 3) e[i][j] = e[j][i] = static_cast<int>(c % 3);
      const auto m = CubicMatrix::generate(n, [&](std::size_t i, std::size_t j) { return Root<3>::power(e[i][j]); });
      const auto w = cubic_witness(m);
      ASSERT_EQ(cubic_matrix(w), m);
      ASSERT_EQ(cubic_witness(m), w);
    }
  }
}

TEST(QuarticMatrix, Fixtures) {
  const auto a = GaussianPrimary::from_primary({-1, 2});
  const auto b = GaussianPrimary::from_primary({3, 2});
  const std::vector<GaussianPrimary> pair{a, b};
  EXPECT_EQ(quartic_matrix(pair), QuarticMatrix::from_exponents({{0, 0}, {2, 0}}));
  const std::vector<GaussianPrimary> single{a};
  EXPECT_EQ(quartic_matrix(single), QuarticMatrix::from_exponents({{0}}));
  EXPECT_TRUE(is_three_plus_two_i(a));
  EXPECT_TRUE(is_three_plus_two_i(b));
  EXPECT_FALSE(is_three_plus_two_i(GaussianPrimary::from_primary({1, 4})));
}

TEST(QuarticDecision, Fixtures) {
  const auto d = is_quartic_residue_matrix(QuarticMatrix::from_exponents({{0, 0}, {2, 0}}));
  EXPECT_TRUE(d.verdict);
  EXPECT_TRUE(d.pairwise_ok);
  EXPECT_EQ(d.s, 2u);
  EXPECT_EQ(d.diag, (std::vector<std::int64_t>{-1, -1}));

  const auto bad = is_quartic_residue_matrix(QuarticMatrix::from_exponents({{0, 1}, {0, 0}}));
  EXPECT_FALSE(bad.pairwise_ok);
  EXPECT_FALSE(bad.verdict);
  EXPECT_TRUE(bad.diag.empty());

  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sym = random_symmetric<4>(1 + trial % 5, rng);
    const auto ds = is_quartic_residue_matrix(sym);
    EXPECT_TRUE(ds.verdict);
    EXPECT_EQ(ds.s, 1u);
    const auto bf = quartic_block_form(sym);
    EXPECT_EQ(bf.s, 1u);
    EXPECT_TRUE(bf.perm.is_identity());
  }
}

TEST(QuarticDecision, SignPatternMatchesQuadraticCriterion) {
  // m[j][k] conj(m[k][j]) is a sign matrix entry; the decision must agree with
  // the block-form search on that sign pattern.
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        e[j][k] = static_cast<int>(rng() % 4);
        e[k][j] = (e[j][k] + 2 * static_cast<int>(rng() % 2)) % 4;
      }
    const auto m = QuarticMatrix::generate(n, [&](std::size_t j, std::size_t k) { return Root<4>::power(e[j][k]); });
    oracle::Grid pattern(n, std::vector<int>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (j != k) pattern[j][k] = e[j][k] == e[k][j] ? 1 : (j < k ? 1 : -1);
    const auto d = is_quartic_residue_matrix(m);
    ASSERT_TRUE(d.pairwise_ok);
    ASSERT_EQ(d.verdict, oracle::has_block_form(pattern)) << m;
  }
}

TEST(QuarticBlockForm, Fixtures) {
  const auto two = QuarticMatrix::from_exponents({{0, 0}, {2, 0}});
  const auto bf = quartic_block_form(two);
  EXPECT_TRUE(bf.perm.is_identity());
  EXPECT_EQ(bf.s, 2u);

  // skew pair {1, 2} moved to the front again after conjugation
  const auto m = QuarticMatrix::from_exponents({{0, 1, 3}, {1, 0, 0}, {3, 2, 0}});
  const auto back = quartic_block_form(m);
  EXPECT_EQ(back.s, 2u);
  EXPECT_EQ(back.perm, Permutation(std::vector<std::size_t>{1, 2, 0}));
  EXPECT_ERRC(quartic_block_form(QuarticMatrix::from_exponents({{0, 1}, {0, 0}})), errc::not_a_member);
}

TEST(QuarticWitness, Fixtures) {
  const auto w = quartic_witness(QuarticMatrix::from_exponents({{0}}));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].element(), GaussianInt(-1, 2));
  EXPECT_ERRC(quartic_witness(QuarticMatrix::from_exponents({{0, 1}, {0, 0}})), errc::not_a_member);
}

TEST(QuarticWitness, RoundTripRandom) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = random_quartic_member(2 + trial % 2, rng);
    const auto w = quartic_witness(m);
    ASSERT_EQ(quartic_matrix(w), m);
    const auto bf = quartic_block_form(m);
    for (std::size_t k = 0; k < w.size(); ++k) EXPECT_EQ(is_three_plus_two_i(w[bf.perm(k)]), k < bf.s);
    ASSERT_EQ(quartic_witness(m), w);
  }
}

TEST(QuarticMatrix, FromPrimesSatisfiesCriterion) {
  std::mt19937_64 rng(79);
  DegreeOnePrimes<gaussian_ring> gen(10000);
  std::vector<GaussianPrimary> pool;
  while (auto p = gen.next()) pool.push_back(*p);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pick = random_distinct(pool, 2 + trial % 3, rng);
    const auto m = quartic_matrix(pick);
    const auto d = is_quartic_residue_matrix(m);
    ASSERT_TRUE(d.verdict) << m;
    const auto skew = static_cast<std::size_t>(std::count_if(pick.begin(), pick.end(), is_three_plus_two_i));
    EXPECT_EQ(*d.s, std::max<std::size_t>(skew, 1));
    for (std::size_t j = 0; j < pick.size(); ++j)
      for (std::size_t k = j + 1; k < pick.size(); ++k) {
        const int coupling = (m.at(j, k) * m.at(k, j).conj()).exponent();
        ASSERT_TRUE(coupling == 0 || coupling == 2);
        EXPECT_EQ(coupling == 2, is_three_plus_two_i(pick[j]) && is_three_plus_two_i(pick[k]));
      }
  }
}
