#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "support.hpp"

using namespace resmat;

namespace {

const SignMatrix m3713 = SignMatrix::from_signs({{0, -1, 1}, {1, 0, -1}, {1, -1, 0}});

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::vector<Permutation> out;
  do out.emplace_back(image);
  while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::vector<SignMatrix> symmetric_matrices(std::size_t n) {
  std::vector<SignMatrix> out;
  for (const auto& m : all_sign_matrices(n))
    if (m.is_symmetric()) out.push_back(m);
  return out;
}

std::vector<SignMatrix> skew_matrices(std::size_t n) {
  std::vector<SignMatrix> out;
  for (const auto& m : all_sign_matrices(n))
    if (m.is_skew_symmetric()) out.push_back(m);
  return out;
}

}  // namespace

TEST(Root, ExponentArithmeticWrapsModM) {
  EXPECT_EQ(Root<3>::power(2) * Root<3>::power(2), Root<3>::power(1));
  EXPECT_EQ(Root<4>::power(1).conj(), Root<4>::power(3));
  EXPECT_EQ(-Root<4>::power(1), Root<4>::power(3));
  EXPECT_EQ(-Root<2>::one(), Root<2>::power(1));
  EXPECT_TRUE(Root<4>::zero().is_zero());
  EXPECT_LT(Root<3>::zero(), Root<3>::power(0));
  EXPECT_LT(Root<3>::power(0), Root<3>::power(2));
}

TEST(Root, Names) {
  EXPECT_EQ(root_name(Root<2>::power(1)), "-1");
  EXPECT_EQ(root_name(Root<3>::power(2)), "w2");
  EXPECT_EQ(root_name(Root<4>::power(3)), "-i");
  EXPECT_EQ(root_name(Root<4>::zero()), "0");
}

TEST(RootMatrix, RejectsBadDiagonalOrShape) {
  EXPECT_ERRC(SignMatrix::from_signs({{1, 1}, {1, 0}}), errc::invalid_argument);
  EXPECT_ERRC(SignMatrix::from_signs({{0, 0}, {1, 0}}), errc::invalid_argument);
  EXPECT_ERRC(SignMatrix::from_signs({{0, 1, 1}, {1, 0}}), errc::invalid_argument);
  EXPECT_ERRC(SignMatrix::from_signs({{0, 2}, {1, 0}}), errc::invalid_argument);
  EXPECT_NO_THROW(SignMatrix::from_signs({{0}}));
}

TEST(Conjugate, IdentityIsNeutral) { EXPECT_EQ(conjugate(m3713, Permutation::identity(3)), m3713); }

TEST(Conjugate, SwapFirstTwoIndices) {
  const auto expected = SignMatrix::from_signs({{0, 1, -1}, {-1, 0, 1}, {-1, 1, 0}});
  EXPECT_EQ(conjugate(m3713, Permutation::transposition(3, 0, 1)), expected);
}

TEST(Conjugate, InverseUndoes) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_root_matrix<4>(5, rng);
    const auto sigma = random_permutation(5, rng);
    EXPECT_EQ(conjugate(conjugate(m, sigma), sigma.inverse()), m);
  }
}

TEST(Conjugate, DimensionMismatch) { EXPECT_ERRC(conjugate(m3713, Permutation::identity(4)), errc::invalid_argument); }

TEST(Conjugate, GroupActionExhaustiveSmall) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& m : all_sign_matrices(n))
      for (const auto& s : perms)
        for (const auto& t : perms) ASSERT_EQ(conjugate(m, compose(s, t)), conjugate(conjugate(m, s), t));
  }
}

TEST(Conjugate, GroupActionRandomized) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto m = random_root_matrix<3>(n, rng);
    const auto s = random_permutation(n, rng), t = random_permutation(n, rng);
    ASSERT_EQ(conjugate(m, compose(s, t)), conjugate(conjugate(m, s), t));
  }
}

TEST(CanonicalForm, MatchesBruteForceMinimum) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& m : all_sign_matrices(n)) ASSERT_EQ(to_grid(canonical_form(m)), oracle::canonical(to_grid(m)));
}

TEST(CanonicalForm, IdempotentAndOrbitConstant) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto m = random_root_matrix<2>(n, rng);
    const auto c = canonical_form(m);
    EXPECT_EQ(canonical_form(c), c);
    EXPECT_EQ(canonical_form(conjugate(m, random_permutation(n, rng))), c);
    const auto q = random_root_matrix<4>(n, rng);
    EXPECT_EQ(canonical_form(conjugate(q, random_permutation(n, rng))), canonical_form(q));
  }
}

TEST(CanonicalForm, IsAnOrbitMember) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_root_matrix<3>(4, rng);
    const auto c = canonical_form(m);
    bool found = false;
    for (const auto& s : all_permutations(4)) {
      const auto h = conjugate(m, s);
      EXPECT_LE(c, h);
      found = found || h == c;
    }
    EXPECT_TRUE(found);
  }
}

TEST(CanonicalForm, DimensionLimit) {
  std::mt19937_64 rng(1);
  EXPECT_NO_THROW(canonical_form(random_root_matrix<2>(8, rng)));
  EXPECT_ERRC(canonical_form(random_root_matrix<2>(9, rng)), errc::unsupported_dimension);
}

TEST(EquivalenceClasses, ReducedSymmetricThreeByThree) {
  // 3 x 3 sign matrices of block shape with a 1 x 1 skew block: symmetric.
  const auto sym = symmetric_matrices(3);
  ASSERT_EQ(sym.size(), 8u);
  const auto classes = equivalence_classes(sym);
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.orbit_count);
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 3, 3}));
}

TEST(EquivalenceClasses, SymmetricAndSkewCounts) {
  const std::map<std::size_t, std::size_t> symmetric{{2, 2}, {3, 4}, {4, 11}, {5, 34}};
  const std::map<std::size_t, std::size_t> skew{{2, 1}, {3, 2}, {4, 4}, {5, 12}};
  for (auto [n, expected] : symmetric) EXPECT_EQ(equivalence_classes(symmetric_matrices(n)).size(), expected) << n;
  for (auto [n, expected] : skew) EXPECT_EQ(equivalence_classes(skew_matrices(n)).size(), expected) << n;
}

TEST(EquivalenceClasses, PartitionsInput) {
  const auto all = all_sign_matrices(3);
  const auto classes = equivalence_classes(all);
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.orbit_count;
    EXPECT_EQ(canonical_form(c.representative), c.representative);
  }
  EXPECT_EQ(total, all.size());
  EXPECT_TRUE(std::is_sorted(classes.begin(), classes.end(),
                             [](const auto& a, const auto& b) { return a.representative < b.representative; }));
}

TEST(EquivalenceClasses, SingletonAndMixed) {
  const auto one = equivalence_classes(std::vector<SignMatrix>{m3713});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].orbit_count, 1u);
  EXPECT_ERRC(equivalence_classes(std::vector<SignMatrix>{m3713, SignMatrix::from_signs({{0, 1}, {1, 0}})}),
              errc::invalid_argument);
}

TEST(Packed, RoundTripAndOrderMatchesMatrixOrder) {
  const packed::Layout layout(3);
  const auto all = all_sign_matrices(3);
  for (const auto& m : all) EXPECT_EQ(packed::unpack(layout, packed::pack(m)), m);
  for (std::size_t k = 0; k + 1 < all.size(); ++k) {
    EXPECT_LT(all[k], all[k + 1]);
    EXPECT_LT(packed::pack(all[k]), packed::pack(all[k + 1]));
  }
}

TEST(Packed, ConjugationTableMatchesConjugate) {
  const packed::Layout layout(4);
  const packed::ConjugationTable table(layout);
  std::mt19937_64 rng(9);
  const auto perms = all_permutations(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_root_matrix<2>(4, rng);
    ASSERT_EQ(table.size(), perms.size());
    for (std::size_t k = 0; k < perms.size(); ++k)
      EXPECT_EQ(table.apply(k, packed::pack(m)), packed::pack(conjugate(m, perms[k])));
  }
}
