#include "support.hpp"

using namespace resmat;

namespace {

template <int M>
parse_error parse_failure(std::string_view text) {
  try {
    parse_matrix<M>(text);
  } catch (const parse_error& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return parse_error(0, 0, "");
}

}  // namespace

TEST(ParseMatrix, SignMatrices) {
  const auto m = parse_matrix<2>("0 -1 1\n1, 0, -1\n  1 -1 0  # comment\n\n");
  EXPECT_EQ(m, SignMatrix::from_signs({{0, -1, 1}, {1, 0, -1}, {1, -1, 0}}));
  EXPECT_EQ(parse_matrix<2>("# header\n0 +1\n-1 0"), SignMatrix::from_signs({{0, 1}, {-1, 0}}));
  EXPECT_EQ(parse_matrix<2>("0"), SignMatrix::from_signs({{0}}));
}

TEST(ParseMatrix, CyclotomicAlphabets) {
  EXPECT_EQ(parse_matrix<3>("0 w\nw2 0\n"), CubicMatrix::from_exponents({{0, 1}, {2, 0}}));
  EXPECT_EQ(parse_matrix<3>("0,1\n1,0"), CubicMatrix::from_exponents({{0, 0}, {0, 0}}));
  EXPECT_EQ(parse_matrix<4>("0 i -1\n-i 0 1\n1 i 0"), QuarticMatrix::from_exponents({{0, 1, 2}, {3, 0, 0}, {0, 1, 0}}));
}

TEST(ParseMatrix, Diagnostics) {
  auto e = parse_failure<2>("0 2\n1 0\n");
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 3u);

  e = parse_failure<2>("0 1\n1 0 1\n");
  EXPECT_EQ(e.line(), 2u);

  e = parse_failure<2>("0 1\n1 1\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 3u);

  e = parse_failure<2>("0 1\n0 0\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 1u);

  e = parse_failure<3>("0 i\ni 0\n");
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 3u);

  parse_failure<2>("");
  parse_failure<2>("# only a comment\n");
  parse_failure<4>("0 1 1\n1 0 1\n");
}

TEST(FormatMatrix, RoundTrip) {
  const auto m = QuarticMatrix::from_exponents({{0, 1, 2}, {3, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(format_matrix(m), "0 i -1\n-i 0 1\n1 i 0\n");
  EXPECT_EQ(parse_matrix<4>(format_matrix(m)), m);
  const auto s = SignMatrix::from_signs({{0, -1}, {1, 0}});
  EXPECT_EQ(parse_matrix<2>(format_matrix(s)), s);
}

TEST(ParseQuadratic, Elements) {
  EXPECT_EQ(parse_quadratic<gaussian_ring>("3+2i"), GaussianInt(3, 2));
  EXPECT_EQ(parse_quadratic<gaussian_ring>(" -1 + 2i "), GaussianInt(-1, 2));
  EXPECT_EQ(parse_quadratic<gaussian_ring>("-i"), GaussianInt(0, -1));
  EXPECT_EQ(parse_quadratic<gaussian_ring>("5"), GaussianInt(5, 0));
  EXPECT_EQ(parse_quadratic<gaussian_ring>("2i+1"), GaussianInt(1, 2));
  EXPECT_EQ(parse_quadratic<eisenstein_ring>("-2-3w"), EisensteinInt(-2, -3));
  EXPECT_EQ(parse_quadratic<eisenstein_ring>("4+3w"), EisensteinInt(4, 3));
  EXPECT_EQ(parse_quadratic<eisenstein_ring>("w"), EisensteinInt(0, 1));
  EXPECT_ERRC(parse_quadratic<gaussian_ring>("3+2w"), errc::invalid_argument);
  EXPECT_ERRC(parse_quadratic<gaussian_ring>("1+2"), errc::invalid_argument);
  EXPECT_ERRC(parse_quadratic<gaussian_ring>("i+i"), errc::invalid_argument);
  EXPECT_ERRC(parse_quadratic<gaussian_ring>(""), errc::invalid_argument);
  EXPECT_ERRC(parse_quadratic<gaussian_ring>("3+"), errc::invalid_argument);
}

TEST(ParseQuadratic, ToStringRoundTrip) {
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b) {
      const GaussianInt g(a, b);
      const EisensteinInt e(a, b);
      EXPECT_EQ(parse_quadratic<gaussian_ring>(g.to_string()), g);
      EXPECT_EQ(parse_quadratic<eisenstein_ring>(e.to_string()), e);
    }
}

TEST(FormatDecimal, RoundHalfEven) {
  EXPECT_EQ(format_decimal(Rational(1, 1), 6), "1.000000");
  EXPECT_EQ(format_decimal(Rational(0, 1), 6), "0.000000");
  EXPECT_EQ(format_decimal(Rational(1, 3), 6), "0.333333");
  EXPECT_EQ(format_decimal(Rational(2, 3), 6), "0.666667");
  EXPECT_EQ(format_decimal(Rational(1, 8), 2), "0.12");
  EXPECT_EQ(format_decimal(Rational(3, 8), 2), "0.38");
  EXPECT_EQ(format_decimal(Rational(5, 2), 0), "2");
  EXPECT_ERRC(format_decimal(Rational(-1, 8), 2), errc::invalid_argument);
  EXPECT_EQ(format_decimal(Rational(11378, 306386), 6), "0.037136");
}
