#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mnet/cyclo.hpp"
#include "mnet/scalar_parse.hpp"

using namespace mnet;

namespace {

Cyclo z(unsigned n, long k = 1) { return Cyclo::zeta(n, k); }

Cyclo random_elem(std::mt19937_64& rng, unsigned n, long bound = 5) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, 4);
  detail::QPoly p(euler_phi(n));
  for (auto& c : p) c = Rational(num(rng), den(rng));
  return Cyclo(n, p);
}

// Oracle: solve (multiplication-by-a matrix) * v = 1 by plain Gaussian
// elimination over Q.  Independent of the Euclidean inverse.
Cyclo oracle_inverse(const Cyclo& a) {
  const unsigned n = a.order();
  const std::size_t phi = euler_phi(n);
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1, Rational(0)));
  for (std::size_t j = 0; j < phi; ++j) {
    const Cyclo col = a * z(n, static_cast<long>(j));
    for (std::size_t i = 0; i < phi; ++i) m[i][j] = col.promote(n).coeffs()[i];
  }
  m[0][phi] = 1;
  for (std::size_t c = 0; c < phi; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < phi; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= phi; ++j) m[i][j] -= f * m[c][j];
    }
  }
  detail::QPoly v(phi);
  for (std::size_t i = 0; i < phi; ++i) v[i] = m[i][phi] / m[i][i];
  return Cyclo(n, v);
}

}  // namespace

TEST(Cyclotomic, PolynomialsMatchKnownForms) {
  using V = std::vector<Integer>;
  EXPECT_EQ(cyclotomic_polynomial(1), (V{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), (V{1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (V{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (V{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (V{1, 0, -1, 0, 1}));
  EXPECT_EQ(euler_phi(12), 4u);
}

TEST(Cyclotomic, Addition) {
  const Cyclo a = Rational(3, 7) + z(5, 2);
  EXPECT_EQ(a + Cyclo(0L), a);
  EXPECT_EQ(z(3) + z(3, 2), Cyclo(-1L));
  EXPECT_EQ(Cyclo(Rational(1, 2)) + Cyclo(Rational(1, 3)), Cyclo(Rational(5, 6)));
}

TEST(Cyclotomic, Multiplication) {
  EXPECT_EQ(z(4) * z(4), Cyclo(-1L));
  EXPECT_EQ(z(3) * z(3), Cyclo(-1L) - z(3));
  EXPECT_EQ(z(6) * z(6) * z(6), Cyclo(-1L));
}

TEST(Cyclotomic, Inverse) {
  EXPECT_EQ(inv(Cyclo(2L)), Cyclo(Rational(1, 2)));
  for (unsigned n : {2u, 3u, 5u, 8u, 12u}) EXPECT_EQ(inv(z(n)), z(n, n - 1)) << n;
  const Cyclo a = Cyclo(1L) + z(3);
  const Cyclo v = inv(a);
  EXPECT_EQ(v, oracle_inverse(a));
  EXPECT_EQ(a * v, Cyclo(1L));
  EXPECT_EQ(v, -z(3));
  EXPECT_THROW(inv(Cyclo(0L)), DivisionByZero);
  EXPECT_THROW(Cyclo(1L) / (z(3) + z(3, 2) + Cyclo(1L)), DivisionByZero);
}

TEST(Cyclotomic, MixedOrdersPromote) {
  // zeta_4 * zeta_3 = zeta_12^(3+4)
  EXPECT_EQ(z(4) * z(3), z(12, 7));
  EXPECT_EQ((z(4) * z(3)).order(), 12u);
  EXPECT_EQ(z(2), Cyclo(-1L));
  EXPECT_EQ(z(6, 2), z(3));
}

TEST(Cyclotomic, DemoteRoundTrip) {
  std::mt19937_64 rng(17);
  for (unsigned m : {1u, 2u, 3u, 4u, 5u, 6u}) {
    for (unsigned n : {1u, 2u, 3u, 4u, 6u}) {
      const Cyclo a = random_elem(rng, m);
      const unsigned big = std::lcm(m, n);
      const auto back = a.promote(big).demote(m);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(back->order(), m);
      EXPECT_EQ(back->coeffs(), a.coeffs());
    }
  }
  EXPECT_FALSE(z(4).demote(1).has_value());
  EXPECT_EQ(*(z(3) + z(3, 2)).demote(1), Cyclo(-1L));
}

TEST(Cyclotomic, Conjugation) {
  EXPECT_EQ(z(5).conj(), z(5, 4));
  EXPECT_TRUE((z(5) + z(5, 4)).is_real());
  EXPECT_FALSE(z(3).is_real());
  EXPECT_TRUE(Cyclo(Rational(-7, 3)).is_real());
}

TEST(Cyclotomic, EmbedExamples) {
  auto e1 = embed_complex(Cyclo(1L), 64);
  EXPECT_EQ(e1.real(), 1.0L);
  EXPECT_EQ(e1.imag(), 0.0L);
  auto e4 = embed_complex(z(4), 64);
  EXPECT_LT(std::abs(e4 - std::complex<long double>(0, 1)), 1e-15L);
  auto e3 = embed_complex(z(3) + z(3, 2), 64);
  EXPECT_EQ(e3, std::complex<long double>(-1, 0));  // exact: the element is the rational -1
  const auto w = embed_complex(z(7, 3), 64);
  EXPECT_LT(std::abs(w - std::polar(1.0L, 6.0L * 3.14159265358979323846264338327950288L / 7.0L)), 1e-15L);
}

TEST(CyclotomicProperty, FieldAxioms) {
  std::mt19937_64 rng(20240601);
  int checked = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(trial % 6);
    const Cyclo a = random_elem(rng, n), b = random_elem(rng, n), c = random_elem(rng, n);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    if (!a.is_zero()) ASSERT_EQ(a * inv(a), Cyclo(1L));
    ++checked;
  }
  EXPECT_GE(checked, 1000);
}

TEST(CyclotomicProperty, EmbeddingIsMultiplicative) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(trial % 6);
    const Cyclo a = random_elem(rng, n, 1000), b = random_elem(rng, n, 1000);
    const auto lhs = embed_complex(a * b, 64);
    const auto rhs = embed_complex(a, 64) * embed_complex(b, 64);
    ASSERT_LT(std::abs(lhs - rhs), 1e-10L);
    ASSERT_LT(std::abs(embed_complex(a + b, 64) - embed_complex(a, 64) - embed_complex(b, 64)), 1e-10L);
  }
}

TEST(ScalarLiteral, Grammar) {
  EXPECT_EQ(parse_scalar("1/2 + 3*z^2", 5), Rational(1, 2) + Cyclo(3L) * z(5, 2));
  EXPECT_EQ(parse_scalar("-3/4"), Cyclo(Rational(-3, 4)));
  EXPECT_EQ(parse_scalar("2z", 3), Cyclo(2L) * z(3));
  EXPECT_EQ(parse_scalar("z^-1", 6), z(6, 5));
  EXPECT_EQ(parse_scalar("(1+z)^2", 4), Cyclo(2L) * z(4));
  EXPECT_EQ(parse_scalar("z^3", 3), Cyclo(1L));
  EXPECT_EQ(parse_scalar(" - - 2 "), Cyclo(2L));
}

TEST(ScalarLiteral, ErrorsCarryColumns) {
  try {
    parse_scalar("1 + 0.5", 1, 7, 10);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.column(), 15u);
  }
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar("(1"), ParseError);
  EXPECT_THROW(parse_scalar(""), ParseError);
  EXPECT_THROW(parse_scalar("w"), ParseError);
  EXPECT_THROW(parse_scalar("1 +"), ParseError);
}

TEST(ScalarLiteral, RoundTripsThroughStr) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(i % 12);
    const Cyclo a = random_elem(rng, n);
    EXPECT_EQ(parse_scalar(a.str(), n), a);
    EXPECT_EQ(parse_scalar(a.str(true), n), a);
  }
}
