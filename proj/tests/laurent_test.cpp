#include "support/generators.hpp"
#include "support/oracle.hpp"
#include "untwist/error.hpp"
#include "untwist/field.hpp"
#include "untwist/laurent.hpp"

#include <gtest/gtest.h>

using namespace untwist;

namespace {

using Fp = LaurentPoly<PrimeField>;
using Qp = LaurentPoly<RationalField>;

Fp poly(const PrimeField& k, std::vector<std::int64_t> c, std::int64_t low = 0) {
  std::vector<std::int64_t> v;
  for (auto x : c) v.push_back(k.from_int(x));
  return Fp(k, std::move(v), low);
}

template <class K>
void check_smith(const LaurentMatrix<K>& m) {
  const auto snf = smith_normal_form(m);
  ASSERT_EQ(snf.left * m * snf.right, snf.diagonal);
  ASSERT_TRUE(snf.diagonal.is_diagonal());
  const auto d = snf.diagonal_entries();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) ASSERT_TRUE(divides(d[i], d[i + 1])) << i;
  for (const auto& x : d)
    if (!x.is_zero()) ASSERT_EQ(x, x.normalized());
  ASSERT_TRUE(determinant(snf.left).is_unit());
  ASSERT_TRUE(determinant(snf.right).is_unit());
}

}  // namespace

TEST(Field, PrimeChecks) {
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(2147483647));
  try {
    PrimeField(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPrimeModulus);
  }
  try {
    PrimeField(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPrimeModulus);
  }
}

TEST(Field, Arithmetic) {
  const PrimeField k(7);
  EXPECT_EQ(k.from_int(-1), 6);
  EXPECT_EQ(k.mul(k.inv(3), 3), 1);
  EXPECT_EQ(k.from_integer(Integer("100000000000000000000")), 2);
  EXPECT_EQ(k.from_integer(Integer("-100000000000000000000")), 5);
  const RationalField q;
  EXPECT_EQ(q.mul(q.inv(Rational(2, 3)), Rational(2, 3)), 1);
}

TEST(Field, Ordering) {
  EXPECT_LT(Field::prime(2), Field::prime(3));
  EXPECT_LT(Field::prime(13), Field::rationals());
  EXPECT_EQ(Field::rationals().name(), "Q");
  EXPECT_EQ(Field::prime(5).name(), "F_5");
  EXPECT_EQ(Field::rationals().characteristic(), 0);
}

TEST(LaurentPoly, CanonicalForm) {
  const PrimeField k(3);
  const Fp p(k, {0, 0, 1, 0}, -1);
  EXPECT_EQ(p.coeffs().size(), 1u);
  EXPECT_EQ(p.lowest_exp(), 1);
  EXPECT_TRUE(p.is_unit());
  EXPECT_TRUE(poly(k, {0, 3, 0}, 2).is_zero());
  EXPECT_EQ(Fp(k).degree(), -1);
}

TEST(LaurentPoly, Arithmetic) {
  const PrimeField k(5);
  const Fp a = poly(k, {1, 1});        // 1 + t
  const Fp b = poly(k, {2, 0, 1}, -1); // 2t^-1 + t
  EXPECT_EQ(a * b, poly(k, {2, 2, 1, 1}, -1));
  EXPECT_EQ(a + b, poly(k, {2, 1, 2}, -1));
  EXPECT_EQ(a - a, Fp(k));
  EXPECT_EQ(b.span(), 2);
  EXPECT_EQ(poly(k, {3, 2}, 4).normalized(), poly(k, {4, 1}));
  EXPECT_EQ(b.reciprocal(), poly(k, {1, 0, 2}, -1));
}

TEST(LaurentPoly, DivisionAndGcd) {
  const PrimeField k(3);
  const Fp f = poly(k, {1, 1}) * poly(k, {1, 0, 1});
  const auto [q, r] = divmod(f, poly(k, {1, 1}));
  EXPECT_EQ(q, poly(k, {1, 0, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(f.shifted(-3), poly(k, {2, 2}, 5)), poly(k, {1, 1}));
  EXPECT_TRUE(divides(poly(k, {1, 1}, 7), f));
  EXPECT_FALSE(divides(poly(k, {2, 1}), f));
  EXPECT_THROW(divmod(f, poly(k, {1}, -1)), std::domain_error);
}

TEST(LaurentPoly, RationalText) {
  const RationalField q;
  const Qp p(q, {Rational(-2), Rational(5), Rational(-2)}, 0);
  EXPECT_EQ(p.to_string(), "-2 + 5*t - 2*t^2");
  EXPECT_EQ(Qp(q, {Rational(1, 2)}, -1).to_string(), "1/2*t^-1");
  EXPECT_EQ(Qp(q).to_string(), "0");
  EXPECT_EQ(p.evaluate(Rational(1)), 1);
}

TEST(Smith, DiagonalChainUnchanged) {
  const PrimeField k(3);
  LaurentMatrix<PrimeField> m(k, 3, 3);
  m(0, 0) = Fp::one(k);
  m(1, 1) = poly(k, {1, 1});
  m(2, 2) = poly(k, {1, 2, 1});
  const auto snf = smith_normal_form(m);
  EXPECT_EQ(snf.diagonal, m);
  EXPECT_EQ(snf.left, LaurentMatrix<PrimeField>::identity(k, 3));
  EXPECT_EQ(snf.right, LaurentMatrix<PrimeField>::identity(k, 3));
}

TEST(Smith, WitnessOverF3) {
  const PrimeField k(3);
  LaurentMatrix<PrimeField> m(k, 2, 2);
  m(0, 1) = poly(k, {1, 1});
  m(1, 0) = poly(k, {2, 2});
  check_smith(m);
  const auto d = smith_normal_form(m).diagonal_entries();
  EXPECT_EQ(d[0], poly(k, {1, 1}));
  EXPECT_EQ(d[1], poly(k, {1, 1}));
}

TEST(Smith, EmptyAndRectangular) {
  const PrimeField k(2);
  const auto e = smith_normal_form(LaurentMatrix<PrimeField>(k, 0, 0));
  EXPECT_TRUE(e.diagonal_entries().empty());
  LaurentMatrix<PrimeField> m(k, 2, 3);
  m(0, 0) = poly(k, {1, 1});
  m(1, 2) = poly(k, {1, 0, 1});
  check_smith(m);
  EXPECT_EQ(smith_normal_form(m).diagonal_entries()[0], poly(k, {1, 1}));
}

TEST(Smith, ZerosLast) {
  const RationalField q;
  LaurentMatrix<RationalField> m(q, 2, 2);
  m(0, 0) = Qp(q);
  m(1, 1) = Qp(q, {Rational(3), Rational(1)}, -2);
  const auto d = smith_normal_form(m).diagonal_entries();
  EXPECT_EQ(d[0], Qp(q, {Rational(3), Rational(1)}, 0).normalized());
  EXPECT_TRUE(d[1].is_zero());
}

TEST(Smith, RandomSoundness) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const PrimeField k(std::array<std::int64_t, 3>{2, 3, 5}[trial % 3]);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    const auto m = gen::random_laurent_matrix(rng, k, dim(rng), dim(rng), 3);
    check_smith(m);
    if (m.rows() == m.cols()) {
      const Fp det = determinant(m);
      ASSERT_EQ(det, oracle::leibniz_det(m));
      Fp product = Fp::one(k);
      for (const auto& x : smith_normal_form(m).diagonal_entries()) product *= x;
      if (det.is_zero()) {
        ASSERT_TRUE(product.is_zero());
      } else {
        ASSERT_EQ(product, det.normalized());
      }
    }
  }
}

TEST(Smith, RationalRandom) {
  std::mt19937_64 rng(22);
  const RationalField q;
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = gen::random_laurent_matrix(rng, q, 3, 3, 2);
    check_smith(m);
    ASSERT_EQ(determinant(m), oracle::leibniz_det(m));
  }
}

TEST(Determinant, NotSquare) {
  const PrimeField k(2);
  EXPECT_THROW(determinant(LaurentMatrix<PrimeField>(k, 2, 3)), Error);
  EXPECT_EQ(determinant(LaurentMatrix<PrimeField>(k, 0, 0)), Fp::one(k));
}
