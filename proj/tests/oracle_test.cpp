#include "support/generators.hpp"
#include "support/oracle.hpp"
#include "untwist/alexander.hpp"

#include <gtest/gtest.h>

using namespace untwist;

namespace {

using Fp = LaurentPoly<PrimeField>;

Fp poly(const PrimeField& k, std::vector<std::int64_t> c) {
  std::vector<std::int64_t> v;
  for (auto x : c) v.push_back(k.from_int(x));
  return Fp(k, std::move(v), 0);
}

// Brute force: no monic factor of degree 1..deg/2.
bool irreducible_by_search(const Fp& f) {
  const PrimeField& k = f.field();
  const std::int64_t p = k.modulus();
  for (std::int64_t d = 1; 2 * d <= f.degree(); ++d) {
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      std::vector<std::int64_t> c;
      std::int64_t x = code;
      for (std::int64_t i = 0; i < d; ++i, x /= p) c.push_back(x % p);
      c.push_back(1);
      if (divmod(f, Fp(k, c, 0)).second.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Oracle, LeibnizSmall) {
  const PrimeField k(5);
  LaurentMatrix<PrimeField> m(k, 2, 2);
  m(0, 0) = poly(k, {1, 1});
  m(0, 1) = poly(k, {2});
  m(1, 0) = poly(k, {0, 1});
  m(1, 1) = poly(k, {3, 0, 1});
  // (1+t)(3+t^2) - 2t
  EXPECT_EQ(oracle::leibniz_det(m), poly(k, {3, 1, 1, 1}));
}

TEST(Oracle, FactorizationReconstructs) {
  std::mt19937_64 rng(41);
  for (std::int64_t p : {2, 3, 5}) {
    const PrimeField k(p);
    for (int trial = 0; trial < 60; ++trial) {
      Fp f = gen::random_poly(rng, k, 12, false, 0.0);
      if (f.degree() <= 0) continue;
      f = f.normalized();
      const auto factors = oracle::irreducible_factors(f, rng);
      Fp rest = f;
      for (const auto& q : factors) {
        ASSERT_TRUE(irreducible_by_search(q)) << q.to_string();
        ASSERT_TRUE(divmod(rest, q).second.is_zero());
        while (divmod(rest, q).second.is_zero()) rest = divmod(rest, q).first;
      }
      ASSERT_EQ(rest.degree(), 0) << f.to_string();
    }
  }
}

TEST(Oracle, KnownFactorizations) {
  std::mt19937_64 rng(42);
  const PrimeField f2(2);
  // t^4 + t = t (t + 1)(t^2 + t + 1); t is a unit
  const auto a = oracle::irreducible_factors(poly(f2, {0, 1, 0, 0, 1}), rng);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], poly(f2, {1, 1}));
  EXPECT_EQ(a[1], poly(f2, {1, 1, 1}));
  // (t + 1)^4 over F_2 has zero derivative
  const auto b = oracle::irreducible_factors(poly(f2, {1, 0, 0, 0, 1}), rng);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], poly(f2, {1, 1}));
}

TEST(Oracle, FrozenWitnessRanks) {
  std::mt19937_64 rng(43);
  const auto v = validate_seifert(IntMatrix{{0, 1}, {2, 0}});
  EXPECT_EQ(oracle::module_rank_by_extension(presentation_matrix(v, PrimeField(2)), rng), 0u);
  EXPECT_EQ(oracle::module_rank_by_extension(presentation_matrix(v, PrimeField(3)), rng), 2u);
  EXPECT_EQ(oracle::module_rank_by_extension(presentation_matrix(v, PrimeField(5)), rng), 1u);
  const auto trefoil = validate_seifert(IntMatrix{{-1, 1}, {0, -1}});
  EXPECT_EQ(oracle::module_rank_by_extension(presentation_matrix(trefoil, PrimeField(2)), rng), 1u);
}

TEST(Oracle, AgreesWithModuleRankOnSeifertMatrices) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 150; ++trial) {
    const auto v = gen::random_seifert(rng, trial % 4);
    for (std::int64_t p : {2, 3, 5}) {
      const PrimeField k(p);
      const auto expected = oracle::module_rank_by_extension(presentation_matrix(v, k), rng);
      ASSERT_EQ(module_rank(v, Field::prime(p)).rank, expected) << "p=" << p;
    }
  }
}

TEST(Oracle, AgreesOnGenusTwoWitness) {
  std::mt19937_64 rng(45);
  const auto w = validate_seifert(IntMatrix{{0, 1, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 2, 0}});
  EXPECT_EQ(oracle::module_rank_by_extension(presentation_matrix(w, PrimeField(3)), rng), 4u);
  EXPECT_EQ(module_rank(w, Field::prime(3)).rank, 4u);
}
