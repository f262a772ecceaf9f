#include <gtest/gtest.h>

#include "krfusion/kostka.hpp"

using namespace krfusion;

namespace {

LaurentPoly q(std::int64_t e) { return LaurentPoly::monomial(1, e); }
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST(Kostka, Partitions) {
  EXPECT_EQ(P({3, 1, 0}).parts(), (std::vector<int>{3, 1}));
  EXPECT_EQ(P({2, 1, 1}).size(), 4);
  EXPECT_EQ(P({2, 1, 1}).n(), 3);
  EXPECT_EQ(P({1, 1, 1, 1}).n(), 6);
  EXPECT_EQ(P({2, 1}).to_string(), "(2,1)");
  EXPECT_THROW(P({1, 2}), std::invalid_argument);
  EXPECT_THROW(P({2, -1}), std::invalid_argument);
}

TEST(Kostka, TableauEnumeration) {
  EXPECT_EQ(enumerate_ssyt(P({2, 1}), P({1, 1, 1})).size(), 2u);
  EXPECT_EQ(enumerate_ssyt(P({2, 1}), P({2, 1})).size(), 1u);
  EXPECT_EQ(enumerate_ssyt(P({1, 1, 1}), P({3})).size(), 0u);
  EXPECT_EQ(enumerate_ssyt(P({3, 2}), P({1, 1, 1, 1, 1})).size(), 5u);  // standard tableaux
  EXPECT_THROW(enumerate_ssyt(P({2}), P({1})), std::invalid_argument);
  for (const auto& t : enumerate_ssyt(P({3, 2, 1}), P({2, 2, 1, 1}))) {
    EXPECT_TRUE(t.is_semistandard());
    EXPECT_EQ(t.content(), (std::vector<int>{2, 2, 1, 1}));
  }
  const Tableau t{{{1, 1, 2}, {2, 3}}};
  EXPECT_EQ(t.reading_word(), (std::vector<int>{2, 3, 1, 1, 2}));
  EXPECT_FALSE((Tableau{{{1, 2}, {1}}}).is_semistandard());
}

TEST(Kostka, Charge) {
  EXPECT_EQ(charge(std::vector<int>{1, 2}), 1);
  EXPECT_EQ(charge(std::vector<int>{2, 1}), 0);
  EXPECT_EQ(charge(std::vector<int>{1, 2, 3}), 3);
  EXPECT_EQ(charge(std::vector<int>{3, 2, 1}), 0);
  EXPECT_EQ(charge(std::vector<int>{2, 1, 1, 2}), 1);
  EXPECT_THROW(charge(std::vector<int>{1, 2, 2}), std::invalid_argument);
}

TEST(Kostka, KostkaFoulkesValues) {
  EXPECT_EQ(kostka_polynomial(P({2, 1}), P({1, 1, 1})), q(1) + q(2));
  EXPECT_EQ(kostka_polynomial(P({3}), P({1, 1, 1})), q(3));
  EXPECT_EQ(kostka_polynomial(P({1, 1, 1}), P({1, 1, 1})), LaurentPoly(1));
  EXPECT_EQ(kostka_polynomial(P({2, 2}), P({1, 1, 1, 1})), q(2) + q(4));
  EXPECT_EQ(kostka_polynomial(P({3, 1}), P({1, 1, 1, 1})), q(3) + q(4) + q(5));
  EXPECT_EQ(kostka_polynomial(P({3, 1}), P({2, 2})), q(1));
  EXPECT_EQ(kostka_polynomial(P({4}), P({2, 2})), q(2));
  // K_{lambda, lambda} = 1 and K_{(n), mu} = q^{n(mu)}.
  for (const auto& mu : {P({3, 2, 1}), P({2, 2, 1, 1}), P({4, 1})}) {
    EXPECT_EQ(kostka_polynomial(mu, mu), LaurentPoly(1));
    EXPECT_EQ(kostka_polynomial(P({mu.size()}), mu), q(mu.n()));
  }
}

TEST(Kostka, ShapeFromWeight) {
  EXPECT_EQ(shape_from_weight(DominantWeight({0}), 2), P({1, 1}));
  EXPECT_EQ(shape_from_weight(DominantWeight({2}), 2), P({2}));
  EXPECT_EQ(shape_from_weight(DominantWeight({1, 0}), 4), P({2, 1, 1}));
  EXPECT_FALSE(shape_from_weight(DominantWeight({1, 1}), 4).has_value());
}

TEST(Kostka, CalibrationIsUniqueOnA1) {
  const AlgebraData a1({Family::A, 1});
  std::vector<CalibrationInstance> inst = {
      {P({1, 1}), P({1, 1}), q(1)},
      {P({2}), P({1, 1}), LaurentPoly(1)},
      {P({2, 2}), P({1, 1, 1, 1}), q(2) + q(4)},
      {P({3, 1}), P({1, 1, 1, 1}), q(1) + q(2) + q(3)},
  };
  const auto found = calibrate_normalization(inst);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found.front(), calibrated_normalization());
}

TEST(Kostka, FermionicComparison) {
  const AlgebraData a2({Family::A, 2});
  const KRWeightSpec R({{2, 1}, {1, 1}, {1, 1}});
  for (const auto& lam : support_weights(a2, R)) {
    const auto cmp = fermionic_vs_kostka(a2, R, lam);
    EXPECT_TRUE(cmp.equal) << lam.to_string() << ": " << cmp.fermionic << " vs " << cmp.transformed;
    EXPECT_EQ(cmp.content, P({2, 1, 1}));
  }
  EXPECT_THROW(fermionic_vs_kostka(a2, KRWeightSpec({{1, 2}}), DominantWeight({0, 1})), std::invalid_argument);
  EXPECT_THROW(fermionic_vs_kostka(AlgebraData({Family::B, 2}), KRWeightSpec({{1, 1}}), DominantWeight({1, 0})),
               std::invalid_argument);
}
