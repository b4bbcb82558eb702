#include <gtest/gtest.h>

#include <random>
#include <set>

#include "weylquant/charring.hpp"
#include "weylquant/errors.hpp"
#include "weylquant/oracle.hpp"

using namespace weylquant;

namespace {

FormalCharacter poly(std::initializer_list<std::pair<Weight, std::int64_t>> terms) {
  FormalCharacter x;
  for (const auto& [w, c] : terms) x.add_term(w, c);
  return x;
}

SubgroupPair torus(const char* type) { return SubgroupPair::make(RootSystem::build(type), {}); }

// Weyl dimension formula straight from the inner product.
Rational dimension_by_formula(const RootSystem& g, const Weight& lam) {
  Rational out(1);
  const Weight rho = g.rho();
  for (const auto& a : g.positive_roots()) out *= g.inner_product(lam + rho, a) / g.inner_product(rho, a);
  return out;
}

}  // namespace

TEST(FormalCharacter, RingLaws) {
  const FormalCharacter a = poly({{{2, 0}, 1}, {{0, 0}, -3}});
  const FormalCharacter b = poly({{{0, 2}, 2}, {{-2, 2}, 1}});
  const FormalCharacter c = poly({{{4, -2}, 5}});
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ(a - a, FormalCharacter());
  EXPECT_EQ(a * FormalCharacter::one(2), a);
  EXPECT_EQ((a + b).total(), a.total() + b.total());
}

TEST(FormalCharacter, ZeroCoefficientsDisappear) {
  FormalCharacter x = FormalCharacter::monomial({2, 0}, 3);
  x.add_term({2, 0}, -3);
  EXPECT_TRUE(x.empty());
  EXPECT_EQ(x.coefficient({2, 0}), 0);
}

TEST(FormalCharacter, ShiftMovesEveryTerm) {
  const FormalCharacter x = poly({{{2, 0}, 1}, {{0, 0}, 2}});
  EXPECT_EQ(x.shifted({0, 2}), poly({{{2, 2}, 1}, {{0, 2}, 2}}));
}

TEST(ExactDivide, RecoversFactor) {
  const RootSystem g = RootSystem::build("A2");
  const std::vector<Weight> gammas{{2, 2}, {-2, 4}};
  const FormalCharacter den = product_one_minus(gammas, 2);
  const FormalCharacter q = poly({{{0, 6}, 1}, {{2, 2}, -4}, {{-2, -2}, 7}});
  EXPECT_EQ(exact_divide(q * den, den, g.term_order()), q);
}

TEST(ExactDivide, RemainderThrows) {
  const RootSystem g = RootSystem::build("A2");
  const std::vector<Weight> gammas{{2, 2}};
  const FormalCharacter den = product_one_minus(gammas, 2);
  const FormalCharacter num = den + FormalCharacter::monomial({0, 0});
  EXPECT_THROW(exact_divide(num, den, g.term_order()), InexactDivisionError);
}

TEST(ExactDivide, GeometricSeriesIsNotFinite) {
  const RootSystem g = RootSystem::build("A1");
  const std::vector<Weight> gammas{{4}};
  EXPECT_THROW(exact_divide(FormalCharacter::one(1), product_one_minus(gammas, 1), g.term_order()),
               InexactDivisionError);
}

TEST(WeylCharacter, A2ThreeOmega2) {
  const FormalCharacter x = weyl_character(torus("A2"), {0, 6}, Group::G);
  EXPECT_EQ(x.total(), 10);
  EXPECT_EQ(x.size(), 10u);
  EXPECT_EQ(x.coefficient({0, 0}), 1);
  EXPECT_EQ(x.coefficient({0, 6}), 1);
  EXPECT_EQ(x.coefficient({-6, 0}), 1);
}

TEST(WeylCharacter, A2Adjoint) {
  const FormalCharacter x = weyl_character(torus("A2"), {2, 2}, Group::G);
  EXPECT_EQ(x.total(), 8);
  EXPECT_EQ(x.coefficient({0, 0}), 2);
  const RootSystem g = RootSystem::build("A2");
  for (const auto& r : g.positive_roots()) {
    EXPECT_EQ(x.coefficient(r), 1);
    EXPECT_EQ(x.coefficient(-r), 1);
  }
}

TEST(WeylCharacter, NonIntegralHighestWeightIsRejected) {
  EXPECT_THROW(weyl_character(torus("A2"), {1, 0}, Group::G), DomainError);
}

TEST(WeylCharacter, AgreesWithFreudenthalAndKostantAndDimension) {
  std::mt19937 rng(11);
  for (const char* type : {"A2", "B2", "G2", "A3", "C3"}) {
    const SubgroupPair pair = torus(type);
    const RootSystem& g = pair.g();
    std::uniform_int_distribution<int> coord(0, g.rank() > 2 ? 2 : 3);
    for (int trial = 0; trial < 6; ++trial) {
      Weight lam(g.rank());
      for (std::size_t i = 0; i < g.rank(); ++i) lam[i] = 2 * coord(rng);
      const FormalCharacter w = weyl_character(pair, lam, Group::G);
      EXPECT_EQ(w, freudenthal_multiplicities(pair, lam, Group::G)) << type << " " << lam.str();
      if (g.rank() == 2) EXPECT_EQ(w, oracle::kostant_character(g, lam)) << type << " " << lam.str();
      EXPECT_EQ(Rational(w.total()), dimension_by_formula(g, lam)) << type << " " << lam.str();
      EXPECT_EQ(w.total(), weyl_dimension(pair, lam, Group::G));
      for (const auto& u : g.weyl_group()) EXPECT_EQ(weyl_action(u, w), w);
    }
  }
}

TEST(CharacterTable, StraighteningSigns) {
  const SubgroupPair pair = torus("A2");
  CharacterTable chi(pair, Group::G);
  // s_1 . (-4, 2) = s_1((-4,2)+rho) - rho = (0, 0) with a sign change.
  EXPECT_EQ(chi({-4, 2}), -1 * chi({0, 0}));
  // Labels on a shifted wall vanish.
  EXPECT_TRUE(chi({-2, 0}).empty());
}

TEST(Decompose, TensorSquareOfStandard) {
  const RootSystem g = RootSystem::build("A2");
  const SubgroupPair pair = SubgroupPair::make(g, g.simple_roots());
  const FormalCharacter v = weyl_character(pair, {2, 0}, Group::G);
  const auto d = decompose_into_k(pair, v * v);
  // Sym^2 plus Lambda^2.
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.at({4, 0}), 1);
  EXPECT_EQ(d.at({0, 2}), 1);
}

TEST(Decompose, LeviBranchingOfThreeOmega2) {
  const std::vector<Weight> k{{4, -2}};
  const SubgroupPair pair = SubgroupPair::make(RootSystem::build("A2"), k);
  const auto d = decompose_into_k(pair, weyl_character(pair, {0, 6}, Group::G));
  // 10 = 1 + 2 + 3 + 4 for the U(2) factor.
  std::int64_t dims = 0;
  for (const auto& [lam, m] : d) {
    EXPECT_EQ(m, 1);
    dims += weyl_dimension(pair, lam, Group::K);
  }
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(dims, 10);
}

TEST(Decompose, NotAKCharacter) {
  const SubgroupPair pair = SubgroupPair::make(RootSystem::build("A2"), std::vector<Weight>{{4, -2}});
  EXPECT_THROW(decompose_into_k(pair, FormalCharacter::monomial({-2, 4})), NotAKCharacterError);
}

TEST(DenominatorIdentity, StabilizerRootSets) {
  for (const char* type : {"A2", "B2", "G2"}) {
    const SubgroupPair pair = torus(type);
    const RootSystem& g = pair.g();
    std::set<std::vector<Weight>> seen;
    for (int x = -6; x <= 6; x += 2)
      for (int y = -6; y <= 6; y += 2) {
        std::vector<Weight> walls;
        for (const auto& r : g.positive_roots())
          if (g.inner_product(Weight{x, y}, r) == Rational(0)) walls.push_back(r);
        if (walls.empty() || !seen.insert(walls).second) continue;
        EXPECT_TRUE(denominator_identity_check(pair, walls)) << type << " at " << x << "," << y;
      }
    EXPECT_EQ(seen.size(), g.positive_roots().size() + 1) << type;
  }
}
