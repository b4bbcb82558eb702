#include <gtest/gtest.h>

#include <cstdlib>

#include "weylquant/acceptance.hpp"
#include "weylquant/errors.hpp"
#include "weylquant/multiplicity.hpp"
#include "weylquant/quantize.hpp"

using namespace weylquant;

namespace {

const Weight kAlpha{4, -2};
const Weight kGamma{-2, 4};
const Weight kBeta{2, 2};

// Counts c >= 0 with sum c_j g_j == target by trying every coefficient up to
// `cap` per generator.
std::int64_t brute_force(const std::vector<Weight>& gens, const Weight& target, int cap) {
  std::int64_t n = 0;
  std::vector<int> c(gens.size(), 0);
  while (true) {
    Weight s(target.rank());
    for (std::size_t j = 0; j < gens.size(); ++j) s += c[j] * gens[j];
    n += s == target;
    std::size_t j = 0;
    while (j < c.size() && ++c[j] > cap) c[j++] = 0;
    if (j == c.size()) return n;
  }
}

Functional height_a2() { return RootSystem::build("A2").height(); }

FixedPointSet running_example() { return ingest(samples::su3_pair(), samples::su3_points()); }

}  // namespace

TEST(Partition, ZeroHasOnePartition) {
  const PartitionProblem p({kAlpha, kGamma, kBeta}, height_a2());
  EXPECT_EQ(p.count(Weight{0, 0}), 1);
}

TEST(Partition, A2PositiveRoots) {
  const PartitionProblem p({kAlpha, kGamma, kBeta}, height_a2());
  EXPECT_EQ(p.count(kBeta), 2);
  EXPECT_EQ(p.count(kAlpha), 1);
  EXPECT_EQ(p.count(-kAlpha), 0);
  EXPECT_EQ(p.count(Weight{1, 1}), 0);
  // beta + alpha: {a, a, g}, {a, b}.
  EXPECT_EQ(p.count(kBeta + kAlpha), 2);
}

TEST(Partition, TwoGenerators) {
  const PartitionProblem p({kBeta, kGamma}, height_a2());
  EXPECT_EQ(p.count(Weight{2, 2}), 1);
  EXPECT_EQ(p.count(kBeta + kGamma), 1);
  EXPECT_EQ(p.count(kAlpha), 0);
}

TEST(Partition, MatchesBruteForce) {
  const RootSystem g = RootSystem::build("B2");
  std::vector<Weight> gens(g.positive_roots().begin(), g.positive_roots().end());
  const PartitionProblem p(gens, g.height());
  for (int x = -8; x <= 8; x += 2)
    for (int y = -8; y <= 8; y += 2) {
      const Weight z{x, y};
      // Every root has height >= 1, so no coefficient exceeds ht(z).
      const Rational h = g.height()(z);
      const int cap = h < Rational(0) ? 0 : static_cast<int>(h.numerator() / h.denominator());
      EXPECT_EQ(p.count(z), brute_force(gens, z, cap)) << z.str();
    }
}

TEST(Partition, RepeatedGeneratorsCountSeparately) {
  const PartitionProblem p({kAlpha, kAlpha}, height_a2());
  EXPECT_EQ(p.count(3 * kAlpha), 4);
}

TEST(Partition, NonPointedCone) {
  EXPECT_THROW(PartitionProblem({kAlpha, -kAlpha}, height_a2()), NonPointedConeError);
  EXPECT_THROW(PartitionProblem::for_pair(samples::torus_pair("A2"), {kAlpha, -kAlpha}), NonPointedConeError);
}

TEST(Partition, CertificateRepairUsesRhoK) {
  // -gamma is negative for the height but the pair's rho_K direction rescues it.
  const auto p = PartitionProblem::for_pair(samples::su3_pair(), {kAlpha, -kGamma});
  for (const auto& g : p.generators()) EXPECT_GT(p.functional()(g), Rational(0));
}

TEST(Theorem, RunningExampleSpectrum) {
  const FixedPointSet fps = running_example();
  EXPECT_EQ(multiplicity_theorem(fps, Weight{0, 6}), 1);
  const auto decomposition = main_formula_character(fps).k_decomposition;
  const auto spectrum = multiplicity_spectrum(fps, Window::around(main_formula_character(fps).character, 2));
  EXPECT_EQ(spectrum.size(), 4u);
  EXPECT_EQ(spectrum, decomposition);
}

TEST(Theorem, MatchesDecompositionEverywhereInWindow) {
  const FixedPointSet fps = running_example();
  const auto decomposition = main_formula_character(fps).k_decomposition;
  const Window w = Window::parse("-14:14", 2);
  for (const auto& lam : dominant_weights_in(fps.pair, w)) {
    const auto it = decomposition.find(lam);
    EXPECT_EQ(multiplicity_theorem(fps, lam), it == decomposition.end() ? 0 : it->second) << lam.str();
  }
}

TEST(Theorem, TorusLineWindow) {
  const std::vector<FixedPoint> pts{{"n", {2}, {{4}}, std::nullopt, std::nullopt},
                                    {"s", {-2}, {{-4}}, std::nullopt, std::nullopt}};
  const FixedPointSet fps = ingest(samples::torus_pair("A1"), pts);
  const auto spectrum = multiplicity_spectrum(fps, Window::parse("-4:4", 1));
  const std::map<Weight, std::int64_t> expected{{Weight{-2}, 1}, {Weight{2}, 1}};
  EXPECT_EQ(spectrum, expected);
}

TEST(Theorem, NonDominantOrOddLambdaRejected) {
  const FixedPointSet fps = running_example();
  EXPECT_THROW(multiplicity_theorem(fps, Weight{-2, 4}), DomainError);
  EXPECT_THROW(multiplicity_theorem(fps, Weight{1, 4}), DomainError);
}

TEST(Spectrum, EmptyWindow) {
  const FixedPointSet fps = running_example();
  EXPECT_TRUE(multiplicity_spectrum(fps, Window::parse("100:120", 2)).empty());
}

TEST(Spectrum, IndependentOfThreadCount) {
  const FixedPointSet fps = ingest(samples::b2_long_pair(), coadjoint_fixture(samples::b2_long_pair(), {4, 2}));
  const Window w = Window::around(main_formula_character(fps).character, 2);
  setenv("WEYLQUANT_THREADS", "1", 1);
  const auto one = multiplicity_spectrum(fps, w);
  setenv("WEYLQUANT_THREADS", "4", 1);
  EXPECT_GE(worker_count(), 1u);
  EXPECT_LE(worker_count(), 4u);
  EXPECT_EQ(multiplicity_spectrum(fps, w), one);
  unsetenv("WEYLQUANT_THREADS");
}

TEST(Window, Parsing) {
  const Window a = Window::parse("-4:6", 2);
  EXPECT_TRUE(a.contains(Weight{-4, 6}));
  EXPECT_FALSE(a.contains(Weight{-6, 0}));
  const Window b = Window::parse("0:2,-2:0", 2);
  EXPECT_TRUE(b.contains(Weight{2, -2}));
  EXPECT_FALSE(b.contains(Weight{2, 2}));
  EXPECT_TRUE(Window::parse("3:1", 1).empty());
  for (const char* bad : {"", "1", "a:b", "0:1,0:1,0:1", "0:1,"}) EXPECT_THROW(Window::parse(bad, 2), InputError) << bad;
}

TEST(KostantBranching, TorusOfA2) {
  const SubgroupPair t = samples::torus_pair("A2");
  EXPECT_EQ(kostant_branching(t, Weight{2, 2}, Weight{0, 0}), 2);
  EXPECT_EQ(kostant_branching(t, Weight{2, 2}, Weight{2, 2}), 1);
  EXPECT_EQ(kostant_branching(t, Weight{2, 2}, Weight{4, 4}), 0);
}

TEST(KostantBranching, MatchesDecomposition) {
  for (const auto& pair : {samples::su3_pair(), samples::b2_long_pair()}) {
    for (const Weight& nu : {Weight{2, 2}, Weight{4, 2}, Weight{2, 4}}) {
      const auto d = decompose_into_k(pair, weyl_character(pair, nu, Group::G));
      for (const auto& lam : dominant_weights_in(pair, Window::around(weyl_character(pair, nu, Group::G), 2))) {
        const auto it = d.find(lam);
        EXPECT_EQ(kostant_branching(pair, nu, lam), it == d.end() ? 0 : it->second) << nu.str() << " " << lam.str();
      }
    }
  }
}

TEST(KostantBranching, SingularNuRejected) {
  EXPECT_THROW(kostant_branching(samples::su3_pair(), Weight{0, 6}, Weight{0, 6}), DomainError);
}

TEST(GuilleminPrato, TorusCaseAgreesTermByTerm) {
  for (const char* type : {"A2", "B2"}) {
    const SubgroupPair pair = samples::torus_pair(type);
    const FixedPointSet fps = ingest(pair, coadjoint_fixture(pair, {2, 2}));
    for (const auto& row : gp_comparison(fps, Window::around(main_formula_character(fps).character, 2)))
      EXPECT_EQ(row.delta(), 0) << type << " " << row.lambda.str();
  }
}

TEST(GuilleminPrato, OffsetDiffersByTwiceTheRhoKShift) {
  const FixedPointSet fps = running_example();
  for (const auto& t : z_terms(fps)) {
    const Weight shift = t.w.apply(fps.pair.rho_k()) - fps.pair.rho_k();
    EXPECT_EQ(t.gp_offset + t.base, 2 * shift) << t.point;
  }
}

TEST(ZTerms, SignsAndCount) {
  const FixedPointSet fps = running_example();
  const auto terms = z_terms(fps);
  EXPECT_EQ(terms.size(), 4u);
  std::size_t at_wall = 0;
  for (const auto& t : terms) {
    EXPECT_TRUE(t.sign == 1 || t.sign == -1);
    at_wall += fps.points[t.point].id == "p_nu";
  }
  // p_nu is fixed by W(K) and pairs with both elements.
  EXPECT_EQ(at_wall, 2u);
}
