#include <gtest/gtest.h>

#include <algorithm>

#include "weylquant/acceptance.hpp"
#include "weylquant/errors.hpp"
#include "weylquant/fixedpoint.hpp"

using namespace weylquant;

namespace {

const Weight kBeta{2, 2};
const Weight kGamma{-2, 4};
const Weight kAlpha{4, -2};

const OrbitData& orbit_of(const FixedPointSet& fps, const std::string& id) {
  for (const auto& o : fps.orbits)
    for (const auto& m : o.members)
      if (fps.points[m.point].id == id) return o;
  throw std::runtime_error("no orbit holds " + id);
}

SubgroupPair a1_torus() { return SubgroupPair::make(RootSystem::build("A1"), {}); }

}  // namespace

TEST(Ingest, RunningExampleOrbits) {
  const FixedPointSet fps = ingest(samples::su3_pair(), samples::su3_points());
  ASSERT_EQ(fps.orbits.size(), 2u);
  EXPECT_EQ(fps.z_set.size(), 4u);
  const OrbitData& wall = orbit_of(fps, "p_nu");
  EXPECT_EQ(wall.members.size(), 1u);
  EXPECT_EQ(wall.walls, std::vector<Weight>{kAlpha});
  EXPECT_EQ(sorted(wall.transverse), sorted({kBeta, kGamma}));
  const OrbitData& pair = orbit_of(fps, "p_plus");
  EXPECT_EQ(pair.members.size(), 2u);
  EXPECT_EQ(&pair, &orbit_of(fps, "p_minus"));
}

TEST(Ingest, OrbitSweepOfTheFreeOrbit) {
  const FixedPointSet fps = ingest(samples::su3_pair(), samples::su3_points());
  const OrbitData& o = orbit_of(fps, "p_plus");
  EXPECT_EQ(sorted(o.sweep.b_plus_orbit), sorted({kBeta, kGamma}));
  EXPECT_EQ(o.sweep.c, std::vector<Weight>{kBeta});
  FormalCharacter m;
  m.add_term(Weight{0, 0}, 1);
  m.add_term(-kBeta, -1);
  EXPECT_EQ(o.sweep.m, m);
  // m~ for C = {beta}: e^{beta/2} - e^{-beta/2}.
  FormalCharacter mt;
  mt.add_term(Weight{1, 1}, 1);
  mt.add_term(Weight{-1, -1}, -1);
  EXPECT_EQ(o.sweep.m_tilde, mt);
  // The wall orbit is already W(K)-stable: nothing missing.
  EXPECT_TRUE(orbit_of(fps, "p_nu").sweep.c.empty());
}

TEST(Ingest, MCoefficientCountIsBounded) {
  const FixedPointSet fps = ingest(samples::b2_long_pair(), coadjoint_fixture(samples::b2_long_pair(), {2, 2}));
  for (const auto& o : fps.orbits) {
    EXPECT_LE(o.sweep.m.size(), std::size_t{1} << o.sweep.c.size());
    // Evaluating prod (1 - e^{-gamma}) at the identity.
    EXPECT_EQ(o.sweep.m.total(), o.sweep.c.empty() ? 1 : 0);
  }
}

TEST(Ingest, TorusLineHasTwoSingletons) {
  const std::vector<FixedPoint> pts{{"n", {2}, {{4}}, std::nullopt, std::nullopt},
                                    {"s", {-2}, {{-4}}, std::nullopt, std::nullopt}};
  const FixedPointSet fps = ingest(a1_torus(), pts);
  EXPECT_EQ(fps.orbits.size(), 2u);
  EXPECT_EQ(fps.z_set.size(), 2u);
  for (const auto& z : fps.z_set) EXPECT_TRUE(z.w.is_identity());
}

TEST(Ingest, ZSetPullsMomentIntoChamber) {
  const FixedPointSet fps = ingest(samples::su3_pair(), samples::su3_points());
  for (const auto& z : fps.z_set) {
    const std::size_t p = fps.orbits[z.orbit].members[z.member].point;
    EXPECT_TRUE(fps.pair.is_dominant(z.w.inverse().apply(fps.points[p].mu), Group::K));
  }
}

TEST(Ingest, CoadjointOrbitSizes) {
  for (const auto& [type, lam, count] : std::vector<std::tuple<std::string, Weight, std::size_t>>{
           {"A2", {2, 2}, 6}, {"A2", {0, 6}, 3}, {"B2", {2, 0}, 4}, {"G2", {2, 2}, 12}}) {
    const SubgroupPair pair = samples::torus_pair(type);
    EXPECT_EQ(coadjoint_fixture(pair, lam).size(), count) << type << " " << lam.str();
  }
}

TEST(Split, OrbitWeightFollowsMomentSign) {
  const SplitWeights s = split_orbit_weights(samples::su3_pair(), samples::su3_points()[1]);
  EXPECT_EQ(s.orbit_weights, std::vector<Weight>{kAlpha});
  EXPECT_EQ(s.transverse, std::vector<Weight>{-kGamma});
}

TEST(Split, MissingOrbitWeightIsMalformed) {
  FixedPoint p{"x", {6, -6}, {{2, -4}, {2, 2}}, std::nullopt, std::nullopt};
  EXPECT_THROW(split_orbit_weights(samples::su3_pair(), p), MalformedPointError);
}

TEST(Polarize, FlipsNegativeWeights) {
  const SubgroupPair pair = samples::torus_pair("A2");
  const std::vector<Weight> b{kBeta, -kGamma, -kAlpha};
  const Polarization pol = polarize(pair, b);
  EXPECT_EQ(pol.s, 2);
  EXPECT_EQ(pol.plus, (std::vector<Weight>{kBeta, kGamma, kAlpha}));
  EXPECT_EQ(pol.beta_bar, -kGamma - kAlpha);
}

TEST(IngestErrors, Rejections) {
  const SubgroupPair pair = samples::su3_pair();
  EXPECT_THROW(ingest(pair, {}), InputError);

  auto dup = samples::su3_points();
  dup[1].id = "p_nu";
  EXPECT_THROW(ingest(pair, dup), InputError);

  auto zero = samples::su3_points();
  zero[0].tangent_weights[0] = Weight{0, 0};
  EXPECT_THROW(ingest(pair, zero), MalformedPointError);

  auto odd = samples::su3_points();
  odd[0].mu = Weight{1, 6};
  EXPECT_THROW(ingest(pair, odd), Error);

  auto rank = samples::su3_points();
  rank[0].mu = Weight{0, 6, 0};
  EXPECT_THROW(ingest(pair, rank), InputError);
}

TEST(IngestErrors, IncompleteOrbitIsInconsistent) {
  auto pts = samples::su3_points();
  pts.pop_back();
  EXPECT_THROW(ingest(samples::su3_pair(), pts), InconsistencyError);
}

TEST(IngestErrors, IdenticalPointsAreAmbiguous) {
  auto pts = samples::su3_points();
  pts.push_back(pts[1]);
  pts.back().id = "p_plus_again";
  EXPECT_THROW(ingest(samples::su3_pair(), pts), AmbiguousDataError);
}
