#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylquant/charring.hpp"
#include "weylquant/rootsys.hpp"

namespace weylquant {

/// An isolated fixed point of the torus action.
struct FixedPoint {
  std::string id;
  Weight mu;                            // moment image, integral
  std::vector<Weight> tangent_weights;  // multiset, no zero weight
  std::optional<std::string> component;
  /// Optional explicit W(K)-orbit label; restricts orbit matching.
  std::optional<std::string> orbit;
};

struct SplitWeights {
  std::vector<Weight> orbit_weights;  // the alpha_ij, one of +-alpha per non-wall root of K
  std::vector<Weight> transverse;     // the remainder B
};

/// Removes one occurrence of +alpha or -alpha for every positive root
/// alpha of K not orthogonal to mu. When both signs occur, the one whose
/// sign agrees with <mu, alpha^vee> is taken.
SplitWeights split_orbit_weights(const SubgroupPair& pair, const FixedPoint& p);

struct Polarization {
  std::vector<Weight> plus;  // beta^+ for each beta, same order
  int s = 0;                 // number of beta with <beta, xi> < 0
  Weight beta_bar;           // sum of the flipped beta
  Weight beta_half_sum;      // (1/2) sum beta
  Weight beta_plus_half_sum; // (1/2) sum beta^+
};

/// Polarization by the pair's xi. Weights with <beta, xi> = 0 must be
/// roots of K and are kept as they are; anything else throws
/// DegeneratePairError.
Polarization polarize(const SubgroupPair& pair, std::span<const Weight> transverse);

struct OrbitSweep {
  /// Polarized W(K)-sweep of B; each distinct weight carries the largest
  /// multiplicity it has in any single w(B)^+.
  std::vector<Weight> b_plus_orbit;
  /// b_plus_orbit minus B^+ (multiset difference).
  std::vector<Weight> c;
  /// Expansion of prod_{gamma in C} (1 - e^{-gamma}).
  FormalCharacter m;
  /// Expansion of prod_{gamma in C} (e^{gamma/2} - e^{-gamma/2}).
  FormalCharacter m_tilde;
};

OrbitSweep orbit_polarized_set(const SubgroupPair& pair, std::span<const Weight> transverse,
                               std::vector<std::string>* warnings = nullptr);

struct OrbitMember {
  std::size_t point = 0;
  std::vector<WeylElement> coset;  // every w in W(K) with w . representative = point
  std::vector<Weight> transverse;  // w(B)
  Polarization pol;
};

struct OrbitData {
  std::string id;  // id of the representative
  std::size_t representative = 0;
  std::optional<std::string> component;
  std::vector<Weight> walls;  // A: positive roots of K orthogonal to mu
  std::vector<Weight> orbit_tangent_weights;
  std::vector<Weight> transverse;
  Polarization pol;
  OrbitSweep sweep;
  std::vector<OrbitMember> members;  // members[0] is the representative
};

/// A pair (p, w) with w^{-1} mu(p) in the closed K-dominant chamber.
struct ZElement {
  std::size_t orbit = 0;
  std::size_t member = 0;
  WeylElement w;
};

struct FixedPointSet {
  SubgroupPair pair;  // with xi made generic for the tangent weights
  std::vector<FixedPoint> points;
  std::vector<OrbitData> orbits;
  std::vector<ZElement> z_set;
  std::vector<std::string> warnings;
  /// Set for coadjoint-orbit fixtures; enables the G-level oracles.
  std::optional<Weight> coadjoint_lambda;
};

/// Validates the points, partitions them into W(K)-orbits and derives
/// every orbit quantity.
FixedPointSet ingest(const SubgroupPair& pair, std::vector<FixedPoint> raw);

/// Fixed points of the coadjoint orbit G.lam: one per element of W(G).lam,
/// with tangent weights { sign * w(phi) : phi > 0, <lam, phi^vee> != 0 }.
/// sign = +1 reproduces chi^G_lam under localization.
std::vector<FixedPoint> coadjoint_fixture(const SubgroupPair& pair, const Weight& lam, int sign = +1);

}  // namespace weylquant
