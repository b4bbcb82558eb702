#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylquant/fixedpoint.hpp"
#include "weylquant/multiplicity.hpp"

namespace weylquant {

/// Everything drawn in a planar weight diagram.
struct DiagramData {
  SubgroupPair pair;
  std::vector<Weight> moment_images;
  std::vector<ZTerm> cones;                    // one hatched region per element of Z
  std::map<Weight, std::int64_t> weights;      // small dots (character support)
  std::map<Weight, std::int64_t> circled;      // nonzero K-multiplicities, annotated
};

/// Diagram of a fixed-point set. Circles the spectrum over `window`
/// (default: around the character's support).
DiagramData diagram_from_fixture(const FixedPointSet& fps, std::optional<Window> window = std::nullopt);

/// Diagram of the coadjoint orbit through the G-dominant weight nu.
DiagramData diagram_from_weight(const SubgroupPair& pair, const Weight& nu, std::optional<Window> window = std::nullopt);

/// Static SVG on a 1000 x 1000 viewport. Planar coordinates come from a
/// Cholesky factor of the invariant form, so angles and lengths are true.
/// Throws ConfigurationError unless the rank is 2.
std::string render_svg(const DiagramData& d);

}  // namespace weylquant
