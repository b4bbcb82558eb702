#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylquant/charring.hpp"
#include "weylquant/fixedpoint.hpp"

namespace weylquant {

/// One K-character chi^K_label with an integer coefficient.
struct KTerm {
  std::int64_t coefficient = 0;
  Weight label;
};

struct OrbitTerm {
  std::string orbit_id;
  std::optional<std::string> component;
  std::vector<KTerm> k_terms;                // numerator as a combination of K-characters
  FormalCharacter numerator;                 // the same numerator, expanded
  std::vector<Weight> denominator_factors;   // the orbit's polarized sweep
};

struct CharacterReport {
  FormalCharacter character;
  FormalCharacter numerator;                 // over the common denominator
  std::vector<Weight> denominator_factors;   // common denominator
  bool half_weight_form = false;             // factors are (e^{g/2} - e^{-g/2}) when set
  std::map<Weight, std::int64_t> k_decomposition;
  std::vector<OrbitTerm> per_orbit_terms;
};

/// Direct fixed-point sum  sum_p e^{mu(p)} / prod_t (1 - e^{-t}), brought to
/// a polarized common denominator and divided exactly.
/// Throws InexactDivisionError when the data is not a genuine quantization.
FormalCharacter localization_character(const SubgroupPair& pair, std::span<const FixedPoint> points);
FormalCharacter localization_character(const FixedPointSet& fps);

/// The character as a sum over W(K)-orbits of quotients of virtual
/// K-characters. Cross-checks the result against localization_character.
CharacterReport main_formula_character(const FixedPointSet& fps);

/// Same character from the half-weight (Lie algebra) numerators.
CharacterReport lie_algebra_form(const FixedPointSet& fps);

struct GkrsResult {
  std::vector<WeylElement> coset_representatives;  // w with w(rho_G) strictly K-dominant
  std::vector<KTerm> multiplet;                    // (eps(c), c(lam + rho_G) - rho_K)
  FormalCharacter lhs;                             // sum eps(c) chi^K
  FormalCharacter rhs;                             // chi^G_lam * prod_{G/K} (e^{phi/2} - e^{-phi/2})
};

/// Throws InconsistencyError if the identity lhs == rhs fails or
/// |C| != |W(G)| / |W(K)|.
GkrsResult gkrs_multiplet(const SubgroupPair& pair, const Weight& lam);

/// Positive roots of G that are not roots of K.
std::vector<Weight> complementary_positive_roots(const SubgroupPair& pair);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
  double milliseconds = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_ok() const;
};

/// Runs every available route on the data and records, never throws.
VerificationReport verify_fixture(const FixedPointSet& fps);
/// As above, starting from raw points (ingestion failures are recorded).
VerificationReport verify_points(const SubgroupPair& pair, std::vector<FixedPoint> points,
                                 std::optional<Weight> coadjoint_lambda = std::nullopt);

}  // namespace weylquant
