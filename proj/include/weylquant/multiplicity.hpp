#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylquant/fixedpoint.hpp"

namespace weylquant {

/// Counts non-negative integer combinations of a fixed generator list.
class PartitionProblem {
 public:
  /// Uses `functional` as the pointedness certificate; it must be strictly
  /// positive on every generator (NonPointedConeError otherwise).
  PartitionProblem(std::vector<Weight> generators, Functional functional);

  /// Builds the certificate from the pair: xi if it already works, otherwise
  /// xi + t * rho_K-direction for a small positive t.
  static PartitionProblem for_pair(const SubgroupPair& pair, std::vector<Weight> generators);

  std::span<const Weight> generators() const noexcept { return generators_; }
  const Functional& functional() const noexcept { return functional_; }
  /// Integer-scaled certificate used for bounds.
  std::span<const std::int64_t> scaled() const noexcept { return scaled_; }

  /// Exact number of solutions c >= 0 of sum c_j g_j = zeta. Not thread safe
  /// (private memo, cleared after each call).
  std::int64_t count(const Weight& zeta) const;

 private:
  std::int64_t count_from(std::size_t j, const Weight& zeta) const;

  std::vector<Weight> generators_;
  Functional functional_;
  std::vector<std::int64_t> scaled_;
  mutable std::vector<std::unordered_map<Weight, std::int64_t, WeightHash>> memo_;
};

/// One signed partition-function term of the multiplicity sum.
struct ZTerm {
  std::size_t point = 0;   // index into FixedPointSet::points
  WeylElement w;
  int sign = 1;            // (-1)^s * eps(w)
  Weight base;             // the argument is base - lam
  Weight gp_offset;        // the variant counts P(-(lam + gp_offset))
  std::vector<Weight> generators;
};

/// Every (p, w) in Z with its sign and argument base point
/// mu(p) + w rho_K - rho_K + beta_p - beta_p^+.
std::vector<ZTerm> z_terms(const FixedPointSet& fps);

/// Signed Z-sum of partition counts. lam must be K-dominant and integral.
std::int64_t multiplicity_theorem(const FixedPointSet& fps, const Weight& lam);
/// The variant with argument zeta = lam + w rho_K + beta^+ - beta - rho_K - mu(p),
/// counted in the negative cone (P(-zeta)). With K = T it coincides with
/// multiplicity_theorem term by term.
std::int64_t guillemin_prato_variant(const FixedPointSet& fps, const Weight& lam);

/// sum_{u in W(G)} eps(u) P(u(nu + rho_G) - lam - rho_G), P over the
/// positive roots of G outside K. nu must be G-dominant and regular.
std::int64_t kostant_branching(const SubgroupPair& pair, const Weight& nu, const Weight& lam);

/// Coordinate box, inclusive, in doubled coordinates.
struct Window {
  std::vector<int> lo;
  std::vector<int> hi;

  bool empty() const;
  bool contains(const Weight& w) const;
  /// Parses "lo:hi" (all coordinates) or "lo1:hi1,lo2:hi2,...".
  static Window parse(const std::string& text, std::size_t rank);
  /// Smallest box holding every term of x, widened by `margin`.
  static Window around(const FormalCharacter& x, std::size_t rank, int margin = 2);
};

/// K-dominant integral weights in the window, in ascending term order.
std::vector<Weight> dominant_weights_in(const SubgroupPair& pair, const Window& window);

/// multiplicity_theorem over the window (nonzero entries only). Throws
/// InconsistencyError when it disagrees with the decomposition of the
/// main-formula character anywhere in the window. Parallel over lam; the
/// worker count is capped by WEYLQUANT_THREADS.
std::map<Weight, std::int64_t> multiplicity_spectrum(const FixedPointSet& fps, const Window& window);

struct GpRow {
  Weight lambda;
  std::int64_t multiplicity = 0;
  std::int64_t gp_value = 0;
  std::int64_t delta() const { return gp_value - multiplicity; }
};

/// Side-by-side table for every K-dominant lam in the window where either
/// value is nonzero.
std::vector<GpRow> gp_comparison(const FixedPointSet& fps, const Window& window);

/// Worker count from WEYLQUANT_THREADS, defaulting to the hardware count.
unsigned worker_count();

}  // namespace weylquant
