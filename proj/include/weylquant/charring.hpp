#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "weylquant/rootsys.hpp"
#include "weylquant/weight.hpp"

namespace weylquant {

/// Finite integer combination of exponentials e^lambda over the doubled
/// lattice. Zero coefficients are never stored.
class FormalCharacter {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  FormalCharacter() = default;
  static FormalCharacter monomial(const Weight& w, std::int64_t c = 1);
  static FormalCharacter one(std::size_t rank) { return monomial(Weight(rank)); }

  void add_term(const Weight& w, std::int64_t c);
  std::int64_t coefficient(const Weight& w) const;
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  /// Sum of all coefficients (the virtual dimension).
  std::int64_t total() const;

  /// Multiplication by e^w.
  FormalCharacter shifted(const Weight& w) const;

  FormalCharacter& operator+=(const FormalCharacter& o);
  FormalCharacter& operator-=(const FormalCharacter& o);
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
  friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b);
  friend FormalCharacter operator*(std::int64_t k, const FormalCharacter& a);
  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

  /// Terms sorted by descending term order (serialization order).
  std::vector<std::pair<Weight, std::int64_t>> ordered(const TermOrder& order) const;

 private:
  Terms terms_;
};

/// Relabels every exponent by w.
FormalCharacter weyl_action(const WeylElement& w, const FormalCharacter& x);

/// prod_gamma (1 - e^{-gamma}).
FormalCharacter product_one_minus(std::span<const Weight> gammas, std::size_t rank);
/// prod_gamma (e^{gamma/2} - e^{-gamma/2}); gamma must be integral.
FormalCharacter product_half_differences(std::span<const Weight> gammas, std::size_t rank);

/// q with q * den == num, by leading-term elimination under `order`.
/// Throws InexactDivisionError on a nonzero remainder.
FormalCharacter exact_divide(const FormalCharacter& num, const FormalCharacter& den, const TermOrder& order);

/// numerator / prod (1 - e^{-gamma}).
struct RationalCharacter {
  FormalCharacter numerator;
  std::vector<Weight> denominator_factors;

  FormalCharacter evaluate(const TermOrder& order, std::size_t rank) const;
};

/// Character of the irreducible representation of highest weight `lam`
/// (dominant for the chosen group): alternating Weyl sum divided by the
/// Weyl denominator. Throws DomainError if `lam` is not dominant.
FormalCharacter weyl_character(const SubgroupPair& pair, const Weight& lam, Group which);

/// Weight multiplicities by Freudenthal's recursion. Independent of
/// weyl_character; used for cross-checks.
FormalCharacter freudenthal_multiplicities(const SubgroupPair& pair, const Weight& lam, Group which);

/// prod_{alpha > 0} (lam + rho, alpha) / (rho, alpha).
std::int64_t weyl_dimension(const SubgroupPair& pair, const Weight& lam, Group which);

/// Memoized characters for arbitrary labels. For a label nu that is not
/// dominant, chi(nu) is the alternating-sum extension: zero when nu + rho
/// is singular, otherwise eps(w) chi(w(nu + rho) - rho). Not thread safe;
/// use one table per worker.
class CharacterTable {
 public:
  CharacterTable(const SubgroupPair& pair, Group which) : pair_(&pair), which_(which) {}

  FormalCharacter operator()(const Weight& label);
  /// Sign and dominant label of the straightened label; sign 0 if singular.
  std::pair<int, Weight> straighten(const Weight& label) const;

 private:
  const SubgroupPair* pair_;
  Group which_;
  std::map<Weight, FormalCharacter> cache_;
};

/// Multiplicities of K-irreducibles in a W(K)-invariant character, by
/// repeatedly peeling off the character of a maximal weight.
/// Throws NotAKCharacterError if a maximal weight is not K-dominant.
std::map<Weight, std::int64_t> decompose_into_k(const SubgroupPair& pair, const FormalCharacter& x);

/// Checks sum_{w in <s_alpha : alpha in A>} (-1)^{s_w} e^{w rho_A}
///   == prod_{alpha in A} (e^{alpha/2} - e^{-alpha/2}).
bool denominator_identity_check(const SubgroupPair& pair, std::span<const Weight> walls);

}  // namespace weylquant
