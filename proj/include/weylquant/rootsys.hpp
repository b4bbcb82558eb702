#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "weylquant/weight.hpp"

namespace weylquant {

using Rational = boost::rational<std::int64_t>;

/// Linear functional on doubled coordinates: value = sum_j f[j] * w[j].
class Functional {
 public:
  Functional() = default;
  explicit Functional(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  Rational operator()(const Weight& w) const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  Functional operator+(const Functional& o) const;
  Functional operator*(const Rational& k) const;

 private:
  std::vector<Rational> coeffs_;
};

enum class Family { A, B, C, D, F, G };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Parses labels such as "A2", "b3", "G2". Throws ConfigurationError.
  static CartanType parse(std::string_view label);
  std::string label() const;
};

/// An element of the Weyl group, as an integer matrix acting on doubled
/// coordinates (column vectors).
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(std::size_t rank);
  static WeylElement from_matrix(std::size_t rank, std::span<const int> row_major, int sign);

  std::size_t rank() const noexcept { return rank_; }
  int sign() const noexcept { return sign_; }
  int entry(std::size_t row, std::size_t col) const noexcept { return m_[row * kMaxRank + col]; }

  Weight apply(const Weight& w) const noexcept;
  /// (*this) o rhs.
  WeylElement compose(const WeylElement& rhs) const;
  WeylElement inverse() const;
  bool is_identity() const noexcept;
  /// Exact integer determinant, computed independently of the stored sign.
  long determinant() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) noexcept {
    return a.rank_ == b.rank_ && a.m_ == b.m_;
  }

 private:
  std::array<std::int16_t, kMaxRank * kMaxRank> m_{};
  std::uint8_t rank_ = 0;
  std::int8_t sign_ = 1;
};

/// Total order on weights: functional value first, then lexicographic on
/// coordinates. Translation invariant, so leading terms multiply.
class TermOrder {
 public:
  TermOrder() = default;
  /// `f` must be scaled to integers by the caller.
  explicit TermOrder(std::vector<std::int64_t> f) : f_(std::move(f)) {}
  std::int64_t key(const Weight& w) const noexcept;
  bool less(const Weight& a, const Weight& b) const noexcept;
  bool operator()(const Weight& a, const Weight& b) const noexcept { return less(a, b); }

 private:
  std::vector<std::int64_t> f_;
};

/// Scales a rational functional to a parallel integer one.
std::vector<std::int64_t> integer_scaled(const Functional& f);

class RootSystem {
 public:
  static RootSystem build(std::string_view label);
  static RootSystem build(CartanType type);

  const CartanType& cartan_type() const noexcept;
  std::size_t rank() const noexcept;
  /// cartan(i, j) = <alpha_j, alpha_i^vee>; column j is alpha_j in
  /// (undoubled) fundamental coordinates.
  int cartan(std::size_t i, std::size_t j) const noexcept;

  std::span<const Weight> simple_roots() const noexcept;
  std::span<const Weight> positive_roots() const noexcept;
  bool is_root(const Weight& w) const;
  bool is_positive_root(const Weight& w) const;

  /// 2<lam, alpha^vee>, an integer for every lam in the doubled lattice.
  /// Throws DomainError if alpha is not a root.
  int coroot_pairing2(const Weight& lam, const Weight& alpha) const;
  /// Symmetrized invariant form on actual weights (not doubled coords).
  Rational inner_product(const Weight& a, const Weight& b) const;
  /// The functional mu -> (mu, x) for a vector x of t^*.
  Functional pairing_with(const Weight& x) const;
  /// Like pairing_with for a rational vector in doubled coordinates.
  Functional pairing_with(std::span<const Rational> x_doubled) const;

  Weight rho() const noexcept;
  Weight fundamental_weight(std::size_t i) const;

  /// s_alpha(lam) = lam - <lam, alpha^vee> alpha.
  Weight reflect(const Weight& alpha, const Weight& lam) const;
  WeylElement reflection(const Weight& alpha) const;

  /// The whole Weyl group, enumerated on first use (thread safe).
  const std::vector<WeylElement>& weyl_group() const;
  std::size_t weyl_order() const noexcept;

  /// Height functional <., rho^vee>, strictly positive on positive roots.
  const Functional& height() const noexcept;
  const TermOrder& term_order() const noexcept;

  /// Root-lattice coordinates of a weight (rational in general).
  std::vector<Rational> root_coordinates(const Weight& w) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Weyl group generated by a set of reflections; BFS closure keyed on the
/// image of a regular element. Signs are (-1)^length in the generators.
std::vector<WeylElement> generate_group(const RootSystem& rs, std::span<const Weight> reflecting_roots);

enum class Group { G, K };

enum class ChamberKind { Interior, Boundary, Outside };

struct ChamberTest {
  ChamberKind kind = ChamberKind::Interior;
  /// Positive roots orthogonal to the weight (only for Boundary).
  std::vector<Weight> walls;
};

/// An equal-rank pair K in G given by a root subsystem.
class SubgroupPair {
 public:
  static SubgroupPair make(const RootSystem& g, std::span<const Weight> k_roots);

  const RootSystem& g() const noexcept { return g_; }
  std::size_t rank() const noexcept { return g_.rank(); }

  std::span<const Weight> positive_roots(Group which) const noexcept;
  std::span<const Weight> k_positive_roots() const noexcept { return k_positive_; }
  std::span<const Weight> k_simple_roots() const noexcept { return k_simple_; }
  const std::vector<WeylElement>& weyl(Group which) const;
  const std::vector<WeylElement>& weyl_k() const noexcept { return weyl_k_; }
  Weight rho(Group which) const noexcept { return which == Group::G ? g_.rho() : rho_k_; }
  Weight rho_g() const noexcept { return g_.rho(); }
  Weight rho_k() const noexcept { return rho_k_; }

  bool is_k_root(const Weight& w) const;

  /// Polarizing functional: vanishes on every root of K.
  const Functional& xi() const noexcept { return xi_; }
  /// Copy of the pair whose xi is nonzero on every weight in `weights`
  /// that is not a root of K. Tries the projection of rho_G first, then
  /// deterministic perturbations. Throws DegeneratePairError.
  SubgroupPair with_generic_xi(std::span<const Weight> weights) const;
  /// Projection of rho_K onto span Phi(K), as a functional.
  const Functional& rho_k_direction() const noexcept { return rho_k_dir_; }

  ChamberTest classify(const Weight& lam, Group which) const;
  bool is_dominant(const Weight& lam, Group which) const;
  /// w with w(lam) dominant for the chosen group, and the image.
  std::pair<WeylElement, Weight> dominant_conjugate(const Weight& lam, Group which) const;

 private:
  Functional xi_from(const Weight& seed) const;

  RootSystem g_;
  std::vector<Weight> k_positive_;
  std::vector<Weight> k_simple_;
  std::vector<WeylElement> weyl_k_;
  Weight rho_k_;
  Functional xi_;
  Functional rho_k_dir_;
};

}  // namespace weylquant
