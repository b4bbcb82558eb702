#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace weylquant {

inline constexpr std::size_t kMaxRank = 8;

/// An element of the half weight lattice, stored in doubled
/// fundamental-weight coordinates: coordinate i is 2<lambda, alpha_i^vee>.
/// Integral weights have even coordinates; roots, rho and half-sums of
/// weights are all exactly representable.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank);
  Weight(std::initializer_list<int> coords);
  static Weight from(std::span<const int> coords);

  std::size_t rank() const noexcept { return rank_; }
  int operator[](std::size_t i) const noexcept { return coords_[i]; }
  int& operator[](std::size_t i) noexcept { return coords_[i]; }

  bool is_zero() const noexcept;
  /// All coordinates even, i.e. a genuine weight of the torus.
  bool is_integral() const noexcept;

  /// Exact halving; throws DomainError on an odd coordinate.
  Weight half() const;

  Weight& operator+=(const Weight& o) noexcept;
  Weight& operator-=(const Weight& o) noexcept;
  Weight operator-() const noexcept;
  friend Weight operator+(Weight a, const Weight& b) noexcept { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) noexcept { return a -= b; }
  friend Weight operator*(int k, Weight a) noexcept;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::vector<int> to_vector() const;
  std::string str() const;

 private:
  std::array<std::int32_t, kMaxRank> coords_{};
  std::uint8_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Sum of a multiset of weights; `rank` is used when the list is empty.
Weight sum(std::span<const Weight> ws, std::size_t rank);

/// Sorted copy, the canonical form used to compare weight multisets.
std::vector<Weight> sorted(std::vector<Weight> ws);

}  // namespace weylquant
