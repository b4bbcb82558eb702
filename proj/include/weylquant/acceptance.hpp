#pragma once

#include <string>
#include <vector>

#include "weylquant/fixedpoint.hpp"

namespace weylquant {

/// Reference data shared by the acceptance suite, the tests and the CLI.
namespace samples {

/// A2 with K the Levi subgroup S(U(2) x U(1)) generated by alpha_1.
SubgroupPair su3_pair();
/// Three fixed points of the orbit through 3 omega_2, the running example.
std::vector<FixedPoint> su3_points();
/// B2 with K = SU(2) x T on the long simple root.
SubgroupPair b2_long_pair();
/// The pair (G, T).
SubgroupPair torus_pair(const std::string& type);
/// Fixed points of the product of two coadjoint orbits; not itself an orbit.
std::vector<FixedPoint> product_points(const SubgroupPair& pair, const Weight& a, const Weight& b);
/// Every moment image moved by `shift` (a K-invariant weight): the line
/// bundle tensored with a character of K.
std::vector<FixedPoint> twisted(std::vector<FixedPoint> points, const Weight& shift);

}  // namespace samples

enum class Scope { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool ok = false;
  std::string detail;
  double milliseconds = 0;
};

/// One criterion; never throws (errors become failures with a detail).
CriterionResult run_criterion(int id, Scope scope);
/// Criteria 1..8 in order.
std::vector<CriterionResult> run_acceptance(Scope scope);

}  // namespace weylquant
