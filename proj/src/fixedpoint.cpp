#include "weylquant/fixedpoint.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "weylquant/errors.hpp"

namespace weylquant {

namespace {

std::vector<Weight> apply_all(const WeylElement& w, std::span<const Weight> ws) {
  std::vector<Weight> out;
  out.reserve(ws.size());
  for (const auto& x : ws) out.push_back(w.apply(x));
  return out;
}

void validate_point(const SubgroupPair& pair, const FixedPoint& p) {
  const std::size_t n = pair.rank();
  if (p.mu.rank() != n) throw InputError("point " + p.id + ": moment image has the wrong length");
  if (!p.mu.is_integral()) throw MalformedPointError("point " + p.id + ": moment image " + p.mu.str() + " is not integral");
  if (p.tangent_weights.empty()) throw MalformedPointError("point " + p.id + ": no tangent weights");
  for (const auto& t : p.tangent_weights) {
    if (t.rank() != n) throw InputError("point " + p.id + ": tangent weight has the wrong length");
    if (t.is_zero()) throw MalformedPointError("point " + p.id + ": zero tangent weight (fixed point not isolated)");
    if (!t.is_integral()) throw MalformedPointError("point " + p.id + ": tangent weight " + t.str() + " is not integral");
  }
}

}  // namespace

SplitWeights split_orbit_weights(const SubgroupPair& pair, const FixedPoint& p) {
  SplitWeights out;
  std::vector<Weight> rest = p.tangent_weights;
  for (const auto& a : pair.k_positive_roots()) {
    const int pairing = pair.g().coroot_pairing2(p.mu, a);
    if (pairing == 0) continue;
    const Weight preferred = pairing > 0 ? a : -a;
    auto it = std::find(rest.begin(), rest.end(), preferred);
    if (it == rest.end()) it = std::find(rest.begin(), rest.end(), -preferred);
    if (it == rest.end())
      throw MalformedPointError("point " + p.id + ": neither " + a.str() + " nor its negative is a tangent weight");
    out.orbit_weights.push_back(*it);
    rest.erase(it);
  }
  out.transverse = std::move(rest);
  return out;
}

Polarization polarize(const SubgroupPair& pair, std::span<const Weight> transverse) {
  const std::size_t n = pair.rank();
  Polarization pol;
  pol.beta_bar = Weight(n);
  Weight total(n), total_plus(n);
  for (const auto& b : transverse) {
    const Rational v = pair.xi()(b);
    if (v == Rational(0) && !pair.is_k_root(b))
      throw DegeneratePairError("polarizing functional vanishes on " + b.str());
    const bool flip = v < 0;
    const Weight plus = flip ? -b : b;
    pol.plus.push_back(plus);
    if (flip) {
      ++pol.s;
      pol.beta_bar += b;
    }
    total += b;
    total_plus += plus;
  }
  pol.beta_half_sum = total.half();
  pol.beta_plus_half_sum = total_plus.half();
  return pol;
}

OrbitSweep orbit_polarized_set(const SubgroupPair& pair, std::span<const Weight> transverse,
                               std::vector<std::string>* warnings) {
  const std::size_t n = pair.rank();
  std::map<Weight, std::size_t> max_mult;
  for (const auto& w : pair.weyl_k()) {
    std::map<Weight, std::size_t> mult;
    for (const auto& p : polarize(pair, apply_all(w, transverse)).plus) ++mult[p];
    for (const auto& [x, k] : mult) max_mult[x] = std::max(max_mult[x], k);
  }
  OrbitSweep sweep;
  for (const auto& [x, k] : max_mult) sweep.b_plus_orbit.insert(sweep.b_plus_orbit.end(), k, x);

  std::map<Weight, std::size_t> remaining = max_mult;
  const Polarization own = polarize(pair, transverse);
  bool repeated = false;
  for (const auto& p : own.plus) {
    --remaining[p];
    if (max_mult[p] > 1) repeated = true;
  }
  for (const auto& [x, k] : remaining) sweep.c.insert(sweep.c.end(), k, x);
  if (repeated && warnings)
    warnings->push_back("repeated transverse weight; orbit denominator uses maximal per-point multiplicity");

  sweep.m = product_one_minus(sweep.c, n);
  sweep.m_tilde = product_half_differences(sweep.c, n);
  return sweep;
}

FixedPointSet ingest(const SubgroupPair& pair_in, std::vector<FixedPoint> raw) {
  if (raw.empty()) throw InputError("empty fixed-point list");
  std::set<std::string> ids;
  for (const auto& p : raw) {
    validate_point(pair_in, p);
    if (!ids.insert(p.id).second) throw InputError("duplicate point id '" + p.id + "'");
  }

  std::vector<Weight> all_weights;
  for (const auto& p : raw) all_weights.insert(all_weights.end(), p.tangent_weights.begin(), p.tangent_weights.end());

  FixedPointSet fps{pair_in.with_generic_xi(all_weights), std::move(raw), {}, {}, {}, std::nullopt};
  const SubgroupPair& pair = fps.pair;
  const auto& g = pair.g();
  const auto& points = fps.points;

  std::vector<std::vector<Weight>> canonical;
  for (const auto& p : points) canonical.push_back(sorted(p.tangent_weights));

  std::vector<bool> assigned(points.size(), false);
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (assigned[r] || !pair.is_dominant(points[r].mu, Group::K)) continue;
    const FixedPoint& rep = points[r];

    OrbitData orbit;
    orbit.id = rep.id;
    orbit.representative = r;
    orbit.component = rep.component;
    orbit.walls = pair.classify(rep.mu, Group::K).walls;

    // The stabilizer of the representative is generated by its walls; its
    // tangent multiset has to be invariant under it.
    for (const auto& a : orbit.walls) {
      if (sorted(apply_all(g.reflection(a), rep.tangent_weights)) != canonical[r])
        throw InconsistencyError("point " + rep.id + ": tangent weights are not invariant under the reflection in " +
                                 a.str() + " fixing its moment image");
    }

    // Group W(K) by the image data (w mu, w T); each class is one coset.
    std::map<std::pair<Weight, std::vector<Weight>>, std::vector<WeylElement>> targets;
    std::vector<std::pair<Weight, std::vector<Weight>>> target_order;
    for (const auto& w : pair.weyl_k()) {
      auto key = std::make_pair(w.apply(rep.mu), sorted(apply_all(w, rep.tangent_weights)));
      auto [it, inserted] = targets.try_emplace(key);
      if (inserted) target_order.push_back(key);
      it->second.push_back(w);
    }

    const SplitWeights split = split_orbit_weights(pair, rep);
    orbit.orbit_tangent_weights = split.orbit_weights;
    orbit.transverse = split.transverse;
    orbit.pol = polarize(pair, orbit.transverse);
    orbit.sweep = orbit_polarized_set(pair, orbit.transverse, &fps.warnings);

    for (const auto& key : target_order) {
      std::vector<std::size_t> candidates;
      for (std::size_t q = 0; q < points.size(); ++q) {
        if (assigned[q] || points[q].mu != key.first || canonical[q] != key.second) continue;
        if (rep.orbit && points[q].orbit != rep.orbit) continue;
        candidates.push_back(q);
      }
      if (candidates.size() > 1)
        throw AmbiguousDataError("points " + points[candidates[0]].id + " and " + points[candidates[1]].id +
                                 " have identical data; supply explicit \"orbit\" labels");
      if (candidates.empty())
        throw InconsistencyError("W(K)-orbit of point " + rep.id + " is incomplete: no point with moment image " +
                                 key.first.str() + " and the transported tangent weights");
      const std::size_t q = candidates.front();
      assigned[q] = true;

      OrbitMember member;
      member.point = q;
      member.coset = targets.at(key);
      member.transverse = apply_all(member.coset.front(), orbit.transverse);
      member.pol = polarize(pair, member.transverse);
      if (member.pol.s != orbit.pol.s)
        throw InconsistencyError("polarization count differs across the orbit of " + rep.id);
      orbit.members.push_back(std::move(member));
    }
    if (orbit.members.front().point != r)
      throw AmbiguousDataError("representative " + rep.id + " matched another point");

    const std::size_t index = fps.orbits.size();
    for (std::size_t m = 0; m < orbit.members.size(); ++m)
      for (const auto& w : orbit.members[m].coset) fps.z_set.push_back({index, m, w});
    fps.orbits.push_back(std::move(orbit));
  }

  for (std::size_t q = 0; q < points.size(); ++q)
    if (!assigned[q])
      throw InconsistencyError("point " + points[q].id + " is not in the W(K)-orbit of any K-dominant point");
  return fps;
}

std::vector<FixedPoint> coadjoint_fixture(const SubgroupPair& pair, const Weight& lam, int sign) {
  if (!pair.is_dominant(lam, Group::G)) throw DomainError(lam.str() + " is not G-dominant");
  if (lam.is_zero()) throw DomainError("the orbit of 0 is a point; it has no tangent weights");
  if (!lam.is_integral()) throw DomainError(lam.str() + " is not integral");
  const auto& g = pair.g();
  std::vector<Weight> moving;
  for (const auto& phi : g.positive_roots())
    if (g.coroot_pairing2(lam, phi) != 0) moving.push_back(phi);

  std::vector<FixedPoint> out;
  std::set<Weight> seen;
  for (const auto& w : g.weyl_group()) {
    const Weight mu = w.apply(lam);
    if (!seen.insert(mu).second) continue;
    FixedPoint p;
    p.id = "p" + std::to_string(out.size());
    p.mu = mu;
    for (const auto& phi : moving) p.tangent_weights.push_back(sign * w.apply(phi));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace weylquant
