#include "weylquant/oracle.hpp"

#include <functional>

#include "weylquant/errors.hpp"

namespace weylquant::oracle {

std::map<Weight, std::int64_t> enumerate_partitions(std::span<const Weight> generators, const Functional& f,
                                                    const Rational& bound) {
  std::vector<Rational> value;
  for (const auto& g : generators) {
    if (f(g) <= Rational(0)) throw NonPointedConeError("oracle functional is not positive on " + g.str());
    value.push_back(f(g));
  }
  std::map<Weight, std::int64_t> out;
  const std::size_t rank = generators.empty() ? 0 : generators.front().rank();
  std::function<void(std::size_t, const Weight&, const Rational&)> walk = [&](std::size_t j, const Weight& at,
                                                                              const Rational& used) {
    if (j == generators.size()) {
      ++out[at];
      return;
    }
    Weight cur = at;
    for (Rational v = used; v <= bound; v += value[j], cur += generators[j]) walk(j + 1, cur, v);
  };
  walk(0, Weight(rank), Rational(0));
  return out;
}

FormalCharacter kostant_character(const RootSystem& g, const Weight& lam) {
  const Weight rho = g.rho();
  const Functional& ht = g.height();
  // Deepest weight is w0(lam); everything shallower is computed exactly.
  Weight lowest = lam;
  for (const auto& w : g.weyl_group())
    if (ht(w.apply(lam)) < ht(lowest)) lowest = w.apply(lam);
  const Rational depth = ht(lam - lowest);
  const auto counts = enumerate_partitions(g.positive_roots(), ht, depth);
  FormalCharacter out;
  for (const auto& w : g.weyl_group()) {
    const Weight top = w.apply(lam + rho) - rho;
    for (const auto& [zeta, c] : counts) {
      const Weight mu = top - zeta;
      if (ht(lam - mu) <= depth) out.add_term(mu, w.sign() * c);
    }
  }
  return out;
}

}  // namespace weylquant::oracle
