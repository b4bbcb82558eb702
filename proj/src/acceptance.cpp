#include "weylquant/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "weylquant/errors.hpp"
#include "weylquant/multiplicity.hpp"
#include "weylquant/oracle.hpp"
#include "weylquant/quantize.hpp"

namespace weylquant {

namespace samples {

SubgroupPair su3_pair() {
  const std::vector<Weight> roots{{4, -2}};
  return SubgroupPair::make(RootSystem::build("A2"), roots);
}

std::vector<FixedPoint> su3_points() {
  return {
      {"p_nu", {0, 6}, {{2, 2}, {-2, 4}}, std::nullopt, std::nullopt},
      {"p_plus", {6, -6}, {{4, -2}, {2, -4}}, std::nullopt, std::nullopt},
      {"p_minus", {-6, 0}, {{-4, 2}, {-2, -2}}, std::nullopt, std::nullopt},
  };
}

SubgroupPair b2_long_pair() {
  const RootSystem g = RootSystem::build("B2");
  const auto simple = g.simple_roots();
  const Weight longest = g.inner_product(simple[0], simple[0]) > g.inner_product(simple[1], simple[1]) ? simple[0] : simple[1];
  const std::vector<Weight> roots{longest};
  return SubgroupPair::make(g, roots);
}

SubgroupPair torus_pair(const std::string& type) { return SubgroupPair::make(RootSystem::build(type), {}); }

std::vector<FixedPoint> product_points(const SubgroupPair& pair, const Weight& a, const Weight& b) {
  std::vector<FixedPoint> out;
  for (const auto& p : coadjoint_fixture(pair, a))
    for (const auto& q : coadjoint_fixture(pair, b)) {
      FixedPoint x;
      x.id = p.id + "." + q.id;
      x.mu = p.mu + q.mu;
      x.tangent_weights = p.tangent_weights;
      x.tangent_weights.insert(x.tangent_weights.end(), q.tangent_weights.begin(), q.tangent_weights.end());
      out.push_back(std::move(x));
    }
  return out;
}

std::vector<FixedPoint> twisted(std::vector<FixedPoint> points, const Weight& shift) {
  for (auto& p : points) p.mu += shift;
  return points;
}

}  // namespace samples

namespace {

using Clock = std::chrono::steady_clock;

/// Collects failures; a criterion passes when nothing was recorded.
class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (!failures_.empty()) {
      s << ", " << failures_.size() << " failed: " << failures_.front();
      if (failures_.size() > 1) s << " (+" << failures_.size() - 1 << " more)";
    }
    for (const auto& n : notes_) s << "; " << n;
    return s.str();
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::vector<Weight> dominant_box(const SubgroupPair& pair, int max_coord, bool include_zero) {
  Window w;
  w.lo.assign(pair.rank(), 0);
  w.hi.assign(pair.rank(), max_coord);
  std::vector<Weight> out;
  for (const auto& lam : dominant_weights_in(pair, w))
    if (pair.is_dominant(lam, Group::G) && (include_zero || !lam.is_zero())) out.push_back(lam);
  return out;
}

struct NamedFixture {
  std::string name;
  FixedPointSet fps;
};

FixedPointSet coadjoint(const SubgroupPair& pair, const Weight& lam) {
  FixedPointSet fps = ingest(pair, coadjoint_fixture(pair, lam));
  fps.coadjoint_lambda = lam;
  return fps;
}

std::vector<NamedFixture> consistency_fixtures(Scope scope) {
  std::vector<NamedFixture> out;
  out.push_back({"su3 example", ingest(samples::su3_pair(), samples::su3_points())});
  struct Spec {
    SubgroupPair pair;
    std::vector<Weight> lams;
  };
  std::vector<Spec> specs{
      {samples::su3_pair(), {{0, 4}, {4, 0}, {2, 2}, {2, 4}}},
      {samples::b2_long_pair(), {{2, 0}, {0, 2}, {2, 2}}},
      {samples::torus_pair("A2"), {{0, 2}, {2, 2}}},
  };
  if (scope == Scope::Full) {
    specs.push_back({samples::su3_pair(), {{0, 6}, {6, 0}, {4, 2}}});
    specs.push_back({samples::b2_long_pair(), {{4, 0}, {0, 4}, {4, 2}}});
    specs.push_back({samples::torus_pair("G2"), {{2, 0}, {0, 2}}});
    specs.push_back({SubgroupPair::make(RootSystem::build("G2"), std::vector<Weight>{RootSystem::build("G2").simple_roots()[0]}),
                     {{2, 0}, {0, 2}, {2, 2}}});
  }
  for (const auto& s : specs)
    for (const auto& lam : s.lams)
      out.push_back({s.pair.g().cartan_type().label() + " orbit " + lam.str(), coadjoint(s.pair, lam)});
  out.push_back({"A1 product (4)x(2)", ingest(samples::torus_pair("A1"),
                                              samples::product_points(samples::torus_pair("A1"), {4}, {2}))});
  out.push_back({"A2 product (0,2)x(2,0), K = T",
                 ingest(samples::torus_pair("A2"), samples::product_points(samples::torus_pair("A2"), {0, 2}, {2, 0}))});
  out.push_back({"su3 example twisted by (0,2)", ingest(samples::su3_pair(), samples::twisted(samples::su3_points(), {0, 2}))});
  return out;
}

// --- criteria ---------------------------------------------------------------

void su3_example(Ledger& led) {
  const SubgroupPair pair = samples::su3_pair();
  const FixedPointSet fps = ingest(pair, samples::su3_points());
  const CharacterReport r = main_formula_character(fps);
  const Weight nu{0, 6}, w_nu{6, -6}, beta{2, 2}, gamma{-2, 4};

  std::map<Weight, std::int64_t> terms;
  for (const auto& o : r.per_orbit_terms)
    for (const auto& t : o.k_terms) terms[t.label] += t.coefficient;
  const std::map<Weight, std::int64_t> expected{{nu, 1}, {w_nu - gamma, -1}, {w_nu - beta - gamma, 1}};
  led.expect(terms == expected, "numerator K-characters differ from chi_nu - chi_{w nu - gamma} + chi_{w nu - beta - gamma}");
  led.expect(sorted(r.denominator_factors) == sorted({beta, gamma}), "common denominator is not {beta, gamma}");
  for (const auto& o : r.per_orbit_terms)
    led.expect(sorted(o.denominator_factors) == sorted({beta, gamma}), "orbit " + o.orbit_id + " denominator is not {beta, gamma}");
  led.expect(r.character == weyl_character(pair, nu, Group::G), "character differs from the Weyl character of 3 omega_2");
  led.expect(r.character.total() == 10, "total multiplicity is not 10");
}

void figure_multiplicities(Ledger& led) {
  const FixedPointSet fps = ingest(samples::su3_pair(), samples::su3_points());
  const auto spectrum = multiplicity_spectrum(fps, Window::parse("-12:12", 2));
  const std::map<Weight, std::int64_t> expected{{{6, -6}, 1}, {{4, -2}, 1}, {{2, 2}, 1}, {{0, 6}, 1}};
  led.expect(spectrum == expected, "spectrum is not the four circled weights with multiplicity one");
}

void gkrs_identity(Ledger& led, Scope scope) {
  const int bound = scope == Scope::Full ? 6 : 4;
  for (const auto& pair : {samples::su3_pair(), samples::b2_long_pair()}) {
    for (const auto& lam : dominant_box(pair, bound, true)) {
      try {
        const GkrsResult r = gkrs_multiplet(pair, lam);
        led.expect(r.lhs == r.rhs, "identity fails at " + lam.str());
      } catch (const Error& e) {
        led.expect(false, pair.g().cartan_type().label() + " " + lam.str() + ": " + e.what());
      }
    }
  }
}

void torus_degeneration(Ledger& led, Scope scope) {
  const std::vector<std::string> types = scope == Scope::Full ? std::vector<std::string>{"A2", "B2", "G2"}
                                                              : std::vector<std::string>{"A2", "B2"};
  const int bound = scope == Scope::Full ? 4 : 2;
  for (const auto& type : types) {
    const SubgroupPair pair = samples::torus_pair(type);
    for (const auto& lam : dominant_box(pair, bound, false)) {
      const std::string where = type + " " + lam.str();
      const FixedPointSet fps = coadjoint(pair, lam);
      const FormalCharacter weyl = weyl_character(pair, lam, Group::G);
      led.expect(main_formula_character(fps).character == weyl, where + ": main formula differs from Weyl");
      const FormalCharacter kostant = oracle::kostant_character(pair.g(), lam);
      led.expect(kostant == freudenthal_multiplicities(pair, lam, Group::G), where + ": Kostant differs from Freudenthal");
      const Window window = Window::around(weyl, pair.rank());
      const auto spectrum = multiplicity_spectrum(fps, window);
      std::map<Weight, std::int64_t> expected;
      for (const auto& [mu, c] : kostant.terms())
        if (window.contains(mu)) expected.emplace(mu, c);
      led.expect(spectrum == expected, where + ": Z-sum differs from Kostant");
    }
  }
}

void theorem_vs_character(Ledger& led, Scope scope) {
  std::size_t weights = 0;
  for (const auto& f : consistency_fixtures(scope)) {
    try {
      const FormalCharacter chi = main_formula_character(f.fps).character;
      const auto decomposition = decompose_into_k(f.fps.pair, chi);
      const Window window = Window::around(chi, f.fps.pair.rank());
      const auto lams = dominant_weights_in(f.fps.pair, window);
      weights += lams.size();
      for (const auto& lam : lams) {
        const auto it = decomposition.find(lam);
        const std::int64_t want = it == decomposition.end() ? 0 : it->second;
        led.expect(multiplicity_theorem(f.fps, lam) == want, f.name + " at " + lam.str());
      }
    } catch (const Error& e) {
      led.expect(false, f.name + ": " + e.what());
    }
  }
  led.note(std::to_string(weights) + " weights compared");
}

void oracle_equivalences(Ledger& led, Scope scope) {
  // Weyl against Freudenthal on random dominant weights.
  std::mt19937 rng(20240917u);
  const std::vector<std::string> types{"A2", "B2", "G2", "A3", "B3", "C3"};
  const int samples_wanted = scope == Scope::Full ? 120 : 50;
  const int max_half = scope == Scope::Full ? 3 : 2;
  std::uniform_int_distribution<int> pick_type(0, static_cast<int>(types.size()) - 1);
  std::uniform_int_distribution<int> pick_coord(0, max_half);
  for (int k = 0; k < samples_wanted; ++k) {
    const SubgroupPair pair = samples::torus_pair(types[pick_type(rng)]);
    Weight lam(pair.rank());
    for (std::size_t i = 0; i < pair.rank(); ++i) lam[i] = 2 * pick_coord(rng);
    led.expect(weyl_character(pair, lam, Group::G) == freudenthal_multiplicities(pair, lam, Group::G),
               pair.g().cartan_type().label() + " " + lam.str() + ": Weyl differs from Freudenthal");
  }

  // Memoized partition counts against plain enumeration.
  std::vector<PartitionProblem> problems;
  {
    const RootSystem a2 = RootSystem::build("A2");
    const auto pos = a2.positive_roots();
    problems.emplace_back(std::vector<Weight>(pos.begin(), pos.end()), a2.height());
  }
  std::set<std::vector<Weight>> seen;
  std::set<Weight> walls_seen;
  for (const auto& f : consistency_fixtures(scope)) {
    for (const auto& t : z_terms(f.fps))
      if (!t.generators.empty() && seen.insert(sorted(t.generators)).second)
        problems.push_back(PartitionProblem::for_pair(f.fps.pair, t.generators));
    for (const auto& o : f.fps.orbits)
      if (!o.walls.empty())
        led.expect(denominator_identity_check(f.fps.pair, o.walls), f.name + ": denominator identity fails on a wall set");
  }
  std::size_t arguments = 0;
  for (const auto& pp : problems) {
    // Normalize so the smallest generator has value 1.
    Rational least = pp.functional()(pp.generators().front());
    for (const auto& g : pp.generators()) least = std::min(least, pp.functional()(g));
    const Functional f = pp.functional() * (Rational(1) / least);
    const Rational bound(40);
    const auto brute = oracle::enumerate_partitions(pp.generators(), f, bound);
    const std::size_t n = pp.generators().front().rank();
    // Every lattice point in the box spanned by the enumeration, plus a margin.
    std::vector<int> lo(n, 0), hi(n, 0);
    for (const auto& [z, _] : brute)
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], z[i] - 2);
        hi[i] = std::max(hi[i], z[i] + 2);
      }
    Weight z(n);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
      if (i == n) {
        const Rational v = f(z);
        if (v > bound) return;
        ++arguments;
        const auto it = brute.find(z);
        const std::int64_t want = it == brute.end() ? 0 : it->second;
        led.expect(pp.count(z) == want, "partition count at " + z.str());
        return;
      }
      for (int v = lo[i]; v <= hi[i]; ++v) {
        z[i] = v;
        walk(i + 1);
      }
    };
    walk(0);
  }
  led.note(std::to_string(samples_wanted) + " random weights, " + std::to_string(problems.size()) +
           " partition problems, " + std::to_string(arguments) + " arguments");
}

void gp_comparison_tables(Ledger& led, Scope scope) {
  const FixedPointSet example = ingest(samples::su3_pair(), samples::su3_points());
  const auto rows = gp_comparison(example, Window::parse("-12:12", 2));
  led.expect(!rows.empty(), "empty comparison table for the running example");
  std::size_t disagreements = 0;
  for (const auto& r : rows) disagreements += r.delta() != 0;
  led.note("running example: " + std::to_string(rows.size()) + " rows, " + std::to_string(disagreements) + " disagree");

  std::vector<std::pair<SubgroupPair, Weight>> generic{{samples::torus_pair("A2"), {2, 2}},
                                                      {samples::su3_pair(), {2, 2}},
                                                      {samples::b2_long_pair(), {2, 2}}};
  if (scope == Scope::Full) {
    generic.push_back({samples::torus_pair("B2"), {2, 2}});
    generic.push_back({samples::su3_pair(), {4, 2}});
  }
  for (const auto& [pair, lam] : generic) {
    const FixedPointSet fps = coadjoint(pair, lam);
    const auto table = gp_comparison(fps, Window::around(weyl_character(pair, lam, Group::G), pair.rank()));
    const std::string where = pair.g().cartan_type().label() + (pair.k_positive_roots().empty() ? "/T " : "/K ") + lam.str();
    led.expect(!table.empty(), "empty comparison table for " + where);
    std::size_t differ = 0;
    for (const auto& r : table) differ += r.delta() != 0;
    led.note(where + ": " + std::to_string(table.size()) + " rows, " + std::to_string(differ) + " disagree");
  }
}

void negative_control(Ledger& led) {
  const SubgroupPair pair = samples::su3_pair();
  const auto points = samples::su3_points();
  std::size_t flips = 0, detected = 0;
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t t = 0; t < points[p].tangent_weights.size(); ++t) {
      auto bad = points;
      bad[p].tangent_weights[t] = -bad[p].tangent_weights[t];
      ++flips;
      try {
        localization_character(pair, bad);
        led.expect(false, "flip of " + points[p].id + " weight " + std::to_string(t) + " went undetected");
      } catch (const InexactDivisionError& e) {
        ++detected;
        led.expect(e.exit_code() == 3, "inexact division does not map to exit code 3");
      }
    }
  led.note(std::to_string(detected) + "/" + std::to_string(flips) + " single flips rejected");
}

}  // namespace

CriterionResult run_criterion(int id, Scope scope) {
  static const char* const names[] = {"",
                                      "SU(3) worked example",
                                      "four circled multiplicities",
                                      "GKRS identity",
                                      "torus degeneration to Weyl and Kostant",
                                      "theorem against character",
                                      "oracle equivalences",
                                      "Guillemin-Prato comparison tables",
                                      "negative control"};
  // Wall-clock budgets in milliseconds; 0 means unbounded.
  static const double budgets[] = {0, 1000, 1000, 30000, 60000, 0, 0, 0, 0};
  CriterionResult r;
  r.id = id;
  if (id < 1 || id > 8) {
    r.detail = "no such criterion";
    return r;
  }
  r.name = names[id];
  Ledger led;
  const auto t0 = Clock::now();
  try {
    switch (id) {
      case 1: su3_example(led); break;
      case 2: figure_multiplicities(led); break;
      case 3: gkrs_identity(led, scope); break;
      case 4: torus_degeneration(led, scope); break;
      case 5: theorem_vs_character(led, scope); break;
      case 6: oracle_equivalences(led, scope); break;
      case 7: gp_comparison_tables(led, scope); break;
      case 8: negative_control(led); break;
    }
  } catch (const std::exception& e) {
    led.expect(false, std::string("unexpected error: ") + e.what());
  }
  r.milliseconds = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (budgets[id] > 0) led.expect(r.milliseconds < budgets[id], "over the time budget");
  r.ok = led.ok();
  r.detail = led.summary();
  return r;
}

std::vector<CriterionResult> run_acceptance(Scope scope) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 8; ++id) out.push_back(run_criterion(id, scope));
  return out;
}

}  // namespace weylquant
