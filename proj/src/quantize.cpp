#include "weylquant/quantize.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "weylquant/errors.hpp"

namespace weylquant {

namespace {

using Multiset = std::map<Weight, std::size_t>;

Multiset count(std::span<const Weight> ws) {
  Multiset m;
  for (const auto& w : ws) ++m[w];
  return m;
}

void merge_max(Multiset& into, const Multiset& from) {
  for (const auto& [w, k] : from) into[w] = std::max(into[w], k);
}

std::vector<Weight> expand(const Multiset& m) {
  std::vector<Weight> out;
  for (const auto& [w, k] : m) out.insert(out.end(), k, w);
  return out;
}

/// common minus part, as a list.
std::vector<Weight> missing(const Multiset& common, const Multiset& part) {
  std::vector<Weight> out;
  for (const auto& [w, k] : common) {
    const auto it = part.find(w);
    const std::size_t have = it == part.end() ? 0 : it->second;
    out.insert(out.end(), k - have, w);
  }
  return out;
}

/// Integer functional nonzero on every weight in `ws`, starting from the
/// height of G.
std::vector<std::int64_t> generic_order(const RootSystem& g, std::span<const Weight> ws) {
  std::vector<std::int64_t> base = integer_scaled(g.height());
  auto ok = [&](const std::vector<std::int64_t>& f) {
    return std::all_of(ws.begin(), ws.end(), [&](const Weight& w) { return TermOrder(f).key(w) != 0; });
  };
  if (ok(base)) return base;
  std::mt19937 rng(7u);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<std::int64_t> f = base;
    for (auto& x : f) x = x * 64 + dist(rng);
    if (ok(f)) return f;
  }
  throw DegeneratePairError("could not find a functional generic for the tangent weights");
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

enum class Form { Main, HalfWeight };

CharacterReport assemble(const FixedPointSet& fps, Form form) {
  const SubgroupPair& pair = fps.pair;
  const std::size_t n = pair.rank();
  const auto& g = pair.g();
  CharacterTable chi(pair, Group::K);
  auto factor_product = [&](std::span<const Weight> gammas) {
    return form == Form::Main ? product_one_minus(gammas, n) : product_half_differences(gammas, n);
  };

  CharacterReport report;
  report.half_weight_form = form == Form::HalfWeight;
  Multiset common;
  for (const auto& orbit : fps.orbits) {
    const FixedPoint& rep = fps.points[orbit.representative];
    for (const auto& a : orbit.orbit_tangent_weights)
      if (!g.is_positive_root(a))
        throw InconsistencyError("point " + rep.id + ": orbit tangent weight " + a.str() +
                                 " at a K-dominant point is a negative root of K");

    OrbitTerm term;
    term.orbit_id = orbit.id;
    term.component = orbit.component;
    term.denominator_factors = orbit.sweep.b_plus_orbit;
    const std::int64_t sign = orbit.pol.s % 2 ? -1 : 1;
    const Weight base = rep.mu + (form == Form::Main ? orbit.pol.beta_bar : orbit.pol.beta_half_sum);
    const FormalCharacter& m = form == Form::Main ? orbit.sweep.m : orbit.sweep.m_tilde;
    for (const auto& [eta, c] : m.terms()) {
      const Weight label = base + eta;
      term.k_terms.push_back({sign * c, label});
      term.numerator += (sign * c) * chi(label);
    }
    merge_max(common, count(term.denominator_factors));
    report.per_orbit_terms.push_back(std::move(term));
  }

  report.denominator_factors = expand(common);
  for (const auto& term : report.per_orbit_terms)
    report.numerator += term.numerator * factor_product(missing(common, count(term.denominator_factors)));
  report.character = exact_divide(report.numerator, factor_product(report.denominator_factors), g.term_order());
  report.k_decomposition = decompose_into_k(pair, report.character);
  return report;
}

}  // namespace

FormalCharacter localization_character(const SubgroupPair& pair, std::span<const FixedPoint> points) {
  const std::size_t n = pair.rank();
  std::vector<Weight> all;
  for (const auto& p : points) all.insert(all.end(), p.tangent_weights.begin(), p.tangent_weights.end());
  const TermOrder polar(generic_order(pair.g(), all));

  struct Term {
    std::int64_t sign;
    Weight exponent;
    Multiset factors;
  };
  std::vector<Term> terms;
  Multiset common;
  for (const auto& p : points) {
    Term t{1, p.mu, {}};
    for (const auto& w : p.tangent_weights) {
      // 1 / (1 - e^{-w}) = -e^{w} / (1 - e^{w}) for a flipped weight.
      if (polar.key(w) < 0) {
        t.sign = -t.sign;
        t.exponent += w;
        ++t.factors[-w];
      } else {
        ++t.factors[w];
      }
    }
    merge_max(common, t.factors);
    terms.push_back(std::move(t));
  }

  FormalCharacter numerator;
  for (const auto& t : terms) {
    const auto pad = missing(common, t.factors);
    numerator += t.sign * product_one_minus(pad, n).shifted(t.exponent);
  }
  try {
    return exact_divide(numerator, product_one_minus(expand(common), n), pair.g().term_order());
  } catch (const InexactDivisionError& e) {
    throw InexactDivisionError(std::string("localization sum is not a finite character: ") + e.what());
  }
}

FormalCharacter localization_character(const FixedPointSet& fps) {
  return localization_character(fps.pair, fps.points);
}

CharacterReport main_formula_character(const FixedPointSet& fps) {
  CharacterReport report = assemble(fps, Form::Main);
  if (report.character != localization_character(fps))
    throw InconsistencyError("main formula character differs from the localization character");
  return report;
}

CharacterReport lie_algebra_form(const FixedPointSet& fps) {
  CharacterReport report = assemble(fps, Form::HalfWeight);
  if (report.character != assemble(fps, Form::Main).character)
    throw InconsistencyError("half-weight form differs from the main formula");
  return report;
}

std::vector<Weight> complementary_positive_roots(const SubgroupPair& pair) {
  std::vector<Weight> out;
  for (const auto& phi : pair.g().positive_roots())
    if (!pair.is_k_root(phi)) out.push_back(phi);
  return out;
}

GkrsResult gkrs_multiplet(const SubgroupPair& pair, const Weight& lam) {
  if (!pair.is_dominant(lam, Group::G)) throw DomainError(lam.str() + " is not G-dominant");
  const std::size_t n = pair.rank();
  const Weight rho_g = pair.rho_g();
  CharacterTable chi(pair, Group::K);

  GkrsResult r;
  for (const auto& w : pair.g().weyl_group()) {
    if (pair.classify(w.apply(rho_g), Group::K).kind != ChamberKind::Interior) continue;
    r.coset_representatives.push_back(w);
    const KTerm t{w.sign(), w.apply(lam + rho_g) - pair.rho_k()};
    r.multiplet.push_back(t);
    r.lhs += t.coefficient * chi(t.label);
  }
  if (r.coset_representatives.size() * pair.weyl_k().size() != pair.g().weyl_group().size())
    throw InconsistencyError("|C| != |W(G)| / |W(K)|");
  r.rhs = weyl_character(pair, lam, Group::G) * product_half_differences(complementary_positive_roots(pair), n);
  if (r.lhs != r.rhs) throw InconsistencyError("GKRS identity fails for " + lam.str());
  return r;
}

bool VerificationReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

VerificationReport verify_fixture(const FixedPointSet& fps) {
  VerificationReport report;
  std::optional<FormalCharacter> reference;
  auto run = [&](const std::string& name, auto&& body) {
    const auto t0 = Clock::now();
    CheckResult c{name, false, "", 0};
    try {
      std::optional<FormalCharacter> value = body();
      if (value && reference && *value != *reference) {
        c.detail = "character differs from localization";
      } else {
        c.ok = true;
        if (value && !reference) reference = value;
      }
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    c.milliseconds = ms_since(t0);
    report.checks.push_back(std::move(c));
  };

  run("localization", [&] { return std::optional(localization_character(fps)); });
  run("main_formula", [&] { return std::optional(main_formula_character(fps).character); });
  run("lie_algebra_form", [&] { return std::optional(lie_algebra_form(fps).character); });
  if (fps.coadjoint_lambda) {
    const Weight lam = *fps.coadjoint_lambda;
    run("weyl_character", [&] { return std::optional(weyl_character(fps.pair, lam, Group::G)); });
    run("gkrs", [&] {
      const GkrsResult g = gkrs_multiplet(fps.pair, lam);
      // Divide out the half-weight denominator to compare characters.
      return std::optional(exact_divide(g.lhs,
                                        product_half_differences(complementary_positive_roots(fps.pair), fps.pair.rank()),
                                        fps.pair.g().term_order()));
    });
  }
  return report;
}

VerificationReport verify_points(const SubgroupPair& pair, std::vector<FixedPoint> points,
                                 std::optional<Weight> coadjoint_lambda) {
  const auto t0 = Clock::now();
  try {
    FixedPointSet fps = ingest(pair, points);
    fps.coadjoint_lambda = coadjoint_lambda;
    VerificationReport r = verify_fixture(fps);
    r.checks.insert(r.checks.begin(), {"ingest", true, "", ms_since(t0)});
    return r;
  } catch (const std::exception& e) {
    VerificationReport r;
    r.checks.push_back({"ingest", false, e.what(), ms_since(t0)});
    const auto t1 = Clock::now();
    CheckResult loc{"localization", false, "", 0};
    try {
      localization_character(pair, points);
      loc.ok = true;
    } catch (const std::exception& le) {
      loc.detail = le.what();
    }
    loc.milliseconds = ms_since(t1);
    r.checks.push_back(std::move(loc));
    return r;
  }
}

}  // namespace weylquant
