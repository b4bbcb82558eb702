#include "weylquant/multiplicity.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "weylquant/errors.hpp"
#include "weylquant/quantize.hpp"

namespace weylquant {

// ---------------------------------------------------------------------------
// PartitionProblem

PartitionProblem::PartitionProblem(std::vector<Weight> generators, Functional functional)
    : generators_(std::move(generators)), functional_(std::move(functional)) {
  for (const auto& g : generators_) {
    if (g.is_zero()) throw NonPointedConeError("zero generator in a partition problem");
    if (functional_(g) <= 0)
      throw NonPointedConeError("pointedness functional is not positive on generator " + g.str());
  }
  scaled_ = integer_scaled(functional_);
  memo_.resize(generators_.size());
}

PartitionProblem PartitionProblem::for_pair(const SubgroupPair& pair, std::vector<Weight> generators) {
  const Functional& xi = pair.xi();
  const Functional& dir = pair.rho_k_direction();
  if (std::all_of(generators.begin(), generators.end(), [&](const Weight& g) { return xi(g) > 0; }))
    return PartitionProblem(std::move(generators), xi);

  // Need xi(g) + t dir(g) > 0 for all g: t in (lower, upper).
  Rational lower(0);
  std::optional<Rational> upper;
  for (const auto& g : generators) {
    const Rational a = xi(g), b = dir(g);
    if (b > 0) {
      lower = std::max(lower, -a / b);
    } else if (b < 0) {
      if (a <= 0) throw NonPointedConeError("generators do not lie in an open half-space");
      upper = upper ? std::min(*upper, a / -b) : a / -b;
    } else if (a <= 0) {
      throw NonPointedConeError("generator " + g.str() + " vanishes on every candidate functional");
    }
  }
  if (upper && *upper <= lower) throw NonPointedConeError("generators do not lie in an open half-space");
  const Rational t = upper ? (lower + *upper) / 2 : lower + 1;
  return PartitionProblem(std::move(generators), xi + dir * t);
}

std::int64_t PartitionProblem::count(const Weight& zeta) const {
  const std::int64_t result = count_from(0, zeta);
  for (auto& m : memo_) m.clear();
  return result;
}

std::int64_t PartitionProblem::count_from(std::size_t j, const Weight& zeta) const {
  const TermOrder key(scaled_);
  const std::int64_t height = key.key(zeta);
  if (height < 0) return 0;
  if (j == generators_.size()) return zeta.is_zero() ? 1 : 0;
  const Weight& g = generators_[j];
  const std::int64_t step = key.key(g);
  if (j + 1 == generators_.size()) {
    if (height % step != 0) return 0;
    return static_cast<int>(height / step) * g == zeta ? 1 : 0;
  }
  auto& memo = memo_[j];
  if (const auto it = memo.find(zeta); it != memo.end()) return it->second;
  std::int64_t total = 0;
  Weight rest = zeta;
  for (std::int64_t used = 0; used * step <= height; ++used, rest -= g) total += count_from(j + 1, rest);
  memo.emplace(zeta, total);
  return total;
}

// ---------------------------------------------------------------------------
// The Z-sum

std::vector<ZTerm> z_terms(const FixedPointSet& fps) {
  const SubgroupPair& pair = fps.pair;
  const Weight rho_k = pair.rho_k();
  std::vector<ZTerm> out;
  for (const auto& z : fps.z_set) {
    const OrbitData& orbit = fps.orbits[z.orbit];
    const OrbitMember& member = orbit.members[z.member];
    const Polarization& pol = member.pol;
    const Weight& mu = fps.points[member.point].mu;
    const Weight shift = z.w.apply(rho_k) - rho_k;
    ZTerm t;
    t.point = member.point;
    t.w = z.w;
    t.sign = (pol.s % 2 ? -1 : 1) * z.w.sign();
    // beta - beta^+ is the sum of the flipped weights.
    t.base = mu + shift + pol.beta_bar;
    t.gp_offset = shift - pol.beta_bar - mu;
    t.generators = pol.plus;
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

void require_k_dominant(const SubgroupPair& pair, const Weight& lam) {
  if (lam.rank() != pair.rank()) throw InputError("weight " + lam.str() + " has the wrong length");
  if (!pair.is_dominant(lam, Group::K)) throw DomainError(lam.str() + " is not K-dominant");
  if (!lam.is_integral()) throw DomainError(lam.str() + " is not integral");
}

/// Z terms with their partition problems; one per worker.
class Evaluator {
 public:
  explicit Evaluator(const FixedPointSet& fps) : terms_(z_terms(fps)) {
    std::map<std::vector<Weight>, std::size_t> index;
    for (const auto& t : terms_) {
      auto [it, inserted] = index.try_emplace(t.generators, problems_.size());
      if (inserted) problems_.push_back(PartitionProblem::for_pair(fps.pair, t.generators));
      problem_of_.push_back(it->second);
    }
  }

  std::int64_t theorem(const Weight& lam) const {
    return sum([&](const ZTerm& t) { return t.base - lam; });
  }
  // The variant counts in the opposite cone: P(-zeta) for its argument zeta.
  std::int64_t gp(const Weight& lam) const {
    return sum([&](const ZTerm& t) { return -(lam + t.gp_offset); });
  }

 private:
  template <class Arg>
  std::int64_t sum(Arg argument) const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const Weight zeta = argument(terms_[i]);
      // Cannot happen for valid data; such a term would contribute nothing.
      if (!zeta.is_integral()) continue;
      total += terms_[i].sign * problems_[problem_of_[i]].count(zeta);
    }
    return total;
  }

  std::vector<ZTerm> terms_;
  std::vector<PartitionProblem> problems_;
  std::vector<std::size_t> problem_of_;
};

template <class F>
void parallel_for(std::size_t n, F&& body) {
  const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(n)));
  if (workers <= 1) {
    body(0, n, 1);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < workers; ++k) pool.emplace_back([&, k] { body(k, n, workers); });
  for (auto& t : pool) t.join();
}

}  // namespace

std::int64_t multiplicity_theorem(const FixedPointSet& fps, const Weight& lam) {
  require_k_dominant(fps.pair, lam);
  return Evaluator(fps).theorem(lam);
}

std::int64_t guillemin_prato_variant(const FixedPointSet& fps, const Weight& lam) {
  require_k_dominant(fps.pair, lam);
  return Evaluator(fps).gp(lam);
}

std::int64_t kostant_branching(const SubgroupPair& pair, const Weight& nu, const Weight& lam) {
  if (nu.rank() != pair.rank()) throw InputError("weight " + nu.str() + " has the wrong length");
  if (!pair.is_dominant(nu, Group::G)) throw DomainError(nu.str() + " is not G-dominant");
  if (pair.classify(nu, Group::G).kind != ChamberKind::Interior)
    throw DomainError(nu.str() + " is singular; the branching sum needs a regular weight");
  require_k_dominant(pair, lam);
  const PartitionProblem pp(complementary_positive_roots(pair), pair.g().height());
  const Weight rho = pair.rho_g();
  std::int64_t total = 0;
  for (const auto& u : pair.g().weyl_group()) total += u.sign() * pp.count(u.apply(nu + rho) - lam - rho);
  return total;
}

// ---------------------------------------------------------------------------
// Windows and sweeps

bool Window::empty() const {
  if (lo.empty()) return true;
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return true;
  return false;
}

bool Window::contains(const Weight& w) const {
  if (w.rank() != lo.size()) return false;
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (w[i] < lo[i] || w[i] > hi[i]) return false;
  return true;
}

Window Window::parse(const std::string& text, std::size_t rank) {
  std::vector<std::pair<int, int>> ranges;
  if (text.empty() || text.back() == ',') throw InputError("window '" + text + "' is incomplete");
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw InputError("window range '" + part + "' is not of the form lo:hi");
    try {
      std::size_t used = 0;
      const std::string a = part.substr(0, colon), b = part.substr(colon + 1);
      const int lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      const int hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(b);
      ranges.emplace_back(lo, hi);
    } catch (const std::logic_error&) {
      throw InputError("window range '" + part + "' is not numeric");
    }
  }
  if (ranges.size() == 1) ranges.assign(rank, ranges.front());
  if (ranges.size() != rank) throw InputError("window has " + std::to_string(ranges.size()) + " ranges for rank " + std::to_string(rank));
  Window w;
  for (const auto& [a, b] : ranges) {
    w.lo.push_back(a);
    w.hi.push_back(b);
  }
  return w;
}

Window Window::around(const FormalCharacter& x, std::size_t rank, int margin) {
  Window w;
  if (x.empty()) {
    w.lo.assign(rank, 0);
    w.hi.assign(rank, -1);
    return w;
  }
  w.lo.assign(rank, std::numeric_limits<int>::max());
  w.hi.assign(rank, std::numeric_limits<int>::min());
  for (const auto& [e, _] : x.terms())
    for (std::size_t i = 0; i < rank; ++i) {
      w.lo[i] = std::min(w.lo[i], e[i] - margin);
      w.hi[i] = std::max(w.hi[i], e[i] + margin);
    }
  return w;
}

std::vector<Weight> dominant_weights_in(const SubgroupPair& pair, const Window& window) {
  std::vector<Weight> out;
  if (window.empty()) return out;
  const std::size_t n = pair.rank();
  if (window.lo.size() != n) throw InputError("window rank does not match the group");
  Weight cur(n);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      if (pair.is_dominant(cur, Group::K)) out.push_back(cur);
      return;
    }
    // Integral weights have even coordinates.
    int start = window.lo[i] % 2 == 0 ? window.lo[i] : window.lo[i] + 1;
    for (int v = start; v <= window.hi[i]; v += 2) {
      cur[i] = v;
      walk(i + 1);
    }
  };
  walk(0);
  const TermOrder& order = pair.g().term_order();
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) { return order.less(a, b); });
  return out;
}

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WEYLQUANT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> sweep(const FixedPointSet& fps, std::span<const Weight> lams,
                                                        bool with_gp) {
  std::vector<std::pair<std::int64_t, std::int64_t>> values(lams.size());
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_lock;
  parallel_for(lams.size(), [&](std::size_t k, std::size_t n, std::size_t stride) {
    try {
      const Evaluator eval(fps);
      for (std::size_t i = k; i < n && !failed; i += stride) {
        values[i].first = eval.theorem(lams[i]);
        if (with_gp) values[i].second = eval.gp(lams[i]);
      }
    } catch (...) {
      std::lock_guard lock(error_lock);
      if (!failed.exchange(true)) error = std::current_exception();
    }
  });
  if (error) std::rethrow_exception(error);
  return values;
}

}  // namespace

std::map<Weight, std::int64_t> multiplicity_spectrum(const FixedPointSet& fps, const Window& window) {
  const auto lams = dominant_weights_in(fps.pair, window);
  std::map<Weight, std::int64_t> out;
  if (lams.empty()) return out;
  const auto values = sweep(fps, lams, false);

  const auto reference = decompose_into_k(fps.pair, main_formula_character(fps).character);
  for (std::size_t i = 0; i < lams.size(); ++i) {
    const auto it = reference.find(lams[i]);
    const std::int64_t expected = it == reference.end() ? 0 : it->second;
    if (values[i].first != expected)
      throw InconsistencyError("multiplicity of " + lams[i].str() + " is " + std::to_string(values[i].first) +
                               " by the Z-sum but " + std::to_string(expected) + " in the character");
    if (values[i].first != 0) out.emplace(lams[i], values[i].first);
  }
  return out;
}

std::vector<GpRow> gp_comparison(const FixedPointSet& fps, const Window& window) {
  const auto lams = dominant_weights_in(fps.pair, window);
  const auto values = sweep(fps, lams, true);
  std::vector<GpRow> rows;
  for (std::size_t i = 0; i < lams.size(); ++i)
    if (values[i].first != 0 || values[i].second != 0) rows.push_back({lams[i], values[i].first, values[i].second});
  return rows;
}

}  // namespace weylquant
