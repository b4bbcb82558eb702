#include "weylquant/charring.hpp"

#include <algorithm>
#include <functional>

#include "weylquant/errors.hpp"

namespace weylquant {

// ---------------------------------------------------------------------------
// FormalCharacter

FormalCharacter FormalCharacter::monomial(const Weight& w, std::int64_t c) {
  FormalCharacter x;
  x.add_term(w, c);
  return x;
}

void FormalCharacter::add_term(const Weight& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t FormalCharacter::coefficient(const Weight& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t FormalCharacter::total() const {
  std::int64_t s = 0;
  for (const auto& [_, c] : terms_) s += c;
  return s;
}

FormalCharacter FormalCharacter::shifted(const Weight& w) const {
  FormalCharacter out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + w, c);
  return out;
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

FormalCharacter operator*(std::int64_t k, const FormalCharacter& a) {
  if (k == 0) return {};
  FormalCharacter out = a;
  for (auto& [_, c] : out.terms_) c *= k;
  return out;
}

std::vector<std::pair<Weight, std::int64_t>> FormalCharacter::ordered(const TermOrder& order) const {
  std::vector<std::pair<Weight, std::int64_t>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  return v;
}

FormalCharacter weyl_action(const WeylElement& w, const FormalCharacter& x) {
  FormalCharacter out;
  for (const auto& [e, c] : x.terms()) out.add_term(w.apply(e), c);
  return out;
}

FormalCharacter product_one_minus(std::span<const Weight> gammas, std::size_t rank) {
  FormalCharacter p = FormalCharacter::one(rank);
  for (const auto& g : gammas) {
    FormalCharacter f = FormalCharacter::one(rank);
    f.add_term(-g, -1);
    p = p * f;
  }
  return p;
}

FormalCharacter product_half_differences(std::span<const Weight> gammas, std::size_t rank) {
  FormalCharacter p = FormalCharacter::one(rank);
  for (const auto& g : gammas) {
    const Weight h = g.half();
    FormalCharacter f = FormalCharacter::monomial(h);
    f.add_term(-h, -1);
    p = p * f;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Exact division

FormalCharacter exact_divide(const FormalCharacter& num, const FormalCharacter& den, const TermOrder& order) {
  if (den.empty()) throw InexactDivisionError("division by the zero character");
  if (num.empty()) return {};

  std::map<Weight, std::int64_t, TermOrder> rem(order);
  for (const auto& [e, c] : num.terms()) rem.emplace(e, c);
  std::map<Weight, std::int64_t, TermOrder> d(order);
  for (const auto& [e, c] : den.terms()) d.emplace(e, c);

  const auto [lead_w, lead_c] = *d.rbegin();
  const Weight den_low = d.begin()->first;
  // Every quotient exponent t satisfies t + low(den) >= low(num).
  const Weight floor = rem.begin()->first - den_low;

  FormalCharacter q;
  constexpr std::size_t kMaxSteps = 20'000'000;
  for (std::size_t step = 0; !rem.empty(); ++step) {
    if (step > kMaxSteps) throw InexactDivisionError("exact division did not terminate");
    const auto [rw, rc] = *rem.rbegin();
    const Weight t = rw - lead_w;
    if (order.less(t, floor) || rc % lead_c != 0)
      throw InexactDivisionError("nonzero remainder in exact division (leading term " + rw.str() + ")");
    const std::int64_t k = rc / lead_c;
    q.add_term(t, k);
    for (const auto& [e, c] : d) {
      const Weight target = e + t;
      auto it = rem.find(target);
      if (it == rem.end()) {
        rem.emplace(target, -k * c);
      } else if ((it->second -= k * c) == 0) {
        rem.erase(it);
      }
    }
  }
  return q;
}

FormalCharacter RationalCharacter::evaluate(const TermOrder& order, std::size_t rank) const {
  return exact_divide(numerator, product_one_minus(denominator_factors, rank), order);
}

// ---------------------------------------------------------------------------
// Irreducible characters

namespace {

void require_dominant(const SubgroupPair& pair, const Weight& lam, Group which) {
  // Integral for the group in question: <lam, alpha^vee> in Z on its roots.
  for (const auto& a : pair.positive_roots(which))
    if (pair.g().coroot_pairing2(lam, a) % 2 != 0)
      throw DomainError(lam.str() + " is not integral for " + (which == Group::G ? "G" : "K"));
  if (!pair.is_dominant(lam, which))
    throw DomainError(lam.str() + " is not dominant for " + (which == Group::G ? "G" : "K"));
}

}  // namespace

FormalCharacter weyl_character(const SubgroupPair& pair, const Weight& lam, Group which) {
  require_dominant(pair, lam, which);
  const Weight rho = pair.rho(which);
  const Weight shifted = lam + rho;
  FormalCharacter num, den;
  for (const auto& w : pair.weyl(which)) {
    num.add_term(w.apply(shifted), w.sign());
    den.add_term(w.apply(rho), w.sign());
  }
  return exact_divide(num, den, pair.g().term_order());
}

std::int64_t weyl_dimension(const SubgroupPair& pair, const Weight& lam, Group which) {
  const auto& g = pair.g();
  const Weight rho = pair.rho(which);
  Rational d(1);
  for (const auto& a : pair.positive_roots(which)) d *= g.inner_product(lam + rho, a) / g.inner_product(rho, a);
  if (d.denominator() != 1) throw DomainError("non-integral Weyl dimension for " + lam.str());
  return d.numerator();
}

FormalCharacter freudenthal_multiplicities(const SubgroupPair& pair, const Weight& lam, Group which) {
  require_dominant(pair, lam, which);
  const auto& g = pair.g();
  const auto roots = pair.positive_roots(which);
  const auto simple = which == Group::G ? g.simple_roots() : pair.k_simple_roots();
  const Weight rho = pair.rho(which);
  const Functional& ht = g.height();

  // Weights lie in lam - N{simple}; the lowest is w0(lam).
  const Weight lowest = -pair.dominant_conjugate(-lam, which).second;
  const Rational max_depth = ht(lam - lowest);

  // Candidates sorted by depth so that mu + k alpha is always done first.
  std::vector<std::pair<Rational, Weight>> candidates;
  std::function<void(std::size_t, const Weight&)> enumerate = [&](std::size_t i, const Weight& mu) {
    if (i == simple.size()) {
      candidates.emplace_back(ht(lam - mu), mu);
      return;
    }
    for (Weight cur = mu; ht(lam - cur) <= max_depth; cur -= simple[i]) enumerate(i + 1, cur);
  };
  enumerate(0, lam);
  std::sort(candidates.begin(), candidates.end());

  const Rational top = g.inner_product(lam + rho, lam + rho);
  std::map<Weight, std::int64_t> mult;
  FormalCharacter out;
  for (const auto& [depth, mu] : candidates) {
    std::int64_t m = 0;
    if (depth == Rational(0)) {
      m = 1;
    } else {
      const Rational gap = top - g.inner_product(mu + rho, mu + rho);
      if (gap != Rational(0)) {
        Rational s(0);
        for (const auto& a : roots) {
          for (Weight nu = mu + a; ht(lam - nu) >= 0; nu += a) {
            const auto it = mult.find(nu);
            if (it != mult.end()) s += Rational(it->second) * g.inner_product(nu, a);
          }
        }
        const Rational r = 2 * s / gap;
        if (r.denominator() != 1) throw InconsistencyError("Freudenthal recursion produced a non-integer");
        m = r.numerator();
      }
    }
    if (m != 0) {
      mult[mu] = m;
      out.add_term(mu, m);
    }
  }
  return out;
}

std::pair<int, Weight> CharacterTable::straighten(const Weight& label) const {
  const Weight rho = pair_->rho(which_);
  const auto [w, dom] = pair_->dominant_conjugate(label + rho, which_);
  if (pair_->classify(dom, which_).kind != ChamberKind::Interior) return {0, dom};
  return {w.sign(), dom - rho};
}

FormalCharacter CharacterTable::operator()(const Weight& label) {
  const auto [sign, dom] = straighten(label);
  if (sign == 0) return {};
  auto it = cache_.find(dom);
  if (it == cache_.end()) it = cache_.emplace(dom, weyl_character(*pair_, dom, which_)).first;
  return sign * it->second;
}

std::map<Weight, std::int64_t> decompose_into_k(const SubgroupPair& pair, const FormalCharacter& x) {
  const TermOrder peel(integer_scaled(pair.rho_k_direction()));
  CharacterTable chi(pair, Group::K);
  std::map<Weight, std::int64_t> out;
  FormalCharacter rest = x;
  constexpr std::size_t kMaxPeels = 1'000'000;
  for (std::size_t step = 0; !rest.empty(); ++step) {
    if (step > kMaxPeels) throw NotAKCharacterError("decomposition did not terminate");
    const auto top = std::max_element(rest.terms().begin(), rest.terms().end(),
                                      [&](const auto& a, const auto& b) { return peel.less(a.first, b.first); });
    const Weight lam = top->first;
    const std::int64_t c = top->second;
    if (!pair.is_dominant(lam, Group::K))
      throw NotAKCharacterError("maximal weight " + lam.str() + " is not K-dominant; input is not W(K)-invariant");
    out[lam] += c;
    rest -= c * chi(lam);
  }
  return out;
}

bool denominator_identity_check(const SubgroupPair& pair, std::span<const Weight> walls) {
  const auto& g = pair.g();
  const std::size_t n = pair.rank();
  const Weight rho_a = sum(walls, n).half();
  FormalCharacter lhs;
  for (const auto& w : generate_group(g, walls)) {
    int negatives = 0;
    for (const auto& a : walls)
      if (g.height()(w.apply(a)) < 0) ++negatives;
    lhs.add_term(w.apply(rho_a), negatives % 2 ? -1 : 1);
  }
  return lhs == product_half_differences(walls, n);
}

}  // namespace weylquant
