#include "weylquant/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <unordered_map>

#include "weylquant/errors.hpp"

namespace weylquant {

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan inverse over the rationals; the matrices here are small
// and nonsingular by construction.
RMatrix inverse(RMatrix a) {
  const std::size_t n = a.size();
  RMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == Rational(0)) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rational(0)) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<Rational> solve(const RMatrix& a, const std::vector<Rational>& b) {
  const RMatrix inv = inverse(a);
  std::vector<Rational> x(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) x[i] += inv[i][j] * b[j];
  return x;
}

std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::G:
      c[0][1] = -3;  // alpha_1 short
      c[1][0] = -1;
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[2][1] = -2;  // alpha_3, alpha_4 short
      break;
  }
  return c;
}

std::size_t expected_positive_roots(const CartanType& t) {
  const std::size_t n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::G: return 6;
    case Family::F: return 24;
  }
  return 0;
}

std::size_t expected_weyl_order(const CartanType& t) {
  std::size_t fact = 1;
  for (int i = 2; i <= t.rank; ++i) fact *= i;
  switch (t.family) {
    case Family::A: return fact * (t.rank + 1);
    case Family::B:
    case Family::C: return fact << t.rank;
    case Family::D: return fact << (t.rank - 1);
    case Family::G: return 12;
    case Family::F: return 1152;
  }
  return 0;
}

constexpr std::size_t kWeylEnumerationCap = 500000;

}  // namespace

// ---------------------------------------------------------------------------
// Functional, TermOrder

Rational Functional::operator()(const Weight& w) const {
  Rational s(0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (w[i] != 0) s += coeffs_[i] * Rational(w[i]);
  return s;
}

bool Functional::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r == Rational(0); });
}

Functional Functional::operator+(const Functional& o) const {
  std::vector<Rational> c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return Functional(std::move(c));
}

Functional Functional::operator*(const Rational& k) const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x *= k;
  return Functional(std::move(c));
}

std::vector<std::int64_t> integer_scaled(const Functional& f) {
  std::int64_t l = 1;
  for (const auto& c : f.coeffs()) l = std::lcm(l, c.denominator());
  std::vector<std::int64_t> out;
  for (const auto& c : f.coeffs()) out.push_back(c.numerator() * (l / c.denominator()));
  return out;
}

std::int64_t TermOrder::key(const Weight& w) const noexcept {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < f_.size(); ++i) s += f_[i] * w[i];
  return s;
}

bool TermOrder::less(const Weight& a, const Weight& b) const noexcept {
  const auto ka = key(a), kb = key(b);
  if (ka != kb) return ka < kb;
  return a < b;
}

// ---------------------------------------------------------------------------
// CartanType

CartanType CartanType::parse(std::string_view label) {
  if (label.size() < 2) throw ConfigurationError("unknown Cartan type '" + std::string(label) + "'");
  CartanType t;
  switch (std::toupper(static_cast<unsigned char>(label[0]))) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'F': t.family = Family::F; break;
    case 'G': t.family = Family::G; break;
    default: throw ConfigurationError("unknown Cartan type '" + std::string(label) + "'");
  }
  const std::string digits(label.substr(1));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 2)
    throw ConfigurationError("unknown Cartan type '" + std::string(label) + "'");
  t.rank = std::stoi(digits);
  const bool ok = t.rank >= 1 && t.rank <= static_cast<int>(kMaxRank) &&
                  (t.family != Family::B || t.rank >= 2) && (t.family != Family::C || t.rank >= 2) &&
                  (t.family != Family::D || t.rank >= 3) && (t.family != Family::G || t.rank == 2) &&
                  (t.family != Family::F || t.rank == 4);
  if (!ok) throw ConfigurationError("unsupported Cartan type '" + std::string(label) + "'");
  return t;
}

std::string CartanType::label() const {
  static constexpr char names[] = {'A', 'B', 'C', 'D', 'F', 'G'};
  return names[static_cast<int>(family)] + std::to_string(rank);
}

// ---------------------------------------------------------------------------
// WeylElement

WeylElement WeylElement::identity(std::size_t rank) {
  WeylElement e;
  e.rank_ = static_cast<std::uint8_t>(rank);
  for (std::size_t i = 0; i < rank; ++i) e.m_[i * kMaxRank + i] = 1;
  return e;
}

WeylElement WeylElement::from_matrix(std::size_t rank, std::span<const int> row_major, int sign) {
  WeylElement e;
  e.rank_ = static_cast<std::uint8_t>(rank);
  e.sign_ = static_cast<std::int8_t>(sign);
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < rank; ++c) e.m_[r * kMaxRank + c] = static_cast<std::int16_t>(row_major[r * rank + c]);
  return e;
}

Weight WeylElement::apply(const Weight& w) const noexcept {
  Weight out(rank_);
  for (std::size_t r = 0; r < rank_; ++r) {
    int s = 0;
    for (std::size_t c = 0; c < rank_; ++c) s += m_[r * kMaxRank + c] * w[c];
    out[r] = s;
  }
  return out;
}

WeylElement WeylElement::compose(const WeylElement& rhs) const {
  WeylElement out;
  out.rank_ = rank_;
  out.sign_ = static_cast<std::int8_t>(sign_ * rhs.sign_);
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t c = 0; c < rank_; ++c) {
      int s = 0;
      for (std::size_t k = 0; k < rank_; ++k) s += m_[r * kMaxRank + k] * rhs.m_[k * kMaxRank + c];
      out.m_[r * kMaxRank + c] = static_cast<std::int16_t>(s);
    }
  return out;
}

WeylElement WeylElement::inverse() const {
  // Finite order: the inverse is the last power before the identity.
  WeylElement prev = identity(rank_);
  WeylElement cur = *this;
  while (!cur.is_identity()) {
    prev = cur;
    cur = cur.compose(*this);
  }
  prev.sign_ = sign_;
  return prev;
}

bool WeylElement::is_identity() const noexcept {
  return *this == identity(rank_);
}

long WeylElement::determinant() const {
  // Bareiss fraction-free elimination.
  const std::size_t n = rank_;
  std::vector<std::vector<long>> a(n, std::vector<long>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m_[r * kMaxRank + c];
  long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// RootSystem

struct RootSystem::Data {
  CartanType type;
  std::size_t rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<Rational> symmetrizer;  // d_i = (alpha_i, alpha_i) / 2
  RMatrix cartan_inverse;
  std::vector<Weight> simple;
  std::vector<Weight> positive;
  std::unordered_map<Weight, std::vector<int>, WeightHash> coroots;  // all roots -> coroot coeffs
  Weight rho;
  Functional height;
  TermOrder order;
  std::size_t weyl_order = 0;

  mutable std::once_flag weyl_once;
  mutable std::vector<WeylElement> weyl;
};

const CartanType& RootSystem::cartan_type() const noexcept { return data_->type; }
std::size_t RootSystem::rank() const noexcept { return data_->rank; }
int RootSystem::cartan(std::size_t i, std::size_t j) const noexcept { return data_->cartan[i][j]; }
std::span<const Weight> RootSystem::simple_roots() const noexcept { return data_->simple; }
std::span<const Weight> RootSystem::positive_roots() const noexcept { return data_->positive; }
Weight RootSystem::rho() const noexcept { return data_->rho; }
std::size_t RootSystem::weyl_order() const noexcept { return data_->weyl_order; }
const Functional& RootSystem::height() const noexcept { return data_->height; }
const TermOrder& RootSystem::term_order() const noexcept { return data_->order; }

RootSystem RootSystem::build(std::string_view label) { return build(CartanType::parse(label)); }

RootSystem RootSystem::build(CartanType type) {
  auto d = std::make_shared<Data>();
  d->type = type;
  const std::size_t n = type.rank;
  d->rank = n;
  d->cartan = cartan_matrix(type);

  // Symmetrizer by propagation along the Dynkin diagram (connected).
  d->symmetrizer.assign(n, Rational(0));
  d->symmetrizer[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d->symmetrizer[i] != Rational(0) && d->symmetrizer[j] == Rational(0) && d->cartan[i][j] != 0) {
          d->symmetrizer[j] = d->symmetrizer[i] * Rational(d->cartan[i][j], d->cartan[j][i]);
          changed = true;
        }
  }
  std::int64_t den = 1;
  for (const auto& s : d->symmetrizer) den = std::lcm(den, s.denominator());
  for (auto& s : d->symmetrizer) s *= den;

  RMatrix c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = d->cartan[i][j];
  d->cartan_inverse = inverse(c);

  // Roots in root coordinates, closed under simple reflections.
  using Coords = std::vector<int>;
  std::map<Coords, bool> seen;
  std::deque<Coords> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    seen[e] = true;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Coords b = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += b[j] * d->cartan[i][j];
      Coords r = b;
      r[i] -= pairing;
      if (!seen.count(r)) {
        seen[r] = true;
        queue.push_back(r);
      }
    }
  }

  auto to_weight = [&](const Coords& m) {
    Weight w(n);
    for (std::size_t i = 0; i < n; ++i) {
      int s = 0;
      for (std::size_t j = 0; j < n; ++j) s += d->cartan[i][j] * m[j];
      w[i] = 2 * s;
    }
    return w;
  };

  std::vector<std::pair<Coords, Weight>> positives;
  for (const auto& [m, _] : seen) {
    Rational norm(0);  // (beta, beta) / 2
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += Rational(m[i] * m[j]) * d->symmetrizer[i] * d->cartan[i][j];
    norm /= 2;
    std::vector<int> coroot(n);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational cj = Rational(m[j]) * d->symmetrizer[j] / norm;
      if (cj.denominator() != 1) throw ConfigurationError("non-integral coroot");
      coroot[j] = static_cast<int>(cj.numerator());
    }
    const Weight w = to_weight(m);
    d->coroots.emplace(w, coroot);
    if (std::all_of(m.begin(), m.end(), [](int x) { return x >= 0; })) positives.emplace_back(m, w);
  }
  // Positive roots ordered by height, then lexicographically.
  std::sort(positives.begin(), positives.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int hb = std::accumulate(b.first.begin(), b.first.end(), 0);
    return ha != hb ? ha < hb : a.second < b.second;
  });
  for (const auto& p : positives) d->positive.push_back(p.second);
  for (std::size_t i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    d->simple.push_back(to_weight(e));
  }
  if (d->positive.size() != expected_positive_roots(type))
    throw ConfigurationError("root closure produced the wrong number of roots for " + type.label());

  d->rho = Weight(n);
  for (std::size_t i = 0; i < n; ++i) d->rho[i] = 2;

  // height(lam) = sum_j (C^{-1} a)_j with a = lam / 2.
  std::vector<Rational> h(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) h[k] += d->cartan_inverse[j][k] / 2;
  d->height = Functional(std::move(h));
  d->order = TermOrder(integer_scaled(d->height));
  d->weyl_order = expected_weyl_order(type);

  RootSystem rs;
  rs.data_ = std::move(d);
  return rs;
}

bool RootSystem::is_root(const Weight& w) const {
  return w.rank() == rank() && data_->coroots.count(w) > 0;
}

bool RootSystem::is_positive_root(const Weight& w) const {
  return is_root(w) && height()(w) > 0;
}

int RootSystem::coroot_pairing2(const Weight& lam, const Weight& alpha) const {
  const auto it = data_->coroots.find(alpha);
  if (it == data_->coroots.end()) throw DomainError(alpha.str() + " is not a root of " + cartan_type().label());
  int s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s += lam[j] * it->second[j];
  return s;
}

Functional RootSystem::pairing_with(std::span<const Rational> x) const {
  // (lam, x) = 1/4 sum_j lam_j d_j (C^{-1} x)_j in doubled coordinates.
  const std::size_t n = rank();
  std::vector<Rational> f(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational m(0);
    for (std::size_t k = 0; k < n; ++k) m += data_->cartan_inverse[j][k] * x[k];
    f[j] = data_->symmetrizer[j] * m / 4;
  }
  return Functional(std::move(f));
}

Functional RootSystem::pairing_with(const Weight& x) const {
  std::vector<Rational> xr;
  for (std::size_t i = 0; i < rank(); ++i) xr.emplace_back(x[i]);
  return pairing_with(xr);
}

Rational RootSystem::inner_product(const Weight& a, const Weight& b) const {
  return pairing_with(b)(a);
}

Weight RootSystem::fundamental_weight(std::size_t i) const {
  Weight w(rank());
  w[i] = 2;
  return w;
}

Weight RootSystem::reflect(const Weight& alpha, const Weight& lam) const {
  const int p2 = coroot_pairing2(lam, alpha);
  // alpha has even doubled coordinates, so p2 * alpha / 2 is exact.
  return lam - p2 * alpha.half();
}

WeylElement RootSystem::reflection(const Weight& alpha) const {
  const std::size_t n = rank();
  const auto it = data_->coroots.find(alpha);
  if (it == data_->coroots.end()) throw DomainError(alpha.str() + " is not a root of " + cartan_type().label());
  const Weight a = alpha.half();
  std::vector<int> m(n * n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r * n + c] = (r == c ? 1 : 0) - a[r] * it->second[c];
  return WeylElement::from_matrix(n, m, -1);
}

const std::vector<WeylElement>& RootSystem::weyl_group() const {
  std::call_once(data_->weyl_once, [this] {
    if (data_->weyl_order > kWeylEnumerationCap)
      throw ConfigurationError("Weyl group of " + cartan_type().label() + " is too large to enumerate");
    data_->weyl = generate_group(*this, simple_roots());
    if (data_->weyl.size() != data_->weyl_order)
      throw ConfigurationError("Weyl group enumeration produced the wrong order");
  });
  return data_->weyl;
}

std::vector<Rational> RootSystem::root_coordinates(const Weight& w) const {
  const std::size_t n = rank();
  std::vector<Rational> m(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m[j] += data_->cartan_inverse[j][k] * Rational(w[k], 2);
  return m;
}

std::vector<WeylElement> generate_group(const RootSystem& rs, std::span<const Weight> reflecting_roots) {
  const std::size_t n = rs.rank();
  std::vector<WeylElement> gens;
  for (const auto& r : reflecting_roots) gens.push_back(rs.reflection(r));
  const Weight regular = rs.rho();
  std::vector<WeylElement> out{WeylElement::identity(n)};
  std::unordered_map<Weight, std::size_t, WeightHash> index{{regular, 0}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      WeylElement next = g.compose(out[head]);
      Weight key = next.apply(regular);
      if (index.emplace(key, out.size()).second) out.push_back(next);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// SubgroupPair

SubgroupPair SubgroupPair::make(const RootSystem& g, std::span<const Weight> k_roots) {
  SubgroupPair p;
  p.g_ = g;
  std::vector<Weight> all;
  for (const auto& r : k_roots) {
    if (!g.is_root(r)) throw DomainError(r.str() + " is not a root of " + g.cartan_type().label());
    for (const Weight& x : {r, -r})
      if (std::find(all.begin(), all.end(), x) == all.end()) all.push_back(x);
  }
  for (bool changed = true; changed;) {
    changed = false;
    const std::size_t size = all.size();
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        Weight r = g.reflect(all[i], all[j]);
        if (std::find(all.begin(), all.end(), r) == all.end()) {
          all.push_back(r);
          changed = true;
        }
      }
  }
  for (const auto& r : g.positive_roots())
    if (std::find(all.begin(), all.end(), r) != all.end()) p.k_positive_.push_back(r);
  for (const auto& r : p.k_positive_) {
    bool decomposable = false;
    for (const auto& a : p.k_positive_)
      for (const auto& b : p.k_positive_)
        if (a + b == r) decomposable = true;
    if (!decomposable) p.k_simple_.push_back(r);
  }
  p.weyl_k_ = generate_group(g, p.k_simple_);
  p.rho_k_ = sum(p.k_positive_, g.rank()).half();
  p.xi_ = p.xi_from(g.rho());
  p.rho_k_dir_ = g.pairing_with(p.rho_k_);
  return p;
}

Functional SubgroupPair::xi_from(const Weight& seed) const {
  // Orthogonal projection of `seed` onto the annihilator of Phi(K).
  const std::size_t k = k_simple_.size();
  std::vector<Rational> x;
  for (std::size_t i = 0; i < rank(); ++i) x.emplace_back(seed[i]);
  if (k > 0) {
    RMatrix gram(k, std::vector<Rational>(k));
    std::vector<Rational> rhs(k);
    for (std::size_t a = 0; a < k; ++a) {
      rhs[a] = g_.inner_product(seed, k_simple_[a]);
      for (std::size_t b = 0; b < k; ++b) gram[a][b] = g_.inner_product(k_simple_[a], k_simple_[b]);
    }
    const auto c = solve(gram, rhs);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t i = 0; i < rank(); ++i) x[i] -= c[a] * Rational(k_simple_[a][i]);
  }
  return g_.pairing_with(x);
}

std::span<const Weight> SubgroupPair::positive_roots(Group which) const noexcept {
  return which == Group::G ? g_.positive_roots() : std::span<const Weight>(k_positive_);
}

const std::vector<WeylElement>& SubgroupPair::weyl(Group which) const {
  return which == Group::G ? g_.weyl_group() : weyl_k_;
}

bool SubgroupPair::is_k_root(const Weight& w) const {
  return std::find(k_positive_.begin(), k_positive_.end(), w) != k_positive_.end() ||
         std::find(k_positive_.begin(), k_positive_.end(), -w) != k_positive_.end();
}

SubgroupPair SubgroupPair::with_generic_xi(std::span<const Weight> weights) const {
  auto generic = [&](const Functional& f) {
    for (const auto& w : weights)
      if (!is_k_root(w) && f(w) == Rational(0)) return false;
    return true;
  };
  if (generic(xi_)) return *this;
  std::mt19937 rng(20240917u);
  std::uniform_int_distribution<int> dist(0, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Weight seed = g_.rho();
    for (std::size_t i = 0; i < rank(); ++i) seed[i] += 2 * dist(rng);
    Functional f = xi_from(seed);
    if (generic(f)) {
      SubgroupPair copy = *this;
      copy.xi_ = std::move(f);
      return copy;
    }
  }
  throw DegeneratePairError("no polarizing functional vanishing on Phi(K) is generic for the tangent weights");
}

ChamberTest SubgroupPair::classify(const Weight& lam, Group which) const {
  ChamberTest t;
  for (const auto& a : positive_roots(which)) {
    const int p = g_.coroot_pairing2(lam, a);
    if (p < 0) return {ChamberKind::Outside, {}};
    if (p == 0) t.walls.push_back(a);
  }
  t.kind = t.walls.empty() ? ChamberKind::Interior : ChamberKind::Boundary;
  return t;
}

bool SubgroupPair::is_dominant(const Weight& lam, Group which) const {
  return classify(lam, which).kind != ChamberKind::Outside;
}

std::pair<WeylElement, Weight> SubgroupPair::dominant_conjugate(const Weight& lam, Group which) const {
  const auto simple = which == Group::G ? g_.simple_roots() : std::span<const Weight>(k_simple_);
  WeylElement w = WeylElement::identity(rank());
  Weight cur = lam;
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& a : simple) {
      if (g_.coroot_pairing2(cur, a) < 0) {
        const WeylElement s = g_.reflection(a);
        cur = s.apply(cur);
        w = s.compose(w);
        moved = true;
      }
    }
  }
  return {w, cur};
}

}  // namespace weylquant
