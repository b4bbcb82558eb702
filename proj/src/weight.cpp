#include "weylquant/weight.hpp"

#include <algorithm>
#include <sstream>

#include "weylquant/errors.hpp"

namespace weylquant {

Weight::Weight(std::size_t rank) : rank_(static_cast<std::uint8_t>(rank)) {
  if (rank > kMaxRank) throw ConfigurationError("rank exceeds " + std::to_string(kMaxRank));
}

Weight::Weight(std::initializer_list<int> coords) : Weight(coords.size()) {
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

Weight Weight::from(std::span<const int> coords) {
  Weight w(coords.size());
  std::copy(coords.begin(), coords.end(), w.coords_.begin());
  return w;
}

bool Weight::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.begin() + rank_, [](int c) { return c == 0; });
}

bool Weight::is_integral() const noexcept {
  return std::all_of(coords_.begin(), coords_.begin() + rank_, [](int c) { return c % 2 == 0; });
}

Weight Weight::half() const {
  if (!is_integral()) throw DomainError("cannot halve " + str() + " in the doubled lattice");
  Weight r = *this;
  for (std::size_t i = 0; i < rank_; ++i) r.coords_[i] /= 2;
  return r;
}

Weight& Weight::operator+=(const Weight& o) noexcept {
  for (std::size_t i = 0; i < rank_; ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) noexcept {
  for (std::size_t i = 0; i < rank_; ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight Weight::operator-() const noexcept {
  Weight r = *this;
  for (std::size_t i = 0; i < rank_; ++i) r.coords_[i] = -r.coords_[i];
  return r;
}

Weight operator*(int k, Weight a) noexcept {
  for (std::size_t i = 0; i < a.rank_; ++i) a.coords_[i] *= k;
  return a;
}

std::vector<int> Weight::to_vector() const {
  return {coords_.begin(), coords_.begin() + rank_};
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rank_; ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = w.rank();
  for (std::size_t i = 0; i < w.rank(); ++i)
    h = h * 1000003u ^ static_cast<std::size_t>(static_cast<std::uint32_t>(w[i]));
  return h;
}

Weight sum(std::span<const Weight> ws, std::size_t rank) {
  Weight s(rank);
  for (const auto& w : ws) s += w;
  return s;
}

std::vector<Weight> sorted(std::vector<Weight> ws) {
  std::sort(ws.begin(), ws.end());
  return ws;
}

}  // namespace weylquant
