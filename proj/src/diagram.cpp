#include "weylquant/diagram.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "weylquant/errors.hpp"
#include "weylquant/quantize.hpp"

namespace weylquant {

namespace {

void require_planar(const SubgroupPair& pair) {
  if (pair.rank() != 2)
    throw ConfigurationError("diagrams need a rank-2 group, got rank " + std::to_string(pair.rank()));
}

struct Point {
  double x = 0, y = 0;
};

/// Doubled coordinates -> Euclidean plane via the Cholesky factor of the
/// Gram matrix of the coordinate basis.
class Plane {
 public:
  explicit Plane(const RootSystem& g) {
    const Weight e0{1, 0}, e1{0, 1};
    const double g00 = boost::rational_cast<double>(g.inner_product(e0, e0));
    const double g01 = boost::rational_cast<double>(g.inner_product(e0, e1));
    const double g11 = boost::rational_cast<double>(g.inner_product(e1, e1));
    l00_ = std::sqrt(g00);
    l10_ = g01 / l00_;
    l11_ = std::sqrt(g11 - l10_ * l10_);
  }
  Point operator()(const Weight& w) const {
    return {l00_ * w[0] + l10_ * w[1], l11_ * w[1]};
  }

 private:
  double l00_ = 1, l10_ = 0, l11_ = 1;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

}  // namespace

DiagramData diagram_from_fixture(const FixedPointSet& fps, std::optional<Window> window) {
  require_planar(fps.pair);
  DiagramData d{fps.pair, {}, z_terms(fps), {}, {}};
  for (const auto& p : fps.points) d.moment_images.push_back(p.mu);
  const FormalCharacter chi = main_formula_character(fps).character;
  for (const auto& [w, c] : chi.terms()) d.weights.emplace(w, c);
  d.circled = multiplicity_spectrum(fps, window ? *window : Window::around(chi, fps.pair.rank()));
  return d;
}

DiagramData diagram_from_weight(const SubgroupPair& pair, const Weight& nu, std::optional<Window> window) {
  require_planar(pair);
  if (nu.is_zero() && pair.is_dominant(nu, Group::G)) {
    DiagramData d{pair, {nu}, {}, {{nu, 1}}, {}};
    if (!window || window->contains(nu)) d.circled.emplace(nu, 1);
    return d;
  }
  FixedPointSet fps = ingest(pair, coadjoint_fixture(pair, nu));
  fps.coadjoint_lambda = nu;
  return diagram_from_fixture(fps, window);
}

std::string render_svg(const DiagramData& d) {
  require_planar(d.pair);
  const RootSystem& g = d.pair.g();
  const Plane plane(g);

  // Scale: everything of interest fits in 90% of the viewport.
  double extent = 0;
  auto grow = [&](const Weight& w) {
    const Point p = plane(w);
    extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
  };
  for (const auto& r : g.positive_roots()) grow(r);
  for (const auto& w : d.moment_images) grow(w);
  for (const auto& [w, _] : d.weights) grow(w);
  for (const auto& [w, _] : d.circled) grow(w);
  for (const auto& z : d.cones) grow(z.base);
  const double scale = 450.0 / (extent * 1.1);
  auto px = [&](const Point& p) { return Point{500 + scale * p.x, 500 - scale * p.y}; };
  auto at = [&](const Weight& w) { return px(plane(w)); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  s << "<defs>\n"
       "<clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\"/></clipPath>\n"
       "<pattern id=\"plus\" width=\"12\" height=\"12\" patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(-45)\">"
       "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"12\" stroke=\"#c0392b\" stroke-width=\"2\"/></pattern>\n"
       "<pattern id=\"minus\" width=\"12\" height=\"12\" patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(45)\">"
       "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"12\" stroke=\"#2c5aa0\" stroke-width=\"2\"/></pattern>\n"
       "</defs>\n";
  s << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  s << "<g clip-path=\"url(#view)\">\n";

  // Partition cones: lam = base - sum c_j g_j.
  const double far = 4000.0 / scale;
  for (const auto& z : d.cones) {
    const Point v = plane(z.base);
    const char* fill = z.sign > 0 ? "url(#plus)" : "url(#minus)";
    const char* stroke = z.sign > 0 ? "#c0392b" : "#2c5aa0";
    std::vector<Point> dirs;
    for (const auto& gen : z.generators) {
      const Point p = plane(gen);
      const double len = std::hypot(p.x, p.y);
      dirs.push_back({-p.x / len, -p.y / len});
    }
    if (dirs.empty()) {
      const Point c = px(v);
      s << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"6\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
      continue;
    }
    // The extreme rays are the pair at the widest angle.
    std::size_t a = 0, b = 0;
    double widest = -2;
    for (std::size_t i = 0; i < dirs.size(); ++i)
      for (std::size_t j = i; j < dirs.size(); ++j) {
        const double cosang = dirs[i].x * dirs[j].x + dirs[i].y * dirs[j].y;
        if (-cosang > widest) {
          widest = -cosang;
          a = i;
          b = j;
        }
      }
    const Point p0 = px(v);
    const Point p1 = px({v.x + far * dirs[a].x, v.y + far * dirs[a].y});
    const Point p2 = px({v.x + far * dirs[b].x, v.y + far * dirs[b].y});
    if (a == b || std::abs(dirs[a].x * dirs[b].y - dirs[a].y * dirs[b].x) < 1e-9) {
      s << "<line x1=\"" << num(p0.x) << "\" y1=\"" << num(p0.y) << "\" x2=\"" << num(p1.x) << "\" y2=\"" << num(p1.y)
        << "\" stroke=\"" << stroke << "\" stroke-width=\"3\" stroke-dasharray=\"10,6\"/>\n";
    } else {
      s << "<polygon points=\"" << num(p0.x) << "," << num(p0.y) << " " << num(p1.x) << "," << num(p1.y) << " "
        << num(p2.x) << "," << num(p2.y) << "\" fill=\"" << fill << "\" fill-opacity=\"0.6\" stroke=\"" << stroke
        << "\" stroke-width=\"1\"/>\n";
    }
  }

  // K chamber walls.
  for (const auto& a : d.pair.k_positive_roots()) {
    const Point r = plane(a);
    const double len = std::hypot(r.x, r.y);
    const Point u{-r.y / len * far, r.x / len * far};
    const Point p1 = px(u), p2 = px({-u.x, -u.y});
    s << "<line x1=\"" << num(p1.x) << "\" y1=\"" << num(p1.y) << "\" x2=\"" << num(p2.x) << "\" y2=\"" << num(p2.y)
      << "\" stroke=\"#555555\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
  }

  // Roots of G.
  const Point origin = px({0, 0});
  for (const auto& r : g.positive_roots())
    for (const Weight& root : {r, -r}) {
      const Point p = at(root);
      s << "<line x1=\"" << num(origin.x) << "\" y1=\"" << num(origin.y) << "\" x2=\"" << num(p.x) << "\" y2=\""
        << num(p.y) << "\" stroke=\"#999999\" stroke-width=\"1.5\"/>\n";
    }
  s << "</g>\n";

  for (const auto& [w, c] : d.weights) {
    const Point p = at(w);
    s << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"3\" fill=\"#333333\"/>\n";
    if (c != 1)
      s << "<text x=\"" << num(p.x + 6) << "\" y=\"" << num(p.y + 14) << "\" font-size=\"12\" fill=\"#333333\">" << c << "</text>\n";
  }
  for (const auto& w : d.moment_images) {
    const Point p = at(w);
    s << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"6\" fill=\"black\"/>\n";
  }
  for (const auto& [w, c] : d.circled) {
    const Point p = at(w);
    s << "<circle class=\"multiplicity\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
      << "\" r=\"11\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    s << "<text x=\"" << num(p.x + 13) << "\" y=\"" << num(p.y - 13) << "\" font-size=\"16\">" << c << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace weylquant
