#include "weylquant/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weylquant/errors.hpp"

namespace weylquant::io {

namespace {

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  const auto it = obj.find(name);
  if (it == obj.end()) throw InputError(where + ": missing field \"" + name + "\"");
  return *it;
}

std::optional<std::string> optional_string(const json& obj, const char* name, const std::string& where) {
  const auto it = obj.find(name);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw InputError(where + ": field \"" + name + "\" must be a string");
  return it->get<std::string>();
}

}  // namespace

SubgroupPair make_pair(const std::string& type, const std::vector<Weight>& k_roots) {
  const RootSystem g = RootSystem::build(type);
  for (const auto& r : k_roots)
    if (r.rank() != g.rank()) throw InputError("root " + r.str() + " has the wrong length for " + type);
  return SubgroupPair::make(g, k_roots);
}

Weight parse_weight(const json& j, std::size_t rank) {
  if (!j.is_array()) throw InputError("weight must be an array of integers");
  if (j.size() != rank)
    throw InputError("weight " + j.dump() + " has length " + std::to_string(j.size()) + ", expected " + std::to_string(rank));
  std::vector<int> coords;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("weight " + j.dump() + " has a non-integer coordinate");
    coords.push_back(x.get<int>());
  }
  return Weight::from(coords);
}

SubgroupPair parse_group(const json& spec) {
  const std::string where = "group";
  const json& type = field(spec, "type", where);
  if (!type.is_string()) throw InputError("group: \"type\" must be a string");
  const RootSystem g = RootSystem::build(type.get<std::string>());
  std::vector<Weight> roots;
  if (const auto it = spec.find("k_simple_roots"); it != spec.end() && !it->is_null()) {
    if (!it->is_array()) throw InputError("group: \"k_simple_roots\" must be an array");
    for (const auto& r : *it) roots.push_back(parse_weight(r, g.rank()));
  }
  return SubgroupPair::make(g, roots);
}

Weight parse_weight_text(const std::string& text, std::size_t rank) {
  std::string s = text;
  std::replace(s.begin(), s.end(), '(', '[');
  std::replace(s.begin(), s.end(), ')', ']');
  if (s.empty() || s.front() != '[') s = "[" + s + "]";
  json j;
  try {
    j = json::parse(s);
  } catch (const json::exception&) {
    throw InputError("cannot parse weight '" + text + "'");
  }
  return parse_weight(j, rank);
}

std::vector<Weight> parse_roots_text(const std::string& text, std::size_t rank) {
  if (text.empty()) return {};
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    throw InputError("cannot parse root list '" + text + "'; expected JSON such as [[4,-2]]");
  }
  if (!j.is_array()) throw InputError("root list must be a JSON array");
  std::vector<Weight> out;
  for (const auto& r : j) out.push_back(parse_weight(r, rank));
  return out;
}

Fixture parse_fixture(const json& doc) {
  if (!doc.is_object()) throw InputError("fixture: top level must be an object");
  if (const auto it = doc.find("format"); it != doc.end() && *it != 1)
    throw InputError("fixture: unsupported format " + it->dump());
  Fixture f{parse_group(field(doc, "group", "fixture")), {}, std::nullopt};
  const std::size_t n = f.pair.rank();
  const json& points = field(doc, "points", "fixture");
  if (!points.is_array()) throw InputError("fixture: \"points\" must be an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const json& p = points[i];
    const std::string where = "point #" + std::to_string(i);
    FixedPoint fp;
    const json& id = field(p, "id", where);
    if (!id.is_string()) throw InputError(where + ": \"id\" must be a string");
    fp.id = id.get<std::string>();
    fp.mu = parse_weight(field(p, "mu", where), n);
    const json& tw = field(p, "tangent_weights", where);
    if (!tw.is_array()) throw InputError(where + ": \"tangent_weights\" must be an array");
    for (const auto& t : tw) fp.tangent_weights.push_back(parse_weight(t, n));
    fp.component = optional_string(p, "component", where);
    fp.orbit = optional_string(p, "orbit", where);
    f.points.push_back(std::move(fp));
  }
  if (const auto it = doc.find("coadjoint_lambda"); it != doc.end() && !it->is_null())
    f.coadjoint_lambda = parse_weight(*it, n);
  return f;
}

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return parse_fixture(doc);
}

json weight_json(const Weight& w) { return w.to_vector(); }

json fixture_json(const Fixture& f) {
  json group{{"type", f.pair.g().cartan_type().label()}, {"k_simple_roots", json::array()}};
  for (const auto& r : f.pair.k_simple_roots()) group["k_simple_roots"].push_back(weight_json(r));
  json points = json::array();
  for (const auto& p : f.points) {
    json jp{{"id", p.id}, {"mu", weight_json(p.mu)}, {"tangent_weights", json::array()}};
    for (const auto& t : p.tangent_weights) jp["tangent_weights"].push_back(weight_json(t));
    if (p.component) jp["component"] = *p.component;
    if (p.orbit) jp["orbit"] = *p.orbit;
    points.push_back(std::move(jp));
  }
  json doc{{"format", 1}, {"group", group}, {"points", points}};
  if (f.coadjoint_lambda) doc["coadjoint_lambda"] = weight_json(*f.coadjoint_lambda);
  return doc;
}

json character_json(const FormalCharacter& x, const TermOrder& order) {
  json out = json::array();
  for (const auto& [w, c] : x.ordered(order)) out.push_back(json::array({weight_json(w), c}));
  return out;
}

json decomposition_json(const std::map<Weight, std::int64_t>& m, const TermOrder& order) {
  FormalCharacter x;
  for (const auto& [w, c] : m) x.add_term(w, c);
  return character_json(x, order);
}

namespace {

json weights_json(std::span<const Weight> ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(weight_json(w));
  return out;
}

json k_terms_json(std::span<const KTerm> terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back({{"coefficient", t.coefficient}, {"label", weight_json(t.label)}});
  return out;
}

}  // namespace

json report_json(const FixedPointSet& fps, const CharacterReport& report) {
  const TermOrder& order = fps.pair.g().term_order();
  json orbits = json::array();
  for (const auto& t : report.per_orbit_terms) {
    json o{{"orbit", t.orbit_id},
           {"k_terms", k_terms_json(t.k_terms)},
           {"numerator", character_json(t.numerator, order)},
           {"denominator_factors", weights_json(t.denominator_factors)}};
    if (t.component) o["component"] = *t.component;
    orbits.push_back(std::move(o));
  }
  json z = json::array();
  for (const auto& e : fps.z_set) {
    const auto& member = fps.orbits[e.orbit].members[e.member];
    z.push_back({{"point", fps.points[member.point].id}, {"epsilon", e.w.sign()}, {"s", member.pol.s}});
  }
  json doc{{"group", {{"type", fps.pair.g().cartan_type().label()}, {"k_simple_roots", weights_json(fps.pair.k_simple_roots())}}},
           {"character", character_json(report.character, order)},
           {"total_multiplicity", report.character.total()},
           {"numerator", character_json(report.numerator, order)},
           {"denominator_factors", weights_json(report.denominator_factors)},
           {"denominator_form", report.half_weight_form ? "half_differences" : "one_minus"},
           {"k_decomposition", decomposition_json(report.k_decomposition, order)},
           {"orbits", orbits},
           {"z_set", z},
           {"warnings", fps.warnings}};
  return doc;
}

json spectrum_json(const std::map<Weight, std::int64_t>& m, const TermOrder& order) {
  std::vector<std::pair<Weight, std::int64_t>> rows(m.begin(), m.end());
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) { return order.less(a.first, b.first); });
  json out = json::array();
  for (const auto& [w, c] : rows) out.push_back({{"lambda", weight_json(w)}, {"multiplicity", c}});
  return out;
}

json gp_json(const std::vector<GpRow>& rows_in, const TermOrder& order) {
  std::vector<GpRow> rows = rows_in;
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) { return order.less(a.lambda, b.lambda); });
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"lambda", weight_json(r.lambda)},
                   {"multiplicity", r.multiplicity},
                   {"gp_value", r.gp_value},
                   {"delta", r.delta()}});
  return out;
}

json gkrs_json(const SubgroupPair& pair, const Weight& lam, const GkrsResult& r) {
  const TermOrder& order = pair.g().term_order();
  return {{"lambda", weight_json(lam)},
          {"coset_count", r.coset_representatives.size()},
          {"multiplet", k_terms_json(r.multiplet)},
          {"lhs", character_json(r.lhs, order)},
          {"identity_holds", r.lhs == r.rhs}};
}

json verification_json(const VerificationReport& r, bool with_timing) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (with_timing) j["milliseconds"] = c.milliseconds;
    checks.push_back(std::move(j));
  }
  return {{"ok", r.all_ok()}, {"checks", checks}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace weylquant::io
