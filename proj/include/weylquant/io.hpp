#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "weylquant/fixedpoint.hpp"
#include "weylquant/multiplicity.hpp"
#include "weylquant/quantize.hpp"

namespace weylquant::io {

using nlohmann::json;

/// Parsed fixed-point file.
struct Fixture {
  SubgroupPair pair;
  std::vector<FixedPoint> points;
  std::optional<Weight> coadjoint_lambda;
};

/// {"type": "A2", "k_simple_roots": [[4,-2]]}. Omitted or empty roots give K = T.
SubgroupPair parse_group(const json& spec);
SubgroupPair make_pair(const std::string& type, const std::vector<Weight>& k_roots);

Weight parse_weight(const json& j, std::size_t rank);
/// Accepts "0,6", "[0,6]" or "(0,6)".
Weight parse_weight_text(const std::string& text, std::size_t rank);
/// Accepts JSON such as "[[4,-2]]"; the empty string means no roots.
std::vector<Weight> parse_roots_text(const std::string& text, std::size_t rank);

/// Throws InputError for unreadable, truncated or ill-typed files.
Fixture parse_fixture(const json& doc);
Fixture load_fixture(const std::filesystem::path& path);
json fixture_json(const Fixture& f);

json weight_json(const Weight& w);
/// [[coords, multiplicity], ...] in descending term order.
json character_json(const FormalCharacter& x, const TermOrder& order);
json decomposition_json(const std::map<Weight, std::int64_t>& m, const TermOrder& order);
json report_json(const FixedPointSet& fps, const CharacterReport& report);
/// [{"lambda": [...], "multiplicity": n}] in ascending term order.
json spectrum_json(const std::map<Weight, std::int64_t>& m, const TermOrder& order);
json gp_json(const std::vector<GpRow>& rows, const TermOrder& order);
json gkrs_json(const SubgroupPair& pair, const Weight& lam, const GkrsResult& r);
json verification_json(const VerificationReport& r, bool with_timing);

/// Writes `text` to `path`, or to stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& text);

}  // namespace weylquant::io
