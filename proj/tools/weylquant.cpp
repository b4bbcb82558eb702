// weylquant: command-line front end for the quantization engine.
//
// Exit codes: 0 success, 2 bad input, 3 a mathematical identity failed.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "weylquant/acceptance.hpp"
#include "weylquant/diagram.hpp"
#include "weylquant/errors.hpp"
#include "weylquant/io.hpp"
#include "weylquant/multiplicity.hpp"
#include "weylquant/quantize.hpp"

using namespace weylquant;
using io::json;

namespace {

struct Options {
  std::string type;
  std::string k_roots;
  std::string lambda;
  std::string input;
  std::string output = "-";
  std::string format;  // empty: the command's first format
  std::string window;
  std::string scope = "quick";
  bool gp = false;
  bool timing = false;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

std::string require_format(const Options& o, std::initializer_list<const char*> allowed) {
  if (o.format.empty()) return *allowed.begin();
  for (const char* f : allowed)
    if (o.format == f) return o.format;
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw InputError("--format " + o.format + " is not available here (use " + list + ")");
}

/// Group from --type/--k-roots, else from the --input file.
SubgroupPair group_of(const Options& o) {
  if (!o.type.empty()) {
    const RootSystem g = RootSystem::build(o.type);
    return SubgroupPair::make(g, io::parse_roots_text(o.k_roots, g.rank()));
  }
  require(!o.input.empty(), "give --type (and optionally --k-roots) or --input");
  return io::load_fixture(o.input).pair;
}

Weight lambda_of(const Options& o, const SubgroupPair& pair) {
  require(!o.lambda.empty(), "--lambda is required");
  return io::parse_weight_text(o.lambda, pair.rank());
}

FixedPointSet fixture_of(const Options& o) {
  require(!o.input.empty(), "--input is required");
  io::Fixture f = io::load_fixture(o.input);
  FixedPointSet fps = ingest(f.pair, std::move(f.points));
  fps.coadjoint_lambda = f.coadjoint_lambda;
  return fps;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string weight_csv(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.rank(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

std::string table_csv(const std::string& header, const std::vector<std::pair<Weight, std::int64_t>>& rows) {
  std::ostringstream s;
  s << header << "\n";
  for (const auto& [w, c] : rows) s << weight_csv(w) << "," << c << "\n";
  return s.str();
}

int cmd_branch(const Options& o) {
  const std::string format = require_format(o, {"json", "csv"});
  const SubgroupPair pair = group_of(o);
  const Weight nu = lambda_of(o, pair);
  if (!pair.is_dominant(nu, Group::G)) throw DomainError(nu.str() + " is not G-dominant");
  const auto decomposition = decompose_into_k(pair, weyl_character(pair, nu, Group::G));
  const bool regular = pair.classify(nu, Group::G).kind == ChamberKind::Interior;
  const TermOrder& order = pair.g().term_order();

  std::vector<std::pair<Weight, std::int64_t>> rows(decomposition.begin(), decomposition.end());
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  json table = json::array();
  for (const auto& [lam, m] : rows) {
    json row{{"lambda", io::weight_json(lam)}, {"multiplicity", m}};
    if (regular) {
      const std::int64_t k = kostant_branching(pair, nu, lam);
      if (k != m)
        throw InconsistencyError("branching sum gives " + std::to_string(k) + " for " + lam.str() +
                                 ", character decomposition gives " + std::to_string(m));
      row["kostant"] = k;
    }
    table.push_back(std::move(row));
  }
  if (format == "csv") {
    io::write_output(o.output, table_csv("lambda,multiplicity", rows));
  } else {
    io::write_output(o.output, dump({{"nu", io::weight_json(nu)}, {"regular", regular}, {"branching", table}}));
  }
  return 0;
}

int cmd_character(const Options& o) {
  const std::string format = require_format(o, {"json", "csv"});
  const FixedPointSet fps = fixture_of(o);
  const CharacterReport report = main_formula_character(fps);
  lie_algebra_form(fps);
  if (format == "csv") {
    io::write_output(o.output, table_csv("weight,multiplicity", report.character.ordered(fps.pair.g().term_order())));
  } else {
    io::write_output(o.output, dump(io::report_json(fps, report)));
  }
  return 0;
}

int cmd_multiplicity(const Options& o) {
  require_format(o, {"json"});
  const FixedPointSet fps = fixture_of(o);
  const Weight lam = lambda_of(o, fps.pair);
  const std::int64_t m = multiplicity_theorem(fps, lam);
  json out{{"lambda", io::weight_json(lam)}, {"multiplicity", m}};
  if (o.gp) {
    const std::int64_t gp = guillemin_prato_variant(fps, lam);
    out["gp_value"] = gp;
    out["delta"] = gp - m;
  }
  io::write_output(o.output, dump(out));
  return 0;
}

Window window_of(const Options& o, const FixedPointSet& fps) {
  if (!o.window.empty()) return Window::parse(o.window, fps.pair.rank());
  return Window::around(main_formula_character(fps).character, fps.pair.rank());
}

int cmd_spectrum(const Options& o) {
  const std::string format = require_format(o, {"json", "csv"});
  const FixedPointSet fps = fixture_of(o);
  const Window window = window_of(o, fps);
  const TermOrder& order = fps.pair.g().term_order();
  if (o.gp) {
    const auto rows = gp_comparison(fps, window);
    if (format == "csv") {
      std::ostringstream s;
      s << "lambda,multiplicity,gp_value,delta\n";
      for (const auto& r : io::gp_json(rows, order))
        s << weight_csv(io::parse_weight(r["lambda"], fps.pair.rank())) << "," << r["multiplicity"] << ","
          << r["gp_value"] << "," << r["delta"] << "\n";
      io::write_output(o.output, s.str());
    } else {
      io::write_output(o.output, dump(io::gp_json(rows, order)));
    }
    return 0;
  }
  const auto spectrum = multiplicity_spectrum(fps, window);
  if (format == "csv") {
    std::vector<std::pair<Weight, std::int64_t>> rows(spectrum.begin(), spectrum.end());
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) { return order.less(a.first, b.first); });
    io::write_output(o.output, table_csv("lambda,multiplicity", rows));
  } else {
    io::write_output(o.output, dump(io::spectrum_json(spectrum, order)));
  }
  return 0;
}

int cmd_gkrs(const Options& o) {
  require_format(o, {"json"});
  const SubgroupPair pair = group_of(o);
  const Weight lam = lambda_of(o, pair);
  io::write_output(o.output, dump(io::gkrs_json(pair, lam, gkrs_multiplet(pair, lam))));
  return 0;
}

int cmd_verify(const Options& o) {
  require_format(o, {"json"});
  if (!o.input.empty()) {
    io::Fixture f = io::load_fixture(o.input);
    const VerificationReport r = verify_points(f.pair, std::move(f.points), f.coadjoint_lambda);
    io::write_output(o.output, dump(io::verification_json(r, o.timing)));
    return r.all_ok() ? 0 : 3;
  }
  require(o.scope == "quick" || o.scope == "full", "--scope must be quick or full");
  const auto results = run_acceptance(o.scope == "full" ? Scope::Full : Scope::Quick);
  json criteria = json::array();
  bool all = true;
  for (const auto& r : results) {
    json j{{"id", r.id}, {"name", r.name}, {"ok", r.ok}, {"detail", r.detail}};
    if (o.timing) j["milliseconds"] = r.milliseconds;
    criteria.push_back(std::move(j));
    all = all && r.ok;
  }
  io::write_output(o.output, dump({{"scope", o.scope}, {"ok", all}, {"criteria", criteria}}));
  return all ? 0 : 3;
}

int cmd_diagram(const Options& o) {
  require_format(o, {"svg"});
  std::optional<DiagramData> data;
  if (!o.input.empty() && o.type.empty()) {
    const FixedPointSet fps = fixture_of(o);
    const std::optional<Window> window = o.window.empty() ? std::nullopt : std::optional(Window::parse(o.window, fps.pair.rank()));
    data = diagram_from_fixture(fps, window);
  } else {
    const SubgroupPair pair = group_of(o);
    const Weight nu = lambda_of(o, pair);
    const std::optional<Window> window = o.window.empty() ? std::nullopt : std::optional(Window::parse(o.window, pair.rank()));
    data = diagram_from_weight(pair, nu, window);
  }
  io::write_output(o.output, render_svg(*data));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characters and K-multiplicities of quantized Hamiltonian G-spaces from torus fixed-point data"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "Cartan type of G, e.g. A2, B2, G2");
    sub->add_option("--k-roots", o.k_roots, "simple roots of K as JSON, doubled coordinates, e.g. [[4,-2]]");
    sub->add_option("--lambda", o.lambda, "weight in doubled coordinates, e.g. 0,6");
    sub->add_option("--input", o.input, "fixed-point JSON file");
    sub->add_option("--output", o.output, "output file (default stdout)");
    sub->add_option("--format", o.format, "json, csv or svg");
    sub->add_option("--window", o.window, "lo:hi for every coordinate, or lo1:hi1,lo2:hi2");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"branch", "decompose V^G_lambda into K-irreducibles", cmd_branch},
      {"character", "character report for a fixed-point file", cmd_character},
      {"multiplicity", "multiplicity of one K-irreducible", cmd_multiplicity},
      {"spectrum", "all nonzero K-multiplicities in a window", cmd_spectrum},
      {"gkrs", "GKRS multiplet of V^G_lambda", cmd_gkrs},
      {"verify", "run the acceptance suite, or every check on --input", cmd_verify},
      {"diagram", "rank-2 weight diagram as SVG", cmd_diagram},
  };
  std::map<std::string, int (*)(const Options&)> dispatch;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    if (std::string(c.name) == "multiplicity" || std::string(c.name) == "spectrum")
      sub->add_flag("--gp", o.gp, "add the Guillemin-Prato variant and the difference");
    if (std::string(c.name) == "verify") {
      sub->add_option("--scope", o.scope, "quick or full");
      sub->add_flag("--timing", o.timing, "include wall-clock times (output is then not reproducible)");
    }
    dispatch[c.name] = c.run;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    return dispatch.at(name)(o);
  } catch (const Error& e) {
    std::cerr << "weylquant: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "weylquant: internal error: " << e.what() << "\n";
    return 3;
  }
}
