#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "repclust/checks.hpp"
#include "repclust/cover.hpp"
#include "repclust/derived_model.hpp"
#include "repclust/embedding.hpp"
#include "repclust/orbit_model.hpp"
#include "repclust/tilting.hpp"

using namespace repclust;
using nlohmann::json;

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBound = 3;
constexpr double kAngulationCap = 1e5;

struct Common {
  int n = 1;
  int m = 1;
  int p = 1;
  std::string format = "json";
  std::string out;
  bool force = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_m = true, bool with_p = true) {
  cmd->add_option("--n", c.n, "rank n");
  if (with_m) cmd->add_option("--m", c.m, "higher-cluster level m");
  if (with_p) cmd->add_option("--p", c.p, "repetition count p");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "dot"}));
  cmd->add_option("--out", c.out, "write the artifact to PATH instead of stdout");
  cmd->add_flag("--force", c.force, "override desk-scale guards");
}

// The artifact goes to --out or stdout; the one-line summary goes to stdout
// when the artifact went to a file and to stderr otherwise.
void emit(const Common& c, const std::string& artifact, const std::string& summary) {
  if (c.out.empty()) {
    std::cout << artifact;
    if (!artifact.empty() && artifact.back() != '\n') std::cout << '\n';
    std::cerr << summary << '\n';
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + c.out);
  file << artifact;
  if (!artifact.empty() && artifact.back() != '\n') file << '\n';
  std::cout << summary << '\n';
}

json quiver_json(const TranslationQuiver& q) { return json::parse(to_json(q)); }

Diagonal parse_diagonal(const std::vector<int>& v, const ModelParams& params) {
  if (v.size() != 3) throw InvalidParams("a diagonal is given as i,j,k");
  return make_diagonal(v[0], v[1], v[2], params);
}

int cmd_build(const Common& c) {
  const OrbitQuiver gamma = build_gamma(ModelParams::make(c.n, c.m, c.p));
  std::string artifact;
  if (c.format == "dot") {
    DotOptions options;
    options.graph_name = "gamma";
    options.cluster_of = label_fundamental_domains(gamma.quiver);
    artifact = to_dot(gamma.quiver, options);
  } else {
    artifact = quiver_json(gamma.quiver).dump(2);
  }
  emit(c, artifact,
       "vertices: " + std::to_string(gamma.quiver.vertex_count()) +
           ", arrows: " + std::to_string(gamma.quiver.arrow_count()));
  return 0;
}

int cmd_check(const Common& c, const std::string& suite_name, bool grid, int half_width) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw InvalidParams("unknown suite '" + suite_name + "'");
  if (c.format != "json") throw InvalidParams("check reports are JSON only");
  CheckOptions options;
  options.half_width = half_width;
  options.force = c.force;
  if (half_width < 2) throw InvalidParams("--half-width must be >= 2");
  const auto reports = grid ? run_grid(*suite, options)
                            : run_suite(*suite, ModelParams::make(c.n, c.m, c.p), options);
  const json report = to_json(reports);
  std::string summary = "suite " + suite_name + ": " + std::to_string(reports.size()) + " report(s), " +
                        std::to_string(report["failed_count"].get<std::size_t>()) + " failed";
  emit(c, report.dump(2), summary);
  return all_passed(reports) ? 0 : kExitFailedCheck;
}

int cmd_ext(const Common& c, const std::vector<int>& x, const std::vector<int>& y) {
  const ModelParams params = ModelParams::make(c.n, c.m, c.p);
  if (c.format != "json") throw InvalidParams("ext tables are JSON only");
  const OrbitCategory category(params);
  json out{{"params", to_json(params)}};
  if (!x.empty() || !y.empty()) {
    const Diagonal dx = parse_diagonal(x, params), dy = parse_diagonal(y, params);
    out["x"] = to_json(dx);
    out["y"] = to_json(dy);
    out["hom"] = category.hom(dx, dy);
    out["ext"] = json::object();
    for (int i = 1; i <= params.m; ++i) out["ext"][std::to_string(i)] = category.ext(dx, dy, i);
    if (params.m == 1) out["crossing_rule"] = ext1_crossing(dx, dy, params);
    emit(c, out.dump(2), "hom " + out["hom"].dump() + ", ext " + out["ext"].dump());
    return 0;
  }
  const auto& diagonals = category.gamma().diagonals;
  const std::size_t V = diagonals.size();
  out["diagonals"] = json::array();
  for (const auto& d : diagonals) out["diagonals"].push_back(to_json(d));
  json hom = json::array();
  for (VertexId a = 0; a < V; ++a) {
    json row = json::array();
    for (VertexId b = 0; b < V; ++b) row.push_back(category.hom(a, b));
    hom.push_back(row);
  }
  out["hom"] = hom;
  out["ext"] = json::object();
  for (int i = 1; i <= params.m; ++i) {
    json table = json::array();
    for (VertexId a = 0; a < V; ++a) {
      json row = json::array();
      for (VertexId b = 0; b < V; ++b) row.push_back(category.ext(a, b, i));
      table.push_back(row);
    }
    out["ext"][std::to_string(i)] = table;
  }
  if (params.m == 1) {
    json table = json::array();
    for (const auto& a : diagonals) {
      json row = json::array();
      for (const auto& b : diagonals) row.push_back(ext1_crossing(a, b, params));
      table.push_back(row);
    }
    out["crossing_rule"] = table;
  }
  emit(c, out.dump(2), std::to_string(V) + "x" + std::to_string(V) + " tables");
  return 0;
}

int cmd_tilt(const Common& c, bool graph) {
  const ModelParams params = ModelParams::make(c.n, c.m, c.p);
  const double estimate = fuss_catalan(params.n, params.m);
  if (estimate > kAngulationCap && !c.force)
    throw BoundExceeded("estimated " + json(estimate).dump() + " angulations exceed the bound " +
                            json(kAngulationCap).dump() + " (use --force)",
                        estimate);
  if (graph) {
    const MutationGraph g = mutation_graph(params);
    std::string artifact;
    if (c.format == "dot") {
      artifact = to_dot(g);
    } else {
      json out{{"params", to_json(params)}, {"connected", g.connected}};
      out["nodes"] = json::array();
      for (const auto& t : g.nodes) {
        json obj = json::array();
        for (const auto& d : t.summands) obj.push_back(to_json(d));
        out["nodes"].push_back(obj);
      }
      out["edges"] = json::array();
      for (auto [a, b] : g.edges) out["edges"].push_back({a, b});
      artifact = out.dump(2);
    }
    emit(c, artifact,
         std::to_string(g.nodes.size()) + " nodes, " + std::to_string(g.edges.size()) + " edges" +
             (g.connected ? ", connected" : ", disconnected"));
    return 0;
  }
  if (c.format != "json") throw InvalidParams("DOT output of tilt requires --mutation-graph");
  const auto objects = tilting_objects(params);
  json out{{"params", to_json(params)},
           {"count", objects.size()},
           {"summands_per_object", params.p * params.n}};
  out["objects"] = json::array();
  for (const auto& t : objects) {
    json obj = json::array();
    for (const auto& d : t.summands) obj.push_back(to_json(d));
    out["objects"].push_back(obj);
  }
  emit(c, out.dump(2),
       std::to_string(objects.size()) + " objects, " + std::to_string(params.p * params.n) +
           " summands each");
  return 0;
}

int cmd_embed(const Common& c) {
  t_value(c.n, c.p);  // refuses p <= 2 with the reason
  const Embedding e = embed(c.n, c.p);
  const Quotient q = quotient_ar(c.n, c.p);
  const bool ok = e.ok() && q.ok() && q.kept == e.band_vertices;
  std::string artifact;
  if (c.format == "dot") {
    DotOptions options;
    options.graph_name = "ambient";
    options.cluster_prefix = "band";
    options.cluster_of.assign(e.ambient.quiver.vertex_count(), 0);
    for (auto v : e.band_vertices) options.cluster_of[v] = 1;
    artifact = to_dot(e.ambient.quiver, options);
  } else {
    json out{{"n", c.n}, {"p", c.p}, {"t", e.band.t}, {"ok", ok},
             {"parity", e.band.parity == BandParity::Even ? "even" : "odd"},
             {"rows", e.band.rows}, {"deleted_rows", q.deleted_rows},
             {"band_vertices", e.band_vertices.size()},
             {"band_tau_stable", e.band_tau_stable},
             {"deleted_tau_stable", q.deleted_tau_stable}};
    out["vertex_map"] = json::array();
    for (VertexId v = 0; v < e.vertex_map.size(); ++v)
      out["vertex_map"].push_back(
          {e.source.diagonal(v).triple(), e.ambient.diagonal(e.vertex_map[v]).triple()});
    artifact = out.dump(2);
  }
  emit(c, artifact,
       "t = " + std::to_string(e.band.t) + ", band of " + std::to_string(e.band_vertices.size()) +
           " vertices, " + (ok ? "isomorphism verified" : "EMBEDDING FAILED"));
  return ok ? 0 : kExitFailedCheck;
}

int cmd_derived(const Common& c, int half_width, bool odd) {
  const WindowParams w = WindowParams::make(c.n + 1, half_width, odd);
  const DerivedWindow window = build_window(w);
  std::optional<DerivedReport> report;
  if (half_width >= 2) report = verify_derived_iso(w);
  std::string artifact;
  if (c.format == "dot") {
    DotOptions options;
    options.graph_name = "window";
    for (const auto& d : window.diagonals) options.cluster_of.push_back(d.k + w.half_width);
    artifact = to_dot(window.quiver, options);
  } else {
    json out{{"params", {{"rank", w.rank}, {"half_width", w.half_width}, {"odd_endpoints", w.odd_endpoints}}},
             {"quiver", quiver_json(window.quiver)}};
    out["roots"] = json::array();
    for (const auto& d : window.diagonals) {
      const RootLabel r = root_label(d, w);
      out["roots"].push_back({{"diagonal", d.triple()}, {"root", {r.a, r.b}}});
    }
    if (report) out["verified"] = report->ok();
    artifact = out.dump(2);
  }
  std::string summary = "rank " + std::to_string(w.rank) + ", " + std::to_string(2 * half_width + 1) +
                        " regions, " + std::to_string(window.quiver.vertex_count()) + " vertices";
  if (report) summary += report->ok() ? ", cover isomorphism verified" : ", VERIFICATION FAILED";
  emit(c, artifact, summary);
  return !report || report->ok() ? 0 : kExitFailedCheck;
}

int cmd_power(const Common& c) {
  const PowerReport r = power_decomposition(c.n);
  std::string artifact;
  if (c.format == "dot") {
    const OrbitQuiver polygon = build_gamma(ModelParams::make(2 * c.n + 1, 1, 1));
    const TranslationQuiver square = power(polygon.quiver, 2);
    DotOptions options;
    options.graph_name = "square";
    options.cluster_prefix = "component";
    options.cluster_of.assign(square.vertex_count(), 0);
    const auto comps = connected_components(square);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (auto v : comps[i]) options.cluster_of[v] = static_cast<int>(i);
    artifact = to_dot(square, options);
  } else {
    json out{{"n", c.n},
             {"vertices", r.vertex_count},
             {"component_sizes", r.component_sizes},
             {"three_components", r.three_components},
             {"homogeneous", r.homogeneous},
             {"m_diagonal_component_iso", r.m_component_iso},
             {"parity_components_iso", r.parity_components_iso},
             {"ok", r.ok()}};
    artifact = out.dump(2);
  }
  std::string sizes;
  for (auto s : r.component_sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
  emit(c, artifact, "components " + sizes + (r.ok() ? ", decomposition verified" : ", DECOMPOSITION FAILED"));
  return r.ok() ? 0 : kExitFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric models of repetitive higher cluster categories of type A"};
  app.require_subcommand(1);

  Common build_opts, check_opts, ext_opts, tilt_opts, embed_opts, derived_opts, power_opts;

  auto* build = app.add_subcommand("build", "build the quiver of m-diagonals");
  add_common(build, build_opts);

  auto* check = app.add_subcommand("check", "run an invariant suite");
  add_common(check, check_opts);
  std::string suite;
  bool grid = false;
  int check_half_width = 2;
  check->add_option("--suite", suite, "stability|ext-consistency|tilting|embedding|derived|power|all")
      ->required();
  check->add_flag("--grid", grid, "run on the grid n<=6, m<=3, p<=4");
  check->add_option("--half-width", check_half_width, "half-width of the derived window");

  auto* ext = app.add_subcommand("ext", "Hom/Ext dimensions in the orbit category");
  add_common(ext, ext_opts);
  std::vector<int> x, y;
  ext->add_option("--x", x, "first diagonal i,j,k")->delimiter(',')->expected(3);
  ext->add_option("--y", y, "second diagonal i,j,k")->delimiter(',')->expected(3);

  auto* tilt = app.add_subcommand("tilt", "enumerate tilting objects");
  add_common(tilt, tilt_opts);
  bool mutation = false;
  tilt->add_flag("--mutation-graph", mutation, "emit the orbit mutation graph");

  auto* embed_cmd = app.add_subcommand("embed", "embed the model as a band of a cluster category");
  add_common(embed_cmd, embed_opts, false);

  auto* derived = app.add_subcommand("derived", "build the infinite-polygon window");
  add_common(derived, derived_opts, false, false);
  int half_width = 2;
  bool odd = false;
  derived->add_option("--half-width", half_width, "regions -h..h");
  derived->add_flag("--odd", odd, "use odd-numbered endpoints");

  auto* power_cmd = app.add_subcommand("power", "decompose the squared diagonal quiver");
  add_common(power_cmd, power_opts, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*build) return cmd_build(build_opts);
    if (*check) return cmd_check(check_opts, suite, grid, check_half_width);
    if (*ext) return cmd_ext(ext_opts, x, y);
    if (*tilt) return cmd_tilt(tilt_opts, mutation);
    if (*embed_cmd) return cmd_embed(embed_opts);
    if (*derived) return cmd_derived(derived_opts, half_width, odd);
    if (*power_cmd) return cmd_power(power_opts);
  } catch (const InvalidParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBound;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailedCheck;
  }
  return 0;
}
