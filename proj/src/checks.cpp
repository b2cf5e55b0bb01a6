#include "repclust/checks.hpp"

#include <algorithm>

#include "repclust/cover.hpp"
#include "repclust/derived_model.hpp"
#include "repclust/embedding.hpp"
#include "repclust/orbit_model.hpp"
#include "repclust/tilting.hpp"

namespace repclust {

using nlohmann::json;

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "stability") return Suite::Stability;
  if (name == "ext-consistency") return Suite::ExtConsistency;
  if (name == "tilting") return Suite::Tilting;
  if (name == "embedding") return Suite::Embedding;
  if (name == "derived") return Suite::Derived;
  if (name == "power") return Suite::Power;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::Stability: return "stability";
    case Suite::ExtConsistency: return "ext-consistency";
    case Suite::Tilting: return "tilting";
    case Suite::Embedding: return "embedding";
    case Suite::Derived: return "derived";
    case Suite::Power: return "power";
    case Suite::All: return "all";
  }
  return "all";
}

json to_json(const Diagonal& d) { return json::array({d.i, d.j, d.k}); }
json to_json(const ModelParams& p) { return {{"n", p.n}, {"m", p.m}, {"p", p.p}}; }

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

json SuiteReport::to_json() const {
  json out{{"suite", suite}, {"params", params}, {"passed", passed()}};
  out["checks"] = json::array();
  for (const auto& c : checks)
    out["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

json to_json(const std::vector<SuiteReport>& reports) {
  json out{{"passed", all_passed(reports)}, {"reports", json::array()}};
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out["reports"].push_back(r.to_json());
    if (!r.passed()) ++failed;
  }
  out["report_count"] = reports.size();
  out["failed_count"] = failed;
  return out;
}

bool all_passed(const std::vector<SuiteReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
}

namespace {

CheckResult check(std::string name, bool passed, json detail = json::object()) {
  return {std::move(name), passed, std::move(detail)};
}

// Diagonals counted straight from the definition: walk both arcs of the
// boundary and count their vertices.
std::size_t count_by_definition(const ModelParams& params) {
  const int N = params.region_size();
  std::size_t count = 0;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      if (j - i == 1 || (i == 1 && j == N)) continue;
      int first = 0, second = 0;
      for (int v = 1; v <= N; ++v) {
        if (v >= i && v <= j) ++first;
        if (v <= i || v >= j) ++second;
      }
      if (first % params.m == 2 % params.m && second % params.m == 2 % params.m) ++count;
    }
  return count * static_cast<std::size_t>(params.p);
}

SuiteReport stability_suite(const ModelParams& params) {
  SuiteReport r{"stability", to_json(params), {}};
  const OrbitQuiver gamma = build_gamma(params);
  const TranslationQuiver& q = gamma.quiver;

  const auto report = verify_stable(q);
  json detail{{"violations", report.violations.size()},
              {"translation_total", report.translation_total},
              {"translation_bijective", report.translation_bijective}};
  if (!report.violations.empty()) {
    const auto& v = report.violations.front();
    detail["witness"] = {{"source", gamma.diagonal(v.source).triple()},
                         {"target", gamma.diagonal(v.target).triple()},
                         {"forward", v.forward},
                         {"backward", v.backward}};
  } else if (!report.untranslated.empty()) {
    detail["witness"] = {{"untranslated", gamma.diagonal(report.untranslated.front()).triple()}};
  }
  r.checks.push_back(check("stable", report.stable(), detail));

  const std::size_t formula = static_cast<std::size_t>(params.diagonal_count());
  const std::size_t brute = count_by_definition(params);
  r.checks.push_back(check("vertex_count", q.vertex_count() == formula && brute == formula,
                           {{"vertices", q.vertex_count()}, {"formula", formula}, {"brute_force", brute}}));

  std::optional<VertexId> heavy;
  for (VertexId v = 0; v < q.vertex_count() && !heavy; ++v)
    if (q.out_arrows(v).size() > 2 || q.in_arrows(v).size() > 2) heavy = v;
  json degree_detail{{"arrows", q.arrow_count()}};
  if (heavy) degree_detail["witness"] = gamma.diagonal(*heavy).triple();
  r.checks.push_back(check("degrees_at_most_two", !heavy, degree_detail));

  const int N = params.region_size();
  std::optional<std::size_t> bad_seam;
  for (std::size_t a = 0; a < q.arrow_count() && !bad_seam; ++a) {
    const Arrow& arrow = q.arrow(a);
    const Diagonal& s = gamma.diagonal(arrow.source);
    const Diagonal& t = gamma.diagonal(arrow.target);
    if (arrow.tag == ArrowTag::IrrRhoRot) {
      if (s.j != N - params.m + 1 || t.i != 1 || t.k != rho(s, params).k) bad_seam = a;
    } else if (s.k != t.k) {
      bad_seam = a;
    }
  }
  json seam_detail = json::object();
  if (bad_seam)
    seam_detail["witness"] = {gamma.diagonal(q.arrow(*bad_seam).source).triple(),
                              gamma.diagonal(q.arrow(*bad_seam).target).triple()};
  r.checks.push_back(check("seam_arrows", !bad_seam, seam_detail));

  bool mesh_ok = true;
  std::string mesh_error;
  try {
    mesh_ok = mesh_relations(q).size() == q.vertex_count();
  } catch (const QuiverError& e) {
    mesh_ok = false;
    mesh_error = e.what();
  }
  r.checks.push_back(check("mesh_relations", mesh_ok,
                           mesh_error.empty() ? json::object() : json{{"witness", mesh_error}}));

  const auto sizes = fundamental_domain_sizes(q);
  const bool equal = sizes.size() == static_cast<std::size_t>(params.p) &&
                     std::all_of(sizes.begin(), sizes.end(),
                                 [&](std::size_t s) { return s == formula / params.p; });
  r.checks.push_back(check("fundamental_domains", equal, {{"sizes", sizes}}));

  const BandTopology band = band_topology(gamma);
  if (band != BandTopology::Inconclusive) {
    const BandTopology want = params.p % 2 == 1 ? BandTopology::Moebius : BandTopology::Cylinder;
    r.checks.push_back(check("band_topology", band == want,
                             {{"topology", to_string(band)}, {"expected", to_string(want)}}));
  }
  return r;
}

SuiteReport ext_suite(const ModelParams& params) {
  SuiteReport r{"ext-consistency", to_json(params), {}};
  const OrbitCategory category(params);
  const OrbitQuiver& gamma = category.gamma();
  const TranslationQuiver& q = gamma.quiver;
  const std::size_t V = q.vertex_count();

  auto pair_witness = [&](VertexId x, VertexId y, long long a, long long b) {
    return json{{"x", gamma.diagonal(x).triple()}, {"y", gamma.diagonal(y).triple()},
                {"first", a}, {"second", b}};
  };

  json hom_detail{{"pairs", V * V}};
  bool hom_ok = true;
  for (VertexId x = 0; x < V && hom_ok; ++x) {
    const auto row = hammock_row(q, x);
    for (VertexId y = 0; y < V && hom_ok; ++y) {
      const long long orbit = category.hom(x, y);
      if (row[y] != orbit) {
        hom_ok = false;
        hom_detail["witness"] = pair_witness(x, y, row[y], orbit);
      }
    }
  }
  r.checks.push_back(check("hammock_vs_orbit_hom", hom_ok, hom_detail));

  json inv_detail = json::object();
  bool inv_ok = true;
  const auto& rep = category.cover().representative;
  for (VertexId x = 0; x < V && inv_ok; ++x)
    for (VertexId y = 0; y < V && inv_ok; ++y) {
      const long long moved = category.hom(rep[x], orbit_generator(rep[y], 1, params));
      const long long base = category.hom(x, y);
      if (moved != base) {
        inv_ok = false;
        inv_detail["witness"] = pair_witness(x, y, base, moved);
      }
    }
  r.checks.push_back(check("orbit_sum_invariance", inv_ok, inv_detail));

  if (params.m == 1) {
    json detail{{"pairs", V * V}};
    bool ok = true;
    std::optional<std::pair<VertexId, VertexId>> asymmetric;
    for (VertexId x = 0; x < V; ++x)
      for (VertexId y = 0; y < V; ++y) {
        const long long orbit = category.ext(x, y, 1);
        const int rule = ext1_crossing(gamma.diagonal(x), gamma.diagonal(y), params);
        if (ok && orbit != rule) {
          ok = false;
          detail["witness"] = pair_witness(x, y, rule, orbit);
        }
        if (!asymmetric && orbit != category.ext(y, x, 1)) asymmetric = {x, y};
      }
    r.checks.push_back(check("crossing_rule_vs_orbit_ext", ok, detail));

    // Ext^1 is symmetric exactly when the category is 2-Calabi-Yau (p = 1).
    json sym{{"expected_symmetric", params.p == 1}};
    if (asymmetric) sym["asymmetric_pair"] = {gamma.diagonal(asymmetric->first).triple(),
                                              gamma.diagonal(asymmetric->second).triple()};
    r.checks.push_back(check("ext1_symmetry", asymmetric.has_value() == (params.p != 1), sym));
  }
  return r;
}

SuiteReport tilting_suite(const ModelParams& params, const CheckOptions& options) {
  if (!options.force && static_cast<std::size_t>(params.diagonal_count()) > options.tilting_vertex_cap)
    throw BoundExceeded("tilting brute force over " + std::to_string(params.diagonal_count()) +
                            " diagonals exceeds the cap of " +
                            std::to_string(options.tilting_vertex_cap) + " (use --force)",
                        params.diagonal_count());
  SuiteReport r{"tilting", to_json(params), {}};
  const TiltingReport t = verify_tilting_bruteforce(params);
  const double expected = fuss_catalan(params.n, params.m);
  r.checks.push_back(check("angulation_count", static_cast<double>(t.object_count) == expected,
                           {{"count", t.object_count}, {"fuss_catalan", expected}}));
  r.checks.push_back(check("summand_counts", t.summand_counts_ok, {{"expected", params.p * params.n}}));
  r.checks.push_back(check("objects_rigid", t.objects_rigid));

  json family{{"cluster_tilting_count", t.cluster_tilting_count},
              {"object_count", t.object_count},
              {"maximal_rigid_count", t.maximal_rigid_count},
              {"maximal_rigid_matches", t.maximal_rigid_matches}};
  if (t.cluster_tilting_witness) {
    json w = json::array();
    for (const auto& d : *t.cluster_tilting_witness) w.push_back(to_json(d));
    family["witness"] = w;
  }
  if (t.maximal_rigid_witness) {
    json w = json::array();
    for (const auto& d : *t.maximal_rigid_witness) w.push_back(to_json(d));
    family["maximal_rigid_example"] = w;
  }
  r.checks.push_back(check("cluster_tilting_family", t.cluster_tilting_matches, family));

  if (params.m == 1) {
    bool ok = true;
    json detail = json::object();
    for (const auto& obj : tilting_objects(params))
      for (const auto& d : obj.summands) {
        if (!ok) break;
        const TiltingObject once = orbit_mutate(obj, d, params);
        Diagonal added{};
        for (const auto& s : once.summands)
          if (s.k == 1 && !std::binary_search(obj.summands.begin(), obj.summands.end(), s)) added = s;
        if (orbit_mutate(once, added, params) != obj) {
          ok = false;
          detail["witness"] = to_json(d);
        }
      }
    r.checks.push_back(check("mutation_involution", ok, detail));
  }
  return r;
}

SuiteReport embedding_suite(const ModelParams& params) {
  SuiteReport r{"embedding", json{{"n", params.n}, {"p", params.p}}, {}};
  const Embedding e = embed(params.n, params.p);
  json rows = e.band.rows;
  json embed_detail{{"t", e.band.t},
                    {"rows", rows},
                    {"parity", e.band.parity == BandParity::Even ? "even" : "odd"},
                    {"band_vertices", e.band_vertices.size()},
                    {"band_tau_stable", e.band_tau_stable},
                    {"expected_gluing", {{"tau_inverse_power", e.expected_gluing.tau_inverse_power},
                                         {"shift", e.expected_gluing.shift}}}};
  if (e.band_gluing)
    embed_detail["band_gluing"] = {{"tau_inverse_power", e.band_gluing->tau_inverse_power},
                                   {"shift", e.band_gluing->shift}};
  if (e.iso) {
    json map = json::array();
    for (VertexId v = 0; v < e.vertex_map.size(); ++v)
      map.push_back({e.source.diagonal(v).triple(), e.ambient.diagonal(e.vertex_map[v]).triple()});
    embed_detail["vertex_map"] = map;
  } else {
    embed_detail["witness"] = "no translation-quiver isomorphism onto the band";
  }
  r.checks.push_back(check("band_isomorphism", e.ok(), embed_detail));

  const Quotient qa = quotient_ar(params.n, params.p);
  json deleted_rows = qa.deleted_rows;
  r.checks.push_back(check("quotient_isomorphism", qa.ok(),
                           {{"deleted_rows", deleted_rows},
                            {"deleted_vertices", qa.deleted.size()},
                            {"deleted_tau_stable", qa.deleted_tau_stable}}));
  r.checks.push_back(check("same_subobject", qa.kept == e.band_vertices));
  const int t = e.band.t;
  const std::size_t lhs = static_cast<std::size_t>(t * (t + 3) / 2) - qa.deleted.size();
  const std::size_t rhs = static_cast<std::size_t>(params.p * params.n * (params.n + 3) / 2);
  r.checks.push_back(check("vertex_count_identity", lhs == rhs, {{"kept", lhs}, {"expected", rhs}}));
  return r;
}

SuiteReport derived_suite(const ModelParams& params, const CheckOptions& options) {
  const int rank = params.n + 1;
  SuiteReport r{"derived", json{{"rank", rank}, {"half_width", options.half_width}}, {}};
  const RegionReport region = verify_region(rank);
  r.checks.push_back(check("region_module_quiver", region.ok(),
                           {{"vertices", region.vertex_count},
                            {"roots_bijective", region.roots_bijective},
                            {"explicit_map_iso", region.explicit_map_iso},
                            {"search_iso", region.search_iso}}));
  const DerivedReport d = verify_derived_iso(WindowParams::make(rank, options.half_width));
  json detail{{"vertices", d.vertex_count},
              {"interior_stable", d.interior_stable},
              {"explicit_map_iso", d.explicit_map_iso},
              {"connecting_arrows_match", d.connecting_arrows_match},
              {"interior_search_iso", d.interior_search_iso},
              {"boundary_connecting_ok", d.boundary_connecting_ok},
              {"varrho_is_shift", d.varrho_is_shift},
              {"varrho_commutes_with_tau", d.varrho_commutes_with_tau},
              {"hom_agrees", d.hom_agrees},
              {"serre_duality", d.serre_duality}};
  if (d.witness) detail["witness"] = *d.witness;
  r.checks.push_back(check("window_cover_isomorphism", d.ok(), detail));
  r.checks.push_back(check("fractional_calabi_yau", window_fractional_cy(rank) && fractional_cy_holds(rank)));
  r.checks.push_back(check("parity_models_isomorphic",
                           parity_models_isomorphic(WindowParams::make(rank, options.half_width))));
  return r;
}

SuiteReport power_suite(const ModelParams& params) {
  SuiteReport r{"power", json{{"n", params.n}}, {}};
  const PowerReport p = power_decomposition(params.n);
  r.checks.push_back(check("three_components", p.three_components && p.homogeneous,
                           {{"sizes", p.component_sizes}, {"vertices", p.vertex_count}}));
  r.checks.push_back(check("m_diagonal_component", p.m_component_iso));
  r.checks.push_back(check("parity_components", p.parity_components_iso));
  return r;
}

}  // namespace

std::vector<SuiteReport> run_suite(Suite suite, const ModelParams& params, const CheckOptions& options) {
  switch (suite) {
    case Suite::Stability: return {stability_suite(params)};
    case Suite::ExtConsistency: return {ext_suite(params)};
    case Suite::Tilting: return {tilting_suite(params, options)};
    case Suite::Embedding:
      if (params.m != 1) throw InvalidParams("the embedding is defined for m = 1");
      return {embedding_suite(params)};
    case Suite::Derived: return {derived_suite(params, options)};
    case Suite::Power: return {power_suite(params)};
    case Suite::All: {
      std::vector<SuiteReport> out{stability_suite(params), ext_suite(params)};
      if (options.force || static_cast<std::size_t>(params.diagonal_count()) <= options.tilting_vertex_cap)
        out.push_back(tilting_suite(params, options));
      if (params.m == 1 && params.p > 2) out.push_back(embedding_suite(params));
      out.push_back(derived_suite(params, options));
      out.push_back(power_suite(params));
      return out;
    }
  }
  return {};
}

std::vector<SuiteReport> run_grid(Suite suite, const CheckOptions& options) {
  auto wants = [&](Suite s) { return suite == Suite::All || suite == s; };
  std::vector<SuiteReport> out;
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int p = 1; p <= 4; ++p) {
        const ModelParams params = ModelParams::make(n, m, p);
        if (wants(Suite::Stability)) out.push_back(stability_suite(params));
        if (wants(Suite::ExtConsistency)) out.push_back(ext_suite(params));
        if (wants(Suite::Tilting) &&
            static_cast<std::size_t>(params.diagonal_count()) <= options.tilting_vertex_cap)
          out.push_back(tilting_suite(params, options));
        if (wants(Suite::Embedding) && m == 1 && p > 2) out.push_back(embedding_suite(params));
        if (wants(Suite::Derived) && m == 1 && p == 1)
          out.push_back(derived_suite(params, options));
        if (wants(Suite::Power) && m == 1 && p == 1) out.push_back(power_suite(params));
      }
  return out;
}

}  // namespace repclust
