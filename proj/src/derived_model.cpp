#include "repclust/derived_model.hpp"

#include <algorithm>
#include <map>

#include "repclust/orbit_model.hpp"

namespace repclust {

WindowParams WindowParams::make(int rank, int half_width, bool odd_endpoints) {
  if (rank < 1) throw InvalidParams("rank must be >= 1 (got " + std::to_string(rank) + ")");
  if (half_width < 1)
    throw InvalidParams("half-width must be >= 1 (got " + std::to_string(half_width) + ")");
  return WindowParams{rank, half_width, odd_endpoints};
}

std::string to_string(const TwoCDiagonal& d) {
  return "(" + std::to_string(d.i) + "," + std::to_string(d.j) + "," + std::to_string(d.k) + ")";
}

namespace {

bool in_window(const TwoCDiagonal& d, const WindowParams& w) {
  const int lo = w.low_vertex(), hi = w.high_vertex();
  return d.k >= -w.half_width && d.k <= w.half_width && d.i >= lo && d.j <= hi && d.i < d.j &&
         (d.i - lo) % 2 == 0 && (d.j - lo) % 2 == 0;
}

}  // namespace

VertexId DerivedWindow::vertex(const TwoCDiagonal& d) const {
  auto v = find(d);
  if (!v) throw InvalidParams(to_string(d) + " is not a vertex of the window");
  return *v;
}

std::optional<VertexId> DerivedWindow::find(const TwoCDiagonal& d) const {
  return quiver.find(d.triple());
}

std::optional<TwoCDiagonal> varrho_action(const TwoCDiagonal& d, const WindowParams& w, int times) {
  TwoCDiagonal out{d.i, d.j, d.k + times};
  if (!in_window(out, w)) return std::nullopt;
  return out;
}

std::optional<TwoCDiagonal> tau2_action(const TwoCDiagonal& d, const WindowParams& w) {
  TwoCDiagonal out = d.i != w.low_vertex() ? TwoCDiagonal{d.i - 2, d.j - 2, d.k}
                                           : TwoCDiagonal{d.j - 2, w.high_vertex(), d.k - 1};
  if (!in_window(out, w)) return std::nullopt;
  return out;
}

DerivedWindow build_window(const WindowParams& w) {
  DerivedWindow out{w, {}, {}};
  const int lo = w.low_vertex(), hi = w.high_vertex();
  for (int k = -w.half_width; k <= w.half_width; ++k)
    for (int i = lo; i <= hi; i += 2)
      for (int j = i + 2; j <= hi; j += 2) out.diagonals.push_back({i, j, k});

  QuiverBuilder b;
  for (const auto& d : out.diagonals) b.add_vertex(d.triple());
  auto add = [&](VertexId s, const TwoCDiagonal& t, ArrowTag tag) {
    if (auto v = b.find(t.triple())) b.add_arrow(s, *v, tag);
  };
  for (VertexId v = 0; v < out.diagonals.size(); ++v) {
    const auto& d = out.diagonals[v];
    if (d.j != hi) add(v, {d.i, d.j + 2, d.k}, ArrowTag::Plain);
    add(v, {d.i + 2, d.j, d.k}, ArrowTag::Plain);
    if (d.j == hi && d.k != w.half_width) add(v, {lo, d.i, d.k + 1}, ArrowTag::Connecting);
    if (auto t = tau2_action(d, w)) b.set_tau(v, *b.find(t->triple()));
  }
  out.quiver = std::move(b).build();
  return out;
}

CoverVertex cover_vertex(const TwoCDiagonal& d, const WindowParams& w) {
  const int shift = w.odd_endpoints ? 1 : 0;
  const int i = d.i + shift, j = d.j + shift;
  return shift_action(CoverVertex{i / 2 - 1, (j - i) / 2}, d.k, w.rank);
}

RootLabel root_label(const TwoCDiagonal& d, const WindowParams& w) {
  const int shift = w.odd_endpoints ? 1 : 0;
  return {(d.i + shift) / 2, (d.j + shift) / 2 - 1};
}

RegionModule region_to_module_quiver(const DerivedWindow& window, int k) {
  if (k < -window.params.half_width || k > window.params.half_width)
    throw InvalidParams("region " + std::to_string(k) + " lies outside the window");
  RegionModule out;
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < window.diagonals.size(); ++v)
    if (window.diagonals[v].k == k) {
      keep.push_back(v);
      out.diagonals.push_back(window.diagonals[v]);
      out.roots.push_back(root_label(window.diagonals[v], window.params));
    }
  out.quiver = window.quiver.induced(keep);
  return out;
}

ModuleQuiver module_ar_quiver(int rank) {
  const int K = rank;
  const TranslationQuiver window = cover_window({0, K - 1, K});
  ModuleQuiver out;
  std::vector<VertexId> keep;
  std::map<CoverVertex, std::vector<int>> dim;
  auto get = [&](int c, int r) {
    auto it = dim.find({c, r});
    return it == dim.end() ? std::vector<int>(K, 0) : it->second;
  };
  for (int c = 0; c < K; ++c)
    for (int r = 1; c + r <= K; ++r) {
      std::vector<int> d(K, 0);
      if (c == 0) {
        for (int s = 0; s < r; ++s) d[s] = 1;
      } else {
        // Mesh ending at (c, r) starts at (c - 1, r).
        auto up = get(c - 1, r + 1), down = get(c, r - 1), start = get(c - 1, r);
        for (int s = 0; s < K; ++s) d[s] = up[s] + down[s] - start[s];
      }
      dim[{c, r}] = d;
      auto first = std::find(d.begin(), d.end(), 1);
      auto last = std::find(d.rbegin(), d.rend(), 1);
      const int a = static_cast<int>(first - d.begin()) + 1;
      const int b = K - static_cast<int>(last - d.rbegin());
      for (int s = 0; s < K; ++s)
        if (d[s] != ((s + 1 >= a && s + 1 <= b) ? 1 : 0))
          throw QuiverError("knitted dimension vector is not a positive root");
      keep.push_back(window.at({c, r}));
      out.vertices.push_back({c, r});
      out.roots.push_back({a, b});
    }
  out.quiver = window.induced(keep);
  return out;
}

RegionReport verify_region(int rank) {
  const WindowParams w = WindowParams::make(rank, 1);
  const DerivedWindow window = build_window(w);
  const RegionModule region = region_to_module_quiver(window, 0);
  const ModuleQuiver module = module_ar_quiver(rank);

  RegionReport report;
  report.rank = rank;
  report.vertex_count = region.quiver.vertex_count();

  std::vector<RootLabel> all;
  for (int a = 1; a <= rank; ++a)
    for (int b = a; b <= rank; ++b) all.push_back({a, b});
  auto sorted_roots = region.roots;
  std::sort(sorted_roots.begin(), sorted_roots.end());
  report.roots_bijective = sorted_roots == all;

  std::vector<VertexId> map;
  bool roots_match = true;
  for (std::size_t v = 0; v < region.diagonals.size(); ++v) {
    const auto& d = region.diagonals[v];
    const CoverVertex c{d.i / 2 - 1, (d.j - d.i) / 2};
    auto it = std::find(module.vertices.begin(), module.vertices.end(), c);
    if (it == module.vertices.end()) {
      roots_match = false;
      break;
    }
    const auto target = static_cast<VertexId>(it - module.vertices.begin());
    map.push_back(target);
    roots_match = roots_match && module.roots[target] == region.roots[v];
  }
  report.explicit_map_iso =
      roots_match && map.size() == region.diagonals.size() &&
      QuiverIsomorphism::make(region.quiver, module.quiver, map, true).has_value();
  report.search_iso = find_isomorphism(region.quiver, module.quiver).has_value();
  return report;
}

DerivedReport verify_derived_iso(const WindowParams& w) {
  const DerivedWindow window = build_window(w);
  const TranslationQuiver& q = window.quiver;
  const int K = w.rank;
  DerivedReport report;
  report.params = w;
  report.vertex_count = q.vertex_count();
  auto fail = [&](const std::string& what) {
    if (!report.witness) report.witness = what;
  };

  const auto interior = interior_vertices(q);
  report.interior_stable = verify_stable_on(q, interior).stable();
  if (!report.interior_stable) fail("window is not stable on its interior");

  // Explicit dictionary to the cover.
  std::vector<CoverVertex> image;
  int lo_col = 0, hi_col = 0;
  for (const auto& d : window.diagonals) {
    image.push_back(cover_vertex(d, w));
    lo_col = std::min(lo_col, image.back().column);
    hi_col = std::max(hi_col, image.back().column);
  }
  const TranslationQuiver cover = cover_window({lo_col, hi_col, K});
  std::vector<VertexId> keep;
  for (const auto& c : image) keep.push_back(cover.at(c.label()));
  auto sorted_keep = keep;
  std::sort(sorted_keep.begin(), sorted_keep.end());
  const bool injective = std::adjacent_find(sorted_keep.begin(), sorted_keep.end()) == sorted_keep.end();
  const TranslationQuiver cover_image = cover.induced(keep);  // vertex v <-> window vertex v
  std::vector<VertexId> identity(q.vertex_count());
  for (VertexId v = 0; v < identity.size(); ++v) identity[v] = v;
  report.explicit_map_iso =
      injective && QuiverIsomorphism::make(q, cover_image, identity, true).has_value();
  if (!report.explicit_map_iso) fail("explicit map to the cover is not an isomorphism");

  // Connecting arrows are exactly the arrows between different copies [k]T.
  report.connecting_arrows_match = true;
  for (const auto& a : q.arrows()) {
    const bool between = window.diagonals[a.source].k != window.diagonals[a.target].k;
    if (between != (a.tag == ArrowTag::Connecting)) {
      report.connecting_arrows_match = false;
      fail("arrow " + to_string(window.diagonals[a.source]) + " -> " +
           to_string(window.diagonals[a.target]) + " is mis-tagged");
    }
  }

  report.boundary_connecting_ok = true;
  for (const auto& a : q.arrows()) {
    if (a.tag != ArrowTag::Connecting) continue;
    if (window.diagonals[a.source].k == w.half_width || window.diagonals[a.target].k == -w.half_width)
      report.boundary_connecting_ok = false;
  }

  // Interiors, compared by search.
  std::vector<VertexId> inner_window, inner_cover;
  const auto cover_interior = interior_vertices(cover_image);
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (interior[v]) inner_window.push_back(v);
    if (cover_interior[v]) inner_cover.push_back(v);
  }
  report.interior_search_iso =
      find_isomorphism(q.induced(inner_window), cover_image.induced(inner_cover)).has_value();
  if (!report.interior_search_iso) fail("interiors are not isomorphic");

  report.varrho_is_shift = true;
  report.varrho_commutes_with_tau = true;
  for (const auto& d : window.diagonals) {
    auto r = varrho_action(d, w);
    if (r && cover_vertex(*r, w) != shift_action(cover_vertex(d, w), 1, K)) {
      report.varrho_is_shift = false;
      fail("varrho differs from [1] at " + to_string(d));
    }
    auto t = tau2_action(d, w);
    if (r && t) {
      auto rt = varrho_action(*t, w);
      auto tr = tau2_action(*r, w);
      if (rt && tr && *rt != *tr) {
        report.varrho_commutes_with_tau = false;
        fail("varrho and tau_2 do not commute at " + to_string(d));
      }
    }
  }

  // Hom by knitting on the window against Hom on the cover, for sources whose
  // hammock ends inside the window; Serre duality on the same range.
  const DerivedHom hom(K);
  report.hom_agrees = true;
  report.serre_duality = true;
  std::vector<std::vector<long long>> rows(q.vertex_count());
  for (VertexId x = 0; x < q.vertex_count(); ++x)
    if (window.diagonals[x].k < w.half_width) rows[x] = hammock_row(q, x);
  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    if (rows[x].empty()) continue;
    for (VertexId y = 0; y < q.vertex_count(); ++y)
      if (rows[x][y] != hom(image[x], image[y])) {
        report.hom_agrees = false;
        fail("Hom" + to_string(window.diagonals[x]) + to_string(window.diagonals[y]) + " differs");
      }
  }
  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    auto tx = q.tau(x);
    if (!tx || rows[x].empty()) continue;
    for (VertexId y = 0; y < q.vertex_count(); ++y) {
      auto ry = varrho_action(window.diagonals[y], w);
      if (!ry || rows[y].empty()) continue;
      if (rows[x][window.vertex(*ry)] != rows[y][*tx]) {
        report.serre_duality = false;
        fail("Serre duality fails for " + to_string(window.diagonals[x]) + ", " +
             to_string(window.diagonals[y]));
      }
    }
  }
  return report;
}

bool window_fractional_cy(int rank) {
  const WindowParams w = WindowParams::make(rank, rank + 2);
  const DerivedWindow window = build_window(w);
  for (const auto& d : window.diagonals) {
    if (d.k != 0) continue;
    std::optional<TwoCDiagonal> nu = d;
    for (int s = 0; s < rank + 1 && nu; ++s) {
      auto r = varrho_action(*nu, w);
      nu = r ? tau2_action(*r, w) : std::nullopt;
    }
    auto shifted = varrho_action(d, w, rank - 1);
    if (!nu || !shifted || *nu != *shifted) return false;
  }
  return true;
}

bool parity_models_isomorphic(const WindowParams& w) {
  WindowParams even = w, odd = w;
  even.odd_endpoints = false;
  odd.odd_endpoints = true;
  return find_isomorphism(build_window(even).quiver, build_window(odd).quiver).has_value();
}

PowerReport power_decomposition(int n) {
  if (n < 1) throw InvalidParams("n must be >= 1 (got " + std::to_string(n) + ")");
  const OrbitQuiver polygon = build_gamma(ModelParams::make(2 * n + 1, 1, 1));
  const TranslationQuiver square = power(polygon.quiver, 2);
  PowerReport report;
  report.n = n;
  report.vertex_count = square.vertex_count();

  auto kind = [&](VertexId v) {
    const Diagonal& d = polygon.diagonal(v);
    if ((d.j - d.i) % 2 == 1) return 0;
    return d.i % 2 == 0 ? 1 : 2;
  };
  auto components = connected_components(square);
  report.three_components = components.size() == 3;
  report.homogeneous = true;
  std::vector<std::vector<VertexId>> by_kind(3);
  for (const auto& comp : components) {
    const int k = kind(comp.front());
    for (auto v : comp)
      if (kind(v) != k) report.homogeneous = false;
    if (!by_kind[k].empty()) report.homogeneous = false;
    by_kind[k] = comp;
  }
  for (const auto& comp : by_kind) report.component_sizes.push_back(comp.size());
  if (!report.three_components || !report.homogeneous) return report;

  const TranslationQuiver two_diagonals = build_gamma(ModelParams::make(n, 2, 1)).quiver;
  report.m_component_iso =
      find_isomorphism(square.induced(by_kind[0]), two_diagonals).has_value();
  report.parity_components_iso =
      find_isomorphism(square.induced(by_kind[1]), square.induced(by_kind[2])).has_value();
  return report;
}

}  // namespace repclust
