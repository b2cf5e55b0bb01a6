#include "repclust/tilting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace repclust {

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
void reset(Bits& b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
bool none(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
}
Bits meet(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
  return out;
}
std::size_t count(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

void bron_kerbosch(std::vector<std::size_t>& r, Bits p, Bits x, const std::vector<Bits>& adj,
                   std::vector<std::vector<std::size_t>>& out) {
  if (none(p) && none(x)) {
    auto clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  const std::size_t n = adj.size();
  // Pivot: vertex of P u X with most neighbours in P.
  std::size_t pivot = n, best = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (!test(p, u) && !test(x, u)) continue;
    std::size_t c = count(meet(p, adj[u]));
    if (pivot == n || c > best) pivot = u, best = c;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!test(p, v) || test(adj[pivot], v)) continue;
    r.push_back(v);
    bron_kerbosch(r, meet(p, adj[v]), meet(x, adj[v]), adj, out);
    r.pop_back();
    reset(p, v);
    set(x, v);
  }
}

// All ways to write `total` as `parts` summands, each >= 1 and = 1 mod m.
void compositions(int total, int parts, int m, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int g = 1; g <= total - (parts - 1); g += m) {
    cur.push_back(g);
    compositions(total - g, parts - 1, m, cur, out);
    cur.pop_back();
  }
}

// m-angulations of the sub-polygon lo..hi whose base (lo, hi) is already drawn.
std::vector<std::vector<Diagonal>> angulate(int lo, int hi, int m, int region) {
  if (hi - lo == 1) return {{}};
  std::vector<std::vector<int>> cells;
  std::vector<int> cur;
  compositions(hi - lo, m + 1, m, cur, cells);
  std::vector<std::vector<Diagonal>> out;
  for (const auto& gaps : cells) {
    std::vector<std::vector<Diagonal>> partial{{}};
    int u = lo;
    for (int g : gaps) {
      const int v = u + g;
      std::vector<std::vector<Diagonal>> next;
      for (const auto& sub : angulate(u, v, m, region))
        for (const auto& base : partial) {
          auto merged = base;
          if (g > 1) merged.push_back({u, v, region});
          merged.insert(merged.end(), sub.begin(), sub.end());
          next.push_back(std::move(merged));
        }
      partial = std::move(next);
      u = v;
    }
    for (auto& a : partial) out.push_back(std::move(a));
  }
  return out;
}

bool crosses_any(const Diagonal& d, const std::vector<Diagonal>& set) {
  return std::any_of(set.begin(), set.end(), [&](const Diagonal& e) { return crosses(d, e); });
}

}  // namespace

double fuss_catalan(int n, int m) {
  const int k = n + 1;
  // C((m+1)k, k) / (mk + 1)
  double value = 1.0;
  for (int i = 1; i <= k; ++i) value = value * ((m + 1) * k - k + i) / i;
  return std::round(value / (m * k + 1));
}

std::vector<Angulation> enumerate_angulations(const ModelParams& params, int region) {
  if (region < 1 || region > params.p)
    throw InvalidParams("region must lie in 1.." + std::to_string(params.p));
  auto raw = angulate(1, params.region_size(), params.m, region);
  std::vector<Angulation> out;
  out.reserve(raw.size());
  for (auto& diagonals : raw) {
    std::sort(diagonals.begin(), diagonals.end());
    out.push_back({region, std::move(diagonals)});
  }
  std::sort(out.begin(), out.end(),
            [](const Angulation& a, const Angulation& b) { return a.diagonals < b.diagonals; });
  // Maximality is re-checked constructively against every m-diagonal of the region.
  const auto all = enumerate_diagonals(params);
  for (const auto& a : out) {
    if (static_cast<int>(a.diagonals.size()) != params.n)
      throw QuiverError("angulation with " + std::to_string(a.diagonals.size()) + " diagonals");
    for (const auto& d : all) {
      if (d.k != region || std::binary_search(a.diagonals.begin(), a.diagonals.end(), d)) continue;
      if (!crosses_any(d, a.diagonals)) throw QuiverError("non-maximal angulation");
    }
  }
  return out;
}

TiltingObject rho_orbit(const Angulation& a, const ModelParams& params) {
  TiltingObject t;
  for (int s = 0; s < params.p; ++s)
    for (const auto& d : a.diagonals) t.summands.push_back(rho(d, params, s));
  std::sort(t.summands.begin(), t.summands.end());
  return t;
}

std::vector<TiltingObject> tilting_objects(const ModelParams& params) {
  std::vector<TiltingObject> out;
  for (const auto& a : enumerate_angulations(params, 1)) out.push_back(rho_orbit(a, params));
  return out;
}

std::vector<std::vector<std::size_t>> maximal_cliques(const std::vector<std::vector<bool>>& adjacent) {
  const std::size_t n = adjacent.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<Bits> adj(n, Bits(words, 0));
  Bits all(words, 0);
  for (std::size_t u = 0; u < n; ++u) {
    set(all, u);
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && adjacent[u][v]) set(adj[u], v);
  }
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return {{}};
  std::vector<std::size_t> r;
  bron_kerbosch(r, all, Bits(words, 0), adj, out);
  std::sort(out.begin(), out.end());
  return out;
}

TiltingReport verify_tilting_bruteforce(const OrbitCategory& category) {
  const ModelParams& params = category.params();
  const auto& gamma = category.gamma();
  const std::size_t V = gamma.diagonals.size();

  // ext[x][y]: some Ext^i(x, y), 1 <= i <= m, is nonzero.
  std::vector<std::vector<bool>> ext(V, std::vector<bool>(V, false));
  for (VertexId x = 0; x < V; ++x)
    for (VertexId y = 0; y < V; ++y)
      for (int i = 1; i <= params.m && !ext[x][y]; ++i) ext[x][y] = category.ext(x, y, i) != 0;

  std::vector<std::size_t> rigid;
  for (VertexId x = 0; x < V; ++x)
    if (!ext[x][x]) rigid.push_back(x);
  std::vector<std::vector<bool>> compatible(rigid.size(), std::vector<bool>(rigid.size(), false));
  for (std::size_t a = 0; a < rigid.size(); ++a)
    for (std::size_t b = 0; b < rigid.size(); ++b)
      compatible[a][b] = !ext[rigid[a]][rigid[b]] && !ext[rigid[b]][rigid[a]];

  using Family = std::set<std::vector<std::size_t>>;
  Family maximal_rigid, cluster_tilting, expected;
  for (const auto& clique : maximal_cliques(compatible)) {
    std::vector<std::size_t> set;
    for (auto c : clique) set.push_back(rigid[c]);
    std::sort(set.begin(), set.end());
    bool tilting = true;
    std::vector<bool> in(V, false);
    for (auto s : set) in[s] = true;
    for (VertexId x = 0; x < V && tilting; ++x) {
      if (in[x]) continue;
      bool into = false, out_of = false;
      for (auto t : set) {
        into = into || ext[t][x];
        out_of = out_of || ext[x][t];
      }
      tilting = into && out_of;
    }
    if (tilting) cluster_tilting.insert(set);
    maximal_rigid.insert(std::move(set));
  }

  TiltingReport report;
  report.params = params;
  const auto objects = tilting_objects(params);
  report.object_count = objects.size();
  for (const auto& t : objects) {
    std::vector<std::size_t> set;
    for (const auto& d : t.summands) set.push_back(gamma.vertex(d));
    std::sort(set.begin(), set.end());
    if (set.size() != static_cast<std::size_t>(params.p * params.n)) report.summand_counts_ok = false;
    for (auto a : set)
      for (auto b : set)
        if (ext[a][b]) report.objects_rigid = false;
    expected.insert(std::move(set));
  }
  report.maximal_rigid_count = maximal_rigid.size();
  report.cluster_tilting_count = cluster_tilting.size();

  auto compare = [&](const Family& family, std::optional<std::vector<Diagonal>>& witness) {
    std::vector<std::vector<std::size_t>> diff;
    std::set_symmetric_difference(family.begin(), family.end(), expected.begin(), expected.end(),
                                  std::back_inserter(diff));
    if (diff.empty()) return true;
    std::vector<Diagonal> w;
    for (auto v : diff.front()) w.push_back(gamma.diagonal(static_cast<VertexId>(v)));
    std::sort(w.begin(), w.end());
    witness = std::move(w);
    return false;
  };
  report.maximal_rigid_matches = compare(maximal_rigid, report.maximal_rigid_witness);
  report.cluster_tilting_matches = compare(cluster_tilting, report.cluster_tilting_witness);
  return report;
}

TiltingReport verify_tilting_bruteforce(const ModelParams& params) {
  return verify_tilting_bruteforce(OrbitCategory(params));
}

TiltingObject orbit_mutate(const TiltingObject& t, const Diagonal& d, const ModelParams& params) {
  if (params.m != 1) throw InvalidParams("orbit mutation is implemented for m = 1 only");
  if (!std::binary_search(t.summands.begin(), t.summands.end(), d))
    throw InvalidParams(to_string(d) + " is not a summand of the tilting object");
  Angulation base;
  for (const auto& s : t.summands)
    if (s.k == 1) base.diagonals.push_back(s);
  if (rho_orbit(base, params) != t) throw InvalidParams("not a rho-stable tilting object");

  const Diagonal removed{d.i, d.j, 1};
  std::vector<Diagonal> rest;
  for (const auto& s : base.diagonals)
    if (s != removed) rest.push_back(s);
  std::vector<Diagonal> complements;
  for (const auto& e : enumerate_diagonals(params))
    if (e.k == 1 && e != removed && !std::binary_search(rest.begin(), rest.end(), e) &&
        !crosses_any(e, rest))
      complements.push_back(e);
  if (complements.size() != 1)
    throw QuiverError("expected exactly one complement, found " + std::to_string(complements.size()));
  rest.push_back(complements.front());
  std::sort(rest.begin(), rest.end());
  return rho_orbit(Angulation{1, rest}, params);
}

MutationGraph mutation_graph(const ModelParams& params) {
  MutationGraph g;
  g.nodes = tilting_objects(params);
  std::map<TiltingObject, std::size_t> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i]] = i;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (const auto& d : g.nodes[i].summands) {
      if (d.k != 1) continue;
      const std::size_t j = index.at(orbit_mutate(g.nodes[i], d, params));
      if (i != j) edges.insert({std::min(i, j), std::max(i, j)});
    }
  g.edges.assign(edges.begin(), edges.end());

  std::vector<std::vector<std::size_t>> adj(g.nodes.size());
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(g.nodes.size(), false);
  std::queue<std::size_t> queue;
  if (!g.nodes.empty()) {
    queue.push(0);
    seen[0] = true;
  }
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop();
    for (auto v : adj[u])
      if (!seen[v]) seen[v] = true, queue.push(v);
  }
  g.connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  return g;
}

std::string to_dot(const MutationGraph& g) {
  std::ostringstream os;
  os << "graph mutation {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  t" << i << " [label=\"";
    bool first = true;
    for (const auto& d : g.nodes[i].summands) {
      if (d.k != 1) continue;
      os << (first ? "" : " ") << d.i << "-" << d.j;
      first = false;
    }
    os << "\"];\n";
  }
  for (auto [a, b] : g.edges) os << "  t" << a << " -- t" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace repclust
