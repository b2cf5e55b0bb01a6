#include "repclust/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace repclust {

const char* to_string(ArrowTag tag) {
  switch (tag) {
    case ArrowTag::Plain: return "plain";
    case ArrowTag::IrrRot: return "irrrot";
    case ArrowTag::IrrRhoRot: return "irrrhorot";
    case ArrowTag::Connecting: return "connecting";
  }
  return "plain";
}

// ---------------------------------------------------------------------------
// Builder

VertexId QuiverBuilder::add_vertex(VertexLabel label) {
  auto id = static_cast<VertexId>(labels_.size());
  if (!label.empty()) {
    auto [it, inserted] = by_label_.emplace(label, id);
    if (!inserted) throw QuiverError("duplicate vertex label " + label_string(label));
  }
  labels_.push_back(std::move(label));
  tau_.emplace_back();
  return id;
}

void QuiverBuilder::add_arrow(VertexId source, VertexId target, ArrowTag tag) {
  if (source >= labels_.size() || target >= labels_.size())
    throw QuiverError("arrow endpoint is not a declared vertex");
  arrows_.push_back({source, target, tag});
}

void QuiverBuilder::set_tau(VertexId v, VertexId image) {
  if (v >= labels_.size() || image >= labels_.size())
    throw QuiverError("translation endpoint is not a declared vertex");
  tau_[v] = image;
}

std::optional<VertexId> QuiverBuilder::find(const VertexLabel& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

TranslationQuiver QuiverBuilder::build() && {
  TranslationQuiver q;
  const std::size_t n = labels_.size();
  q.tau_inv_.assign(n, std::nullopt);
  for (VertexId v = 0; v < n; ++v) {
    if (!tau_[v]) continue;
    auto& slot = q.tau_inv_[*tau_[v]];
    if (slot) throw QuiverError("translation is not injective at " + label_string(labels_[v]));
    slot = v;
  }
  q.out_.assign(n, {});
  q.in_.assign(n, {});
  for (std::uint32_t a = 0; a < arrows_.size(); ++a) {
    q.out_[arrows_[a].source].push_back(a);
    q.in_[arrows_[a].target].push_back(a);
  }
  q.labels_ = std::move(labels_);
  q.arrows_ = std::move(arrows_);
  q.tau_ = std::move(tau_);
  q.by_label_ = std::move(by_label_);
  return q;
}

// ---------------------------------------------------------------------------
// Accessors

std::optional<VertexId> TranslationQuiver::find(const VertexLabel& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

VertexId TranslationQuiver::at(const VertexLabel& label) const {
  auto v = find(label);
  if (!v) throw QuiverError("no vertex labelled " + label_string(label));
  return *v;
}

std::size_t TranslationQuiver::multiplicity(VertexId u, VertexId v) const {
  std::size_t count = 0;
  for (auto a : out_[u])
    if (arrows_[a].target == v) ++count;
  return count;
}

TranslationQuiver TranslationQuiver::induced(std::span<const VertexId> keep) const {
  constexpr VertexId kAbsent = ~VertexId{0};
  std::vector<VertexId> new_id(vertex_count(), kAbsent);
  QuiverBuilder b;
  for (auto v : keep) {
    if (new_id[v] != kAbsent) throw QuiverError("vertex listed twice in induced()");
    new_id[v] = b.add_vertex(labels_[v]);
  }
  for (const auto& a : arrows_) {
    if (new_id[a.source] != kAbsent && new_id[a.target] != kAbsent)
      b.add_arrow(new_id[a.source], new_id[a.target], a.tag);
  }
  for (auto v : keep) {
    if (tau_[v] && new_id[*tau_[v]] != kAbsent) b.set_tau(new_id[v], new_id[*tau_[v]]);
  }
  return std::move(b).build();
}

TranslationQuiver TranslationQuiver::without_arrow(std::size_t arrow_index) const {
  QuiverBuilder b;
  for (const auto& l : labels_) b.add_vertex(l);
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (a != arrow_index) b.add_arrow(arrows_[a].source, arrows_[a].target, arrows_[a].tag);
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (tau_[v]) b.set_tau(v, *tau_[v]);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Stability

namespace {

StabilityReport check_stability(const TranslationQuiver& q, const std::vector<bool>* interior) {
  StabilityReport report;
  const auto nv = q.vertex_count();
  auto counted = [&](VertexId v) { return interior == nullptr || (*interior)[v]; };

  for (VertexId v = 0; v < nv; ++v) {
    if (!counted(v)) continue;
    if (!q.tau(v)) {
      report.translation_total = false;
      report.untranslated.push_back(v);
    }
    if (!q.tau_inverse(v)) report.translation_bijective = false;
  }

  // For each v in the domain, compare #(u -> v) with #(tau v -> u) over the
  // union of the two supports.
  for (VertexId v = 0; v < nv; ++v) {
    if (!counted(v)) continue;
    std::map<VertexId, std::pair<std::size_t, std::size_t>> counts;
    for (auto a : q.in_arrows(v)) ++counts[q.arrow(a).source].first;
    if (auto tv = q.tau(v)) {
      for (auto a : q.out_arrows(*tv)) ++counts[q.arrow(a).target].second;
    }
    for (const auto& [u, c] : counts) {
      if (c.first != c.second) report.violations.push_back({u, v, c.first, c.second});
    }
  }
  return report;
}

}  // namespace

StabilityReport verify_stable(const TranslationQuiver& q) { return check_stability(q, nullptr); }

StabilityReport verify_stable_on(const TranslationQuiver& q, const std::vector<bool>& interior) {
  if (interior.size() != q.vertex_count()) throw QuiverError("interior mask has wrong size");
  return check_stability(q, &interior);
}

std::vector<bool> interior_vertices(const TranslationQuiver& q) {
  std::vector<bool> mask(q.vertex_count());
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    mask[v] = q.tau(v).has_value() && q.tau_inverse(v).has_value();
  return mask;
}

// ---------------------------------------------------------------------------
// Mesh relations

std::vector<MeshRelation> mesh_relations(const TranslationQuiver& q) {
  std::vector<MeshRelation> out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    auto tv = q.tau(v);
    if (!tv) continue;
    MeshRelation rel{v, *tv, {}};
    // Pair the k-th arrow u -> v with the k-th arrow tau v -> u.
    std::map<VertexId, std::vector<std::uint32_t>> partners;
    for (auto s : q.out_arrows(*tv)) partners[q.arrow(s).target].push_back(s);
    std::map<VertexId, std::size_t> used;
    for (auto a : q.in_arrows(v)) {
      const auto u = q.arrow(a).source;
      auto& list = partners[u];
      auto& k = used[u];
      if (k >= list.size())
        throw QuiverError("mesh at " + label_string(q.label(v)) + " has no partner for arrow from " +
                          label_string(q.label(u)));
      rel.terms.push_back({a, list[k++]});
    }
    for (const auto& [u, list] : partners) {
      if (used[u] != list.size())
        throw QuiverError("mesh at " + label_string(q.label(v)) + " has an unpaired arrow into " +
                          label_string(q.label(u)));
    }
    out.push_back(std::move(rel));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Powers and components

TranslationQuiver power(const TranslationQuiver& q, int m) {
  if (m < 1) throw InvalidParams("quiver power requires m >= 1");
  QuiverBuilder b;
  for (VertexId v = 0; v < q.vertex_count(); ++v) b.add_vertex(q.label(v));

  std::vector<VertexId> path;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) == m + 1) {
      b.add_arrow(path.front(), path.back());
      return;
    }
    for (auto a : q.out_arrows(path.back())) {
      const auto next = q.arrow(a).target;
      if (path.size() >= 2) {
        auto t = q.tau(next);
        if (t && *t == path[path.size() - 2]) continue;
      }
      path.push_back(next);
      self(self);
      path.pop_back();
    }
  };
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    path.assign(1, v);
    extend(extend);
  }

  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    std::optional<VertexId> image = v;
    for (int s = 0; s < m && image; ++s) image = q.tau(*image);
    if (image) b.set_tau(v, *image);
  }
  return std::move(b).build();
}

std::vector<std::vector<VertexId>> connected_components(const TranslationQuiver& q) {
  std::vector<VertexId> parent(q.vertex_count());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](VertexId a, VertexId b) { parent[find(a)] = find(b); };
  for (const auto& a : q.arrows()) unite(a.source, a.target);
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (auto t = q.tau(v)) unite(v, *t);

  std::map<VertexId, std::size_t> index;
  std::vector<std::vector<VertexId>> comps;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    auto [it, inserted] = index.emplace(find(v), comps.size());
    if (inserted) comps.emplace_back();
    comps[it->second].push_back(v);
  }
  return comps;
}

// ---------------------------------------------------------------------------
// Isomorphism

std::optional<QuiverIsomorphism> QuiverIsomorphism::make(const TranslationQuiver& from,
                                                         const TranslationQuiver& to,
                                                         std::vector<VertexId> vertex_map,
                                                         bool respects_translation) {
  const auto n = from.vertex_count();
  if (to.vertex_count() != n || vertex_map.size() != n) return std::nullopt;
  if (from.arrow_count() != to.arrow_count()) return std::nullopt;
  std::vector<bool> hit(n, false);
  for (auto w : vertex_map) {
    if (w >= n || hit[w]) return std::nullopt;
    hit[w] = true;
  }
  std::map<std::pair<VertexId, VertexId>, std::size_t> lhs, rhs;
  for (const auto& a : from.arrows()) ++lhs[{vertex_map[a.source], vertex_map[a.target]}];
  for (const auto& a : to.arrows()) ++rhs[{a.source, a.target}];
  if (lhs != rhs) return std::nullopt;
  if (respects_translation) {
    for (VertexId v = 0; v < n; ++v) {
      auto t1 = from.tau(v);
      auto t2 = to.tau(vertex_map[v]);
      if (t1.has_value() != t2.has_value()) return std::nullopt;
      if (t1 && vertex_map[*t1] != *t2) return std::nullopt;
    }
  }
  return QuiverIsomorphism(std::move(vertex_map), respects_translation);
}

QuiverIsomorphism QuiverIsomorphism::then(const QuiverIsomorphism& next) const {
  std::vector<VertexId> composed(map_.size());
  for (std::size_t v = 0; v < map_.size(); ++v) composed[v] = next.map_[map_[v]];
  return QuiverIsomorphism(std::move(composed),
                           respects_translation_ && next.respects_translation_);
}

namespace {

using Colour = std::uint32_t;

struct Neighbourhood {
  // (neighbour, multiplicity) for out- and in-arrows, merged per neighbour.
  std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> out, in;
  std::vector<std::vector<VertexId>> adjacent;  // undirected, arrows and tau
};

Neighbourhood neighbourhood(const TranslationQuiver& q, bool with_tau) {
  const auto n = q.vertex_count();
  Neighbourhood nb;
  nb.out.resize(n);
  nb.in.resize(n);
  nb.adjacent.resize(n);
  std::vector<std::map<VertexId, std::uint32_t>> out(n), in(n);
  for (const auto& a : q.arrows()) {
    ++out[a.source][a.target];
    ++in[a.target][a.source];
  }
  for (VertexId v = 0; v < n; ++v) {
    nb.out[v].assign(out[v].begin(), out[v].end());
    nb.in[v].assign(in[v].begin(), in[v].end());
    std::vector<VertexId> adj;
    for (auto& [w, c] : out[v]) adj.push_back(w);
    for (auto& [w, c] : in[v]) adj.push_back(w);
    if (with_tau) {
      if (auto t = q.tau(v)) adj.push_back(*t);
      if (auto t = q.tau_inverse(v)) adj.push_back(*t);
    }
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    nb.adjacent[v] = std::move(adj);
  }
  return nb;
}

// (is cycle, cycle length or forward chain, backward chain)
std::tuple<int, int, int> tau_orbit_shape(const TranslationQuiver& q, VertexId v) {
  int forward = 0;
  std::optional<VertexId> x = q.tau(v);
  while (x && *x != v) {
    ++forward;
    x = q.tau(*x);
  }
  if (x) return {1, forward + 1, 0};
  int backward = 0;
  for (auto y = q.tau_inverse(v); y; y = q.tau_inverse(*y)) ++backward;
  return {0, forward, backward};
}

/// Joint colour refinement on both quivers so colours are comparable.
std::pair<std::vector<Colour>, std::vector<Colour>> refine_colours(
    const TranslationQuiver& q1, const Neighbourhood& n1, const TranslationQuiver& q2,
    const Neighbourhood& n2, bool with_tau) {
  using Signature = std::vector<long long>;
  auto initial = [&](const TranslationQuiver& q, const Neighbourhood& nb, VertexId v) {
    Signature s;
    long long indeg = 0, outdeg = 0;
    for (auto& [w, c] : nb.in[v]) indeg += c;
    for (auto& [w, c] : nb.out[v]) outdeg += c;
    s = {indeg, outdeg};
    if (with_tau) {
      auto [cyc, a, b] = tau_orbit_shape(q, v);
      s.insert(s.end(), {cyc, a, b, q.tau(v) ? 1 : 0, q.tau_inverse(v) ? 1 : 0});
    }
    return s;
  };

  std::vector<Colour> c1(q1.vertex_count()), c2(q2.vertex_count());
  auto assign = [](auto&& signature_of, std::vector<Colour>& a, std::size_t na,
                   std::vector<Colour>& b, std::size_t nb) {
    std::map<Signature, Colour> palette;
    std::vector<Signature> s1(na), s2(nb);
    for (VertexId v = 0; v < na; ++v) s1[v] = signature_of(0, v);
    for (VertexId v = 0; v < nb; ++v) s2[v] = signature_of(1, v);
    for (auto& s : s1) palette.emplace(s, 0);
    for (auto& s : s2) palette.emplace(s, 0);
    Colour next = 0;
    for (auto& [s, c] : palette) c = next++;
    for (VertexId v = 0; v < na; ++v) a[v] = palette[s1[v]];
    for (VertexId v = 0; v < nb; ++v) b[v] = palette[s2[v]];
    return palette.size();
  };

  std::size_t classes = assign(
      [&](int side, VertexId v) { return side == 0 ? initial(q1, n1, v) : initial(q2, n2, v); },
      c1, q1.vertex_count(), c2, q2.vertex_count());

  for (;;) {
    auto refined = [&](int side, VertexId v) {
      const auto& q = side == 0 ? q1 : q2;
      const auto& nb = side == 0 ? n1 : n2;
      const auto& col = side == 0 ? c1 : c2;
      Signature s{col[v]};
      std::vector<std::pair<Colour, std::uint32_t>> outs, ins;
      for (auto& [w, c] : nb.out[v]) outs.emplace_back(col[w], c);
      for (auto& [w, c] : nb.in[v]) ins.emplace_back(col[w], c);
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      s.push_back(-1);
      for (auto& [c, m] : outs) s.insert(s.end(), {c, m});
      s.push_back(-2);
      for (auto& [c, m] : ins) s.insert(s.end(), {c, m});
      if (with_tau) {
        s.push_back(q.tau(v) ? col[*q.tau(v)] : -3);
        s.push_back(q.tau_inverse(v) ? col[*q.tau_inverse(v)] : -3);
      }
      return s;
    };
    std::vector<Colour> d1(c1.size()), d2(c2.size());
    auto next = assign(refined, d1, q1.vertex_count(), d2, q2.vertex_count());
    c1 = std::move(d1);
    c2 = std::move(d2);
    if (next == classes) break;
    classes = next;
  }
  return {c1, c2};
}

class IsoSearch {
 public:
  IsoSearch(const TranslationQuiver& q1, const TranslationQuiver& q2, bool with_tau)
      : q1_(q1), q2_(q2), with_tau_(with_tau),
        n1_(neighbourhood(q1, with_tau)), n2_(neighbourhood(q2, with_tau)) {
    std::tie(c1_, c2_) = refine_colours(q1, n1_, q2, n2_, with_tau);
    map_.assign(q1.vertex_count(), kNone);
    inverse_.assign(q2.vertex_count(), kNone);
  }

  bool colour_histograms_match() const {
    auto h1 = c1_, h2 = c2_;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    return h1 == h2;
  }

  std::optional<std::vector<VertexId>> run(const std::vector<std::pair<VertexId, VertexId>>& pins) {
    for (auto [a, b] : pins) {
      if (a >= map_.size() || b >= inverse_.size()) return std::nullopt;
      if (map_[a] != kNone || inverse_[b] != kNone) return std::nullopt;
      if (c1_[a] != c2_[b] || !consistent(a, b)) return std::nullopt;
      assign(a, b);
    }
    build_order(pins);
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr VertexId kNone = ~VertexId{0};

  void build_order(const std::vector<std::pair<VertexId, VertexId>>& pins) {
    const auto n = q1_.vertex_count();
    std::vector<bool> seen(n, false);
    parent_.assign(n, kNone);
    std::vector<VertexId> queue;
    for (auto [a, b] : pins) {
      if (!seen[a]) {
        seen[a] = true;
        queue.push_back(a);
      }
    }
    // Class sizes for picking rare-coloured roots of new components.
    std::map<Colour, std::size_t> size;
    for (auto c : c1_) ++size[c];
    std::vector<VertexId> by_rarity(n);
    std::iota(by_rarity.begin(), by_rarity.end(), VertexId{0});
    std::stable_sort(by_rarity.begin(), by_rarity.end(),
                     [&](VertexId a, VertexId b) { return size[c1_[a]] < size[c1_[b]]; });

    std::size_t head = 0;
    auto drain = [&] {
      while (head < queue.size()) {
        auto v = queue[head++];
        for (auto w : n1_.adjacent[v]) {
          if (seen[w]) continue;
          seen[w] = true;
          parent_[w] = v;
          queue.push_back(w);
        }
      }
    };
    drain();
    for (auto root : by_rarity) {
      if (seen[root]) continue;
      seen[root] = true;
      queue.push_back(root);
      drain();
    }
    order_.clear();
    for (auto v : queue)
      if (map_[v] == kNone) order_.push_back(v);
  }

  bool consistent(VertexId v, VertexId c) const {
    // Arrow multiplicities against every mapped neighbour, both sides.
    auto mult = [](const std::vector<std::pair<VertexId, std::uint32_t>>& list, VertexId w) {
      for (auto& [x, m] : list)
        if (x == w) return m;
      return std::uint32_t{0};
    };
    for (auto& [w, m] : n1_.out[v])
      if (map_[w] != kNone && mult(n2_.out[c], map_[w]) != m) return false;
    for (auto& [w, m] : n1_.in[v])
      if (map_[w] != kNone && mult(n2_.in[c], map_[w]) != m) return false;
    for (auto& [z, m] : n2_.out[c])
      if (inverse_[z] != kNone && mult(n1_.out[v], inverse_[z]) != m) return false;
    for (auto& [z, m] : n2_.in[c])
      if (inverse_[z] != kNone && mult(n1_.in[v], inverse_[z]) != m) return false;
    if (with_tau_) {
      auto check = [&](std::optional<VertexId> a, std::optional<VertexId> b) {
        if (a.has_value() != b.has_value()) return false;
        if (!a) return true;
        if (map_[*a] != kNone && map_[*a] != *b) return false;
        if (inverse_[*b] != kNone && inverse_[*b] != *a) return false;
        return true;
      };
      if (!check(q1_.tau(v), q2_.tau(c))) return false;
      if (!check(q1_.tau_inverse(v), q2_.tau_inverse(c))) return false;
      // tau fixed points must correspond.
      if (q1_.tau(v) == std::optional<VertexId>(v) && q2_.tau(c) != std::optional<VertexId>(c))
        return false;
    }
    return true;
  }

  void assign(VertexId v, VertexId c) {
    map_[v] = c;
    inverse_[c] = v;
  }
  void unassign(VertexId v) {
    inverse_[map_[v]] = kNone;
    map_[v] = kNone;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const auto v = order_[depth];
    std::vector<VertexId> candidates;
    if (parent_[v] != kNone && map_[parent_[v]] != kNone) {
      candidates = n2_.adjacent[map_[parent_[v]]];
    } else {
      for (VertexId c = 0; c < q2_.vertex_count(); ++c)
        if (c2_[c] == c1_[v]) candidates.push_back(c);
    }
    for (auto c : candidates) {
      if (inverse_[c] != kNone || c2_[c] != c1_[v] || !consistent(v, c)) continue;
      assign(v, c);
      if (extend(depth + 1)) return true;
      unassign(v);
    }
    return false;
  }

  const TranslationQuiver& q1_;
  const TranslationQuiver& q2_;
  bool with_tau_;
  Neighbourhood n1_, n2_;
  std::vector<Colour> c1_, c2_;
  std::vector<VertexId> map_, inverse_, parent_, order_;
};

}  // namespace

std::optional<QuiverIsomorphism> find_isomorphism(const TranslationQuiver& q1,
                                                  const TranslationQuiver& q2,
                                                  const IsomorphismOptions& options) {
  if (q1.vertex_count() != q2.vertex_count() || q1.arrow_count() != q2.arrow_count())
    return std::nullopt;
  IsoSearch search(q1, q2, options.respect_translation);
  if (!search.colour_histograms_match()) return std::nullopt;
  auto map = search.run(options.pins);
  if (!map) return std::nullopt;
  return QuiverIsomorphism::make(q1, q2, std::move(*map), options.respect_translation);
}

// ---------------------------------------------------------------------------
// Hammocks

std::vector<long long> hammock_row(const TranslationQuiver& q, VertexId x, int max_length) {
  const auto n = q.vertex_count();
  if (x >= n) throw QuiverError("hammock source is not a vertex");
  if (max_length <= 0) max_length = static_cast<int>(4 * n + 16);

  std::vector<long long> total(n, 0), older(n, 0), previous(n, 0), current(n, 0);
  previous[x] = 1;
  total[x] = 1;
  bool previous_zero = false;
  for (int length = 1;; ++length) {
    if (length > max_length)
      throw QuiverError("hammock from " + label_string(q.label(x)) + " does not close");
    bool any = false;
    for (VertexId v = 0; v < n; ++v) {
      long long s = 0;
      for (auto a : q.in_arrows(v)) s += previous[q.arrow(a).source];
      if (auto t = q.tau(v)) s -= older[*t];
      current[v] = s > 0 ? s : 0;
      if (current[v] != 0) {
        total[v] += current[v];
        any = true;
      }
    }
    if (!any && previous_zero) break;
    previous_zero = !any;
    older.swap(previous);
    previous.swap(current);
  }
  return total;
}

long long hammock_hom(const TranslationQuiver& q, VertexId x, VertexId y) {
  if (y >= q.vertex_count()) throw QuiverError("hammock target is not a vertex");
  return hammock_row(q, x)[y];
}

// ---------------------------------------------------------------------------
// Serialization

std::string label_string(const VertexLabel& label) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < label.size(); ++i) out << (i ? "," : "") << label[i];
  out << ')';
  return out.str();
}

std::string to_json(const TranslationQuiver& q) {
  using nlohmann::json;
  json vertices = json::array();
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    json entry{{"id", v}};
    entry["label"] = q.label(v).empty() ? json(nullptr) : json(q.label(v));
    vertices.push_back(std::move(entry));
  }
  json arrows = json::array();
  for (const auto& a : q.arrows()) {
    json entry{a.source, a.target};
    if (a.tag != ArrowTag::Plain) entry.push_back(to_string(a.tag));
    arrows.push_back(std::move(entry));
  }
  json translation = json::array();
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (auto t = q.tau(v)) translation.push_back({v, *t});
  json doc{{"vertices", vertices}, {"arrows", arrows}, {"translation", translation}};
  return doc.dump();
}

TranslationQuiver quiver_from_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw QuiverError(std::string("quiver JSON does not parse: ") + e.what());
  }
  QuiverBuilder b;
  std::map<long long, VertexId> ids;
  for (const auto& entry : doc.at("vertices")) {
    VertexLabel label;
    if (!entry.at("label").is_null()) label = entry.at("label").get<VertexLabel>();
    ids[entry.at("id").get<long long>()] = b.add_vertex(std::move(label));
  }
  auto lookup = [&](const json& id) {
    auto it = ids.find(id.get<long long>());
    if (it == ids.end()) throw QuiverError("quiver JSON references an undeclared vertex");
    return it->second;
  };
  for (const auto& a : doc.at("arrows")) {
    ArrowTag tag = ArrowTag::Plain;
    if (a.size() > 2) {
      const auto name = a.at(2).get<std::string>();
      bool known = false;
      for (auto t : {ArrowTag::Plain, ArrowTag::IrrRot, ArrowTag::IrrRhoRot, ArrowTag::Connecting})
        if (name == to_string(t)) tag = t, known = true;
      if (!known) throw QuiverError("quiver JSON has unknown arrow kind '" + name + "'");
    }
    b.add_arrow(lookup(a.at(0)), lookup(a.at(1)), tag);
  }
  for (const auto& t : doc.at("translation")) b.set_tau(lookup(t.at(0)), lookup(t.at(1)));
  return std::move(b).build();
}

std::string to_dot(const TranslationQuiver& q, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph " << options.graph_name << " {\n";
  auto node = [&](VertexId v) {
    out << "    v" << v << " [label=\"" << label_string(q.label(v)) << "\"];\n";
  };
  if (!options.cluster_of.empty()) {
    std::map<int, std::vector<VertexId>> clusters;
    for (VertexId v = 0; v < q.vertex_count(); ++v) clusters[options.cluster_of[v]].push_back(v);
    for (const auto& [key, members] : clusters) {
      out << "  subgraph cluster_" << options.cluster_prefix << (key < 0 ? "m" : "")
          << (key < 0 ? -key : key) << " {\n";
      out << "    label=\"" << options.cluster_prefix << ' ' << key << "\";\n";
      for (auto v : members) node(v);
      out << "  }\n";
    }
  } else {
    for (VertexId v = 0; v < q.vertex_count(); ++v) node(v);
  }
  for (const auto& a : q.arrows())
    out << "  v" << a.source << " -> v" << a.target << " [kind=" << to_string(a.tag) << "];\n";
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (auto t = q.tau(v))
      out << "  v" << v << " -> v" << *t << " [style=dashed, constraint=false, kind=tau];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace repclust
