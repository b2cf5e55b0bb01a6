#include "repclust/orbit_model.hpp"

#include <algorithm>
#include <tuple>

namespace repclust {

VertexId OrbitQuiver::vertex(const Diagonal& d) const {
  auto it = std::lower_bound(diagonals.begin(), diagonals.end(), d,
                             [](const Diagonal& a, const Diagonal& b) {
                               return std::tie(a.k, a.i, a.j) < std::tie(b.k, b.i, b.j);
                             });
  if (it == diagonals.end() || *it != d)
    throw InvalidParams(to_string(d) + " is not a vertex of the quiver");
  return static_cast<VertexId>(it - diagonals.begin());
}

Diagonal tau_m(const Diagonal& d, const ModelParams& params) {
  const int m = params.m;
  if (d.i != 1) return normalize(d.i - m, d.j - m, d.k, params);
  // Rotation that leaves the region: composed with rho^{-1}.
  return normalize(d.j - m, params.region_size() + 1 - m, d.k - 1, params);
}

Diagonal tau_m_inverse(const Diagonal& d, const ModelParams& params) {
  const int m = params.m;
  const int N = params.region_size();
  if (d.j == N + 1 - m) {
    Diagonal seam{1, d.i + m, rho(d, params).k};
    if (is_valid_diagonal(seam, params) && tau_m(seam, params) == d) return seam;
  }
  Diagonal plain = normalize(d.i + m, d.j + m, d.k, params);
  if (plain.i != 1 && is_valid_diagonal(plain, params) && tau_m(plain, params) == d) return plain;
  throw QuiverError("tau_m has no preimage at " + to_string(d));
}

OrbitQuiver build_gamma(const ModelParams& params) {
  const int m = params.m;
  const int N = params.region_size();
  OrbitQuiver out{params, {}, enumerate_diagonals(params)};

  QuiverBuilder b;
  for (const auto& d : out.diagonals) b.add_vertex(d.triple());

  auto add = [&](VertexId s, const Diagonal& t, ArrowTag tag) {
    if (!is_valid_diagonal(t, params)) return;
    b.add_arrow(s, *b.find(t.triple()), tag);
  };

  for (VertexId v = 0; v < out.diagonals.size(); ++v) {
    const Diagonal& d = out.diagonals[v];
    if (d.j != N - m + 1) {
      add(v, normalize(d.i, d.j + m, d.k, params), ArrowTag::IrrRot);
      add(v, normalize(d.i + m, d.j, d.k, params), ArrowTag::IrrRot);
    } else {
      add(v, normalize(d.i + m, d.j, d.k, params), ArrowTag::IrrRot);
      add(v, Diagonal{1, d.i, rho(d, params).k}, ArrowTag::IrrRhoRot);
    }
    Diagonal t = tau_m(d, params);
    if (!is_valid_diagonal(t, params))
      throw QuiverError("tau_m leaves the set of m-diagonals at " + to_string(d));
    b.set_tau(v, *b.find(t.triple()));
  }
  out.quiver = std::move(b).build();
  return out;
}

std::vector<int> label_fundamental_domains(const TranslationQuiver& q) {
  std::vector<int> out(q.vertex_count());
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const auto& label = q.label(v);
    if (label.size() != 3) throw InvalidParams("vertex " + std::to_string(v) + " has no diagonal label");
    out[v] = label[2];
  }
  return out;
}

std::vector<std::size_t> fundamental_domain_sizes(const TranslationQuiver& q) {
  std::vector<std::size_t> sizes;
  for (int k : label_fundamental_domains(q)) {
    if (k < 1) throw InvalidParams("region index must be positive");
    if (sizes.size() < static_cast<std::size_t>(k)) sizes.resize(k, 0);
    ++sizes[k - 1];
  }
  return sizes;
}

int band_row(const Diagonal& d, const ModelParams& params) { return (d.j - d.i - 1) / params.m; }

const char* to_string(BandTopology t) {
  switch (t) {
    case BandTopology::Moebius: return "moebius";
    case BandTopology::Cylinder: return "cylinder";
    case BandTopology::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

BandTopology band_topology(const OrbitQuiver& gamma) {
  const auto& params = gamma.params;
  if (params.m != 1 || params.n < 2) return BandTopology::Inconclusive;
  // tau keeps the length class inside a region and mirrors it across a
  // seam; the band is twisted when the bottom row of region 1 comes back to
  // region 1 as the top row.
  const VertexId start = gamma.vertex(Diagonal{1, 3, 1});
  VertexId v = start;
  do {
    const Diagonal& d = gamma.diagonal(v);
    if (d.k == 1 && band_row(d, params) == params.n) return BandTopology::Moebius;
    v = *gamma.quiver.tau(v);
  } while (v != start);
  return BandTopology::Cylinder;
}

}  // namespace repclust
