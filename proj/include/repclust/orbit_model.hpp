#pragma once

#include <map>
#include <vector>

#include "repclust/polygon.hpp"
#include "repclust/quiver.hpp"

namespace repclust {

/// The quiver of m-diagonals of the repetitive polygon together with the
/// dictionary between vertex ids and diagonals. Vertex ids follow
/// enumerate_diagonals order; labels are the triples (i, j, k).
struct OrbitQuiver {
  ModelParams params;
  TranslationQuiver quiver;
  std::vector<Diagonal> diagonals;

  VertexId vertex(const Diagonal& d) const;
  const Diagonal& diagonal(VertexId v) const { return diagonals[v]; }
};

/// Arrows: rotation about either endpoint inside a region (IrrRot) and the
/// seam arrows (i, N-m+1, k) -> (1, i, k+1) (IrrRhoRot). Translation tau_m.
OrbitQuiver build_gamma(const ModelParams& params);

/// Image of tau_m computed from the formula alone (no quiver needed).
Diagonal tau_m(const Diagonal& d, const ModelParams& params);
Diagonal tau_m_inverse(const Diagonal& d, const ModelParams& params);

/// Region index k of every vertex, read from its label.
std::vector<int> label_fundamental_domains(const TranslationQuiver& q);

/// Vertex count of each fundamental domain F_1..F_p.
std::vector<std::size_t> fundamental_domain_sizes(const TranslationQuiver& q);

/// Row of a diagonal in the band picture: its length class j - i - 1
/// (in units of m, counted from 1).
int band_row(const Diagonal& d, const ModelParams& params);

enum class BandTopology { Moebius, Cylinder, Inconclusive };

const char* to_string(BandTopology t);

/// Moebius when the tau-orbit of the bottom row of region 1 returns to
/// region 1 as the top row. Inconclusive for m > 1, and for n = 1 where the
/// band has a single row.
BandTopology band_topology(const OrbitQuiver& gamma);

}  // namespace repclust
