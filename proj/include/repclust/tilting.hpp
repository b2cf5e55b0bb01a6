#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repclust/cover.hpp"
#include "repclust/polygon.hpp"

namespace repclust {

/// Maximal set of pairwise non-crossing m-diagonals of one region, sorted.
struct Angulation {
  int region = 1;
  std::vector<Diagonal> diagonals;

  friend bool operator==(const Angulation&, const Angulation&) = default;
};

/// Union of the rho-translates of an angulation of region 1, sorted.
struct TiltingObject {
  std::vector<Diagonal> summands;

  friend auto operator<=>(const TiltingObject&, const TiltingObject&) = default;
};

/// Number of m-angulations of an ((n+1)m+2)-gon, C((m+1)(n+1), n+1) / (m(n+1)+1),
/// as a floating-point estimate (exact while it fits in a double mantissa).
double fuss_catalan(int n, int m);

/// All m-angulations of region k, in lexicographic order of their sorted
/// diagonal lists.
std::vector<Angulation> enumerate_angulations(const ModelParams& params, int region = 1);

TiltingObject rho_orbit(const Angulation& a, const ModelParams& params);

/// One object per angulation of region 1, same order as enumerate_angulations.
std::vector<TiltingObject> tilting_objects(const ModelParams& params);

/// Compares tilting_objects with two families computed from Ext alone:
///  - maximal rigid: maximal sets with Ext^{1..m} vanishing in both directions;
///  - cluster tilting: rigid sets T such that every indecomposable X outside T
///    has Ext^i(T, X) != 0 for some i and Ext^j(X, T) != 0 for some j.
struct TiltingReport {
  ModelParams params;
  std::size_t object_count = 0;
  std::size_t maximal_rigid_count = 0;
  std::size_t cluster_tilting_count = 0;
  bool objects_rigid = true;          // every tilting object is Ext-rigid
  bool summand_counts_ok = true;      // every tilting object has p*n summands
  bool maximal_rigid_matches = false;
  bool cluster_tilting_matches = false;
  /// A set in exactly one of (maximal rigid, tilting_objects), if any.
  std::optional<std::vector<Diagonal>> maximal_rigid_witness;
  /// A set in exactly one of (cluster tilting, tilting_objects), if any.
  std::optional<std::vector<Diagonal>> cluster_tilting_witness;
};

TiltingReport verify_tilting_bruteforce(const OrbitCategory& category);
TiltingReport verify_tilting_bruteforce(const ModelParams& params);

/// Maximal cliques of an undirected graph given by adjacency bitsets
/// (Bron-Kerbosch with pivoting). Each clique is sorted; output sorted.
std::vector<std::vector<std::size_t>> maximal_cliques(const std::vector<std::vector<bool>>& adjacent);

/// Replaces the rho-orbit of d by the rho-orbit of the other diagonal that
/// completes the triangulation of region 1 (m = 1 only).
TiltingObject orbit_mutate(const TiltingObject& t, const Diagonal& d, const ModelParams& params);

struct MutationGraph {
  std::vector<TiltingObject> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
  bool connected = true;
};

MutationGraph mutation_graph(const ModelParams& params);
std::string to_dot(const MutationGraph& g);

}  // namespace repclust
