#pragma once

#include <cstdint>
#include <vector>

#include "repclust/polygon.hpp"
#include "repclust/quiver.hpp"

// Reference computations used only by the tests. They deliberately avoid the
// library's own shortcuts (knitting, closed formulas, cell decompositions).
namespace oracle {

/// dim Hom(x, -) in the mesh category of q, degree by degree, as the
/// cokernel of the mesh map over GF(prime). Exact linear algebra; no
/// max(0, .) shortcut. Throws if the degrees do not die out by max_length.
std::vector<long long> path_space_row(const repclust::TranslationQuiver& q, repclust::VertexId x,
                                      int max_length = 400);

/// Pairs (i, j) with 1 <= i < j <= N, j - i >= 2, not (1, N), whose two
/// sides each have a vertex count congruent to 2 mod m.
std::vector<std::pair<int, int>> region_m_diagonals(const repclust::ModelParams& params);

/// p * |region_m_diagonals|, from the unfiltered (i, j) loop.
std::size_t brute_force_vertex_count(const repclust::ModelParams& params);

/// Strict interleaving of endpoints.
bool interleave(std::pair<int, int> a, std::pair<int, int> b);

/// All maximal non-crossing subsets of region_m_diagonals, by subset scan.
std::vector<std::vector<std::pair<int, int>>> brute_force_angulations(const repclust::ModelParams& params);

/// Number of m-angulations with n diagonals, exact integer arithmetic.
std::uint64_t fuss_catalan(int n, int m);

/// AR quiver of the classical cluster category of type A_n, built from the
/// (n+3)-gon with indices mod n+3: arrows (i, j) -> (i, j+1), (i+1, j);
/// tau(i, j) = (i-1, j-1). Labels {i, j} with i < j in 1..n+3.
repclust::TranslationQuiver cyclic_cluster_quiver(int n);

}  // namespace oracle
