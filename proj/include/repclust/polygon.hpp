#pragma once

#include <compare>
#include <string>
#include <vector>

#include "repclust/error.hpp"

namespace repclust {

/// The triple (n, m, p): rank, higher-cluster level, repetition count.
struct ModelParams {
  int n = 1;
  int m = 1;
  int p = 1;

  /// Throws InvalidParams naming the violated bound.
  static ModelParams make(int n, int m, int p);

  /// Vertices per region, (n+1)m + 2.
  int region_size() const { return (n + 1) * m + 2; }
  /// Vertices of the whole polygon, p((n+1)m + 1).
  int total_vertices() const { return p * (region_size() - 1); }
  /// m-diagonals per region, n((n+1)m + 2)/2.
  int diagonals_per_region() const { return n * region_size() / 2; }
  int diagonal_count() const { return p * diagonals_per_region(); }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Arc (i, j) of region k, canonical form 1 <= i < j <= N, 1 <= k <= p.
struct Diagonal {
  int i = 0;
  int j = 0;
  int k = 0;

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
  std::vector<int> triple() const { return {i, j, k}; }
};

std::string to_string(const Diagonal& d);

/// Reduces i, j modulo N into 1..N, k modulo p into 1..p, orders i < j.
/// Does not check that the result is a diagonal.
Diagonal normalize(int i, int j, int k, const ModelParams& params);

/// True when (i, j, k) in canonical form is an m-diagonal of its region:
/// not a side, not the inner boundary arc (1, N), and m-divisible.
bool is_valid_diagonal(const Diagonal& d, const ModelParams& params);

/// Canonicalizes and validates; throws InvalidParams otherwise.
Diagonal make_diagonal(int i, int j, int k, const ModelParams& params);

/// Clockwise rotation by 2 pi / p: (i, j, k) -> (i, j, k + 1).
Diagonal rho(const Diagonal& d, const ModelParams& params, int times = 1);

/// All m-diagonals of all regions in lexicographic (k, i, j) order.
std::vector<Diagonal> enumerate_diagonals(const ModelParams& params);

/// Interior crossing inside one region. Throws InvalidParams for diagonals of
/// different regions (transport with rho first).
bool crosses(const Diagonal& a, const Diagonal& b);

/// Both parts cut off by (i, j) have a vertex count that is 2 mod m.
/// Expects 1 <= i < j <= N with (i, j) neither a side nor (1, N).
bool is_m_diagonal(int i, int j, const ModelParams& params);

}  // namespace repclust
