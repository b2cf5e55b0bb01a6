#pragma once

#include <optional>
#include <vector>

#include "repclust/cover.hpp"
#include "repclust/orbit_model.hpp"
#include "repclust/quiver.hpp"

namespace repclust {

/// Size t of the ordinary cluster category C_t whose AR-quiver contains
/// Gamma_{n,p} as a band: (n+3)p/2 - 3 for even p, (n+3)p - 3 for odd p.
/// Throws InvalidParams for p <= 2, where the two models overlap.
int t_value(int n, int p);

enum class BandParity { Even, Odd };

struct BandSelection {
  int n = 0;
  int p = 0;
  int t = 0;
  BandParity parity = BandParity::Even;
  /// Rows of Gamma_t kept (length classes 1..t, sorted). Even p: the bottom
  /// and top n rows; odd p: rows a..a+n-1 with a = (p-1)(n+3)/2 + 1.
  std::vector<int> rows;
};

BandSelection select_band(int n, int p);

/// Vertices of gamma whose band row lies in `rows`.
std::vector<VertexId> vertices_in_rows(const OrbitQuiver& gamma, const std::vector<int>& rows);

/// True when tau and tau^{-1} map the vertex set into itself.
bool tau_stable(const TranslationQuiver& q, const std::vector<VertexId>& vertices);

struct Embedding {
  BandSelection band;
  OrbitQuiver source;                  // Gamma_{n,p}
  OrbitQuiver ambient;                 // Gamma_t
  std::vector<VertexId> band_vertices; // in ambient, sorted
  TranslationQuiver band_quiver;       // full subquiver, tau restricted
  bool band_tau_stable = false;
  std::optional<QuiverIsomorphism> iso;  // source -> band_quiver
  std::vector<VertexId> vertex_map;      // source vertex -> ambient vertex
  /// Deck generator of the band as a quotient of ZA_n, against tau^{-p}[p].
  GeneratorForm expected_gluing;
  std::optional<GeneratorForm> band_gluing;

  bool ok() const {
    return band_tau_stable && iso && band_gluing && *band_gluing == expected_gluing &&
           band_vertices.size() == source.quiver.vertex_count();
  }
};

Embedding embed(int n, int p);

struct Quotient {
  BandSelection band;
  std::vector<int> deleted_rows;
  std::vector<VertexId> deleted;   // in Gamma_t
  std::vector<VertexId> kept;      // in Gamma_t, sorted
  bool deleted_tau_stable = false;
  TranslationQuiver quotient;
  std::optional<QuiverIsomorphism> iso;  // Gamma_{n,p} -> quotient

  bool ok() const { return deleted_tau_stable && iso.has_value(); }
};

/// Removes the given rows of gamma and their arrows; throws QuiverError when
/// the removed set is not tau-stable.
TranslationQuiver delete_rows(const OrbitQuiver& gamma, const std::vector<int>& rows,
                              std::vector<VertexId>* kept = nullptr);

Quotient quotient_ar(int n, int p);

}  // namespace repclust
