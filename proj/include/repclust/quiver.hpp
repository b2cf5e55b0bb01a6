#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "repclust/error.hpp"

namespace repclust {

using VertexId = std::uint32_t;

/// Structured vertex label: an integer tuple such as a diagonal (i, j, k)
/// or a cover coordinate (column, row). Empty when the vertex is unlabeled.
using VertexLabel = std::vector<int>;

enum class ArrowTag : std::uint8_t { Plain, IrrRot, IrrRhoRot, Connecting };

const char* to_string(ArrowTag tag);

struct Arrow {
  VertexId source;
  VertexId target;
  ArrowTag tag = ArrowTag::Plain;
};

class QuiverBuilder;

/// Finite quiver with a partial injective translation. Immutable once built;
/// parallel arrows are stored as separate entries.
class TranslationQuiver {
 public:
  TranslationQuiver() = default;

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t index) const { return arrows_[index]; }

  /// Arrow indices leaving / entering a vertex, in insertion order.
  std::span<const std::uint32_t> out_arrows(VertexId v) const { return out_[v]; }
  std::span<const std::uint32_t> in_arrows(VertexId v) const { return in_[v]; }

  std::optional<VertexId> tau(VertexId v) const { return tau_[v]; }
  std::optional<VertexId> tau_inverse(VertexId v) const { return tau_inv_[v]; }

  const VertexLabel& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find(const VertexLabel& label) const;
  VertexId at(const VertexLabel& label) const;

  /// Number of arrows u -> v.
  std::size_t multiplicity(VertexId u, VertexId v) const;

  /// Full subquiver on `keep` (in the given order); the translation is
  /// restricted to pairs with both ends kept.
  TranslationQuiver induced(std::span<const VertexId> keep) const;

  /// Same vertices and translation with one arrow removed.
  TranslationQuiver without_arrow(std::size_t arrow_index) const;

 private:
  friend class QuiverBuilder;

  std::vector<VertexLabel> labels_;
  std::vector<Arrow> arrows_;
  std::vector<std::optional<VertexId>> tau_;
  std::vector<std::optional<VertexId>> tau_inv_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::map<VertexLabel, VertexId> by_label_;
};

class QuiverBuilder {
 public:
  VertexId add_vertex(VertexLabel label = {});
  void add_arrow(VertexId source, VertexId target, ArrowTag tag = ArrowTag::Plain);
  void set_tau(VertexId v, VertexId image);

  std::size_t vertex_count() const { return labels_.size(); }
  std::optional<VertexId> find(const VertexLabel& label) const;

  /// Validates the type invariants (declared endpoints, injective
  /// translation, unique non-empty labels) and freezes the quiver.
  TranslationQuiver build() &&;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<Arrow> arrows_;
  std::vector<std::optional<VertexId>> tau_;
  std::map<VertexLabel, VertexId> by_label_;
};

// ---------------------------------------------------------------------------
// Stability

struct StabilityViolation {
  VertexId source;           // u
  VertexId target;           // v
  std::size_t forward = 0;   // #(u -> v)
  std::size_t backward = 0;  // #(tau v -> u)
};

struct StabilityReport {
  bool translation_total = true;
  bool translation_bijective = true;
  std::vector<VertexId> untranslated;  // vertices outside the domain of tau
  std::vector<StabilityViolation> violations;

  bool stable() const {
    return translation_total && translation_bijective && violations.empty();
  }
};

StabilityReport verify_stable(const TranslationQuiver& q);

/// Stability restricted to vertices accepted by `interior`: only those need
/// tau defined, and only pairs (u, v) with v interior are compared.
StabilityReport verify_stable_on(const TranslationQuiver& q,
                                 const std::vector<bool>& interior);

/// Vertices whose tau and tau^{-1} images are both defined.
std::vector<bool> interior_vertices(const TranslationQuiver& q);

// ---------------------------------------------------------------------------
// Mesh relations

struct MeshTerm {
  std::uint32_t arrow;  // alpha : u -> v
  std::uint32_t sigma;  // sigma(alpha) : tau v -> u
};

struct MeshRelation {
  VertexId target;
  VertexId source;  // tau(target)
  std::vector<MeshTerm> terms;
};

/// One relation per vertex in the domain of tau. Throws QuiverError when an
/// arrow into such a vertex has no partner out of its translate.
std::vector<MeshRelation> mesh_relations(const TranslationQuiver& q);

// ---------------------------------------------------------------------------
// Powers

/// Arrows are length-m paths x0 -> ... -> xm with tau x_{i+1} != x_{i-1};
/// translation is tau^m (undefined where any step is).
TranslationQuiver power(const TranslationQuiver& q, int m);

/// Weakly connected components (arrows and translation both connect).
std::vector<std::vector<VertexId>> connected_components(const TranslationQuiver& q);

// ---------------------------------------------------------------------------
// Isomorphism

class QuiverIsomorphism {
 public:
  /// Checks that `vertex_map` is a bijection carrying arrows to arrows with
  /// equal multiplicity, and commuting with the translations if requested.
  static std::optional<QuiverIsomorphism> make(const TranslationQuiver& from,
                                               const TranslationQuiver& to,
                                               std::vector<VertexId> vertex_map,
                                               bool respects_translation);

  const std::vector<VertexId>& vertex_map() const { return map_; }
  VertexId operator()(VertexId v) const { return map_[v]; }
  bool respects_translation() const { return respects_translation_; }

  QuiverIsomorphism then(const QuiverIsomorphism& next) const;

 private:
  QuiverIsomorphism(std::vector<VertexId> map, bool respects)
      : map_(std::move(map)), respects_translation_(respects) {}

  std::vector<VertexId> map_;
  bool respects_translation_ = false;
};

struct IsomorphismOptions {
  bool respect_translation = true;
  /// Optional forced pairs (vertex of q1, vertex of q2).
  std::vector<std::pair<VertexId, VertexId>> pins;
};

/// Exact search: colour refinement seeded by (in-degree, out-degree,
/// tau-orbit shape), then backtracking along adjacency.
std::optional<QuiverIsomorphism> find_isomorphism(const TranslationQuiver& q1,
                                                  const TranslationQuiver& q2,
                                                  const IsomorphismOptions& options = {});

// ---------------------------------------------------------------------------
// Hom dimensions in the mesh category

/// dim Hom(x, y) for every y, by knitting on the length-graded unrolling of q:
///   f(x, 0) = 1,  f(v, L) = max(0, sum_{u -> v} f(u, L-1) - f(tau v, L-2)),
/// summed over L. Throws QuiverError if the hammock does not close within
/// `max_length` layers.
std::vector<long long> hammock_row(const TranslationQuiver& q, VertexId x,
                                   int max_length = 0);

long long hammock_hom(const TranslationQuiver& q, VertexId x, VertexId y);

// ---------------------------------------------------------------------------
// Serialization

std::string label_string(const VertexLabel& label);

/// {"vertices":[{"id":..,"label":..}],"arrows":[[s,t(,kind)],..],"translation":[[v,tv],..]}
std::string to_json(const TranslationQuiver& q);
TranslationQuiver quiver_from_json(const std::string& text);

struct DotOptions {
  std::string graph_name = "quiver";
  /// When non-empty, vertices are grouped into clusters by this key.
  std::vector<int> cluster_of;
  std::string cluster_prefix = "region";
};

/// Arrows solid with kind=<tag>; tau drawn as dashed edges v -> tau v.
std::string to_dot(const TranslationQuiver& q, const DotOptions& options = {});

}  // namespace repclust
