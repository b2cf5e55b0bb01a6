#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "repclust/cover.hpp"
#include "repclust/quiver.hpp"

namespace repclust {

/// Truncation of the infinite polygon to regions -half_width..half_width,
/// each region a (2 rank + 2)-gon. `odd_endpoints` switches to diagonals
/// between odd vertices.
struct WindowParams {
  int rank = 1;        // module category of type A_rank
  int half_width = 1;  // p
  bool odd_endpoints = false;

  static WindowParams make(int rank, int half_width, bool odd_endpoints = false);

  int region_size() const { return 2 * rank + 2; }
  int low_vertex() const { return odd_endpoints ? 1 : 2; }
  int high_vertex() const { return odd_endpoints ? region_size() - 1 : region_size(); }
  int diagonals_per_region() const { return (rank + 1) * rank / 2; }
};

struct TwoCDiagonal {
  int i = 0;
  int j = 0;
  int k = 0;

  friend auto operator<=>(const TwoCDiagonal&, const TwoCDiagonal&) = default;
  std::vector<int> triple() const { return {i, j, k}; }
};

std::string to_string(const TwoCDiagonal& d);

/// Positive root alpha_a + ... + alpha_b of A_rank.
struct RootLabel {
  int a = 1;
  int b = 1;

  friend auto operator<=>(const RootLabel&, const RootLabel&) = default;
};

struct DerivedWindow {
  WindowParams params;
  TranslationQuiver quiver;
  std::vector<TwoCDiagonal> diagonals;  // region-major, then (i, j)

  VertexId vertex(const TwoCDiagonal& d) const;
  std::optional<VertexId> find(const TwoCDiagonal& d) const;
};

/// In-region arrows (i, j) -> (i, j+2) and (i, j) -> (i+2, j); connecting
/// arrows (i, high, k) -> (low, i, k+1) for k < p; tau_2 lowers both ends by 2
/// and sends (low, j, k) to (j-2, high, k-1), undefined outside the window.
DerivedWindow build_window(const WindowParams& w);

/// Cover vertex of a diagonal: [k] applied to (i'/2 - 1, (j - i)/2), where i'
/// is i rebased to the even convention.
CoverVertex cover_vertex(const TwoCDiagonal& d, const WindowParams& w);

std::optional<TwoCDiagonal> varrho_action(const TwoCDiagonal& d, const WindowParams& w, int times = 1);
std::optional<TwoCDiagonal> tau2_action(const TwoCDiagonal& d, const WindowParams& w);

RootLabel root_label(const TwoCDiagonal& d, const WindowParams& w);

struct RegionModule {
  TranslationQuiver quiver;        // region k, tau_2 restricted
  std::vector<TwoCDiagonal> diagonals;
  std::vector<RootLabel> roots;    // per vertex
};

RegionModule region_to_module_quiver(const DerivedWindow& window, int k);

/// AR-quiver of mod kA_rank (linear orientation) as the full subquiver of the
/// cover on {c >= 0, c + r <= rank}, labelled by dimension vectors obtained by
/// additive knitting from the projectives (0, r) = alpha_1 + ... + alpha_r.
struct ModuleQuiver {
  TranslationQuiver quiver;
  std::vector<CoverVertex> vertices;
  std::vector<RootLabel> roots;
};

ModuleQuiver module_ar_quiver(int rank);

struct RegionReport {
  int rank = 0;
  std::size_t vertex_count = 0;
  bool roots_bijective = false;  // labels hit every positive root once
  bool explicit_map_iso = false; // (i, j) -> (i/2 - 1, (j - i)/2) with matching roots
  bool search_iso = false;       // find_isomorphism, independently
  bool ok() const { return roots_bijective && explicit_map_iso && search_iso; }
};

RegionReport verify_region(int rank);

struct DerivedReport {
  WindowParams params;
  std::size_t vertex_count = 0;
  bool interior_stable = false;        // stability away from the truncation
  bool explicit_map_iso = false;       // window -> cover image, tau respected
  bool connecting_arrows_match = false;// connecting arrows = inter-copy cover arrows
  bool interior_search_iso = false;    // find_isomorphism on interiors
  bool boundary_connecting_ok = false; // none out of region p or into region -p
  bool varrho_is_shift = false;
  bool varrho_commutes_with_tau = false;
  bool hom_agrees = false;             // window knitting vs cover Hom
  bool serre_duality = false;          // Hom(X, varrho Y) = Hom(Y, tau_2 X)
  std::optional<std::string> witness;

  bool ok() const {
    return interior_stable && explicit_map_iso && connecting_arrows_match && interior_search_iso &&
           boundary_connecting_ok && varrho_is_shift && varrho_commutes_with_tau && hom_agrees &&
           serre_duality;
  }
};

DerivedReport verify_derived_iso(const WindowParams& w);

/// nu^{rank+1} = varrho^{rank-1} with nu = tau_2 varrho, on every vertex of
/// region 0 of a window wide enough for both sides to stay inside.
bool window_fractional_cy(int rank);

/// The even- and odd-endpoint windows are isomorphic translation quivers.
bool parity_models_isomorphic(const WindowParams& w);

struct PowerReport {
  int n = 0;
  std::size_t vertex_count = 0;
  std::vector<std::size_t> component_sizes;  // m-diagonal, even-even, odd-odd
  bool three_components = false;
  bool homogeneous = false;            // each component is one diagonal class
  bool m_component_iso = false;        // ~ quiver of 2-diagonals (m = 2, p = 1)
  bool parity_components_iso = false;

  bool ok() const { return three_components && homogeneous && m_component_iso && parity_components_iso; }
};

/// Square of the diagonal quiver of the (2(n+1)+2)-gon.
PowerReport power_decomposition(int n);

}  // namespace repclust
