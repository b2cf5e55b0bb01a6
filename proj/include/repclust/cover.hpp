#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repclust/orbit_model.hpp"
#include "repclust/polygon.hpp"
#include "repclust/quiver.hpp"

namespace repclust {

/// Vertex (column, row) of ZA_n, rows 1..n.
struct CoverVertex {
  int column = 0;
  int row = 1;

  friend auto operator<=>(const CoverVertex&, const CoverVertex&) = default;
  std::vector<int> label() const { return {column, row}; }
};

std::string to_string(const CoverVertex& v);

enum class FunctorKind { Tau, Shift, Serre, OrbitGenerator };

struct FunctorAction {
  FunctorKind kind = FunctorKind::Tau;
  int exponent = 1;
};

/// tau^i(c, r) = (c - i, r).
CoverVertex tau_action(CoverVertex v, int i = 1);
/// [1](c, r) = (c + r, n + 1 - r), applied i times (negative i inverts).
CoverVertex shift_action(CoverVertex v, int i, int n);
/// nu = tau [1], so nu(c, r) = (c + r - 1, n + 1 - r).
CoverVertex serre_action(CoverVertex v, int i, int n);

/// The generator tau^{-p}[pm] written in the normal form tau^{-a} [1]^f,
/// f in {0, 1}, using [2] = tau^{-(n+1)} (and [1] = tau^{-1} when n = 1).
struct GeneratorForm {
  int tau_inverse_power = 0;
  bool shift = false;

  friend bool operator==(const GeneratorForm&, const GeneratorForm&) = default;
};

GeneratorForm orbit_generator_form(const ModelParams& params);
CoverVertex orbit_generator(CoverVertex v, int i, const ModelParams& params);

CoverVertex apply(const FunctorAction& action, CoverVertex v, const ModelParams& params);

/// Convex block of columns [first_column, last_column] of ZA_n.
struct Window {
  int first_column = 0;
  int last_column = 0;
  int n = 1;

  bool contains(CoverVertex v) const {
    return v.column >= first_column && v.column <= last_column && v.row >= 1 && v.row <= n;
  }
};

/// Full subquiver of ZA_n on the window, labels (c, r), tau where defined.
TranslationQuiver cover_window(const Window& w);

/// dim Hom in D^b(mod kA_n) between cover vertices. Hom is invariant under
/// tau, so one knitting per source row (on a window n + 2 columns wide)
/// determines everything.
class DerivedHom {
 public:
  explicit DerivedHom(int n);

  int rank() const { return n_; }
  long long operator()(CoverVertex x, CoverVertex y) const;

 private:
  int n_;
  // table_[source row - 1][column offset][target row - 1]
  std::vector<std::vector<std::vector<long long>>> table_;
};

long long hom_dim_derived(CoverVertex x, CoverVertex y, int n);

/// Explicit covering ZA_n -> Gamma: a cover vertex for every orbit vertex,
/// plus the deck generator recovered from the lift.
struct CoverMap {
  std::vector<CoverVertex> representative;  // indexed by orbit-quiver vertex
  GeneratorForm deck;
};

struct CoverLift {
  std::map<CoverVertex, VertexId> images;
  GeneratorForm deck;
};

/// Lifts a quotient of ZA_n along arrows, anchor (a bottom-row vertex) at
/// (0, 1), over columns [-columns + 1, columns - row]. Verifies the covering
/// property and reads the deck generator off the first return of the anchor.
CoverLift lift_quotient(const TranslationQuiver& q, VertexId anchor, int n, int columns);

/// Lifts starting from the anchor (1, m+2, 1) at (0, 1): row 1 is its tau-orbit,
/// row r+1 is reached through the out-arrow not going down. Throws
/// QuiverError if the lift is not a covering or the deck group disagrees
/// with tau^{-p}[pm].
CoverMap lift_to_cover(const OrbitQuiver& gamma);

/// Hom and Ext in the orbit category of D^b(mod kA_n) by tau^{-p}[pm],
/// computed by summing Hom over the generator orbit on the cover.
class OrbitCategory {
 public:
  explicit OrbitCategory(const ModelParams& params);

  const ModelParams& params() const { return gamma_.params; }
  const OrbitQuiver& gamma() const { return gamma_; }
  const CoverMap& cover() const { return cover_; }
  const DerivedHom& derived() const { return derived_; }

  /// sum_i dim Hom_D(x, g^i y).
  long long hom(CoverVertex x, CoverVertex y) const;
  long long hom(VertexId x, VertexId y) const;
  long long hom(const Diagonal& x, const Diagonal& y) const;

  /// dim Ext^degree(x, y) = hom(x, y[degree]); degree in 1..m.
  long long ext(VertexId x, VertexId y, int degree) const;
  long long ext(const Diagonal& x, const Diagonal& y, int degree) const;

 private:
  OrbitQuiver gamma_;
  CoverMap cover_;
  DerivedHom derived_;
};

long long orbit_hom(const Diagonal& x, const Diagonal& y, const ModelParams& params);
long long orbit_ext(const Diagonal& x, const Diagonal& y, int degree, const ModelParams& params);

/// The explicit crossing rule for m = 1: Ext^1(X, Y) = 1 iff
///   l = l' and i' < i < j' < j, or l = l' + 1 (mod p) and i < i' < j < j'.
int ext1_crossing(const Diagonal& x, const Diagonal& y, const ModelParams& params);

// ---------------------------------------------------------------------------
// Cover-level checks

using ShiftRule = std::function<CoverVertex(CoverVertex, int /*n*/)>;

struct SerreReport {
  int n = 0;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<CoverVertex, CoverVertex>> witness;  // first failing (x, y)

  bool passed() const { return !witness; }
};

/// Checks dim Hom(X, Y[1]) = dim Hom(Y, tau X) for all pairs in a window of
/// `columns` columns, with [1] given by `rule` (the standard shift if empty).
SerreReport serre_pin_down(int n, const ShiftRule& rule = {}, int columns = 0);

/// nu^{n+1} = [n-1] as permutations of the cover, checked on a window.
bool fractional_cy_holds(int n, int columns = 0);

}  // namespace repclust
