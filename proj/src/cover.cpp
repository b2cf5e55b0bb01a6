#include "repclust/cover.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace repclust {

std::string to_string(const CoverVertex& v) {
  return "(" + std::to_string(v.column) + "," + std::to_string(v.row) + ")";
}

CoverVertex tau_action(CoverVertex v, int i) { return {v.column - i, v.row}; }

CoverVertex shift_action(CoverVertex v, int i, int n) {
  for (; i > 0; --i) v = {v.column + v.row, n + 1 - v.row};
  for (; i < 0; ++i) v = {v.column - (n + 1 - v.row), n + 1 - v.row};
  return v;
}

CoverVertex serre_action(CoverVertex v, int i, int n) {
  for (; i > 0; --i) v = tau_action(shift_action(v, 1, n), 1);
  for (; i < 0; ++i) v = shift_action(tau_action(v, -1), -1, n);
  return v;
}

GeneratorForm orbit_generator_form(const ModelParams& params) {
  const int pm = params.p * params.m;
  if (params.n == 1) return {params.p + pm, false};
  return {params.p + (params.n + 1) * (pm / 2), pm % 2 == 1};
}

CoverVertex orbit_generator(CoverVertex v, int i, const ModelParams& params) {
  const GeneratorForm g = orbit_generator_form(params);
  const int n = params.n;
  for (; i > 0; --i) v = tau_action(shift_action(v, g.shift ? 1 : 0, n), -g.tau_inverse_power);
  for (; i < 0; ++i) v = shift_action(tau_action(v, g.tau_inverse_power), g.shift ? -1 : 0, n);
  return v;
}

CoverVertex apply(const FunctorAction& action, CoverVertex v, const ModelParams& params) {
  switch (action.kind) {
    case FunctorKind::Tau: return tau_action(v, action.exponent);
    case FunctorKind::Shift: return shift_action(v, action.exponent, params.n);
    case FunctorKind::Serre: return serre_action(v, action.exponent, params.n);
    case FunctorKind::OrbitGenerator: return orbit_generator(v, action.exponent, params);
  }
  return v;
}

TranslationQuiver cover_window(const Window& w) {
  if (w.n < 1 || w.first_column > w.last_column) throw InvalidParams("empty cover window");
  QuiverBuilder b;
  for (int c = w.first_column; c <= w.last_column; ++c)
    for (int r = 1; r <= w.n; ++r) b.add_vertex({c, r});
  auto id = [&](int c, int r) { return *b.find({c, r}); };
  for (int c = w.first_column; c <= w.last_column; ++c)
    for (int r = 1; r <= w.n; ++r) {
      if (r < w.n) b.add_arrow(id(c, r), id(c, r + 1));
      if (r > 1 && c < w.last_column) b.add_arrow(id(c, r), id(c + 1, r - 1));
      if (c > w.first_column) b.set_tau(id(c, r), id(c - 1, r));
    }
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Derived Hom

DerivedHom::DerivedHom(int n) : n_(n) {
  if (n < 1) throw InvalidParams("rank must be >= 1");
  // The forward hammock of (0, r) ends at nu(0, r), column r - 1 <= n - 1.
  const int width = n + 2;
  const TranslationQuiver window = cover_window({0, width - 1, n});
  table_.assign(n, std::vector<std::vector<long long>>(width, std::vector<long long>(n, 0)));
  for (int r = 1; r <= n; ++r) {
    const auto row = hammock_row(window, window.at({0, r}));
    for (VertexId v = 0; v < window.vertex_count(); ++v) {
      const auto& label = window.label(v);
      table_[r - 1][label[0]][label[1] - 1] = row[v];
    }
    for (int t = 0; t < n; ++t)
      if (table_[r - 1][width - 1][t] != 0)
        throw QuiverError("hammock of row " + std::to_string(r) + " reaches the window edge");
  }
}

long long DerivedHom::operator()(CoverVertex x, CoverVertex y) const {
  const int offset = y.column - x.column;
  if (offset < 0 || offset >= static_cast<int>(table_[0].size())) return 0;
  return table_[x.row - 1][offset][y.row - 1];
}

long long hom_dim_derived(CoverVertex x, CoverVertex y, int n) { return DerivedHom(n)(x, y); }

// ---------------------------------------------------------------------------
// Lift

CoverLift lift_quotient(const TranslationQuiver& q, VertexId anchor, int n, int columns) {
  const int C = columns;
  CoverLift out;
  auto& lift = out.images;

  auto step = [&](std::optional<VertexId> v, const char* what) {
    if (!v) throw QuiverError(std::string("lift: ") + what + " undefined");
    return *v;
  };
  lift[{0, 1}] = anchor;
  VertexId y = anchor;
  for (int c = 1; c <= C - 1; ++c) lift[{c, 1}] = y = step(q.tau_inverse(y), "tau^{-1}");
  y = anchor;
  for (int c = -1; c >= -C + 1; --c) lift[{c, 1}] = y = step(q.tau(y), "tau");

  // Row r covers columns [-C + 1, C - r].
  for (int r = 1; r < n; ++r)
    for (int c = -C + 1; c <= C - r - 1; ++c) {
      const VertexId here = lift.at({c, r});
      std::vector<VertexId> candidates;
      bool skipped = false;
      for (auto a : q.out_arrows(here)) {
        const VertexId t = q.arrow(a).target;
        if (r > 1 && !skipped && t == lift.at({c + 1, r - 1})) {
          skipped = true;
          continue;
        }
        candidates.push_back(t);
      }
      if (candidates.size() != 1)
        throw QuiverError("lift: ambiguous continuation above " + to_string(CoverVertex{c, r}));
      lift[{c, r + 1}] = candidates.front();
    }

  // Covering property: tau commutes, out-arrows correspond with multiplicity.
  for (const auto& [v, image] : lift) {
    if (auto left = lift.find(tau_action(v)); left != lift.end() && q.tau(image) != left->second)
      throw QuiverError("lift does not commute with tau at " + to_string(v));
    std::vector<CoverVertex> expected_out;
    if (v.row < n) expected_out.push_back({v.column, v.row + 1});
    if (v.row > 1) expected_out.push_back({v.column + 1, v.row - 1});
    std::vector<VertexId> want;
    bool complete = true;
    for (const auto& e : expected_out) {
      auto it = lift.find(e);
      if (it == lift.end()) complete = false;
      else want.push_back(it->second);
    }
    if (!complete) continue;
    std::vector<VertexId> got;
    for (auto a : q.out_arrows(image)) got.push_back(q.arrow(a).target);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) throw QuiverError("lift is not a covering at " + to_string(v));
  }

  // Deck generator: first return of the anchor to row 1 (tau power) or row n
  // (tau power composed with [1]).
  std::optional<CoverVertex> first;
  for (const auto& [v, image] : lift)
    if (image == anchor && v.column > 0 && (v.row == 1 || v.row == n) &&
        (!first || v.column < first->column))
      first = v;
  if (!first) throw QuiverError("lift window too narrow to see the deck group");
  if (n == 1 || first->row == 1) out.deck = {first->column, false};
  else out.deck = {first->column - 1, true};
  return out;
}

CoverMap lift_to_cover(const OrbitQuiver& gamma) {
  const ModelParams& params = gamma.params;
  const TranslationQuiver& q = gamma.quiver;
  const GeneratorForm expected = orbit_generator_form(params);
  const VertexId anchor = gamma.vertex(Diagonal{1, params.m + 2, 1});
  const CoverLift lifted =
      lift_quotient(q, anchor, params.n, 2 * expected.tau_inverse_power + 2 * params.n + 6);
  const auto& lift = lifted.images;
  const GeneratorForm deck = lifted.deck;
  if (deck != expected)
    throw QuiverError("deck generator tau^{-" + std::to_string(deck.tau_inverse_power) + "}" +
                      (deck.shift ? "[1]" : "") + " differs from the orbit generator");

  CoverMap out;
  out.deck = deck;
  out.representative.assign(q.vertex_count(), CoverVertex{});
  std::vector<bool> seen(q.vertex_count(), false);
  std::vector<std::pair<CoverVertex, VertexId>> ordered(lift.begin(), lift.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return std::abs(a.first.column) < std::abs(b.first.column);
  });
  for (const auto& [v, image] : ordered)
    if (!seen[image]) {
      seen[image] = true;
      out.representative[image] = v;
    }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw QuiverError("lift misses a vertex of the orbit quiver");
  return out;
}

// ---------------------------------------------------------------------------
// Orbit category

OrbitCategory::OrbitCategory(const ModelParams& params)
    : gamma_(build_gamma(params)), cover_(lift_to_cover(gamma_)), derived_(params.n) {}

long long OrbitCategory::hom(CoverVertex x, CoverVertex y) const {
  const ModelParams& p = params();
  const int n = p.n;
  // g moves columns strictly forward, and Hom(x, -) lives in columns
  // [x.column, x.column + n + 1).
  CoverVertex z = y;
  while (z.column > x.column - n - 2) z = orbit_generator(z, -1, p);
  long long total = 0;
  while (z.column <= x.column + n + 1) {
    total += derived_(x, z);
    z = orbit_generator(z, 1, p);
  }
  return total;
}

long long OrbitCategory::hom(VertexId x, VertexId y) const {
  return hom(cover_.representative[x], cover_.representative[y]);
}

long long OrbitCategory::hom(const Diagonal& x, const Diagonal& y) const {
  return hom(gamma_.vertex(x), gamma_.vertex(y));
}

long long OrbitCategory::ext(VertexId x, VertexId y, int degree) const {
  if (degree < 1 || degree > params().m)
    throw InvalidParams("Ext degree must lie in 1.." + std::to_string(params().m));
  return hom(cover_.representative[x], shift_action(cover_.representative[y], degree, params().n));
}

long long OrbitCategory::ext(const Diagonal& x, const Diagonal& y, int degree) const {
  return ext(gamma_.vertex(x), gamma_.vertex(y), degree);
}

long long orbit_hom(const Diagonal& x, const Diagonal& y, const ModelParams& params) {
  return OrbitCategory(params).hom(x, y);
}

long long orbit_ext(const Diagonal& x, const Diagonal& y, int degree, const ModelParams& params) {
  return OrbitCategory(params).ext(x, y, degree);
}

int ext1_crossing(const Diagonal& x, const Diagonal& y, const ModelParams& params) {
  if (params.m != 1) throw InvalidParams("the crossing rule is stated for m = 1 only");
  const int p = params.p;
  const bool same = x.k == y.k;
  const bool next = ((x.k - y.k) % p + p) % p == 1 % p;
  if (same && y.i < x.i && x.i < y.j && y.j < x.j) return 1;
  if (next && x.i < y.i && y.i < x.j && x.j < y.j) return 1;
  return 0;
}

// ---------------------------------------------------------------------------
// Checks

SerreReport serre_pin_down(int n, const ShiftRule& rule, int columns) {
  const DerivedHom hom(n);
  if (columns <= 0) columns = 2 * n + 4;
  auto shift = [&](CoverVertex v) { return rule ? rule(v, n) : shift_action(v, 1, n); };
  SerreReport report;
  report.n = n;
  for (int cx = 0; cx < columns; ++cx)
    for (int rx = 1; rx <= n; ++rx)
      for (int cy = 0; cy < columns; ++cy)
        for (int ry = 1; ry <= n; ++ry) {
          const CoverVertex x{cx, rx}, y{cy, ry};
          ++report.pairs_checked;
          if (hom(x, shift(y)) != hom(y, tau_action(x))) {
            report.witness = {x, y};
            return report;
          }
        }
  return report;
}

bool fractional_cy_holds(int n, int columns) {
  if (columns <= 0) columns = 2 * n + 4;
  for (int c = -columns; c <= columns; ++c)
    for (int r = 1; r <= n; ++r) {
      const CoverVertex v{c, r};
      if (serre_action(v, n + 1, n) != shift_action(v, n - 1, n)) return false;
    }
  return true;
}

}  // namespace repclust
