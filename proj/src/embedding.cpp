#include "repclust/embedding.hpp"

#include <algorithm>

namespace repclust {

int t_value(int n, int p) {
  if (n < 1) throw InvalidParams("n must be >= 1 (got " + std::to_string(n) + ")");
  if (p <= 2)
    throw InvalidParams("p must be > 2 (got " + std::to_string(p) +
                        "): for p <= 2 the two models overlap");
  return p % 2 == 0 ? (n + 3) * (p / 2) - 3 : (n + 3) * p - 3;
}

BandSelection select_band(int n, int p) {
  BandSelection band{n, p, t_value(n, p), p % 2 == 0 ? BandParity::Even : BandParity::Odd, {}};
  if (band.parity == BandParity::Even) {
    for (int r = 1; r <= n; ++r) band.rows.push_back(r);
    for (int r = band.t - n + 1; r <= band.t; ++r) band.rows.push_back(r);
  } else {
    const int a = (p - 1) * (n + 3) / 2 + 1;
    for (int r = a; r < a + n; ++r) band.rows.push_back(r);
  }
  return band;
}

std::vector<VertexId> vertices_in_rows(const OrbitQuiver& gamma, const std::vector<int>& rows) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < gamma.diagonals.size(); ++v)
    if (std::find(rows.begin(), rows.end(), band_row(gamma.diagonal(v), gamma.params)) != rows.end())
      out.push_back(v);
  return out;
}

bool tau_stable(const TranslationQuiver& q, const std::vector<VertexId>& vertices) {
  std::vector<bool> in(q.vertex_count(), false);
  for (auto v : vertices) in[v] = true;
  for (auto v : vertices) {
    auto t = q.tau(v);
    auto ti = q.tau_inverse(v);
    if (!t || !ti || !in[*t] || !in[*ti]) return false;
  }
  return true;
}

Embedding embed(int n, int p) {
  Embedding e;
  e.band = select_band(n, p);
  e.source = build_gamma(ModelParams::make(n, 1, p));
  e.ambient = build_gamma(ModelParams::make(e.band.t, 1, 1));
  e.band_vertices = vertices_in_rows(e.ambient, e.band.rows);
  e.band_quiver = e.ambient.quiver.induced(e.band_vertices);
  e.band_tau_stable = tau_stable(e.ambient.quiver, e.band_vertices);
  e.expected_gluing = orbit_generator_form(e.source.params);

  if (e.band_tau_stable && !e.band_vertices.empty()) {
    // Anchor on the first kept row: it has a single out-arrow inside the band.
    const int anchor_row = e.band.rows.front();
    VertexId anchor = 0;
    for (VertexId v = 0; v < e.band_vertices.size(); ++v)
      if (band_row(e.ambient.diagonal(e.band_vertices[v]), e.ambient.params) == anchor_row) {
        anchor = v;
        break;
      }
    try {
      e.band_gluing =
          lift_quotient(e.band_quiver, anchor, n, 2 * e.expected_gluing.tau_inverse_power + 2 * n + 6)
              .deck;
    } catch (const QuiverError&) {
      e.band_gluing.reset();
    }
  }

  e.iso = find_isomorphism(e.source.quiver, e.band_quiver);
  if (e.iso)
    for (VertexId v = 0; v < e.source.quiver.vertex_count(); ++v)
      e.vertex_map.push_back(e.band_vertices[(*e.iso)(v)]);
  return e;
}

TranslationQuiver delete_rows(const OrbitQuiver& gamma, const std::vector<int>& rows,
                              std::vector<VertexId>* kept) {
  const auto removed = vertices_in_rows(gamma, rows);
  if (!removed.empty() && !tau_stable(gamma.quiver, removed))
    throw QuiverError("the deleted band is not tau-stable");
  std::vector<bool> gone(gamma.quiver.vertex_count(), false);
  for (auto v : removed) gone[v] = true;
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < gamma.quiver.vertex_count(); ++v)
    if (!gone[v]) keep.push_back(v);
  if (kept) *kept = keep;
  return gamma.quiver.induced(keep);
}

Quotient quotient_ar(int n, int p) {
  Quotient out;
  out.band = select_band(n, p);
  const OrbitQuiver ambient = build_gamma(ModelParams::make(out.band.t, 1, 1));
  for (int r = 1; r <= out.band.t; ++r)
    if (std::find(out.band.rows.begin(), out.band.rows.end(), r) == out.band.rows.end())
      out.deleted_rows.push_back(r);
  out.deleted = vertices_in_rows(ambient, out.deleted_rows);
  out.deleted_tau_stable = tau_stable(ambient.quiver, out.deleted);
  if (!out.deleted_tau_stable) throw QuiverError("the deleted band is not tau-stable");
  out.quotient = delete_rows(ambient, out.deleted_rows, &out.kept);
  out.iso = find_isomorphism(build_gamma(ModelParams::make(n, 1, p)).quiver, out.quotient);
  return out;
}

}  // namespace repclust
