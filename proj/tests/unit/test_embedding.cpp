#include <doctest.h>

#include "repclust/embedding.hpp"

using namespace repclust;

TEST_SUITE("embedding") {

TEST_CASE("size of the ambient cluster category") {
  CHECK(t_value(2, 4) == 7);
  CHECK(t_value(2, 3) == 12);
  CHECK(t_value(3, 3) == 15);
  CHECK(t_value(3, 4) == 9);
  CHECK_THROWS_AS(t_value(2, 2), InvalidParams);
  CHECK_THROWS_AS(t_value(2, 1), InvalidParams);
  try {
    t_value(2, 2);
  } catch (const InvalidParams& e) {
    CHECK(std::string(e.what()).find("overlap") != std::string::npos);
  }
}

TEST_CASE("band rows") {
  CHECK(select_band(2, 4).rows == std::vector<int>{1, 2, 6, 7});
  CHECK(select_band(2, 4).parity == BandParity::Even);
  CHECK(select_band(2, 3).rows == std::vector<int>{6, 7});
  CHECK(select_band(2, 3).parity == BandParity::Odd);
  for (int n = 1; n <= 4; ++n)
    for (int p = 3; p <= 6; ++p) {
      const auto band = select_band(n, p);
      CHECK(band.rows.size() == static_cast<std::size_t>(p % 2 ? n : 2 * n));
      for (int r : band.rows) {
        CHECK(r >= 1);
        CHECK(r <= band.t);
      }
    }
}

TEST_CASE("the orbit model is a band of a cluster category") {
  for (const auto& [n, p, size] : std::vector<std::tuple<int, int, std::size_t>>{
           {2, 4, 20}, {2, 3, 15}, {3, 3, 27}, {3, 4, 36}}) {
    const auto e = embed(n, p);
    CHECK(e.band_vertices.size() == size);
    CHECK(e.band_tau_stable);
    REQUIRE(e.iso);
    CHECK(e.band_gluing);
    CHECK(e.ok());
    // The isomorphism is an honest one between the orbit model and the band.
    CHECK(QuiverIsomorphism::make(e.source.quiver, e.band_quiver, e.iso->vertex_map(), true).has_value());
  }
}

TEST_CASE("embedding across more parameters") {
  for (int n = 1; n <= 4; ++n)
    for (int p = 3; p <= 6; ++p) {
      if (t_value(n, p) > 24) continue;
      CHECK_MESSAGE(embed(n, p).ok(), "n=" << n << " p=" << p);
    }
}

TEST_CASE("the band is glued by the orbit generator") {
  for (int n = 1; n <= 3; ++n)
    for (int p = 3; p <= 5; ++p) {
      const auto e = embed(n, p);
      REQUIRE(e.band_gluing);
      CHECK(*e.band_gluing == e.expected_gluing);
      CHECK(e.expected_gluing == orbit_generator_form(ModelParams::make(n, 1, p)));
    }
}

TEST_CASE("quotient by the complementary rows") {
  for (const auto& [n, p] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}, {3, 4}}) {
    const auto q = quotient_ar(n, p);
    CHECK(q.deleted_tau_stable);
    CHECK(q.ok());
    CHECK(q.quotient.vertex_count() == static_cast<std::size_t>(p * n * (n + 3) / 2));
    const auto gamma_t = build_gamma(ModelParams::make(q.band.t, 1, 1));
    CHECK(q.deleted.size() + q.kept.size() == gamma_t.quiver.vertex_count());
  }
  CHECK(quotient_ar(2, 4).deleted_rows == std::vector<int>{3, 4, 5});
  CHECK(quotient_ar(2, 3).deleted_rows.size() == 10);
}

TEST_CASE("row deletion") {
  const auto g = build_gamma(ModelParams::make(4, 1, 1));
  std::vector<VertexId> kept;
  const auto same = delete_rows(g, {}, &kept);
  CHECK(same.vertex_count() == g.quiver.vertex_count());
  CHECK(same.arrow_count() == g.quiver.arrow_count());
  CHECK(kept.size() == g.quiver.vertex_count());
  CHECK(find_isomorphism(same, g.quiver).has_value());
  // Rows r and t + 1 - r form one tau-orbit, so only symmetric sets are stable.
  CHECK_NOTHROW(delete_rows(g, {2, 3}));
  CHECK(tau_stable(g.quiver, vertices_in_rows(g, {1, 4})));
  CHECK_FALSE(tau_stable(g.quiver, vertices_in_rows(g, {1})));
  CHECK_THROWS_AS(delete_rows(g, {1}), QuiverError);
}

}  // TEST_SUITE
