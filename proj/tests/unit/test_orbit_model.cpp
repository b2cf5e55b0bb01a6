#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "repclust/orbit_model.hpp"

using namespace repclust;

namespace {

std::set<Diagonal> out_neighbours(const OrbitQuiver& g, const Diagonal& d) {
  std::set<Diagonal> out;
  for (auto a : g.quiver.out_arrows(g.vertex(d))) out.insert(g.diagonal(g.quiver.arrow(a).target));
  return out;
}

}  // namespace

TEST_SUITE("orbit_model") {

TEST_CASE("arrows of the hexagon model") {
  const auto g = build_gamma(ModelParams::make(3, 1, 3));
  // (3,4,1) is a side of the hexagon, so (2,4,1) has a single out-arrow.
  CHECK(out_neighbours(g, {2, 4, 1}) == std::set<Diagonal>{{2, 5, 1}});
  CHECK(out_neighbours(g, {3, 6, 1}) == std::set<Diagonal>{{4, 6, 1}, {1, 3, 2}});
  CHECK(out_neighbours(g, {1, 3, 1}) == std::set<Diagonal>{{1, 4, 1}});
  CHECK(out_neighbours(g, {2, 5, 1}) == std::set<Diagonal>{{2, 6, 1}, {3, 5, 1}});
  const auto seam = g.quiver.out_arrows(g.vertex({3, 6, 1}));
  int rho_rot = 0;
  for (auto a : seam)
    if (g.quiver.arrow(a).tag == ArrowTag::IrrRhoRot) {
      ++rho_rot;
      CHECK(g.diagonal(g.quiver.arrow(a).target) == Diagonal{1, 3, 2});
    }
  CHECK(rho_rot == 1);
}

TEST_CASE("translation of the hexagon model") {
  const auto params = ModelParams::make(3, 1, 3);
  const auto g = build_gamma(params);
  CHECK(g.diagonal(*g.quiver.tau(g.vertex({2, 4, 1}))) == Diagonal{1, 3, 1});
  CHECK(g.diagonal(*g.quiver.tau(g.vertex({1, 4, 2}))) == Diagonal{3, 6, 1});
  CHECK(tau_m({1, 4, 2}, params) == Diagonal{3, 6, 1});
  CHECK(tau_m({1, 4, 1}, params) == Diagonal{3, 6, 3});
}

TEST_CASE("formula translation matches the quiver and inverts") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int p = 1; p <= 4; ++p) {
        const auto params = ModelParams::make(n, m, p);
        const auto g = build_gamma(params);
        for (VertexId v = 0; v < g.quiver.vertex_count(); ++v) {
          const auto& d = g.diagonal(v);
          REQUIRE(g.quiver.tau(v));
          CHECK(g.diagonal(*g.quiver.tau(v)) == tau_m(d, params));
          CHECK(tau_m_inverse(tau_m(d, params), params) == d);
          CHECK(is_valid_diagonal(tau_m(d, params), params));
        }
      }
}

TEST_CASE("rotation is an automorphism of the translation quiver") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 2; ++m)
      for (int p = 1; p <= 4; ++p) {
        const auto params = ModelParams::make(n, m, p);
        const auto g = build_gamma(params);
        std::vector<VertexId> map(g.quiver.vertex_count());
        for (VertexId v = 0; v < map.size(); ++v) map[v] = g.vertex(rho(g.diagonal(v), params));
        CHECK(QuiverIsomorphism::make(g.quiver, g.quiver, map, true).has_value());
      }
}

TEST_CASE("one region reproduces the classical cluster category") {
  // Independent reconstruction from the (n+3)-gon with cyclic indices.
  for (int n = 1; n <= 7; ++n) {
    const auto g = build_gamma(ModelParams::make(n, 1, 1));
    const auto cyclic = oracle::cyclic_cluster_quiver(n);
    REQUIRE(g.quiver.vertex_count() == cyclic.vertex_count());
    CHECK(g.quiver.arrow_count() == cyclic.arrow_count());
    // Labels agree, so the identity on (i, j) must be the isomorphism.
    std::vector<VertexId> map(g.quiver.vertex_count());
    for (VertexId v = 0; v < map.size(); ++v) {
      const auto& d = g.diagonal(v);
      map[v] = cyclic.at({d.i, d.j});
    }
    CHECK_MESSAGE(QuiverIsomorphism::make(g.quiver, cyclic, map, true).has_value(), "n=" << n);
  }
}

TEST_CASE("stability and counts on the grid") {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int p = 1; p <= 4; ++p) {
        const auto params = ModelParams::make(n, m, p);
        const auto g = build_gamma(params);
        CHECK(verify_stable(g.quiver).stable());
        CHECK(g.quiver.vertex_count() == oracle::brute_force_vertex_count(params));
        for (VertexId v = 0; v < g.quiver.vertex_count(); ++v) {
          CHECK(g.quiver.in_arrows(v).size() <= 2);
          CHECK(g.quiver.out_arrows(v).size() <= 2);
        }
      }
}

TEST_CASE("fundamental domains") {
  CHECK(fundamental_domain_sizes(build_gamma(ModelParams::make(3, 1, 3)).quiver) ==
        std::vector<std::size_t>{9, 9, 9});
  CHECK(fundamental_domain_sizes(build_gamma(ModelParams::make(2, 1, 4)).quiver) ==
        std::vector<std::size_t>{5, 5, 5, 5});
  const auto one = build_gamma(ModelParams::make(4, 2, 1));
  CHECK(fundamental_domain_sizes(one.quiver) == std::vector<std::size_t>{one.quiver.vertex_count()});
  const auto g = build_gamma(ModelParams::make(3, 2, 3));
  const auto labels = label_fundamental_domains(g.quiver);
  for (VertexId v = 0; v < g.quiver.vertex_count(); ++v) CHECK(labels[v] == g.diagonal(v).k);
}

TEST_CASE("band topology follows the parity of p") {
  CHECK(band_topology(build_gamma(ModelParams::make(3, 1, 3))) == BandTopology::Moebius);
  CHECK(band_topology(build_gamma(ModelParams::make(3, 1, 4))) == BandTopology::Cylinder);
  CHECK(band_topology(build_gamma(ModelParams::make(2, 1, 1))) == BandTopology::Moebius);
  for (int n = 2; n <= 6; ++n)
    for (int p = 1; p <= 4; ++p)
      CHECK(band_topology(build_gamma(ModelParams::make(n, 1, p))) ==
            (p % 2 ? BandTopology::Moebius : BandTopology::Cylinder));
  CHECK(band_topology(build_gamma(ModelParams::make(1, 1, 3))) == BandTopology::Inconclusive);
  CHECK(band_topology(build_gamma(ModelParams::make(3, 2, 3))) == BandTopology::Inconclusive);
}

TEST_CASE("rows of the band") {
  const auto params = ModelParams::make(3, 1, 2);
  CHECK(band_row({1, 3, 1}, params) == 1);
  CHECK(band_row({1, 5, 2}, params) == 3);
  const auto p2 = ModelParams::make(2, 2, 1);
  CHECK(band_row({1, 4, 1}, p2) == 1);
  CHECK(band_row({2, 7, 1}, p2) == 2);
}

}  // TEST_SUITE
