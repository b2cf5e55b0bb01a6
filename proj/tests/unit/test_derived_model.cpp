#include <doctest.h>

#include <set>

#include "repclust/derived_model.hpp"

using namespace repclust;

TEST_SUITE("derived_model") {

TEST_CASE("window shape") {
  const auto w = build_window(WindowParams::make(3, 2));
  CHECK(w.quiver.vertex_count() == 30);
  std::map<int, int> per_region;
  for (const auto& d : w.diagonals) ++per_region[d.k];
  CHECK(per_region.size() == 5);
  for (const auto& [k, count] : per_region) CHECK(count == 6);
  CHECK_THROWS_AS(WindowParams::make(0, 2), InvalidParams);
  CHECK_THROWS_AS(WindowParams::make(3, 0), InvalidParams);
}

TEST_CASE("connecting arrows and translation") {
  const auto params = WindowParams::make(3, 2);
  const auto w = build_window(params);
  const auto src = w.vertex({4, 8, 0});
  bool found = false;
  for (auto a : w.quiver.out_arrows(src))
    if (w.diagonals[w.quiver.arrow(a).target] == TwoCDiagonal{2, 4, 1}) {
      found = true;
      CHECK(w.quiver.arrow(a).tag == ArrowTag::Connecting);
    }
  CHECK(found);
  CHECK(tau2_action({2, 6, 1}, params) == TwoCDiagonal{4, 8, 0});
  CHECK(w.diagonals[*w.quiver.tau(w.vertex({2, 6, 1}))] == TwoCDiagonal{4, 8, 0});
  CHECK(varrho_action({2, 6, 0}, params) == TwoCDiagonal{2, 6, 1});
  CHECK_FALSE(varrho_action({2, 6, 2}, params).has_value());
}

TEST_CASE("boundary regions lack the outer connecting arrows") {
  const auto params = WindowParams::make(3, 2);
  const auto w = build_window(params);
  for (const auto& a : w.quiver.arrows()) {
    if (a.tag != ArrowTag::Connecting) continue;
    CHECK(w.diagonals[a.source].k != params.half_width);
    CHECK(w.diagonals[a.target].k != -params.half_width);
    CHECK(w.diagonals[a.target].k == w.diagonals[a.source].k + 1);
  }
}

TEST_CASE("root labels") {
  const auto params = WindowParams::make(3, 1);
  CHECK(root_label({2, 8, 0}, params) == RootLabel{1, 3});
  CHECK(root_label({2, 4, 1}, params) == RootLabel{1, 1});
  CHECK(root_label({4, 6, 1}, params) == RootLabel{2, 2});
  for (int rank = 1; rank <= 6; ++rank) {
    const auto w = build_window(WindowParams::make(rank, 1));
    const auto region = region_to_module_quiver(w, 0);
    std::set<std::pair<int, int>> roots;
    for (const auto& r : region.roots) roots.insert({r.a, r.b});
    CHECK(roots.size() == static_cast<std::size_t>((rank + 1) * rank / 2));
    for (const auto& [a, b] : roots) {
      CHECK(1 <= a);
      CHECK(a <= b);
      CHECK(b <= rank);
    }
  }
}

TEST_CASE("module AR quiver knits additively") {
  for (int rank = 1; rank <= 6; ++rank) {
    const auto mq = module_ar_quiver(rank);
    CHECK(mq.quiver.vertex_count() == static_cast<std::size_t>((rank + 1) * rank / 2));
    auto vec = [&](VertexId v) {
      std::vector<int> d(rank, 0);
      for (int i = mq.roots[v].a; i <= mq.roots[v].b; ++i) d[i - 1] = 1;
      return d;
    };
    for (VertexId v = 0; v < mq.quiver.vertex_count(); ++v) {
      auto t = mq.quiver.tau(v);
      if (!t) continue;
      std::vector<int> lhs = vec(v);
      const auto tv = vec(*t);
      for (int i = 0; i < rank; ++i) lhs[i] += tv[i];
      std::vector<int> rhs(rank, 0);
      for (auto a : mq.quiver.in_arrows(v)) {
        const auto u = vec(mq.quiver.arrow(a).source);
        for (int i = 0; i < rank; ++i) rhs[i] += u[i];
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("region quiver is the module AR quiver") {
  for (int rank = 1; rank <= 6; ++rank) {
    const auto r = verify_region(rank);
    CHECK(r.vertex_count == static_cast<std::size_t>((rank + 1) * rank / 2));
    CHECK(r.roots_bijective);
    CHECK(r.explicit_map_iso);
    CHECK(r.search_iso);
  }
}

TEST_CASE("window is a piece of the derived category") {
  for (int rank = 1; rank <= 4; ++rank)
    for (int hw = 1; hw <= 3; ++hw) {
      const auto r = verify_derived_iso(WindowParams::make(rank, hw));
      CHECK_MESSAGE(r.ok(), "rank=" << rank << " hw=" << hw << " " << r.witness.value_or(""));
      CHECK(r.vertex_count == static_cast<std::size_t>((2 * hw + 1) * (rank + 1) * rank / 2));
    }
}

TEST_CASE("fractional Calabi-Yau in the window") {
  for (int rank = 1; rank <= 6; ++rank) CHECK(window_fractional_cy(rank));
}

TEST_CASE("even and odd endpoints give the same model") {
  for (int rank = 1; rank <= 4; ++rank) CHECK(parity_models_isomorphic(WindowParams::make(rank, 2)));
  const auto odd = build_window(WindowParams::make(3, 1, true));
  for (const auto& d : odd.diagonals) {
    CHECK(d.i % 2 == 1);
    CHECK(d.j % 2 == 1);
  }
}

TEST_CASE("squared polygon quiver") {
  const std::vector<std::vector<std::size_t>> expected{{3, 3, 3}, {8, 6, 6}, {15, 10, 10}};
  for (int n = 1; n <= 3; ++n) {
    const auto r = power_decomposition(n);
    CHECK(r.component_sizes == expected[n - 1]);
    CHECK(r.vertex_count == static_cast<std::size_t>((2 * n + 4) * (2 * n + 1) / 2));
    CHECK(r.ok());
  }
}

}  // TEST_SUITE
