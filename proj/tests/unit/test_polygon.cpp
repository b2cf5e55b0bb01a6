#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "repclust/polygon.hpp"

using namespace repclust;

TEST_SUITE("polygon") {

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ModelParams::make(0, 1, 1), InvalidParams);
  CHECK_THROWS_AS(ModelParams::make(3, 0, 1), InvalidParams);
  CHECK_THROWS_AS(ModelParams::make(3, 1, 0), InvalidParams);
  CHECK_NOTHROW(ModelParams::make(1, 1, 1));
}

TEST_CASE("counts on small examples") {
  const auto a = ModelParams::make(3, 1, 3);
  CHECK(a.region_size() == 6);
  CHECK(enumerate_diagonals(a).size() == 27);

  const auto b = ModelParams::make(1, 2, 1);
  const auto diagonals = enumerate_diagonals(b);
  REQUIRE(diagonals.size() == 3);
  CHECK(diagonals[0] == Diagonal{1, 4, 1});
  CHECK(diagonals[1] == Diagonal{2, 5, 1});
  CHECK(diagonals[2] == Diagonal{3, 6, 1});

  const auto c = ModelParams::make(2, 2, 2);
  CHECK(c.region_size() == 8);
  CHECK(enumerate_diagonals(c).size() == 16);
}

TEST_CASE("enumeration agrees with the unfiltered loop on the grid") {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int p = 1; p <= 4; ++p) {
        const auto params = ModelParams::make(n, m, p);
        const auto diagonals = enumerate_diagonals(params);
        CHECK(diagonals.size() == oracle::brute_force_vertex_count(params));
        CHECK(diagonals.size() == static_cast<std::size_t>(p * n * (m * (n + 1) + 2) / 2));
        CHECK(std::is_sorted(diagonals.begin(), diagonals.end(), [](const Diagonal& x, const Diagonal& y) {
          return std::tie(x.k, x.i, x.j) < std::tie(y.k, y.i, y.j);
        }));
      }
}

TEST_CASE("rotation") {
  const auto params = ModelParams::make(3, 1, 3);
  CHECK(rho(Diagonal{2, 4, 1}, params) == Diagonal{2, 4, 2});
  CHECK(rho(Diagonal{2, 5, 2}, params, 3) == Diagonal{2, 5, 2});
  CHECK(rho(Diagonal{1, 3, 3}, params) == Diagonal{1, 3, 1});
  CHECK(rho(Diagonal{1, 3, 1}, params, -1) == Diagonal{1, 3, 3});
}

TEST_CASE("crossing") {
  CHECK(crosses({1, 3, 1}, {2, 4, 1}));
  CHECK_FALSE(crosses({1, 3, 1}, {3, 5, 1}));
  CHECK_FALSE(crosses({2, 5, 1}, {3, 4, 1}));
  CHECK_THROWS_AS(crosses({1, 3, 1}, {2, 4, 2}), InvalidParams);
}

TEST_CASE("crossing is symmetric, irreflexive and rotation invariant") {
  auto g = gen::rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto params = ModelParams::make(gen::uniform(g, 1, 5), gen::uniform(g, 1, 3), gen::uniform(g, 1, 4));
    const auto all = enumerate_diagonals(params);
    for (const auto& a : all)
      for (const auto& b : all) {
        if (a.k != b.k) continue;
        CHECK(crosses(a, b) == crosses(b, a));
        CHECK(crosses(rho(a, params), rho(b, params)) == crosses(a, b));
        CHECK(crosses(a, b) == oracle::interleave({a.i, a.j}, {b.i, b.j}));
      }
    for (const auto& a : all) CHECK_FALSE(crosses(a, a));
  }
}

TEST_CASE("m-diagonals") {
  const auto hex = ModelParams::make(1, 2, 1);
  CHECK(is_m_diagonal(1, 4, hex));
  CHECK_FALSE(is_m_diagonal(1, 3, hex));
  const auto oct = ModelParams::make(2, 2, 1);
  CHECK(is_m_diagonal(2, 7, oct));
  for (int n = 1; n <= 5; ++n) {
    const auto params = ModelParams::make(n, 1, 1);
    const int N = params.region_size();
    for (int i = 1; i <= N; ++i)
      for (int j = i + 2; j <= N; ++j)
        if (!(i == 1 && j == N)) CHECK(is_m_diagonal(i, j, params));
  }
}

TEST_CASE("m-diagonal condition is the j - i = 1 mod m filter") {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 3; ++m) {
      const auto params = ModelParams::make(n, m, 1);
      const int N = params.region_size();
      for (int i = 1; i <= N; ++i)
        for (int j = i + 2; j <= N; ++j) {
          if (i == 1 && j == N) continue;
          CHECK(is_m_diagonal(i, j, params) == ((j - i) % m == 1 % m));
        }
    }
}

TEST_CASE("canonical form and validation") {
  const auto params = ModelParams::make(3, 1, 3);
  CHECK(normalize(5, 2, 4, params) == Diagonal{2, 5, 1});
  CHECK(normalize(0, 3, 0, params) == Diagonal{3, 6, 3});
  CHECK(is_valid_diagonal({2, 4, 1}, params));
  CHECK_FALSE(is_valid_diagonal({2, 3, 1}, params));
  CHECK_FALSE(is_valid_diagonal({1, 6, 1}, params));
  CHECK_FALSE(is_valid_diagonal({2, 4, 4}, params));
  CHECK_THROWS_AS(make_diagonal(1, 6, 1, params), InvalidParams);
  CHECK(to_string(Diagonal{2, 4, 1}) == "(2,4,1)");
}

}  // TEST_SUITE
