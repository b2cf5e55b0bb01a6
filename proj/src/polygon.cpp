#include "repclust/polygon.hpp"

#include <utility>

namespace repclust {

namespace {

int reduce(int value, int modulus) {
  int r = (value - 1) % modulus;
  if (r < 0) r += modulus;
  return r + 1;
}

}  // namespace

ModelParams ModelParams::make(int n, int m, int p) {
  if (n < 1) throw InvalidParams("n must be >= 1 (got " + std::to_string(n) + ")");
  if (m < 1) throw InvalidParams("m must be >= 1 (got " + std::to_string(m) + ")");
  if (p < 1) throw InvalidParams("p must be >= 1 (got " + std::to_string(p) + ")");
  return ModelParams{n, m, p};
}

std::string to_string(const Diagonal& d) {
  return "(" + std::to_string(d.i) + "," + std::to_string(d.j) + "," + std::to_string(d.k) + ")";
}

Diagonal normalize(int i, int j, int k, const ModelParams& params) {
  const int N = params.region_size();
  int a = reduce(i, N);
  int b = reduce(j, N);
  if (a > b) std::swap(a, b);
  return {a, b, reduce(k, params.p)};
}

bool is_m_diagonal(int i, int j, const ModelParams& params) {
  const int N = params.region_size();
  const int m = params.m;
  // Vertices i..j on one side, j..N,1..i on the other; both ends counted twice.
  const int first = j - i + 1;
  const int second = N - (j - i) + 1;
  return first % m == 2 % m && second % m == 2 % m;
}

bool is_valid_diagonal(const Diagonal& d, const ModelParams& params) {
  const int N = params.region_size();
  if (d.k < 1 || d.k > params.p) return false;
  if (d.i < 1 || d.j > N || d.i >= d.j) return false;
  if (d.j - d.i < 2) return false;
  if (d.i == 1 && d.j == N) return false;
  return is_m_diagonal(d.i, d.j, params);
}

Diagonal make_diagonal(int i, int j, int k, const ModelParams& params) {
  Diagonal d = normalize(i, j, k, params);
  if (!is_valid_diagonal(d, params))
    throw InvalidParams(to_string(d) + " is not an m-diagonal for n=" + std::to_string(params.n) +
                        ", m=" + std::to_string(params.m) + ", p=" + std::to_string(params.p));
  return d;
}

Diagonal rho(const Diagonal& d, const ModelParams& params, int times) {
  return {d.i, d.j, reduce(d.k + times, params.p)};
}

std::vector<Diagonal> enumerate_diagonals(const ModelParams& params) {
  const int N = params.region_size();
  std::vector<Diagonal> out;
  out.reserve(static_cast<std::size_t>(params.diagonal_count()));
  for (int k = 1; k <= params.p; ++k)
    for (int i = 1; i <= N; ++i)
      for (int j = i + 2; j <= N; ++j) {
        Diagonal d{i, j, k};
        if (is_valid_diagonal(d, params)) out.push_back(d);
      }
  return out;
}

bool crosses(const Diagonal& a, const Diagonal& b) {
  if (a.k != b.k)
    throw InvalidParams("crosses: " + to_string(a) + " and " + to_string(b) +
                        " lie in different regions");
  return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

}  // namespace repclust
