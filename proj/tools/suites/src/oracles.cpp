#include "isocay/suites/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace isocay::suites {

BigInt pgl_order_oracle(std::uint64_t q, std::uint32_t d) {
  BigInt qd = 1;
  for (std::uint32_t i = 0; i < d; ++i) qd *= q;
  BigInt prod = 1, qi = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    prod *= qd - qi;
    qi *= q;
  }
  return prod / (q - 1);
}

BigInt psl_order_oracle(std::uint64_t q, std::uint32_t d) {
  return pgl_order_oracle(q, d) / std::gcd<std::uint64_t>(d, q - 1);
}

std::vector<Basis> enumerate_subspaces(std::uint32_t p, std::uint32_t d, std::uint32_t k) {
  std::vector<Basis> out;
  if (k > d) return out;
  // Iterate over pivot sets as increasing k-subsets of columns.
  std::vector<std::uint32_t> piv(k);
  std::iota(piv.begin(), piv.end(), 0u);
  while (true) {
    // Free positions: row i, column c > piv[i] with c not a pivot.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free;
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t c = piv[i] + 1; c < d; ++c)
        if (!std::binary_search(piv.begin(), piv.end(), c)) free.emplace_back(i, c);
    std::vector<std::uint32_t> val(free.size(), 0);
    while (true) {
      Basis b(k, std::vector<std::uint32_t>(d, 0));
      for (std::uint32_t i = 0; i < k; ++i) b[i][piv[i]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) b[free[f].first][free[f].second] = val[f];
      out.push_back(std::move(b));
      std::size_t f = 0;
      while (f < val.size() && ++val[f] == p) val[f++] = 0;
      if (f == val.size()) break;
    }
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && piv[i] == d - k + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++piv[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

std::uint32_t family_order_oracle(std::uint64_t q, std::uint32_t d) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> cosets;
  std::uint64_t x = 1 % d;
  for (std::uint32_t i = 0; i <= 2 * d; ++i) {
    const std::uint64_t y = (d - x) % d;
    cosets.emplace(std::min(x, y), std::max(x, y));
    x = x * (q % d) % d;
  }
  return static_cast<std::uint32_t>(cosets.size());
}

std::uint64_t triangle_oracle(const cayley::CayleyGraph& g) {
  std::vector<std::set<std::uint32_t>> nb(g.n());
  for (std::size_t v = 0; v < g.n(); ++v)
    for (std::size_t c = 0; c < g.r(); ++c) {
      const auto w = g.adj[v * g.r() + c];
      if (w == v) continue;
      nb[v].insert(w);
      nb[w].insert(static_cast<std::uint32_t>(v));
    }
  std::uint64_t sum = 0;
  for (std::size_t u = 0; u < g.n(); ++u)
    for (auto v : nb[u]) {
      if (v <= u) continue;
      for (auto w : nb[u]) sum += nb[v].count(w);
    }
  return sum / 3;
}

std::vector<double> circulant_spectrum_oracle(std::uint32_t n, const std::vector<std::uint32_t>& S) {
  std::vector<double> ev(n);
  const double pi = std::acos(-1.0);
  for (std::uint32_t j = 0; j < n; ++j) {
    double s = 0;
    for (auto x : S) s += std::cos(2 * pi * j * x / n);
    ev[j] = s;
  }
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

cayley::CayleyGraph circulant_graph(std::uint32_t n, const std::vector<std::uint32_t>& S) {
  cayley::CayleyGraph g;
  for (std::uint32_t v = 0; v < n; ++v) g.vertices.push_back({v, 0});
  for (std::uint32_t c = 0; c < S.size(); ++c) g.columns.push_back({c, 0});
  for (std::uint32_t v = 0; v < n; ++v)
    for (auto s : S) g.adj.push_back((v + s) % n);
  g.symmetric = true;
  std::uint32_t gcd = n;
  for (auto s : S) gcd = std::gcd(gcd, s);
  g.connected = gcd == 1;
  return g;
}

}  // namespace isocay::suites
