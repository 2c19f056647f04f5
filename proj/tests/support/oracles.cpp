#include "oracles.hpp"

#include "trisecant/kernels.hpp"

#include <algorithm>

namespace oracle {

std::int64_t d3(std::int64_t n, std::int64_t e, std::int64_t k, std::int64_t c) {
  return 2 * n * n * n - 42 * n * n + 196 * n - k * (3 * n - 28) + c * (3 * n - 20) - e * (18 * n - 132);
}

std::int64_t t3(std::int64_t n, std::int64_t e, std::int64_t k, std::int64_t c) {
  return 6 * n * n - 84 * n + k * (n - 28) - c * (n - 20) + e * (4 * n - 84);
}

std::int64_t s3(std::int64_t n, std::int64_t e, std::int64_t k, std::int64_t c) {
  return n * n * n - 27 * n * n + 176 * n + 108 + c * (3 * n - 37) - k * (3 * n - 53) - e * (15 * n - 177);
}

std::int64_t printed_double_point(std::int64_t n, std::int64_t e, std::int64_t k, std::int64_t c) {
  return (n - 3) * (n - 13) - 5 * e - k + c + 29;
}

std::vector<Tuple> brute_force_d3_t3(int n_max, int bound) {
  const std::size_t width = static_cast<std::size_t>(2 * bound + 1);
  std::vector<std::int32_t> cd(width), ct(width);
  std::vector<std::uint32_t> hits;
  std::vector<Tuple> out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t e = -bound; e <= bound; ++e) {
      for (std::size_t i = 0; i < width; ++i) {
        const std::int64_t c = static_cast<std::int64_t>(i) - bound;
        cd[i] = static_cast<std::int32_t>(d3(n, e, 0, c) - d3(n, e, 0, 0));
        ct[i] = static_cast<std::int32_t>(t3(n, e, 0, c) - t3(n, e, 0, 0));
      }
      for (std::int64_t k = -bound; k <= bound; ++k) {
        hits.clear();
        trisecant::kernels::match_two(cd, ct, static_cast<std::int32_t>(-d3(n, e, k, 0)),
                                      static_cast<std::int32_t>(-t3(n, e, k, 0)), 0, hits);
        for (std::uint32_t h : hits) out.push_back({n, e, k, static_cast<std::int64_t>(h) - bound});
      }
    }
  }
  return out;
}

namespace {

using Poly = std::vector<std::int64_t>;

Poly add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly scale(std::int64_t s, Poly a) {
  for (auto& x : a) x *= s;
  return a;
}

}  // namespace

std::vector<std::int64_t> conic_bundle_cubic_expansion() {
  const Poly n = {0, 1};
  const Poly e = {-12, 1};
  const Poly k = {24, -3};
  const Poly c = {-12, 3};
  Poly total = add(add(scale(2, mul(n, mul(n, n))), scale(-42, mul(n, n))), scale(196, n));
  total = add(total, scale(-1, mul(k, Poly{-28, 3})));
  total = add(total, mul(c, Poly{-20, 3}));
  total = add(total, scale(-1, mul(e, Poly{-132, 18})));
  while (total.size() > 1 && total.back() == 0) total.pop_back();
  return total;
}

std::vector<std::vector<std::int64_t>> gram(bool quadric, int m) {
  const std::size_t lead = quadric ? 2 : 1;
  const std::size_t rank = lead + static_cast<std::size_t>(m);
  std::vector<std::vector<std::int64_t>> g(rank, std::vector<std::int64_t>(rank, 0));
  if (quadric) {
    g[0][1] = g[1][0] = 1;
  } else {
    g[0][0] = 1;
  }
  for (std::size_t i = lead; i < rank; ++i) g[i][i] = -1;
  return g;
}

std::int64_t pair(const std::vector<std::vector<std::int64_t>>& g, const std::vector<std::int64_t>& a,
                  const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g[i][j] * b[j];
  }
  return s;
}

std::vector<std::vector<std::int64_t>> naive_line_classes(const std::vector<std::vector<std::int64_t>>& g,
                                                          const std::vector<std::int64_t>& H,
                                                          const std::vector<std::int64_t>& K,
                                                          const std::vector<std::pair<std::int64_t, std::int64_t>>& box) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x;
  for (const auto& [lo, hi] : box) {
    if (hi < lo) return out;
    x.push_back(lo);
  }
  while (true) {
    if (pair(g, H, x) == 1 && pair(g, x, x) + pair(g, x, K) == -2) out.push_back(x);
    std::size_t j = x.size();
    while (j > 0) {
      --j;
      if (x[j] < box[j].second) {
        ++x[j];
        break;
      }
      x[j] = box[j].first;
      if (j == 0) return out;
    }
    if (x.empty()) return out;
  }
}

std::map<std::vector<std::int64_t>, std::size_t> orbit_sizes(const std::vector<std::vector<std::int64_t>>& classes,
                                                             const std::vector<std::vector<std::size_t>>& groups) {
  std::map<std::vector<std::int64_t>, std::size_t> out;
  for (auto c : classes) {
    for (const auto& grp : groups) {
      std::vector<std::int64_t> v;
      for (std::size_t i : grp) v.push_back(c[i]);
      std::sort(v.begin(), v.end());
      for (std::size_t j = 0; j < grp.size(); ++j) c[grp[j]] = v[j];
    }
    ++out[c];
  }
  return out;
}

std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x7c0ffee5eedULL);
  return gen;
}

std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace oracle
