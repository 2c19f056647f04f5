#pragma once

// Test-only reference implementations. Nothing here calls the library's
// formula or lattice code; each oracle re-derives its values from scratch.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Tuple = std::array<std::int64_t, 4>;  // n, e, k, c

// Transcribed independently, in plain int64.
std::int64_t d3(std::int64_t n, std::int64_t e, std::int64_t k, std::int64_t c);
std::int64_t t3(std::int64_t n, std::int64_t e, std::int64_t k, std::int64_t c);
std::int64_t s3(std::int64_t n, std::int64_t e, std::int64_t k, std::int64_t c);

/// The double point expression exactly as printed, including its constant.
std::int64_t printed_double_point(std::int64_t n, std::int64_t e, std::int64_t k, std::int64_t c);

/// Every (n, e, k, c) with 1 <= n <= n_max, |e|, |k|, |c| <= bound and
/// d3 = t3 = 0, found by scanning the full c axis for each (n, e, k).
std::vector<Tuple> brute_force_d3_t3(int n_max, int bound);

/// Coefficients (constant first) of d3(n, n - 12, 24 - 3n, 3n - 12), expanded
/// term by term with schoolbook polynomial arithmetic.
std::vector<std::int64_t> conic_bundle_cubic_expansion();

/// Gram matrix of Bl_m(P^2) (quadric = false) or Bl_m(P^1 x P^1).
std::vector<std::vector<std::int64_t>> gram(bool quadric, int m);

std::int64_t pair(const std::vector<std::vector<std::int64_t>>& g, const std::vector<std::int64_t>& a,
                  const std::vector<std::int64_t>& b);

/// Every integer vector in the box with H.L = 1 and L^2 + L.K = -2, by a plain
/// odometer over the box. K is given explicitly.
std::vector<std::vector<std::int64_t>> naive_line_classes(const std::vector<std::vector<std::int64_t>>& g,
                                                          const std::vector<std::int64_t>& H,
                                                          const std::vector<std::int64_t>& K,
                                                          const std::vector<std::pair<std::int64_t, std::int64_t>>& box);

/// Orbit sizes keyed by a canonical form that sorts the E coordinates within
/// the given index groups (0-based positions in the vector).
std::map<std::vector<std::int64_t>, std::size_t> orbit_sizes(const std::vector<std::vector<std::int64_t>>& classes,
                                                             const std::vector<std::vector<std::size_t>>& groups);

/// Seeded generator shared by the property tests.
std::mt19937_64& rng();
std::int64_t uniform(std::int64_t lo, std::int64_t hi);

}  // namespace oracle
