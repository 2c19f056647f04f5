// Compiled with -mavx2; only reached after a runtime CPU check.

#include "backends.hpp"

#include <immintrin.h>

namespace trisecant::kernels::detail {
namespace {

constexpr std::size_t kLanes = 8;

inline void emit_mask(unsigned mask, std::size_t offset, std::uint32_t base, std::vector<std::uint32_t>& hits) {
  while (mask != 0) {
    const unsigned lane = static_cast<unsigned>(__builtin_ctz(mask));
    hits.push_back(base + static_cast<std::uint32_t>(offset + lane));
    mask &= mask - 1;
  }
}

inline unsigned lane_mask(__m256i m) {
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(m)));
}

void match_two(const std::int32_t* x, const std::int32_t* y, std::size_t n, std::int32_t tx, std::int32_t ty,
               std::uint32_t base, std::vector<std::uint32_t>& hits) {
  const __m256i vtx = _mm256_set1_epi32(tx);
  const __m256i vty = _mm256_set1_epi32(ty);
  std::size_t j = 0;
  for (; j + kLanes <= n; j += kLanes) {
    const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + j));
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + j));
    const __m256i eq = _mm256_and_si256(_mm256_cmpeq_epi32(vx, vtx), _mm256_cmpeq_epi32(vy, vty));
    const unsigned mask = lane_mask(eq);
    if (mask != 0) emit_mask(mask, j, base, hits);
  }
  for (; j < n; ++j) {
    if (x[j] == tx && y[j] == ty) hits.push_back(base + static_cast<std::uint32_t>(j));
  }
}

std::size_t count_two(const std::int32_t* x, const std::int32_t* y, std::size_t n, std::int32_t tx,
                      std::int32_t ty) {
  const __m256i vtx = _mm256_set1_epi32(tx);
  const __m256i vty = _mm256_set1_epi32(ty);
  // Matching lanes are -1; subtracting accumulates per-lane counts.
  __m256i acc = _mm256_setzero_si256();
  std::size_t count = 0;
  std::size_t j = 0;
  std::size_t since_flush = 0;
  for (; j + kLanes <= n; j += kLanes) {
    const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + j));
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + j));
    acc = _mm256_sub_epi32(acc, _mm256_and_si256(_mm256_cmpeq_epi32(vx, vtx), _mm256_cmpeq_epi32(vy, vty)));
    if (++since_flush == (1u << 30)) {
      alignas(32) std::int32_t lanes[kLanes];
      _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
      for (std::int32_t v : lanes) count += static_cast<std::size_t>(v);
      acc = _mm256_setzero_si256();
      since_flush = 0;
    }
  }
  alignas(32) std::int32_t lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  for (std::int32_t v : lanes) count += static_cast<std::size_t>(v);
  for (; j < n; ++j) count += (x[j] == tx) & (y[j] == ty);
  return count;
}

void match_one(const std::int32_t* x, std::size_t n, std::int32_t tx, std::uint32_t base,
               std::vector<std::uint32_t>& hits) {
  const __m256i vtx = _mm256_set1_epi32(tx);
  std::size_t j = 0;
  for (; j + kLanes <= n; j += kLanes) {
    const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + j));
    const unsigned mask = lane_mask(_mm256_cmpeq_epi32(vx, vtx));
    if (mask != 0) emit_mask(mask, j, base, hits);
  }
  for (; j < n; ++j) {
    if (x[j] == tx) hits.push_back(base + static_cast<std::uint32_t>(j));
  }
}

}  // namespace

const Table avx2_table{&match_two, &count_two, &match_one};

}  // namespace trisecant::kernels::detail
