#pragma once

// Data-parallel scan kernels behind the exhaustive searches.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// implementation. The backend is chosen once at first use from the CPU
// features and can be forced for testing. Every backend returns identical
// results; hit lists are in ascending index order.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace trisecant::kernels {

enum class Backend { scalar, avx2 };

std::string_view name(Backend backend);

/// True if this binary carries the backend and the running CPU supports it.
bool available(Backend backend);

/// Backend currently used by the free functions below.
Backend active();

/// Force a backend; throws std::runtime_error if it is unavailable.
void select(Backend backend);

/// Best available backend for this CPU.
Backend detect();

/// Appends base + j for every j with x[j] == tx and y[j] == ty.
/// x and y must have the same length.
void match_two(std::span<const std::int32_t> x, std::span<const std::int32_t> y, std::int32_t tx,
               std::int32_t ty, std::uint32_t base, std::vector<std::uint32_t>& hits);

/// Number of j with x[j] == tx and y[j] == ty.
std::size_t count_two(std::span<const std::int32_t> x, std::span<const std::int32_t> y, std::int32_t tx,
                      std::int32_t ty);

/// Appends base + j for every j with x[j] == tx.
void match_one(std::span<const std::int32_t> x, std::int32_t tx, std::uint32_t base,
               std::vector<std::uint32_t>& hits);

}  // namespace trisecant::kernels
