#include "backends.hpp"

namespace trisecant::kernels::detail {
namespace {

void match_two(const std::int32_t* x, const std::int32_t* y, std::size_t n, std::int32_t tx, std::int32_t ty,
               std::uint32_t base, std::vector<std::uint32_t>& hits) {
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] == tx && y[j] == ty) hits.push_back(base + static_cast<std::uint32_t>(j));
  }
}

std::size_t count_two(const std::int32_t* x, const std::int32_t* y, std::size_t n, std::int32_t tx,
                      std::int32_t ty) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < n; ++j) count += (x[j] == tx) & (y[j] == ty);
  return count;
}

void match_one(const std::int32_t* x, std::size_t n, std::int32_t tx, std::uint32_t base,
               std::vector<std::uint32_t>& hits) {
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] == tx) hits.push_back(base + static_cast<std::uint32_t>(j));
  }
}

}  // namespace

const Table scalar_table{&match_two, &count_two, &match_one};

}  // namespace trisecant::kernels::detail
