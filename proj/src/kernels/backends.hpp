#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace trisecant::kernels::detail {

// Raw-pointer entry points shared by every backend. n is the element count.
struct Table {
  void (*match_two)(const std::int32_t* x, const std::int32_t* y, std::size_t n, std::int32_t tx,
                    std::int32_t ty, std::uint32_t base, std::vector<std::uint32_t>& hits);
  std::size_t (*count_two)(const std::int32_t* x, const std::int32_t* y, std::size_t n, std::int32_t tx,
                           std::int32_t ty);
  void (*match_one)(const std::int32_t* x, std::size_t n, std::int32_t tx, std::uint32_t base,
                    std::vector<std::uint32_t>& hits);
};

extern const Table scalar_table;
#if defined(TRISECANT_HAVE_AVX2)
extern const Table avx2_table;
#endif

}  // namespace trisecant::kernels::detail
