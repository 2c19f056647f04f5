#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trisecant/kernels.hpp"

#include <vector>

namespace k = trisecant::kernels;

namespace {

// Restores the detected backend after each test.
class Kernels : public ::testing::Test {
 protected:
  void TearDown() override { k::select(k::detect()); }
};

std::vector<std::int32_t> random_column(std::size_t size, std::int32_t lo, std::int32_t hi) {
  std::vector<std::int32_t> v(size);
  for (auto& x : v) x = static_cast<std::int32_t>(oracle::uniform(lo, hi));
  return v;
}

std::vector<std::uint32_t> naive_match_two(const std::vector<std::int32_t>& x, const std::vector<std::int32_t>& y,
                                           std::int32_t tx, std::int32_t ty, std::uint32_t base) {
  std::vector<std::uint32_t> out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == tx && y[j] == ty) out.push_back(base + static_cast<std::uint32_t>(j));
  }
  return out;
}

std::vector<k::Backend> backends() {
  std::vector<k::Backend> out{k::Backend::scalar};
  if (k::available(k::Backend::avx2)) out.push_back(k::Backend::avx2);
  return out;
}

}  // namespace

TEST_F(Kernels, ScalarIsAlwaysAvailable) {
  EXPECT_TRUE(k::available(k::Backend::scalar));
  EXPECT_EQ(k::name(k::Backend::scalar), "scalar");
  EXPECT_EQ(k::name(k::Backend::avx2), "avx2");
}

TEST_F(Kernels, SelectSwitchesTheActiveBackend) {
  for (auto b : backends()) {
    k::select(b);
    EXPECT_EQ(k::active(), b);
  }
  if (!k::available(k::Backend::avx2)) {
    EXPECT_THROW(k::select(k::Backend::avx2), std::runtime_error);
  }
}

TEST_F(Kernels, MatchTwoAgreesWithNaiveScanAcrossLengths) {
  // Lengths straddle the 8-lane boundary so the tail path is covered.
  for (std::size_t size : {0u, 1u, 7u, 8u, 9u, 15u, 16u, 17u, 63u, 64u, 65u, 1000u, 4099u}) {
    const auto x = random_column(size, -3, 3);
    const auto y = random_column(size, -3, 3);
    const auto expected = naive_match_two(x, y, 1, -2, 17);
    for (auto b : backends()) {
      k::select(b);
      std::vector<std::uint32_t> hits{99};  // must append, not overwrite
      k::match_two(x, y, 1, -2, 17, hits);
      ASSERT_EQ(hits.front(), 99u);
      ASSERT_EQ(std::vector<std::uint32_t>(hits.begin() + 1, hits.end()), expected)
          << k::name(b) << " size " << size;
      ASSERT_EQ(k::count_two(x, y, 1, -2), expected.size()) << k::name(b);
    }
  }
}

TEST_F(Kernels, MatchOneAgreesWithNaiveScan) {
  for (int trial = 0; trial < 50; ++trial) {
    const auto size = static_cast<std::size_t>(oracle::uniform(0, 300));
    const auto x = random_column(size, -2, 2);
    std::vector<std::uint32_t> expected;
    for (std::size_t j = 0; j < size; ++j) {
      if (x[j] == 0) expected.push_back(5 + static_cast<std::uint32_t>(j));
    }
    for (auto b : backends()) {
      k::select(b);
      std::vector<std::uint32_t> hits;
      k::match_one(x, 0, 5, hits);
      ASSERT_EQ(hits, expected) << k::name(b);
    }
  }
}

TEST_F(Kernels, ExtremeValuesCompareExactly) {
  const std::int32_t lo = std::numeric_limits<std::int32_t>::min();
  const std::int32_t hi = std::numeric_limits<std::int32_t>::max();
  std::vector<std::int32_t> x(37, lo), y(37, hi);
  x[3] = hi;
  x[30] = hi;
  for (auto b : backends()) {
    k::select(b);
    std::vector<std::uint32_t> hits;
    k::match_two(x, y, hi, hi, 0, hits);
    EXPECT_EQ(hits, (std::vector<std::uint32_t>{3, 30})) << k::name(b);
  }
}

TEST_F(Kernels, BackendsAgreeOnRandomWideRanges) {
  if (!k::available(k::Backend::avx2)) GTEST_SKIP() << "no AVX2 on this CPU";
  for (int trial = 0; trial < 200; ++trial) {
    const auto size = static_cast<std::size_t>(oracle::uniform(0, 2000));
    const auto x = random_column(size, -1000000, 1000000);
    auto y = random_column(size, -1, 1);
    const std::int32_t tx = size ? x[static_cast<std::size_t>(oracle::uniform(0, static_cast<std::int64_t>(size) - 1))] : 0;
    std::vector<std::uint32_t> scalar_hits, avx_hits;
    k::select(k::Backend::scalar);
    k::match_two(x, y, tx, 0, 0, scalar_hits);
    k::select(k::Backend::avx2);
    k::match_two(x, y, tx, 0, 0, avx_hits);
    ASSERT_EQ(scalar_hits, avx_hits);
  }
}
