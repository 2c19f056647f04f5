#include "trisecant/kernels.hpp"

#include "backends.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace trisecant::kernels {
namespace {

const detail::Table* table_for(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return &detail::scalar_table;
    case Backend::avx2:
#if defined(TRISECANT_HAVE_AVX2)
      return &detail::avx2_table;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

struct State {
  std::atomic<const detail::Table*> table{nullptr};
  std::atomic<Backend> backend{Backend::scalar};
};

State& state() {
  static State s;
  return s;
}

const detail::Table& current() {
  State& s = state();
  const detail::Table* t = s.table.load(std::memory_order_acquire);
  if (t == nullptr) {
    const Backend b = detect();
    s.backend.store(b, std::memory_order_relaxed);
    t = table_for(b);
    s.table.store(t, std::memory_order_release);
  }
  return *t;
}

}  // namespace

std::string_view name(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

bool available(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(TRISECANT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

Backend detect() { return available(Backend::avx2) ? Backend::avx2 : Backend::scalar; }

Backend active() {
  current();
  return state().backend.load(std::memory_order_relaxed);
}

void select(Backend backend) {
  if (!available(backend)) {
    throw std::runtime_error("kernel backend '" + std::string(name(backend)) + "' is not available");
  }
  state().backend.store(backend, std::memory_order_relaxed);
  state().table.store(table_for(backend), std::memory_order_release);
}

void match_two(std::span<const std::int32_t> x, std::span<const std::int32_t> y, std::int32_t tx,
               std::int32_t ty, std::uint32_t base, std::vector<std::uint32_t>& hits) {
  if (x.size() != y.size()) throw std::invalid_argument("match_two: length mismatch");
  current().match_two(x.data(), y.data(), x.size(), tx, ty, base, hits);
}

std::size_t count_two(std::span<const std::int32_t> x, std::span<const std::int32_t> y, std::int32_t tx,
                      std::int32_t ty) {
  if (x.size() != y.size()) throw std::invalid_argument("count_two: length mismatch");
  return current().count_two(x.data(), y.data(), x.size(), tx, ty);
}

void match_one(std::span<const std::int32_t> x, std::int32_t tx, std::uint32_t base,
               std::vector<std::uint32_t>& hits) {
  current().match_one(x.data(), x.size(), tx, base, hits);
}

}  // namespace trisecant::kernels
