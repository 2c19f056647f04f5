#include "trisecant/picard.hpp"

#include "trisecant/kernels.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace trisecant {

namespace {

// Largest tail slice scanned by one kernel call.
constexpr std::size_t kTailLimit = 4096;

std::int64_t narrow(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

void check_e_index(const SurfaceModel& model, int i) {
  if (i < 1 || i > model.m) {
    throw std::invalid_argument("exceptional index " + std::to_string(i) + " outside 1.." + std::to_string(model.m));
  }
}

}  // namespace

SurfaceModel SurfaceModel::plane(int m) {
  if (m < 0) throw std::invalid_argument("blow-up count must be nonnegative");
  return {Base::plane, m};
}

SurfaceModel SurfaceModel::quadric(int m) {
  if (m < 0) throw std::invalid_argument("blow-up count must be nonnegative");
  return {Base::quadric, m};
}

std::size_t SurfaceModel::rank() const { return static_cast<std::size_t>(m) + e_offset(); }

std::size_t SurfaceModel::e_offset() const { return base == Base::plane ? 1 : 2; }

std::string SurfaceModel::str() const {
  return "Bl" + std::to_string(m) + (base == Base::plane ? "(P2)" : "(P1xP1)");
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("class rank mismatch");
  DivisorClass out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("class rank mismatch");
  DivisorClass out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

DivisorClass operator*(std::int64_t s, const DivisorClass& a) {
  DivisorClass out = a;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

DivisorClass zero_class(const SurfaceModel& model) { return {std::vector<std::int64_t>(model.rank(), 0)}; }

DivisorClass line_class(const SurfaceModel& model) {
  if (model.base != Base::plane) throw std::invalid_argument("line class exists only on plane models");
  DivisorClass d = zero_class(model);
  d.coeffs[0] = 1;
  return d;
}

DivisorClass fibre_class(const SurfaceModel& model, int which) {
  if (model.base != Base::quadric) throw std::invalid_argument("fibre classes exist only on quadric models");
  if (which != 1 && which != 2) throw std::invalid_argument("fibre index must be 1 or 2");
  DivisorClass d = zero_class(model);
  d.coeffs[static_cast<std::size_t>(which - 1)] = 1;
  return d;
}

DivisorClass exceptional(const SurfaceModel& model, int i) {
  check_e_index(model, i);
  DivisorClass d = zero_class(model);
  d.coeffs[model.e_offset() + static_cast<std::size_t>(i - 1)] = 1;
  return d;
}

DivisorClass exceptional_sum(const SurfaceModel& model, int first, int last) {
  DivisorClass d = zero_class(model);
  for (int i = first; i <= last; ++i) {
    check_e_index(model, i);
    d.coeffs[model.e_offset() + static_cast<std::size_t>(i - 1)] = 1;
  }
  return d;
}

void check_rank(const SurfaceModel& model, const DivisorClass& d) {
  if (d.coeffs.size() != model.rank()) {
    throw std::invalid_argument("class of length " + std::to_string(d.coeffs.size()) + " does not belong to " +
                                model.str() + " (rank " + std::to_string(model.rank()) + ")");
  }
}

std::int64_t intersect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b) {
  check_rank(model, a);
  check_rank(model, b);
  __int128 v = 0;
  const auto& x = a.coeffs;
  const auto& y = b.coeffs;
  if (model.base == Base::plane) {
    v += static_cast<__int128>(x[0]) * y[0];
  } else {
    v += static_cast<__int128>(x[0]) * y[1] + static_cast<__int128>(x[1]) * y[0];
  }
  for (std::size_t i = model.e_offset(); i < x.size(); ++i) v -= static_cast<__int128>(x[i]) * y[i];
  return narrow(v, "intersect");
}

DivisorClass canonical(const SurfaceModel& model) {
  DivisorClass k = zero_class(model);
  if (model.base == Base::plane) {
    k.coeffs[0] = -3;
  } else {
    k.coeffs[0] = -2;
    k.coeffs[1] = -2;
  }
  for (std::size_t i = model.e_offset(); i < k.coeffs.size(); ++i) k.coeffs[i] = 1;
  return k;
}

std::int64_t arithmetic_genus(const SurfaceModel& model, const DivisorClass& d) {
  const __int128 s = static_cast<__int128>(intersect(model, d, d)) + intersect(model, d, canonical(model));
  // s is even for every class: x^2 + x and a^2 - 3a (or 2ab - 2a - 2b) are even.
  return narrow(1 + s / 2, "arithmetic_genus");
}

std::string format_class(const SurfaceModel& model, const DivisorClass& d) {
  check_rank(model, d);
  std::string out;
  auto term = [&](std::int64_t c, const std::string& symbol) {
    if (c == 0) return;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag);
    out += symbol;
  };
  if (model.base == Base::plane) {
    term(d.coeffs[0], "l");
  } else {
    term(d.coeffs[0], "f1");
    term(d.coeffs[1], "f2");
  }
  for (int i = 1; i <= model.m; ++i) term(d.coeffs[model.e_offset() + static_cast<std::size_t>(i - 1)], "E" + std::to_string(i));
  return out.empty() ? "0" : out;
}

Polarization make_polarization(const SurfaceModel& model, DivisorClass H) {
  check_rank(model, H);
  if (intersect(model, H, H) < 1) throw std::invalid_argument("polarization needs H^2 >= 1");
  for (int i = 1; i <= model.m; ++i) {
    if (intersect(model, H, exceptional(model, i)) < 0) {
      throw std::invalid_argument("polarization needs H.E" + std::to_string(i) + " >= 0");
    }
  }
  return {model, std::move(H)};
}

InvariantTuple invariants_of(const Polarization& pol, const Integer& chi) {
  const DivisorClass K = canonical(pol.model);
  const Integer k = intersect(pol.model, K, K);
  return {Integer(intersect(pol.model, pol.H, pol.H)), Integer(intersect(pol.model, pol.H, K)), k, 12 * chi - k,
          std::nullopt};
}

// ---------------------------------------------------------------------------
// Symmetry

std::vector<std::vector<int>> symmetry_blocks(const SurfaceModel& model, const std::vector<DivisorClass>& fixed) {
  for (const auto& d : fixed) check_rank(model, d);
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<std::int64_t>> keys;
  for (int i = 1; i <= model.m; ++i) {
    std::vector<std::int64_t> key;
    for (const auto& d : fixed) key.push_back(d.coeffs[model.e_offset() + static_cast<std::size_t>(i - 1)]);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(std::move(key));
      blocks.push_back({i});
    } else {
      blocks[static_cast<std::size_t>(it - keys.begin())].push_back(i);
    }
  }
  return blocks;
}

DivisorClass canonical_form(const SurfaceModel& model, const std::vector<std::vector<int>>& blocks,
                            const DivisorClass& d) {
  check_rank(model, d);
  DivisorClass out = d;
  std::vector<std::int64_t> values;
  for (const auto& block : blocks) {
    values.clear();
    for (int i : block) values.push_back(d.coeffs[model.e_offset() + static_cast<std::size_t>(i - 1)]);
    std::sort(values.begin(), values.end(), std::greater<>());
    for (std::size_t j = 0; j < block.size(); ++j) {
      out.coeffs[model.e_offset() + static_cast<std::size_t>(block[j] - 1)] = values[j];
    }
  }
  return out;
}

std::size_t LineClassResult::total() const {
  std::size_t n = 0;
  for (const auto& o : orbits) n += o.size;
  return n;
}

// ---------------------------------------------------------------------------
// Box scans
//
// Coordinates split into a head walked by an odometer and a tail of trailing
// E coefficients tabulated once. Both target quantities are additive over the
// split because the pairing is diagonal on the E block, so each head point
// becomes an equality scan over the tail table.

namespace {

struct TailTable {
  std::size_t start = 0;  // first tail coordinate
  std::size_t size = 1;   // number of tail points
  std::vector<std::int64_t> coords;  // size * (rank - start), row-major
  std::vector<std::int32_t> linear;  // -sum h_i x_i
  std::vector<std::int32_t> genus;   // -sum (x_i^2 + x_i)
};

std::int32_t to_int32(std::int64_t v) {
  if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min()) {
    throw std::overflow_error("box scan: tail value exceeds 32 bits");
  }
  return static_cast<std::int32_t>(v);
}

std::uint64_t width(const CoordinateRange& r) { return static_cast<std::uint64_t>(r.hi - r.lo) + 1; }

bool box_empty(const Box& box) {
  return std::any_of(box.begin(), box.end(), [](const CoordinateRange& r) { return r.hi < r.lo; });
}

TailTable build_tail(const Polarization& pol, const Box& box) {
  const std::size_t rank = pol.model.rank();
  TailTable t;
  t.start = rank;
  std::uint64_t product = 1;
  while (t.start > pol.model.e_offset()) {
    const std::uint64_t w = width(box[t.start - 1]);
    if (product * w > kTailLimit) break;
    product *= w;
    --t.start;
  }
  t.size = static_cast<std::size_t>(product);
  const std::size_t len = rank - t.start;
  t.coords.resize(t.size * len);
  t.linear.resize(t.size);
  t.genus.resize(t.size);
  std::vector<std::int64_t> x(len);
  for (std::size_t j = 0; j < len; ++j) x[j] = box[t.start + j].lo;
  for (std::size_t p = 0; p < t.size; ++p) {
    std::int64_t lin = 0;
    std::int64_t gen = 0;
    for (std::size_t j = 0; j < len; ++j) {
      t.coords[p * len + j] = x[j];
      lin -= pol.H.coeffs[t.start + j] * x[j];
      gen -= x[j] * x[j] + x[j];
    }
    t.linear[p] = to_int32(lin);
    t.genus[p] = to_int32(gen);
    // Advance the odometer, last coordinate fastest.
    for (std::size_t j = len; j-- > 0;) {
      if (x[j] < box[t.start + j].hi) {
        ++x[j];
        break;
      }
      x[j] = box[t.start + j].lo;
    }
  }
  return t;
}

// Calls visit(head) for every head point; head has full rank with zero tail.
template <typename Visit>
void walk_head(const SurfaceModel& model, const Box& box, std::size_t start, Visit&& visit) {
  DivisorClass head = zero_class(model);
  for (std::size_t j = 0; j < start; ++j) head.coeffs[j] = box[j].lo;
  while (true) {
    visit(head);
    bool advanced = false;
    for (std::size_t j = start; j-- > 0;) {
      if (head.coeffs[j] < box[j].hi) {
        ++head.coeffs[j];
        advanced = true;
        break;
      }
      head.coeffs[j] = box[j].lo;
    }
    if (!advanced) return;
  }
}

DivisorClass assemble(const DivisorClass& head, const TailTable& tail, std::uint32_t index) {
  DivisorClass d = head;
  const std::size_t len = d.coeffs.size() - tail.start;
  for (std::size_t j = 0; j < len; ++j) d.coeffs[tail.start + j] = tail.coords[index * len + j];
  return d;
}

void check_box(const SurfaceModel& model, const Box& box) {
  if (box.size() != model.rank()) {
    throw std::invalid_argument("box has " + std::to_string(box.size()) + " ranges, model rank is " +
                                std::to_string(model.rank()));
  }
}

}  // namespace

LineClassResult enumerate_line_classes(const Polarization& pol, const Box& box) {
  check_box(pol.model, box);
  LineClassResult result;
  if (box_empty(box)) return result;
  const SurfaceModel& model = pol.model;
  const DivisorClass K = canonical(model);
  const TailTable tail = build_tail(pol, box);
  std::vector<std::uint32_t> hits;
  walk_head(model, box, tail.start, [&](const DivisorClass& head) {
    const std::int64_t tx = 1 - intersect(model, pol.H, head);
    const std::int64_t ty = -2 - (intersect(model, head, head) + intersect(model, head, K));
    if (tx != static_cast<std::int32_t>(tx) || ty != static_cast<std::int32_t>(ty)) return;
    hits.clear();
    kernels::match_two(tail.linear, tail.genus, static_cast<std::int32_t>(tx), static_cast<std::int32_t>(ty), 0,
                       hits);
    for (std::uint32_t h : hits) result.classes.push_back(assemble(head, tail, h));
  });
  std::sort(result.classes.begin(), result.classes.end());

  const auto blocks = symmetry_blocks(model, {pol.H});
  std::map<DivisorClass, std::size_t> orbits;
  for (const auto& c : result.classes) ++orbits[canonical_form(model, blocks, c)];
  for (auto& [rep, size] : orbits) result.orbits.push_back({rep, size});
  return result;
}

std::vector<Decomposition> enumerate_decompositions(const Polarization& pol, const DivisorClass& target,
                                                    std::int64_t deg_A, const Box& box) {
  check_rank(pol.model, target);
  check_box(pol.model, box);
  std::vector<Decomposition> out;
  if (deg_A < 1 || box_empty(box)) return out;
  const SurfaceModel& model = pol.model;
  const TailTable tail = build_tail(pol, box);
  std::vector<std::uint32_t> hits;
  walk_head(model, box, tail.start, [&](const DivisorClass& head) {
    const std::int64_t tx = deg_A - intersect(model, pol.H, head);
    if (tx != static_cast<std::int32_t>(tx)) return;
    hits.clear();
    kernels::match_one(tail.linear, static_cast<std::int32_t>(tx), 0, hits);
    for (std::uint32_t h : hits) {
      DivisorClass A = assemble(head, tail, h);
      if (arithmetic_genus(model, A) < 0) continue;
      DivisorClass B = target - A;
      if (arithmetic_genus(model, B) < 0) continue;
      out.push_back({std::move(A), std::move(B)});
    }
  });
  std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) { return a.A < b.A; });
  return out;
}

Box multiplicity_box(const SurfaceModel& model, const std::vector<CoordinateRange>& leading,
                     const std::vector<CoordinateRange>& multiplicities) {
  if (leading.size() != model.e_offset() || multiplicities.size() != static_cast<std::size_t>(model.m)) {
    throw std::invalid_argument("multiplicity_box: range count does not match " + model.str());
  }
  Box box = leading;
  for (const auto& r : multiplicities) box.push_back({-r.hi, -r.lo});
  return box;
}

// ---------------------------------------------------------------------------
// Named models

namespace {

DivisorClass plane_class(const SurfaceModel& model, std::int64_t a, const std::vector<std::int64_t>& mult) {
  DivisorClass d = zero_class(model);
  d.coeffs[0] = a;
  for (std::size_t i = 0; i < mult.size(); ++i) d.coeffs[1 + i] = -mult[i];
  return d;
}

}  // namespace

Polarization bl7_degree8() {
  const auto model = SurfaceModel::plane(7);
  return make_polarization(model, plane_class(model, 6, std::vector<std::int64_t>(7, 2)));
}

Polarization bl8_degree8() {
  const auto model = SurfaceModel::plane(8);
  return make_polarization(model, plane_class(model, 4, std::vector<std::int64_t>(8, 1)));
}

Polarization bl9_quadric_degree9() {
  const auto model = SurfaceModel::quadric(9);
  return make_polarization(model, 3 * fibre_class(model, 1) + 3 * fibre_class(model, 2) - exceptional_sum(model, 1, 9));
}

Polarization bl11_degree10() {
  const auto model = SurfaceModel::plane(11);
  return make_polarization(model, plane_class(model, 6, {2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1}));
}

Polarization bl11_degree12() {
  const auto model = SurfaceModel::plane(11);
  return make_polarization(model, plane_class(model, 9, {3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2}));
}

Polarization del_pezzo(int degree) {
  if (degree < 3 || degree > 9) throw std::invalid_argument("del_pezzo: degree must be in [3, 9]");
  const auto model = SurfaceModel::plane(9 - degree);
  return make_polarization(model, -1 * canonical(model));
}

std::vector<std::string> polarization_names() {
  std::vector<std::string> names = {"bl7-degree8", "bl8-degree8", "bl9-quadric-degree9", "bl11-degree10",
                                    "bl11-degree12"};
  for (int d = 3; d <= 9; ++d) names.push_back("del-pezzo-" + std::to_string(d));
  return names;
}

std::optional<Polarization> polarization_by_name(const std::string& name) {
  if (name == "bl7-degree8") return bl7_degree8();
  if (name == "bl8-degree8") return bl8_degree8();
  if (name == "bl9-quadric-degree9") return bl9_quadric_degree9();
  if (name == "bl11-degree10") return bl11_degree10();
  if (name == "bl11-degree12") return bl11_degree12();
  for (int d = 3; d <= 9; ++d) {
    if (name == "del-pezzo-" + std::to_string(d)) return del_pezzo(d);
  }
  return std::nullopt;
}

DivisorClass degree12_quartic(int i, int j) {
  if (i == j || i < 6 || i > 11 || j < 6 || j > 11) {
    throw std::invalid_argument("degree12_quartic: need distinct indices in 6..11");
  }
  const auto model = SurfaceModel::plane(11);
  return -1 * canonical(model) + exceptional(model, i) + exceptional(model, j);
}

DivisorClass degree12_octic(int i, int j) { return bl11_degree12().H - degree12_quartic(i, j); }

Box degree12_line_box() {
  const auto model = SurfaceModel::plane(11);
  return multiplicity_box(model, {{0, 4}}, std::vector<CoordinateRange>(11, {-1, 2}));
}

Box degree12_decomposition_box() {
  const auto model = SurfaceModel::plane(11);
  std::vector<CoordinateRange> mult(5, {0, 2});
  mult.resize(11, {0, 1});
  return multiplicity_box(model, {{1, 6}}, mult);
}

}  // namespace trisecant
