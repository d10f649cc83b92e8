#include "kva/hyperell.hpp"

#include <array>
#include <stdexcept>

namespace kva {

namespace {

const std::array<SurfaceType, 7>& table() {
  static const std::array<SurfaceType, 7> rows{{
      {1, "Z2", {2, 2, 2, 2}, 2, 2, "A/2, B"},
      {2, "Z2xZ2", {2, 2, 2, 2}, 2, 4, "A/2, B/2"},
      {3, "Z4", {2, 4, 4}, 4, 4, "A/4, B"},
      {4, "Z4xZ2", {2, 4, 4}, 4, 8, "A/4, B/2"},
      {5, "Z3", {3, 3, 3}, 3, 3, "A/3, B"},
      {6, "Z3xZ3", {3, 3, 3}, 3, 9, "A/3, B/3"},
      {7, "Z6", {2, 3, 6}, 6, 6, "A/6, B"},
  }};
  return rows;
}

}  // namespace

std::span<const SurfaceType> surface_table() { return table(); }

const SurfaceType& surface_by_id(int id) {
  if (id < 1 || id > 7) throw std::out_of_range("unknown hyperelliptic surface type " + std::to_string(id));
  return table()[static_cast<std::size_t>(id - 1)];
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  if (x.surface != y.surface) throw std::invalid_argument("adding classes on different surface types");
  return {x.a + y.a, x.b + y.b, x.surface};
}

std::int64_t intersect(const DivisorClass& d1, const DivisorClass& d2) {
  if (d1.surface != d2.surface)
    throw std::invalid_argument("intersecting classes on surface types " + std::to_string(d1.surface) + " and " +
                                std::to_string(d2.surface));
  // (A/mu).((mu/gamma)B) = AB/gamma = 1, A^2 = B^2 = 0.
  return d1.a * d2.b + d2.a * d1.b;
}

std::int64_t self_intersection(const DivisorClass& d) { return 2 * d.a * d.b; }

bool is_ample(const DivisorClass& d) { return d.a > 0 && d.b > 0; }

bool is_nonzero_effective_cone(const DivisorClass& d) { return d.a >= 0 && d.b >= 0 && (d.a != 0 || d.b != 0); }

bool kva_sufficient(const DivisorClass& d, int k) {
  if (k < 0) throw std::invalid_argument("kva_sufficient: negative k");
  return d.a >= k + 2 && d.b >= k + 2;
}

}  // namespace kva
