#pragma once

// Num(S) of a hyperelliptic surface in Serrano's basis A/mu, (mu/gamma)B.
// The intersection form in that basis is [[0,1],[1,0]] for every type; the
// type only contributes metadata.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kva {

struct SurfaceType {
  int id = 0;
  std::string group_name;
  std::vector<int> fiber_multiplicities;
  int mu = 0;     // lcm of the fiber multiplicities
  int gamma = 0;  // |G|
  std::string basis_label;
};

/// The seven Bagnera-de Franchis types, in id order.
std::span<const SurfaceType> surface_table();

/// Throws std::out_of_range unless 1 <= id <= 7.
const SurfaceType& surface_by_id(int id);

/// a*(A/mu) + b*(mu/gamma)B on the surface of type `surface`.
struct DivisorClass {
  std::int64_t a = 0;
  std::int64_t b = 0;
  int surface = 1;

  friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// K_S is numerically trivial.
inline DivisorClass canonical_class(int surface = 1) { return {0, 0, surface}; }

/// a1*b2 + a2*b1. Throws std::invalid_argument for classes on different surface types.
std::int64_t intersect(const DivisorClass& d1, const DivisorClass& d2);
std::int64_t self_intersection(const DivisorClass& d);

bool is_ample(const DivisorClass& d);
/// a >= 0, b >= 0, (a,b) != (0,0): the cone obstruction candidates D_S are drawn from.
bool is_nonzero_effective_cone(const DivisorClass& d);
/// Sufficient condition for k-very ampleness: a >= k+2 and b >= k+2.
/// Throws std::invalid_argument for k < 0.
bool kva_sufficient(const DivisorClass& d, int k);

}  // namespace kva
