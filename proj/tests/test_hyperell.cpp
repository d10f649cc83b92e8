#include <stdexcept>
#include <numeric>

#include "doctest.h"
#include "kva/hyperell.hpp"

using kva::DivisorClass;

namespace {

// "Z4xZ2" -> 8
int group_order(const std::string& name) {
  int order = 1;
  std::size_t pos = 0;
  while (pos < name.size()) {
    REQUIRE(name[pos] == 'Z');
    std::size_t end = name.find('x', pos);
    if (end == std::string::npos) end = name.size();
    order *= std::stoi(name.substr(pos + 1, end - pos - 1));
    pos = end + 1;
  }
  return order;
}

}  // namespace

TEST_CASE("surface table matches the classification") {
  const auto table = kva::surface_table();
  REQUIRE(table.size() == 7);
  struct Row {
    const char* group;
    std::vector<int> ms;
    int mu, gamma;
    const char* basis;
  };
  const Row expected[] = {
      {"Z2", {2, 2, 2, 2}, 2, 2, "A/2, B"},     {"Z2xZ2", {2, 2, 2, 2}, 2, 4, "A/2, B/2"},
      {"Z4", {2, 4, 4}, 4, 4, "A/4, B"},        {"Z4xZ2", {2, 4, 4}, 4, 8, "A/4, B/2"},
      {"Z3", {3, 3, 3}, 3, 3, "A/3, B"},        {"Z3xZ3", {3, 3, 3}, 3, 9, "A/3, B/3"},
      {"Z6", {2, 3, 6}, 6, 6, "A/6, B"},
  };
  for (std::size_t i = 0; i < 7; ++i) {
    const auto& s = table[i];
    CAPTURE(i);
    CHECK(s.id == static_cast<int>(i) + 1);
    CHECK(s.group_name == expected[i].group);
    CHECK(s.fiber_multiplicities == expected[i].ms);
    CHECK(s.mu == expected[i].mu);
    CHECK(s.gamma == expected[i].gamma);
    CHECK(s.basis_label == expected[i].basis);
    // mu = lcm of multiplicities, gamma = |G|
    CHECK(s.mu == std::accumulate(s.fiber_multiplicities.begin(), s.fiber_multiplicities.end(), 1,
                                  [](int a, int b) { return std::lcm(a, b); }));
    CHECK(s.gamma == group_order(s.group_name));
  }
  CHECK(kva::surface_by_id(4).gamma == 8);
  CHECK_THROWS_AS(kva::surface_by_id(0), std::out_of_range);
  CHECK_THROWS_AS(kva::surface_by_id(8), std::out_of_range);
}

TEST_CASE("intersection examples") {
  CHECK(kva::intersect({1, 0}, {0, 1}) == 1);
  CHECK(kva::intersect({12, 12}, {12, 12}) == 288);
  CHECK(kva::intersect({1, 0}, {1, 0}) == 0);
  CHECK_THROWS_AS(kva::intersect({1, 0, 1}, {0, 1, 2}), std::invalid_argument);
  CHECK(kva::self_intersection({12, 12}) == 288);
  CHECK(kva::self_intersection({1, 0}) == 0);
  CHECK(kva::self_intersection({-1, 1}) == -2);
  CHECK(kva::intersect(kva::canonical_class(), {5, 7}) == 0);
}

TEST_CASE("positivity predicates") {
  CHECK(kva::is_ample({1, 1}));
  CHECK_FALSE(kva::is_ample({0, 5}));
  CHECK_FALSE(kva::is_ample({-1, 3}));
  CHECK(kva::is_nonzero_effective_cone({0, 1}));
  CHECK_FALSE(kva::is_nonzero_effective_cone({0, 0}));
  CHECK_FALSE(kva::is_nonzero_effective_cone({-1, 2}));
  CHECK(kva::kva_sufficient({4, 4}, 2));
  CHECK_FALSE(kva::kva_sufficient({4, 3}, 2));
  CHECK(kva::kva_sufficient({12, 12}, 2));
  CHECK_THROWS_AS(kva::kva_sufficient({4, 4}, -1), std::invalid_argument);
}

TEST_CASE("intersection form is symmetric and bilinear on [-10,10]") {
  for (int a1 = -10; a1 <= 10; ++a1)
    for (int b1 = -10; b1 <= 10; ++b1)
      for (int a2 = -10; a2 <= 10; ++a2)
        for (int b2 = -10; b2 <= 10; ++b2) {
          const DivisorClass d1{a1, b1}, d2{a2, b2};
          REQUIRE(kva::intersect(d1, d2) == kva::intersect(d2, d1));
          if (a1 == b1 && a2 == b2) REQUIRE(kva::intersect(d1, d1) == kva::self_intersection(d1));
          for (int a3 = -10; a3 <= 10; a3 += 4)
            for (int b3 = -10; b3 <= 10; b3 += 4) {
              const DivisorClass d3{a3, b3};
              REQUIRE(kva::intersect(d1 + d2, d3) == kva::intersect(d1, d3) + kva::intersect(d2, d3));
            }
        }
}

TEST_CASE("lattice Hodge index and predicate implications on [-10,10]") {
  for (int a1 = -10; a1 <= 10; ++a1)
    for (int b1 = -10; b1 <= 10; ++b1) {
      const DivisorClass d{a1, b1};
      REQUIRE(kva::intersect(d, d) == kva::self_intersection(d));
      if (kva::is_ample(d)) {
        REQUIRE(kva::self_intersection(d) > 0);
        REQUIRE(kva::is_nonzero_effective_cone(d));
      }
      for (int k = 0; k <= 10; ++k)
        if (kva::kva_sufficient(d, k)) REQUIRE(kva::is_ample(d));
      if (kva::self_intersection(d) <= 0) continue;
      for (int a2 = -10; a2 <= 10; ++a2)
        for (int b2 = -10; b2 <= 10; ++b2) {
          const DivisorClass e{a2, b2};
          const auto de = kva::intersect(d, e);
          REQUIRE(kva::self_intersection(d) * kva::self_intersection(e) <= de * de);
        }
    }
}
