#include <stdexcept>
#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "kva/blowup.hpp"
#include "oracles.hpp"

using kva::BlowupClass;
using kva::D2Formula;
using kva::DivisorClass;
using kva::make_rat;
using kva::Rat;

namespace {

const Rat kDelta = make_rat(178, 1000);

std::set<oracle::WitnessKey> keys(const std::vector<kva::ObstructionWitness>& ws) {
  std::set<oracle::WitnessKey> out;
  for (const auto& w : ws) out.insert({w.d_s.a, w.d_s.b, w.mults, w.nd, w.d2});
  return out;
}

}  // namespace

TEST_CASE("blowup_intersect examples") {
  const BlowupClass n = kva::n_class({12, 12}, 2, 28);
  CHECK(kva::blowup_intersect(n, n) == 36);
  CHECK(kva::blowup_intersect({{3, 4}, {}}, {{1, 2}, {}}) == kva::intersect({3, 4}, {1, 2}));
  const BlowupClass n3 = kva::n_class({3, 3}, 2, 4);
  const BlowupClass d{{1, 1}, {1, 0, 0, 0}};
  CHECK(kva::blowup_intersect(n3, d) == 3);
  CHECK_THROWS_AS(kva::blowup_intersect(n3, n), std::invalid_argument);
}

TEST_CASE("n_class and l_class") {
  const BlowupClass n = kva::n_class({12, 12}, 2, 28);
  CHECK(n.base == DivisorClass{12, 12});
  CHECK(n.mults == std::vector<std::int64_t>(28, 3));
  CHECK(kva::n_class({12, 12}, 2, 0).mults.empty());
  const BlowupClass l = kva::l_class({12, 12}, 2, 28);
  CHECK(l.mults == std::vector<std::int64_t>(28, 2));
  // K of the blow-up is sum E_i, so N = L - K.
  CHECK(kva::blowup_intersect(n, n) == kva::blowup_intersect(l, l) - 2 * 2 * 28 - 28);
  CHECK_THROWS_AS(kva::n_class({1, 1}, -1, 3), std::invalid_argument);
}

TEST_CASE("N^2 = L^2 - (k+1)^2 r on a grid") {
  for (int a = 1; a <= 30; a += 7)
    for (int b = 1; b <= 30; b += 5)
      for (int k = 0; k <= 6; ++k)
        for (int r = 0; r <= 50; ++r) {
          const BlowupClass n = kva::n_class({a, b}, k, r);
          REQUIRE(kva::blowup_intersect(n, n) == kva::self_intersection({a, b}) - (k + 1) * (k + 1) * r);
        }
}

TEST_CASE("Hodge index on random blow-up classes") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> coord(-5, 5);
  std::uniform_int_distribution<int> points(0, 4);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const int r = points(rng);
    auto random_class = [&]() {
      BlowupClass x{{coord(rng), coord(rng)}, {}};
      for (int j = 0; j < r; ++j) x.mults.push_back(coord(rng));
      return x;
    };
    const BlowupClass x = random_class();
    const BlowupClass y = random_class();
    const auto xx = kva::blowup_intersect(x, x);
    if (xx <= 0) continue;
    ++checked;
    const auto xy = kva::blowup_intersect(x, y);
    REQUIRE(xx * kva::blowup_intersect(y, y) <= xy * xy);
  }
  CHECK(checked > 100);
}

TEST_CASE("seshadri_lower_sq") {
  CHECK(kva::seshadri_lower_sq({12, 12}, 28) == make_rat(2007, 196));
  CHECK(kva::seshadri_lower_sq({1, 1}, 1) == make_rat(7, 4));
  CHECK(kva::seshadri_lower_sq({12, 12}, 1) == 252);
  CHECK(kva::seshadri_lower_sq({12, 12}, 2) == 135);
  CHECK_THROWS_AS(kva::seshadri_lower_sq({12, 12}, 0), std::invalid_argument);
  CHECK_THROWS_AS(kva::seshadri_lower_sq({0, 12}, 3), std::invalid_argument);
}

TEST_CASE("star_holds") {
  CHECK(kva::star_holds({12, 12}, 28, 2, kDelta));
  CHECK(kva::star_holds({12, 12}, 28, 2, Rat(0)));
  CHECK_FALSE(kva::star_holds({3, 3}, 28, 2, Rat(0)));
  CHECK_THROWS_AS(kva::star_holds({3, 3}, 2, 2, Rat(-1)), std::invalid_argument);
}

TEST_CASE("bs_condition3") {
  CHECK(kva::bs_condition3(3, 1, 2));
  CHECK_FALSE(kva::bs_condition3(6, 2, 2));
  CHECK(kva::bs_condition3(1, -1, 2));
  CHECK_FALSE(kva::bs_condition3(3, -1, 2));  // 0 <= -1 fails
  CHECK_FALSE(kva::bs_condition3(4, 2, 2));   // 2*2 < 4 fails
}

TEST_CASE("partitions_at_most") {
  CHECK(kva::partitions_at_most(10, 10).size() == 42);
  CHECK(kva::partitions_at_most(16, 16).size() == 231);
  CHECK(kva::partitions_at_most(5, 2).size() == 3);  // 5, 4+1, 3+2
  CHECK(kva::partitions_at_most(0, 0).size() == 1);
  CHECK(kva::partitions_at_most(3, 0).empty());
  for (const auto& p : kva::partitions_at_most(12, 4)) {
    REQUIRE(p.size() <= 4);
    REQUIRE(std::is_sorted(p.rbegin(), p.rend()));
    REQUIRE(std::accumulate(p.begin(), p.end(), std::int64_t{0}) == 12);
  }
}

TEST_CASE("search_obstruction examples") {
  SUBCASE("(12,12), k = 2, r = 28 has no witness") {
    CHECK(kva::search_obstruction({12, 12}, 2, 28, kDelta).empty());
    CHECK(kva::search_obstruction({12, 12}, 2, 28, kDelta, {D2Formula::SquareSum}).empty());
    const auto bounds = kva::obstruction_bounds({12, 12}, 2, 28, kDelta);
    CHECK(bounds.sigma_max == 16);
    CHECK(bounds.n_ample);
  }
  SUBCASE("small instance has the hand-checked witness") {
    const auto ws = kva::search_obstruction({3, 3}, 2, 4, kDelta);
    const kva::ObstructionWitness expected{{1, 1}, {1, 0, 0, 0}, 1, 3, 1, 2};
    CHECK(std::find(ws.begin(), ws.end(), expected) != ws.end());
    for (const auto& w : ws) REQUIRE(w.holds());
  }
  SUBCASE("no points") { CHECK(kva::search_obstruction({12, 12}, 2, 0, kDelta).empty()); }
  SUBCASE("errors") {
    CHECK_THROWS_AS(kva::search_obstruction({12, 12}, 2, 28, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(kva::search_obstruction({12, 12}, 2, 28, Rat(-1)), std::invalid_argument);
    CHECK_THROWS_AS(kva::search_obstruction({0, 12}, 2, 28, kDelta), std::invalid_argument);
  }
}

TEST_CASE("parallel search equals the serial reference") {
  const struct {
    DivisorClass l;
    int k, r;
    D2Formula f;
  } cases[] = {
      {{3, 3}, 2, 4, D2Formula::SumSquared},   {{3, 3}, 2, 4, D2Formula::SquareSum},
      {{2, 5}, 3, 6, D2Formula::SquareSum},    {{12, 12}, 2, 28, D2Formula::SquareSum},
      {{4, 7}, 2, 30, D2Formula::SumSquared},
  };
  for (const auto& c : cases) {
    const auto par = kva::search_obstruction(c.l, c.k, c.r, kDelta, {c.f});
    const auto ser = kva::search_obstruction_serial(c.l, c.k, c.r, kDelta, {c.f});
    REQUIRE(par == ser);
    for (const auto& w : par) REQUIRE(w.holds());
  }
}

TEST_CASE("SquareSum search matches brute force over ordered tuples") {
  // delta = 1 keeps sigma <= k+1 so the ordered tuple space stays enumerable.
  const struct {
    DivisorClass l;
    int k, r;
  } cases[] = {{{1, 1}, 2, 3}, {{2, 1}, 2, 2}, {{1, 3}, 3, 3}, {{2, 2}, 2, 4}, {{5, 5}, 2, 3}};
  std::size_t total = 0;
  for (const auto& c : cases) {
    CAPTURE(c.l.a);
    CAPTURE(c.l.b);
    const Rat delta(1);
    for (bool filter : {false, true}) {
      const auto bounds = kva::obstruction_bounds(c.l, c.k, c.r, delta);
      const auto found = kva::search_obstruction(c.l, c.k, c.r, delta, {D2Formula::SquareSum, filter});
      const auto brute =
          oracle::brute_force_standard(c.l, c.k, c.r, bounds.sigma_max, 40, filter && bounds.n_ample);
      REQUIRE(keys(found) == brute);
      total += brute.size();
    }
  }
  CHECK(total > 20);
  MESSAGE("brute-force witnesses compared: " << total);
}

TEST_CASE("SumSquared witnesses agree with direct blow-up arithmetic on the concentrated vector") {
  // For m = (sigma, 0, ..., 0) both D^2 formulas coincide.
  for (const auto& w : kva::search_obstruction({3, 3}, 2, 4, kDelta)) {
    const BlowupClass d{w.d_s, w.mults};
    REQUIRE(kva::blowup_intersect(d, d) == w.d2);
    REQUIRE(kva::blowup_intersect(kva::n_class({3, 3}, 2, 4), d) == w.nd);
  }
}

TEST_CASE("instances meeting the hypotheses admit no witness") {
  for (int k = 2; k <= 4; ++k) {
    const int t = k + 1;
    const int d = t * t + 1;
    for (int a : {d + 2, d + 5}) {
      const DivisorClass l{a, d + 2};
      const std::int64_t l2 = kva::self_intersection(l);
      const auto r_max = static_cast<int>(887 * l2 / (1000 * t * t));
      for (int r : {2, r_max}) {
        CAPTURE(k);
        CAPTURE(a);
        CAPTURE(r);
        REQUIRE(kva::search_obstruction(l, k, r, kDelta).empty());
        REQUIRE(kva::search_obstruction(l, k, r, kDelta, {D2Formula::SquareSum}).empty());
      }
    }
  }
}
