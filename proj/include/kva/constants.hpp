#pragma once

// Exact re-derivation of the constants behind the k-very-ampleness bound
// r <= c * L^2 / (k+1)^2: the admissible c, the Seshadri slack delta and the
// ceiling forced by N^2 >= 4k+5.
//
// Every "for all k >= kmin" statement is reduced to an exact check at the
// binding point t0 = kmin + 1 plus a polynomial positivity certificate on
// [t0, inf). Radicals are cleared here; the squaring side conditions are
// themselves certified and listed with each certificate.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kva/poly.hpp"
#include "kva/quad_expr.hpp"
#include "kva/rat.hpp"

namespace kva {

inline Rat reference_c() { return make_rat(887, 1000); }
inline Rat reference_delta() { return make_rat(178, 1000); }
inline Rat reference_ceiling() { return make_rat(954, 1000); }

/// p(t) > 0 on [t0, inf), with the decision record.
struct PolyClaim {
  std::string label;
  Poly poly;
  Rat t0;
  RayPositivity result;
};

/// An exact check at a single point.
struct PointCheck {
  std::string label;
  bool ok = false;
  std::string exact;
  double approx = 0;
};

struct ConstraintCert {
  std::string id;
  std::string statement;
  bool certified = false;
  std::vector<PolyClaim> polys;
  std::vector<std::string> side_conditions;  // ids of poly claims that justify a squaring or division
  std::vector<PointCheck> points;
  std::string margin;  // exact margin at the binding point
  double margin_approx = 0;
  std::optional<Rat> failing_t;  // set when refuted

  const char* status() const { return certified ? "certified" : "refuted"; }
};

/// t*((1/c) sqrt(c - t^2/(16 (t^2+3)^2)) - 1), the largest admissible delta at t.
/// Throws std::domain_error unless 0 < c < 1 and the radicand is positive.
QuadExpr delta_raw(const Rat& c, const Rat& t = Rat(3));

/// (1/c) sqrt(c - t^2/(16 (t^2+3)^2)).
QuadExpr seshadri_ratio(const Rat& c, const Rat& t);

/// t^2/(t^2+3)^2 decreasing on [t0, inf) (so the ratio above increases in t),
/// ratio(t0) > 1 (so t*(ratio - 1) increases), and delta_raw(c, t0) exceeds its floor.
ConstraintCert lhs_increasing_cert(const Rat& c = reference_c(), int t0 = 3);

/// Largest n/1000 with (1 - n/1000) * 2((k+1)^2+3)^2 >= 4k+5 for all k >= kmin.
Rat ceiling_from_n2(int kmin = 2);
ConstraintCert ceiling_cert(int kmin = 2);

/// (1-c) * 2(t^2+3)^2 >= 4t+1 on t >= t0.
ConstraintCert n2_chain_cert(const Rat& c, int t0 = 3);
/// (1-c) * 2(t^2+3)^2 > (2t-1)^2 on t >= t0.
ConstraintCert case1_cert(const Rat& c, int t0 = 3);
/// (k+1)^2 + 3 <= d + 2 and (k+1)^2 + 3 > (k+1)^2. Throws std::invalid_argument for k < 2 or d <= (k+1)^2.
ConstraintCert case_ds2_zero_cert(int k, int d);

/// Roots of z^2 + (2t - 2t^2) z + t^2. Throws std::domain_error for t < 2.
std::pair<QuadExpr, QuadExpr> z_roots(const Rat& t);
/// The quadratic evaluated at a root; exactly zero for a true root.
QuadExpr z_root_residual(const Rat& t, const QuadExpr& z);
/// (2t-1)^2 (t^4-2t^3) - (2t^3-3t^2)^2, the cleared form of z1'(t) < 0.
Poly z1_decreasing_cleared_difference();

/// (z1(t), z2(t)) contains [1, t^2/c] for all t >= t0.
ConstraintCert interval_containment_cert(const Rat& c, int t0 = 3);

/// g(t) = (2/c)(t^2+3)^2 - (1 + t/delta)^2.
Poly g_poly(const Rat& c, const Rat& delta);
/// g > 0 on t >= t0.
ConstraintCert g_positive_cert(const Rat& c, const Rat& delta, int t0 = 3);

/// t / delta, the ceiling on the sum of multiplicities. Throws std::invalid_argument for delta <= 0.
Rat sigma_bound(int t, const Rat& delta);

/// A published numeric statement, recomputed exactly.
struct PublishedClaim {
  std::string id;
  std::string claimed;
  std::string recomputed;
  std::optional<double> recomputed_approx;
  bool consistent = false;
  std::string note;
};

/// Outcome of the full constraint pipeline at one grid value of c.
struct GridPoint {
  Rat c;
  std::optional<Rat> delta;  // floored to 1/1000
  bool passed = false;
  std::vector<std::string> failed;  // constraint ids
  std::optional<Rat> failing_t;     // from the first refuted polynomial constraint
};

struct ConstantsReport {
  Rat grid_step;
  int kmin = 2;
  std::optional<Rat> c_max;
  std::optional<Rat> delta_max;
  std::optional<QuadExpr> delta_raw_at_c_max;
  Rat c_ceiling;
  std::vector<ConstraintCert> per_constraint;  // at c_max, empty when infeasible
  std::vector<GridPoint> rejected_above;       // grid points in (c_max, c_ceiling], descending
  std::vector<PublishedClaim> claims;
  std::vector<PublishedClaim> discrepancies;   // the inconsistent subset of claims

  bool feasible() const { return c_max.has_value(); }
  bool matches_reference() const;
};

/// Runs every constraint at c with delta = floor_milli(delta_raw(c, t0)).
GridPoint evaluate_grid_point(const Rat& c, int t0 = 3);

/// Scans c = n * grid_step for every n with c <= ceiling_from_n2(kmin) and
/// returns the largest passing value with its certificates. Grid points are
/// evaluated in parallel; the result does not depend on the thread count.
ConstantsReport c_max_search(const Rat& grid_step = make_rat(1, 1000), int kmin = 2);
/// Single-threaded reference for c_max_search.
ConstantsReport c_max_search_serial(const Rat& grid_step = make_rat(1, 1000), int kmin = 2);

/// Published numeric claims behind the constants, with recomputed values.
std::vector<PublishedClaim> published_claims(const ConstantsReport& report);

}  // namespace kva
