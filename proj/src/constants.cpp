#include "kva/constants.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace kva {

namespace {

const Poly T = Poly::variable();

Poly constant(const Rat& c) { return Poly{c}; }

// (t^2 + 3)^2
Poly tsq_plus3_sq() { return (T * T + constant(3)).pow(2); }

void require_unit_interval(const Rat& c, const char* who) {
  if (sgn(c) <= 0 || c >= 1) throw std::invalid_argument(std::string(who) + ": c must lie in (0, 1)");
}

PolyClaim claim(std::string label, Poly p, int t0) {
  Rat start(t0);
  auto result = poly_positive_on_ray(p, start);
  return {std::move(label), std::move(p), std::move(start), std::move(result)};
}

PointCheck point(std::string label, bool ok, const Rat& value) {
  return {std::move(label), ok, to_fraction_string(value), approx(value)};
}

PointCheck point(std::string label, bool ok, const QuadExpr& value) {
  return {std::move(label), ok, value.to_string(), value.to_double()};
}

void set_margin(ConstraintCert& cert, const Rat& m) {
  cert.margin = to_fraction_string(m);
  cert.margin_approx = approx(m);
}

void set_margin(ConstraintCert& cert, const QuadExpr& m) {
  cert.margin = m.to_string();
  cert.margin_approx = m.to_double();
}

void finalize(ConstraintCert& cert) {
  cert.certified = std::all_of(cert.polys.begin(), cert.polys.end(), [](const PolyClaim& c) { return c.result.positive; }) &&
                   std::all_of(cert.points.begin(), cert.points.end(), [](const PointCheck& p) { return p.ok; });
  if (cert.certified) return;
  for (const auto& c : cert.polys) {
    if (c.result.positive) continue;
    cert.failing_t = c.result.counter_point ? *c.result.counter_point : *c.result.counter_lo;
    return;
  }
}

// (1 - c) * 2 (t^2+3)^2, the lower bound for N^2 when r is maximal.
Poly n2_lower(const Rat& c) { return tsq_plus3_sq() * Rat(2 * (1 - c)); }

}  // namespace

QuadExpr seshadri_ratio(const Rat& c, const Rat& t) {
  require_unit_interval(c, "seshadri_ratio");
  const Rat t2 = t * t;
  const Rat s = c - t2 / (16 * (t2 + 3) * (t2 + 3));
  if (sgn(s) <= 0) throw std::domain_error("seshadri_ratio: non-positive radicand at c = " + to_fraction_string(c));
  return QuadExpr(Rat(0), Rat(1 / c), s);
}

QuadExpr delta_raw(const Rat& c, const Rat& t) { return (seshadri_ratio(c, t) - Rat(1)) * t; }

ConstraintCert lhs_increasing_cert(const Rat& c, int t0) {
  ConstraintCert cert;
  cert.id = "lhs_increasing";
  cert.statement = "t*((1/c)*sqrt(c - t^2/(16(t^2+3)^2)) - 1) is increasing for t >= t0";
  // d/dt t^2/(t^2+3)^2 = 2t(3 - t^2)/(t^2+3)^3
  cert.polys.push_back(claim("2t(t^2-3) > 0: t^2/(t^2+3)^2 decreasing", T * (T * T - constant(3)) * Rat(2), t0));
  const QuadExpr ratio = seshadri_ratio(c, Rat(t0));
  cert.points.push_back(point("ratio(t0) > 1", quad_cmp(ratio, Rat(1)) > 0, ratio));
  const QuadExpr dr = delta_raw(c, Rat(t0));
  const bool dr_positive = quad_sign(dr) > 0;
  cert.points.push_back(point("delta_raw(c, t0) > 0", dr_positive, dr));
  if (dr_positive) {
    const Rat floored = quad_floor_milli(dr);
    cert.points.push_back(point("delta_raw(c, t0) > floor_milli", quad_cmp(dr, floored) > 0, dr - floored));
  }
  set_margin(cert, dr);
  finalize(cert);
  return cert;
}

Rat ceiling_from_n2(int kmin) {
  if (kmin < 2) throw std::invalid_argument("ceiling_from_n2: kmin must be >= 2");
  const Int t0(kmin + 1);
  const Rat w = 2 * Rat((t0 * t0 + 3) * (t0 * t0 + 3));
  const Rat bound = 1 - Rat(4 * t0 + 1) / w;
  const Int n = floor(bound * 1000);
  return make_rat(n < 0 ? Int(0) : n, Int(1000));
}

ConstraintCert ceiling_cert(int kmin) {
  const Rat c = ceiling_from_n2(kmin);
  const int t0 = kmin + 1;
  ConstraintCert cert;
  cert.id = "n2_ceiling";
  cert.statement = "c = largest multiple of 1/1000 with (1-c)*2(t^2+3)^2 >= 4t+1 for all t >= t0";
  const Poly margin = n2_lower(c) - (T * Rat(4) + constant(1));
  cert.polys.push_back(claim("margin'(t) > 0: margin increasing", margin.derivative(), t0));
  const Rat at_t0 = margin(Rat(t0));
  cert.points.push_back(point("margin(t0) >= 0", sgn(at_t0) >= 0, at_t0));
  const Rat next = c + make_rat(1, 1000);
  const Rat next_margin = (n2_lower(next) - (T * Rat(4) + constant(1)))(Rat(t0));
  cert.points.push_back(point("c + 1/1000 violates at t0", sgn(next_margin) < 0, next_margin));
  set_margin(cert, at_t0);
  finalize(cert);
  return cert;
}

ConstraintCert n2_chain_cert(const Rat& c, int t0) {
  require_unit_interval(c, "n2_chain_cert");
  ConstraintCert cert;
  cert.id = "n2_chain";
  cert.statement = "(1-c)*2(t^2+3)^2 >= 4t+1 for t >= t0, i.e. N^2 >= 4k+5";
  const Poly p = n2_lower(c) - (T * Rat(4) + constant(1));
  cert.polys.push_back(claim("(1-c)*2(t^2+3)^2 - (4t+1) > 0", p, t0));
  set_margin(cert, p(Rat(t0)));
  finalize(cert);
  return cert;
}

ConstraintCert case1_cert(const Rat& c, int t0) {
  require_unit_interval(c, "case1_cert");
  ConstraintCert cert;
  cert.id = "case1";
  cert.statement = "(1-c)*2(t^2+3)^2 > (2t-1)^2 for t >= t0, excluding D^2 > 0";
  const Poly p = n2_lower(c) - (T * Rat(2) - constant(1)).pow(2);
  cert.polys.push_back(claim("(1-c)*2(t^2+3)^2 - (2t-1)^2 > 0", p, t0));
  set_margin(cert, p(Rat(t0)));
  finalize(cert);
  return cert;
}

ConstraintCert case_ds2_zero_cert(int k, int d) {
  if (k < 2) throw std::invalid_argument("case_ds2_zero_cert: k must be >= 2");
  const long t2 = static_cast<long>(k + 1) * (k + 1);
  if (d <= t2) throw std::invalid_argument("case_ds2_zero_cert: d must exceed (k+1)^2");
  ConstraintCert cert;
  cert.id = "case_ds2_zero";
  cert.statement = "(k+1)^2 + 3 <= d + 2 <= L_S.D_S <= (k+1)^2 is contradictory";
  cert.points.push_back(point("(k+1)^2 + 3 <= d + 2", t2 + 3 <= d + 2, Rat(d + 2 - (t2 + 3))));
  cert.points.push_back(point("d + 2 > (k+1)^2", d + 2 > t2, Rat(d + 2 - t2)));
  set_margin(cert, Rat(d + 2 - t2));
  finalize(cert);
  return cert;
}

std::pair<QuadExpr, QuadExpr> z_roots(const Rat& t) {
  if (t < 2) throw std::domain_error("z_roots: t must be >= 2");
  const Rat t2 = t * t;
  const Rat s = t2 * t2 - 2 * t2 * t;
  const Rat p = t2 - t;
  return {QuadExpr(p, Rat(-1), s), QuadExpr(p, Rat(1), s)};
}

QuadExpr z_root_residual(const Rat& t, const QuadExpr& z) {
  return z * z + z * Rat(2 * t - 2 * t * t) + Rat(t * t);
}

Poly z1_decreasing_cleared_difference() {
  const Poly t2 = T * T;
  const Poly t3 = t2 * T;
  const Poly radicand = t2 * t2 - t3 * Rat(2);
  return (T * Rat(2) - constant(1)).pow(2) * radicand - (t3 * Rat(2) - t2 * Rat(3)).pow(2);
}

ConstraintCert interval_containment_cert(const Rat& c, int t0) {
  require_unit_interval(c, "interval_containment_cert");
  ConstraintCert cert;
  cert.id = "interval_containment";
  cert.statement = "(z1(t), z2(t)) contains [1, t^2/c] for t >= t0";
  const Poly t2 = T * T;

  // z1 < 1  <=>  t^2 - t - 1 < sqrt(t^4 - 2t^3)  <=>  (t^4 - 2t^3) - (t^2 - t - 1)^2 > 0
  cert.polys.push_back(claim("z1 < 1 cleared: t^2 - 2t - 1 > 0", t2 - T * Rat(2) - constant(1), t0));
  cert.polys.push_back(claim("side: t^2 - t - 1 > 0", t2 - T - constant(1), t0));
  cert.side_conditions.push_back("side: t^2 - t - 1 > 0");

  // z1' < 0  <=>  (2t-1) sqrt(t^4-2t^3) < 2t^3 - 3t^2
  cert.polys.push_back(claim("z1 decreasing cleared: -[(2t-1)^2(t^4-2t^3) - (2t^3-3t^2)^2] > 0",
                             -z1_decreasing_cleared_difference(), t0));
  cert.polys.push_back(claim("side: 2t - 1 > 0", T * Rat(2) - constant(1), t0));
  cert.polys.push_back(claim("side: 2t^3 - 3t^2 > 0", t2 * T * Rat(2) - t2 * Rat(3), t0));
  cert.side_conditions.push_back("side: 2t - 1 > 0");
  cert.side_conditions.push_back("side: 2t^3 - 3t^2 > 0");

  // z2 > t^2/c  <=>  sqrt(t^4 - 2t^3) > e t^2 + t with e = 1/c - 1; divide the squared form by t^2.
  const Rat e = 1 / c - 1;
  const Poly quad = t2 * Rat(1 - e * e) - T * Rat(2 + 2 * e) - constant(1);
  cert.polys.push_back(claim("z2 > t^2/c cleared: (1-e^2)t^2 - (2+2e)t - 1 > 0", quad, t0));
  cert.polys.push_back(claim("side: e*t + 1 > 0", T * e + constant(1), t0));
  cert.polys.push_back(claim("side: t > 0", T, t0));
  cert.side_conditions.push_back("side: e*t + 1 > 0");
  cert.side_conditions.push_back("side: t > 0");

  const auto [z1, z2] = z_roots(Rat(t0));
  cert.points.push_back(point("z1(t0) < 1", quad_cmp(z1, Rat(1)) < 0, z1));
  const QuadExpr gap = z2 - Rat(Rat(t0 * t0) / c);
  cert.points.push_back(point("z2(t0) - t0^2/c > 0", quad_sign(gap) > 0, gap));
  set_margin(cert, gap);
  finalize(cert);
  return cert;
}

Poly g_poly(const Rat& c, const Rat& delta) {
  require_unit_interval(c, "g_poly");
  if (sgn(delta) <= 0) throw std::invalid_argument("g_poly: delta must be positive");
  return tsq_plus3_sq() * Rat(2 / c) - (constant(1) + T * Rat(1 / delta)).pow(2);
}

ConstraintCert g_positive_cert(const Rat& c, const Rat& delta, int t0) {
  ConstraintCert cert;
  cert.id = "g_positive";
  cert.statement = "g(t) = (2/c)(t^2+3)^2 - (1 + t/delta)^2 > 0 for t >= t0";
  const Poly g = g_poly(c, delta);
  cert.polys.push_back(claim("g(t) > 0", g, t0));
  set_margin(cert, g(Rat(t0)));
  finalize(cert);
  return cert;
}

Rat sigma_bound(int t, const Rat& delta) {
  if (sgn(delta) <= 0) throw std::invalid_argument("sigma_bound: delta must be positive");
  return Rat(t) / delta;
}

GridPoint evaluate_grid_point(const Rat& c, int t0) {
  GridPoint gp;
  gp.c = c;
  if (sgn(c) <= 0 || c >= 1) {
    gp.failed.emplace_back("c_range");
    return gp;
  }
  try {
    const QuadExpr dr = delta_raw(c, Rat(t0));
    if (quad_sign(dr) > 0) gp.delta = quad_floor_milli(dr);
  } catch (const std::domain_error&) {
  }
  if (!gp.delta || sgn(*gp.delta) == 0) {
    gp.failed.emplace_back("delta_positive");
    return gp;
  }
  const ConstraintCert certs[] = {
      n2_chain_cert(c, t0),
      case1_cert(c, t0),
      interval_containment_cert(c, t0),
      g_positive_cert(c, *gp.delta, t0),
  };
  for (const auto& cert : certs) {
    if (cert.certified) continue;
    gp.failed.push_back(cert.id);
    if (!gp.failing_t) gp.failing_t = cert.failing_t;
  }
  gp.passed = gp.failed.empty();
  return gp;
}

bool ConstantsReport::matches_reference() const {
  return c_max && delta_max && *c_max == reference_c() && *delta_max == reference_delta() &&
         c_ceiling == reference_ceiling();
}

namespace {

std::int64_t grid_count(const Rat& grid_step, const Rat& ceiling) {
  if (sgn(grid_step) <= 0) throw std::invalid_argument("c_max_search: grid step must be positive");
  return floor(ceiling / grid_step).get_si();
}

ConstantsReport assemble(const Rat& grid_step, int kmin, const Rat& ceiling, const std::vector<GridPoint>& points) {
  const int t0 = kmin + 1;
  ConstantsReport report;
  report.grid_step = grid_step;
  report.kmin = kmin;
  report.c_ceiling = ceiling;

  // points[i] holds c = (i+1) * grid_step.
  auto best = std::find_if(points.rbegin(), points.rend(), [](const GridPoint& g) { return g.passed; });
  for (auto it = points.rbegin(); it != best; ++it) report.rejected_above.push_back(*it);

  if (best != points.rend()) {
    const Rat c = best->c;
    report.c_max = c;
    report.delta_max = best->delta;
    report.delta_raw_at_c_max = delta_raw(c, Rat(t0));
    report.per_constraint.push_back(lhs_increasing_cert(c, t0));
    report.per_constraint.push_back(ceiling_cert(kmin));
    report.per_constraint.push_back(n2_chain_cert(c, t0));
    report.per_constraint.push_back(case1_cert(c, t0));
    report.per_constraint.push_back(case_ds2_zero_cert(kmin, t0 * t0 + 1));
    report.per_constraint.push_back(interval_containment_cert(c, t0));
    report.per_constraint.push_back(g_positive_cert(c, *best->delta, t0));
  }
  report.claims = published_claims(report);
  for (const auto& claim : report.claims)
    if (!claim.consistent) report.discrepancies.push_back(claim);
  return report;
}

void validate_kmin(int kmin) {
  if (kmin < 2) throw std::invalid_argument("c_max_search: kmin must be >= 2");
}

}  // namespace

ConstantsReport c_max_search_serial(const Rat& grid_step, int kmin) {
  validate_kmin(kmin);
  const Rat ceiling = ceiling_from_n2(kmin);
  const std::int64_t n = grid_count(grid_step, ceiling);
  std::vector<GridPoint> points;
  points.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) points.push_back(evaluate_grid_point(grid_step * Rat(Int(std::to_string(i))), kmin + 1));
  return assemble(grid_step, kmin, ceiling, points);
}

ConstantsReport c_max_search(const Rat& grid_step, int kmin) {
  validate_kmin(kmin);
  const Rat ceiling = ceiling_from_n2(kmin);
  const std::int64_t n = grid_count(grid_step, ceiling);
  std::vector<GridPoint> points(static_cast<std::size_t>(n));
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 1; i <= n; ++i) {
    try {
      points[static_cast<std::size_t>(i - 1)] = evaluate_grid_point(grid_step * Rat(Int(std::to_string(i))), kmin + 1);
    } catch (...) {
#pragma omp critical
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return assemble(grid_step, kmin, ceiling, points);
}

std::vector<PublishedClaim> published_claims(const ConstantsReport& report) {
  std::vector<PublishedClaim> out;
  const Rat c = reference_c();
  const Rat delta = reference_delta();
  const Rat three(3);

  auto rat_claim = [&](std::string id, std::string claimed, const std::optional<Rat>& value, const Rat& expected) {
    PublishedClaim pc;
    pc.id = std::move(id);
    pc.claimed = std::move(claimed);
    pc.recomputed = value ? to_fraction_string(*value) : "none";
    if (value) pc.recomputed_approx = approx(*value);
    pc.consistent = value && *value == expected;
    if (report.kmin != 2 || report.grid_step != make_rat(1, 1000))
      pc.note = "recomputed under non-default grid/kmin settings";
    out.push_back(std::move(pc));
  };
  rat_claim("c_max", "0.887", report.c_max, c);
  rat_claim("delta_max", "0.178", report.delta_max, delta);
  rat_claim("c_ceiling", "0.954", report.c_ceiling, reference_ceiling());

  {
    const QuadExpr dr = delta_raw(c, three);
    PublishedClaim pc{"delta_raw_above_0.178", "slightly above 0.178, difference in the fourth decimal", dr.to_string(),
                      dr.to_double(), quad_in_open_interval(dr, make_rat(178, 1000), make_rat(179, 1000)), ""};
    out.push_back(std::move(pc));
  }
  {
    const QuadExpr f3 = seshadri_ratio(c, three);
    const QuadExpr f2 = seshadri_ratio(c, Rat(2));
    PublishedClaim pc{"f_at_minimal_t", "f(2) ~ 1.0594 at the minimal t = 3", f3.to_string(), f3.to_double(), false,
                      "value matches f(3) in (1.0593, 1.0595); the argument label 2 does not (f(2) ~ " +
                          std::to_string(f2.to_double()) + ")"};
    pc.consistent = false;
    if (!quad_in_open_interval(f3, make_rat(10593, 10000), make_rat(10595, 10000)))
      pc.note = "f(3) lies outside (1.0593, 1.0595)";
    out.push_back(std::move(pc));
  }
  {
    const QuadExpr z1 = z_roots(three).first;
    out.push_back({"z1_at_3", "z1(3) ~ 0.804 < 1", z1.to_string(), z1.to_double(),
                   quad_in_open_interval(z1, make_rat(803, 1000), make_rat(805, 1000)), ""});
  }
  {
    // z1'(t) = 2t - 1 - (2t^3 - 3t^2)/sqrt(t^4 - 2t^3); at t = 3 this is 5 - sqrt(27).
    const QuadExpr correct(Rat(5), Rat(-1), Rat(27));
    out.push_back({"z1_derivative_display", "z1'(t) = -1 + 2t - (3t^2 - 2t^3)/sqrt(t^4 - 2t^3)", correct.to_string(),
                   correct.to_double(), false,
                   "printed expression equals 5 + sqrt(27) > 0 at t = 3; the derivative is 5 - sqrt(27) < 0"});
  }
  {
    const auto z2 = z_roots(three).second;
    const QuadExpr gap = z2 - make_rat(9000, 887);
    // z2'(t) = 2t - 1 + (2t^3 - 3t^2)/sqrt(t^4 - 2t^3) = 5 + sqrt(27) at t = 3
    const QuadExpr z2p(Rat(5), Rat(1), Rat(27));
    const QuadExpr alt1 = z2p - make_rat(9000, 887);
    const QuadExpr alt2 = z2p - make_rat(6000, 887);
    out.push_back({"z2_minus_threshold_at_3", "approximately 0.001", gap.to_string(), gap.to_double(), false,
                   "z2(3) - 9000/887 ~ " + std::to_string(gap.to_double()) + "; z2'(3) - 9000/887 ~ " +
                       std::to_string(alt1.to_double()) + "; z2'(3) - 6000/887 ~ " + std::to_string(alt2.to_double())});
  }
  {
    // L_S^2 = 2ab >= 2(d+2)^2 >= 2((k+1)^2+3)^2; at k = 2 the printed bound gives 144, the one used gives 288.
    out.push_back({"ls2_lower_bound", "2(d+2)^2 >= ((k+1)^2+3)^2", "2((k+1)^2+3)^2 = 288 at k = 2", 288.0, false,
                   "printed right-hand side omits the factor 2 used later (144 at k = 2)"});
  }
  {
    const Rat g3 = g_poly(c, delta)(three);
    out.push_back({"g_at_3_positive", "g(3) > 0", to_fraction_string(g3), approx(g3), sgn(g3) > 0, ""});
  }
  {
    const Rat chain = make_rat(226, 1000) * (23 * 4 + 18 * 2 + 16);
    out.push_back({"case1_chain_at_k2", "0.226*(23k^2+18k+16) > 5k^2+4k+3", to_fraction_string(chain), approx(chain),
                   chain > 5 * 4 + 4 * 2 + 3, ""});
  }
  {
    const Rat chain = make_rat(113, 1000) * 2 * 16 * (4 * 2 + 1);
    out.push_back({"n2_chain_at_k2", "0.113*2*16(4k+1) >= 14k+3 >= 4k+5", to_fraction_string(chain), approx(chain),
                   chain >= 14 * 2 + 3, ""});
  }
  out.push_back({"d2_formula", "D^2 = D_S^2 - (sum m_i)^2", "D^2 = D_S^2 - sum m_i^2", std::nullopt, false,
                 "obstruction search runs both variants (--formula paper|standard)"});
  return out;
}

}  // namespace kva
