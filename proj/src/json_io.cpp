#include "kva/json_io.hpp"

namespace kva {

namespace {

Json rat_json(const Rat& x) { return to_fraction_string(x); }

// Integers stay numeric while they fit in a signed 64-bit value.
Json int_json(const Int& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json poly_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rat_json(c));
  return arr;
}

template <class T>
Json optional_rat(const std::optional<T>& v) {
  return v ? rat_json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const SurfaceType& s) {
  Json j;
  j["id"] = s.id;
  j["group"] = s.group_name;
  j["fiber_multiplicities"] = s.fiber_multiplicities;
  j["mu"] = s.mu;
  j["gamma"] = s.gamma;
  j["basis"] = s.basis_label;
  return j;
}

Json surfaces_json(std::span<const SurfaceType> table) {
  Json arr = Json::array();
  for (const auto& s : table) arr.push_back(to_json(s));
  return arr;
}

Json to_json(const ObstructionWitness& w) {
  Json j;
  j["d_s"] = {{"a", w.d_s.a}, {"b", w.d_s.b}};
  j["mults"] = w.mults;
  j["sigma"] = w.sigma;
  j["nd"] = w.nd;
  j["d2"] = w.d2;
  return j;
}

Json obstructions_json(const DivisorClass& l_s, int k, int r, const Rat& delta, D2Formula formula,
                       const SearchBounds& bounds, const std::vector<ObstructionWitness>& witnesses) {
  Json j;
  j["inputs"] = {{"surface", l_s.surface}, {"a", l_s.a}, {"b", l_s.b}, {"k", k}, {"r", r}, {"delta", rat_json(delta)}};
  j["formula"] = to_string(formula);
  j["bounds"] = {{"sigma_max", bounds.sigma_max}, {"n_ample", bounds.n_ample}};
  Json arr = Json::array();
  for (const auto& w : witnesses) arr.push_back(to_json(w));
  j["witnesses"] = std::move(arr);
  return j;
}

Json to_json(const PolyClaim& c) {
  Json j;
  j["label"] = c.label;
  j["poly"] = poly_json(c.poly);
  j["t0"] = rat_json(c.t0);
  j["positive"] = c.result.positive;
  j["method"] = to_string(c.result.method);
  j["shifted"] = poly_json(c.result.shifted);
  j["roots_on_ray"] = c.result.roots_on_ray;
  if (c.result.counter_lo)
    j["counter_interval"] = Json::array({rat_json(*c.result.counter_lo), rat_json(*c.result.counter_hi)});
  else
    j["counter_interval"] = nullptr;
  j["counter_point"] = optional_rat(c.result.counter_point);
  return j;
}

Json to_json(const ConstraintCert& c) {
  Json j;
  j["id"] = c.id;
  j["statement"] = c.statement;
  j["status"] = c.status();
  j["margin"] = c.margin;
  j["margin_approx"] = c.margin_approx;
  j["failing_t"] = optional_rat(c.failing_t);
  j["side_conditions"] = c.side_conditions;
  Json polys = Json::array();
  for (const auto& p : c.polys) polys.push_back(to_json(p));
  j["polynomials"] = std::move(polys);
  Json points = Json::array();
  for (const auto& p : c.points)
    points.push_back({{"label", p.label}, {"ok", p.ok}, {"exact", p.exact}, {"approx", p.approx}});
  j["points"] = std::move(points);
  return j;
}

Json to_json(const PublishedClaim& c) {
  Json j;
  j["id"] = c.id;
  j["claimed"] = c.claimed;
  j["recomputed"] = c.recomputed;
  j["recomputed_approx"] = c.recomputed_approx ? Json(*c.recomputed_approx) : Json(nullptr);
  j["consistent"] = c.consistent;
  j["note"] = c.note;
  return j;
}

Json to_json(const GridPoint& g) {
  Json j;
  j["c"] = rat_json(g.c);
  j["delta"] = optional_rat(g.delta);
  j["passed"] = g.passed;
  j["failed"] = g.failed;
  j["failing_t"] = optional_rat(g.failing_t);
  return j;
}

Json to_json(const ConstantsReport& r) {
  Json j;
  j["grid_step"] = rat_json(r.grid_step);
  j["kmin"] = r.kmin;
  j["feasible"] = r.feasible();
  j["c_max"] = optional_rat(r.c_max);
  j["c_max_approx"] = r.c_max ? Json(approx(*r.c_max)) : Json(nullptr);
  j["delta_max"] = optional_rat(r.delta_max);
  j["delta_raw"] = r.delta_raw_at_c_max ? Json(r.delta_raw_at_c_max->to_string()) : Json(nullptr);
  j["delta_raw_approx"] = r.delta_raw_at_c_max ? Json(r.delta_raw_at_c_max->to_double()) : Json(nullptr);
  j["c_ceiling"] = rat_json(r.c_ceiling);
  j["matches_reference"] = r.matches_reference();
  Json certs = Json::array();
  for (const auto& c : r.per_constraint) certs.push_back(to_json(c));
  j["per_constraint"] = std::move(certs);
  Json rejected = Json::array();
  for (const auto& g : r.rejected_above) rejected.push_back(to_json(g));
  j["rejected_above"] = std::move(rejected);
  Json claims = Json::array();
  for (const auto& c : r.claims) claims.push_back(to_json(c));
  j["claims"] = std::move(claims);
  Json disc = Json::array();
  for (const auto& c : r.discrepancies) disc.push_back(to_json(c));
  j["discrepancies"] = std::move(disc);
  return j;
}

Json to_json(const InstanceCertificate& c) {
  Json j;
  const auto& in = c.inputs;
  j["inputs"] = {{"surface", in.surface}, {"a", in.a}, {"b", in.b}, {"k", in.k}, {"d", in.d}, {"r", in.r}};
  j["parameters"] = {{"c", rat_json(c.c)}, {"delta", rat_json(c.delta)}};
  Json checks = Json::array();
  for (const auto& h : c.hypothesis_checks) checks.push_back({{"name", h.name}, {"ok", h.ok}, {"detail", h.detail}});
  j["hypothesis_checks"] = std::move(checks);
  Json derived;
  derived["L2"] = int_json(c.l2);
  derived["r_max"] = int_json(c.r_max);
  derived["N2"] = int_json(c.n2);
  derived["seshadri_lower_sq"] = optional_rat(c.seshadri_lower_sq);
  derived["seshadri_lower_sq_approx"] = c.seshadri_lower_sq ? Json(approx(*c.seshadri_lower_sq)) : Json(nullptr);
  derived["threshold_sq"] = rat_json(c.threshold_sq);
  derived["threshold_sq_approx"] = approx(c.threshold_sq);
  derived["star_holds"] = c.star;
  j["derived"] = std::move(derived);
  j["verdict"] = c.verdict;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kva
