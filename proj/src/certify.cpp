#include "kva/certify.hpp"

#include <stdexcept>

#include "kva/blowup.hpp"

namespace kva {

namespace {

Int to_int(std::int64_t v) { return Int(std::to_string(v)); }

}  // namespace

std::vector<std::string> InstanceCertificate::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& h : hypothesis_checks)
    if (!h.ok) out.push_back(h.name);
  return out;
}

Int max_r(const DivisorClass& l_s, int k, const Rat& c) {
  if (!is_ample(l_s)) throw std::invalid_argument("max_r: L_S must be ample (a > 0 and b > 0)");
  if (k < 0) throw std::invalid_argument("max_r: negative k");
  const Int l2 = 2 * to_int(l_s.a) * to_int(l_s.b);
  const Int t(k + 1);
  return floor(c * Rat(l2) / Rat(t * t));
}

InstanceCertificate certify_instance(const InstanceInputs& in, const Rat& c, const Rat& delta) {
  surface_by_id(in.surface);
  InstanceCertificate cert;
  cert.inputs = in;
  cert.c = c;
  cert.delta = delta;

  const Int a = to_int(in.a), b = to_int(in.b), d = to_int(in.d), r = to_int(in.r);
  const Int t(in.k + 1);
  cert.l2 = 2 * a * b;
  cert.n2 = cert.l2 - t * t * r;
  cert.r_max = (in.a > 0 && in.b > 0 && in.k >= 0) ? max_r({in.a, in.b, in.surface}, in.k, c) : Int(0);
  const Rat th = Rat(t) + delta;
  cert.threshold_sq = th * th;
  if (in.r >= 1 && sgn(cert.l2) > 0 && in.r <= INT32_MAX) {
    cert.seshadri_lower_sq = seshadri_lower_sq({in.a, in.b, in.surface}, static_cast<int>(in.r));
    cert.star = *cert.seshadri_lower_sq > cert.threshold_sq;
  }

  auto check = [&](std::string name, bool ok, std::string detail) {
    cert.hypothesis_checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const Int t2 = t * t;
  check("k >= 2", in.k >= 2, "k = " + std::to_string(in.k));
  check("d > (k+1)^2", d > t2, "d = " + d.get_str() + ", (k+1)^2 = " + t2.get_str());
  check("a >= d+2", a >= d + 2, "a = " + a.get_str() + ", d+2 = " + Int(d + 2).get_str());
  check("b >= d+2", b >= d + 2, "b = " + b.get_str() + ", d+2 = " + Int(d + 2).get_str());
  check("r >= 2", in.r >= 2, "r = " + r.get_str());
  check("r <= r_max", r <= cert.r_max,
        "r = " + r.get_str() + ", r_max = floor(" + to_fraction_string(c) + " * L^2/(k+1)^2) = " + cert.r_max.get_str());

  bool all_ok = true;
  for (const auto& h : cert.hypothesis_checks) all_ok = all_ok && h.ok;
  cert.verdict = all_ok ? InstanceCertificate::kCertified : InstanceCertificate::kNotMet;
  return cert;
}

}  // namespace kva
