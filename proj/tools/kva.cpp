// kva: exact certification of the k-very-ampleness bound on blow-ups of
// hyperelliptic surfaces.
//
// Exit codes: 0 success/certified, 1 checked and failed, 2 usage error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "kva/blowup.hpp"
#include "kva/certify.hpp"
#include "kva/constants.hpp"
#include "kva/hyperell.hpp"
#include "kva/json_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

constexpr std::int64_t kCoordLimit = 1'000'000'000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool json = false;
  bool quiet = false;

  void emit_json(const kva::Json& j) const {
    if (!quiet) std::cout << kva::dump(j);
  }
  std::ostream& text() const {
    static std::ostringstream sink;
    sink.str("");
    return (quiet || json) ? sink : std::cout;
  }
};

std::string fixed6(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

std::string rat_text(const kva::Rat& x) {
  return kva::to_fraction_string(x) + " (~" + fixed6(x.get_d()) + ")";
}

void require_range(const char* name, std::int64_t v, std::int64_t lo, std::int64_t hi) {
  if (v < lo || v > hi)
    throw UsageError(std::string(name) + " = " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
}

const kva::SurfaceType& surface_or_usage(int id) {
  try {
    return kva::surface_by_id(id);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

kva::Rat rat_or_usage(const std::string& text, const char* name) {
  try {
    return kva::parse_rat(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(name) + ": " + e.what());
  }
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  int surface = 1;
  std::int64_t a = 0, b = 0, d = 0, r = 0;
  int k = 0;
  std::string c = "887/1000";
  std::string delta = "178/1000";
};

int run_check(const CheckArgs& args, const Output& out) {
  const auto& type = surface_or_usage(args.surface);
  require_range("a", args.a, -kCoordLimit, kCoordLimit);
  require_range("b", args.b, -kCoordLimit, kCoordLimit);
  require_range("k", args.k, 0, 10'000);
  require_range("r", args.r, 0, kCoordLimit);
  const kva::Rat c = rat_or_usage(args.c, "--c");
  const kva::Rat delta = rat_or_usage(args.delta, "--delta");
  if (kva::sign(c) <= 0 || c >= 1) throw UsageError("--c must lie in (0, 1)");
  if (kva::sign(delta) < 0) throw UsageError("--delta must be nonnegative");

  const auto cert = kva::certify_instance({args.surface, args.a, args.b, args.k, args.d, args.r}, c, delta);
  if (out.json) {
    out.emit_json(kva::to_json(cert));
  } else {
    auto& os = out.text();
    os << "instance: type " << type.id << " (" << type.group_name << "), L_S = (" << args.a << "," << args.b
       << "), k = " << args.k << ", d = " << args.d << ", r = " << args.r << "\n";
    os << "hypotheses:\n";
    for (const auto& h : cert.hypothesis_checks)
      os << "  [" << (h.ok ? "ok" : "FAIL") << "] " << std::left << std::setw(12) << h.name << " " << h.detail << "\n";
    os << "derived:\n";
    os << "  L^2               = " << cert.l2.get_str() << "\n";
    os << "  r_max             = " << cert.r_max.get_str() << "\n";
    os << "  N^2               = " << cert.n2.get_str() << "\n";
    if (cert.seshadri_lower_sq)
      os << "  seshadri_lower_sq = " << rat_text(*cert.seshadri_lower_sq) << "\n";
    os << "  (k+1+delta)^2     = " << rat_text(cert.threshold_sq) << "\n";
    os << "  seshadri bound > k+1+delta: " << (cert.star ? "yes" : "no") << "\n";
    os << "verdict: " << cert.verdict;
    if (!cert.certified()) {
      os << " (failed:";
      for (const auto& f : cert.failed_checks()) os << " " << f << ";";
      os << ")";
    }
    os << "\n";
  }
  return cert.certified() ? kOk : kFailed;
}

// ---------------------------------------------------------------- max-r

struct MaxRArgs {
  int surface = 1;
  std::int64_t a = 0, b = 0;
  int k = 0;
  std::string c = "887/1000";
};

int run_max_r(const MaxRArgs& args, const Output& out) {
  surface_or_usage(args.surface);
  require_range("a", args.a, -kCoordLimit, kCoordLimit);
  require_range("b", args.b, -kCoordLimit, kCoordLimit);
  require_range("k", args.k, 0, 10'000);
  const kva::DivisorClass l_s{args.a, args.b, args.surface};
  if (!kva::is_ample(l_s)) throw UsageError("L_S = (a,b) must be ample: a > 0 and b > 0");
  const kva::Rat c = rat_or_usage(args.c, "--c");
  if (kva::sign(c) <= 0 || c >= 1) throw UsageError("--c must lie in (0, 1)");

  const kva::Int raw = kva::max_r(l_s, args.k, c);
  const kva::Int shown = raw < 2 ? kva::Int(0) : raw;
  std::vector<std::string> warnings;
  if (raw < 2) warnings.push_back("bound " + raw.get_str() + " is below the minimum r = 2; reporting 0");
  const std::int64_t t = args.k + 1;
  if (std::min(args.a, args.b) < t * t + 3)
    warnings.push_back("full hypotheses also need a, b >= d+2 with d > (k+1)^2, i.e. a, b >= " +
                       std::to_string(t * t + 3));
  if (args.k < 2) warnings.push_back("the bound is stated for k >= 2");
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  if (out.json) {
    kva::Json j;
    j["inputs"] = {{"surface", args.surface}, {"a", args.a}, {"b", args.b}, {"k", args.k}};
    j["c"] = kva::to_fraction_string(c);
    j["bound"] = kva::to_fraction_string(c * kva::Rat(2 * kva::Int(std::to_string(args.a)) *
                                                      kva::Int(std::to_string(args.b))) /
                                         kva::Rat(t * t));
    j["r_max"] = shown.fits_slong_p() ? kva::Json(shown.get_si()) : kva::Json(shown.get_str());
    j["warnings"] = warnings;
    out.emit_json(j);
  } else {
    out.text() << shown.get_str() << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- seshadri

struct SeshadriArgs {
  int surface = 1;
  std::int64_t a = 0, b = 0, r = 0;
};

int run_seshadri(const SeshadriArgs& args, const Output& out) {
  surface_or_usage(args.surface);
  require_range("a", args.a, -kCoordLimit, kCoordLimit);
  require_range("b", args.b, -kCoordLimit, kCoordLimit);
  require_range("r", args.r, 1, kCoordLimit);
  const kva::DivisorClass l_s{args.a, args.b, args.surface};
  if (!kva::is_ample(l_s)) throw UsageError("L_S = (a,b) must be ample: a > 0 and b > 0");
  const kva::Rat sq = kva::seshadri_lower_sq(l_s, static_cast<int>(args.r));
  const std::string root = fixed6(std::sqrt(sq.get_d()));
  if (out.json) {
    kva::Json j;
    j["inputs"] = {{"surface", args.surface}, {"a", args.a}, {"b", args.b}, {"r", args.r}};
    j["seshadri_lower_sq"] = kva::to_fraction_string(sq);
    j["seshadri_lower_approx"] = std::stod(root);
    out.emit_json(j);
  } else {
    out.text() << "seshadri_lower_sq = " << kva::to_fraction_string(sq) << "\n"
               << "seshadri_lower    ~ " << root << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- constants

struct ConstantsArgs {
  std::string grid_step = "1/1000";
  int kmin = 2;
};

int run_constants(const ConstantsArgs& args, const Output& out) {
  const kva::Rat step = rat_or_usage(args.grid_step, "--grid-step");
  if (kva::sign(step) <= 0 || step > 1) throw UsageError("--grid-step must lie in (0, 1]");
  if (args.kmin < 2 || args.kmin > 1000) throw UsageError("--kmin must lie in [2, 1000]");
  const auto report = kva::c_max_search(step, args.kmin);
  const bool defaults = step == kva::make_rat(1, 1000) && args.kmin == 2;

  if (out.json) {
    kva::Json j = kva::to_json(report);
    j["self_verification"] = defaults;
    out.emit_json(j);
  } else {
    auto& os = out.text();
    os << "grid step " << kva::to_fraction_string(step) << ", kmin " << args.kmin << "\n";
    os << "c_ceiling = " << rat_text(report.c_ceiling) << "\n";
    if (report.feasible()) {
      os << "c_max     = " << rat_text(*report.c_max) << "\n";
      os << "delta_max = " << rat_text(*report.delta_max) << "  (raw ~" << fixed6(report.delta_raw_at_c_max->to_double())
         << ")\n";
      os << "constraints at c_max:\n";
      for (const auto& c : report.per_constraint)
        os << "  " << std::left << std::setw(22) << c.id << c.status() << "  margin ~" << fixed6(c.margin_approx)
           << "\n";
    } else {
      os << "no grid value of c passes every constraint\n";
    }
    const std::size_t shown = std::min<std::size_t>(report.rejected_above.size(), 5);
    if (shown > 0) os << "nearest rejected values:\n";
    for (std::size_t i = 0; i < shown; ++i) {
      const auto& g = report.rejected_above[report.rejected_above.size() - 1 - i];
      os << "  c = " << kva::to_fraction_string(g.c);
      if (g.delta) os << ", delta = " << kva::to_fraction_string(*g.delta);
      os << ": failed";
      for (const auto& f : g.failed) os << " " << f;
      if (g.failing_t) os << " (t = " << kva::to_fraction_string(*g.failing_t) << ")";
      os << "\n";
    }
    os << "discrepancies with published values: " << report.discrepancies.size() << "\n";
    for (const auto& d : report.discrepancies) {
      os << "  " << d.id << ": claimed " << d.claimed << "; recomputed " << d.recomputed;
      if (d.recomputed_approx) os << " (~" << fixed6(*d.recomputed_approx) << ")";
      if (!d.note.empty()) os << "; " << d.note;
      os << "\n";
    }
    if (defaults) os << "self-verification: " << (report.matches_reference() ? "PASS" : "FAIL") << "\n";
  }
  if (defaults) return report.matches_reference() ? kOk : kFailed;
  return report.feasible() ? kOk : kFailed;
}

// ---------------------------------------------------------------- obstructions

struct ObstructionArgs {
  int surface = 1;
  std::int64_t a = 0, b = 0, r = 0;
  int k = 0;
  std::string delta = "178/1000";
  std::string formula = "paper";
  bool no_ampleness = false;
};

int run_obstructions(const ObstructionArgs& args, const Output& out) {
  surface_or_usage(args.surface);
  require_range("a", args.a, 1, 1'000'000);
  require_range("b", args.b, 1, 1'000'000);
  require_range("k", args.k, 0, 1000);
  require_range("r", args.r, 0, 100'000);
  const kva::Rat delta = rat_or_usage(args.delta, "--delta");
  if (kva::sign(delta) <= 0) throw UsageError("--delta must be positive");
  if (kva::Rat(args.k + 1) / delta > 100'000) throw UsageError("(k+1)/delta too large to enumerate");
  kva::D2Formula formula;
  try {
    formula = kva::parse_d2_formula(args.formula);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const kva::DivisorClass l_s{args.a, args.b, args.surface};
  const int r = static_cast<int>(args.r);
  const auto bounds = kva::obstruction_bounds(l_s, args.k, r, delta);
  const auto witnesses = kva::search_obstruction(l_s, args.k, r, delta, {formula, !args.no_ampleness});
  if (out.json) {
    out.emit_json(kva::obstructions_json(l_s, args.k, r, delta, formula, bounds, witnesses));
  } else {
    auto& os = out.text();
    os << "search: L_S = (" << args.a << "," << args.b << "), k = " << args.k << ", r = " << r
       << ", delta = " << kva::to_fraction_string(delta) << ", sum m_i <= " << bounds.sigma_max
       << ", D^2 formula " << kva::to_string(formula) << (bounds.n_ample ? ", N ample" : "") << "\n";
    if (witnesses.empty()) os << "none found within proof bounds\n";
    for (const auto& w : witnesses) {
      os << "witness: D_S = (" << w.d_s.a << "," << w.d_s.b << "), sum m = " << w.sigma << ", m = (";
      for (std::size_t i = 0; i < w.mults.size(); ++i) os << (i ? "," : "") << w.mults[i];
      os << "), nd = " << w.nd << ", d2 = " << w.d2 << "\n";
    }
  }
  return witnesses.empty() ? kOk : kFailed;
}

// ---------------------------------------------------------------- surfaces

int run_surfaces(const Output& out) {
  const auto table = kva::surface_table();
  if (out.json) {
    out.emit_json(kva::surfaces_json(table));
    return kOk;
  }
  auto& os = out.text();
  os << "id  G       m_1..m_s  mu  gamma  basis of Num(S)\n";
  for (const auto& s : table) {
    std::string ms;
    for (std::size_t i = 0; i < s.fiber_multiplicities.size(); ++i)
      ms += (i ? "," : "") + std::to_string(s.fiber_multiplicities[i]);
    os << std::left << std::setw(4) << s.id << std::setw(8) << s.group_name << std::setw(10) << ms << std::setw(4)
       << s.mu << std::setw(7) << s.gamma << s.basis_label << "\n";
  }
  return kOk;
}

template <class Args>
void add_surface_option(CLI::App* cmd, Args& args) {
  cmd->add_option("-s,--surface", args.surface, "hyperelliptic surface type (1-7)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of k-very ampleness on blow-ups of hyperelliptic surfaces"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "emit JSON");
  app.add_flag("--quiet", out.quiet, "suppress standard output; rely on the exit code");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "check the hypotheses for one instance");
  add_surface_option(check_cmd, check);
  check_cmd->add_option("-a,--a", check.a, "first Serrano coordinate of L_S")->required();
  check_cmd->add_option("-b,--b", check.b, "second Serrano coordinate of L_S")->required();
  check_cmd->add_option("-k,--k", check.k, "order of very ampleness")->required();
  check_cmd->add_option("-d,--d", check.d, "d with d > (k+1)^2")->required();
  check_cmd->add_option("-r,--r", check.r, "number of blown-up points")->required();
  check_cmd->add_option("--c", check.c, "constant c in r <= c L^2/(k+1)^2")->capture_default_str();
  check_cmd->add_option("--delta", check.delta, "Seshadri slack delta")->capture_default_str();

  MaxRArgs max_r;
  auto* max_r_cmd = app.add_subcommand("max-r", "largest admissible number of points");
  add_surface_option(max_r_cmd, max_r);
  max_r_cmd->add_option("-a,--a", max_r.a)->required();
  max_r_cmd->add_option("-b,--b", max_r.b)->required();
  max_r_cmd->add_option("-k,--k", max_r.k)->required();
  max_r_cmd->add_option("--c", max_r.c)->capture_default_str();

  SeshadriArgs sesh;
  auto* sesh_cmd = app.add_subcommand("seshadri", "multi-point Seshadri lower bound");
  add_surface_option(sesh_cmd, sesh);
  sesh_cmd->add_option("-a,--a", sesh.a)->required();
  sesh_cmd->add_option("-b,--b", sesh.b)->required();
  sesh_cmd->add_option("-r,--r", sesh.r)->required();

  ConstantsArgs consts;
  auto* consts_cmd = app.add_subcommand("constants", "re-derive c_max, delta_max and the ceiling");
  consts_cmd->add_option("--grid-step", consts.grid_step, "grid spacing for c")->capture_default_str();
  consts_cmd->add_option("--kmin", consts.kmin, "smallest k covered")->capture_default_str();
  consts_cmd->require_subcommand(0, 1);
  auto* verify_cmd = consts_cmd->add_subcommand("verify", "same as `constants`");
  verify_cmd->add_option("--grid-step", consts.grid_step)->capture_default_str();
  verify_cmd->add_option("--kmin", consts.kmin)->capture_default_str();

  ObstructionArgs obs;
  auto* obs_cmd = app.add_subcommand("obstructions", "search for obstruction divisors within the proof bounds");
  add_surface_option(obs_cmd, obs);
  obs_cmd->add_option("-a,--a", obs.a)->required();
  obs_cmd->add_option("-b,--b", obs.b)->required();
  obs_cmd->add_option("-k,--k", obs.k)->required();
  obs_cmd->add_option("-r,--r", obs.r)->required();
  obs_cmd->add_option("--delta", obs.delta)->capture_default_str();
  obs_cmd->add_option("--formula", obs.formula, "D^2 formula: paper = D_S^2-(sum m)^2, standard = D_S^2-sum m^2")
      ->check(CLI::IsMember({"paper", "standard"}))
      ->capture_default_str();
  obs_cmd->add_flag("--no-ampleness-filter", obs.no_ampleness, "keep candidates with N.D <= 0");

  auto* surf_cmd = app.add_subcommand("surfaces", "the seven hyperelliptic surface types");

  for (auto* cmd : {check_cmd, max_r_cmd, sesh_cmd, consts_cmd, obs_cmd, surf_cmd}) {
    cmd->add_flag("--json", out.json, "emit JSON");
    cmd->add_flag("--quiet", out.quiet, "suppress standard output");
  }
  verify_cmd->add_flag("--json", out.json, "emit JSON");
  verify_cmd->add_flag("--quiet", out.quiet, "suppress standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (check_cmd->parsed()) return run_check(check, out);
    if (max_r_cmd->parsed()) return run_max_r(max_r, out);
    if (sesh_cmd->parsed()) return run_seshadri(sesh, out);
    if (consts_cmd->parsed()) return run_constants(consts, out);
    if (obs_cmd->parsed()) return run_obstructions(obs, out);
    if (surf_cmd->parsed()) return run_surfaces(out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return kUsage;
}
