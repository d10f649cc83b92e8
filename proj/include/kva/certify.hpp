#pragma once

// Checks the hypotheses of the k-very-ampleness bound for one concrete
// instance (surface type, L_S = (a,b), k, d, r) and records every derived
// quantity exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kva/constants.hpp"
#include "kva/hyperell.hpp"
#include "kva/rat.hpp"

namespace kva {

struct InstanceInputs {
  int surface = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;
  int k = 0;
  std::int64_t d = 0;
  std::int64_t r = 0;
};

struct HypothesisCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct InstanceCertificate {
  static constexpr const char* kCertified = "k-very-ample-certified";
  static constexpr const char* kNotMet = "hypotheses-not-met";

  InstanceInputs inputs;
  Rat c;
  Rat delta;
  std::vector<HypothesisCheck> hypothesis_checks;
  Int l2;
  Int r_max;
  Int n2;
  std::optional<Rat> seshadri_lower_sq;  // absent for r < 1 or L^2 <= 0
  Rat threshold_sq;                      // (k + 1 + delta)^2
  bool star = false;
  std::string verdict;

  bool certified() const { return verdict == kCertified; }
  std::vector<std::string> failed_checks() const;
};

/// floor(c * 2ab / (k+1)^2). Throws std::invalid_argument for non-ample (a,b) or k < 0.
Int max_r(const DivisorClass& l_s, int k, const Rat& c = reference_c());

/// Throws std::out_of_range for an unknown surface id.
InstanceCertificate certify_instance(const InstanceInputs& in, const Rat& c = reference_c(),
                                     const Rat& delta = reference_delta());

}  // namespace kva
