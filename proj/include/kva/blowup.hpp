#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kva/hyperell.hpp"
#include "kva/rat.hpp"

namespace kva {

/// pi^*base - sum_i mults[i] * E_i on the blow-up of S at r = mults.size() points.
struct BlowupClass {
  DivisorClass base;
  std::vector<std::int64_t> mults;

  std::size_t points() const { return mults.size(); }
};

/// E_i^2 = -1, E_i.E_j = 0 (i != j), pi^*D.E_i = 0.
/// Throws std::invalid_argument when the point counts differ.
std::int64_t blowup_intersect(const BlowupClass& x, const BlowupClass& y);

/// N = pi^*L_S - (k+1) sum E_i, i.e. L - K for L = pi^*L_S - k sum E_i.
BlowupClass n_class(const DivisorClass& l_s, int k, int r);
/// L = pi^*L_S - k sum E_i.
BlowupClass l_class(const DivisorClass& l_s, int k, int r);

/// Square of the multi-point Seshadri lower bound sqrt(L^2/r) sqrt(1 - 1/(8r)),
/// i.e. L^2 (8r - 1) / (8 r^2). Throws std::invalid_argument for r < 1 or L^2 <= 0.
Rat seshadri_lower_sq(const DivisorClass& l_s, int r);

/// seshadri_lower_sq > (k + 1 + delta)^2, exactly.
bool star_holds(const DivisorClass& l_s, int r, int k, const Rat& delta);

/// nd - k - 1 <= d2 < nd/2 < k + 1, in integers (2*d2 < nd, nd < 2k + 2).
bool bs_condition3(std::int64_t nd, std::int64_t d2, int k);

/// How D^2 is computed from D_S and the multiplicities.
enum class D2Formula {
  SumSquared,  // D_S^2 - (sum m_i)^2, as printed alongside the original bound
  SquareSum,   // D_S^2 - sum m_i^2, the usual blow-up formula
};

const char* to_string(D2Formula f);
/// "paper" (SumSquared) or "standard" (SquareSum); throws std::invalid_argument otherwise.
D2Formula parse_d2_formula(const std::string& s);

struct ObstructionWitness {
  DivisorClass d_s;
  std::vector<std::int64_t> mults;  // non-increasing, length r
  std::int64_t sigma = 0;           // sum of mults
  std::int64_t nd = 0;
  std::int64_t d2 = 0;
  int k = 0;

  /// Recomputes the numerical condition on the stored numbers.
  bool holds() const { return bs_condition3(nd, d2, k); }
  friend bool operator==(const ObstructionWitness&, const ObstructionWitness&) = default;
};

struct SearchOptions {
  D2Formula formula = D2Formula::SumSquared;
  /// When N is certified ample by the Seshadri bound, effective D has N.D >= 1;
  /// drop candidates with nd <= 0 in that case.
  bool use_ampleness = true;
};

struct SearchBounds {
  std::int64_t sigma_max = 0;  // floor((k+1)/delta), or 0 when r == 0
  bool n_ample = false;        // Seshadri bound certifies N ample
};

SearchBounds obstruction_bounds(const DivisorClass& l_s, int k, int r, const Rat& delta);

/// All D = pi^*D_S - sum m_i E_i with D_S in the nonzero effective cone,
/// sum m_i <= (k+1)/delta and m a multiset of r nonnegative integers, that
/// satisfy the numerical condition. Output is sorted by (D_S, sigma, mults) and is
/// independent of thread count. Multiplicity vectors are reported as one
/// representative per value of the quantities that enter the formula: for
/// SumSquared the concentrated vector (sigma, 0, ..., 0); for SquareSum
/// every partition of sigma into at most r parts.
///
/// Throws std::invalid_argument for delta <= 0, k < 0, r < 0 or non-ample L_S.
std::vector<ObstructionWitness> search_obstruction(const DivisorClass& l_s, int k, int r, const Rat& delta,
                                                   const SearchOptions& opts = {});

/// Single-threaded reference with the same contract, kept for testing and benchmarks.
std::vector<ObstructionWitness> search_obstruction_serial(const DivisorClass& l_s, int k, int r, const Rat& delta,
                                                          const SearchOptions& opts = {});

/// Partitions of n into at most max_parts positive parts, each non-increasing.
std::vector<std::vector<std::int64_t>> partitions_at_most(std::int64_t n, std::int64_t max_parts);

}  // namespace kva
