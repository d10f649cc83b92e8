#include "kva/blowup.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace kva {

std::int64_t blowup_intersect(const BlowupClass& x, const BlowupClass& y) {
  if (x.points() != y.points())
    throw std::invalid_argument("blowup_intersect: classes on blow-ups at " + std::to_string(x.points()) + " and " +
                                std::to_string(y.points()) + " points");
  std::int64_t acc = intersect(x.base, y.base);
  for (std::size_t i = 0; i < x.mults.size(); ++i) acc -= x.mults[i] * y.mults[i];
  return acc;
}

BlowupClass n_class(const DivisorClass& l_s, int k, int r) {
  if (k < 0 || r < 0) throw std::invalid_argument("n_class: negative k or r");
  return {l_s, std::vector<std::int64_t>(static_cast<std::size_t>(r), k + 1)};
}

BlowupClass l_class(const DivisorClass& l_s, int k, int r) {
  if (k < 0 || r < 0) throw std::invalid_argument("l_class: negative k or r");
  return {l_s, std::vector<std::int64_t>(static_cast<std::size_t>(r), k)};
}

Rat seshadri_lower_sq(const DivisorClass& l_s, int r) {
  if (r < 1) throw std::invalid_argument("seshadri_lower_sq: r must be >= 1");
  const std::int64_t l2 = self_intersection(l_s);
  if (l2 <= 0) throw std::invalid_argument("seshadri_lower_sq: L^2 must be positive");
  const Int rr(r);
  return make_rat(Int(std::to_string(l2)) * (8 * rr - 1), 8 * rr * rr);
}

bool star_holds(const DivisorClass& l_s, int r, int k, const Rat& delta) {
  if (sgn(delta) < 0) throw std::invalid_argument("star_holds: negative delta");
  const Rat rhs = Rat(k + 1) + delta;
  return seshadri_lower_sq(l_s, r) > rhs * rhs;
}

bool bs_condition3(std::int64_t nd, std::int64_t d2, int k) {
  return nd - k - 1 <= d2 && 2 * d2 < nd && nd < 2 * static_cast<std::int64_t>(k) + 2;
}

const char* to_string(D2Formula f) { return f == D2Formula::SumSquared ? "paper" : "standard"; }

D2Formula parse_d2_formula(const std::string& s) {
  if (s == "paper") return D2Formula::SumSquared;
  if (s == "standard") return D2Formula::SquareSum;
  throw std::invalid_argument("unknown D^2 formula '" + s + "' (expected paper|standard)");
}

std::vector<std::vector<std::int64_t>> partitions_at_most(std::int64_t n, std::int64_t max_parts) {
  std::vector<std::vector<std::int64_t>> out;
  if (n < 0 || max_parts < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::int64_t> cur;
  // Parts in non-increasing order, each <= cap.
  auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t cap) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<std::int64_t>(cur.size()) == max_parts) return;
    for (std::int64_t part = std::min(cap, remaining); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace {

void validate(const DivisorClass& l_s, int k, int r, const Rat& delta) {
  if (sgn(delta) <= 0) throw std::invalid_argument("search_obstruction: delta must be positive");
  if (k < 0) throw std::invalid_argument("search_obstruction: negative k");
  if (r < 0) throw std::invalid_argument("search_obstruction: negative r");
  if (!is_ample(l_s)) throw std::invalid_argument("search_obstruction: L_S must be ample");
}

struct Candidate {
  std::vector<std::int64_t> mults;
  std::int64_t square_sum;  // the subtracted term of D^2
};

// One representative multiplicity vector per distinct value entering D^2.
std::vector<Candidate> candidates_for(std::int64_t sigma, int r, D2Formula formula) {
  std::vector<Candidate> out;
  const auto len = static_cast<std::size_t>(r);
  if (formula == D2Formula::SumSquared) {
    if (sigma > 0 && r == 0) return out;
    std::vector<std::int64_t> m(len, 0);
    if (sigma > 0) m[0] = sigma;
    out.push_back({std::move(m), sigma * sigma});
    return out;
  }
  for (auto& p : partitions_at_most(sigma, r)) {
    std::int64_t sq = 0;
    for (auto v : p) sq += v * v;
    p.resize(len, 0);
    out.push_back({std::move(p), sq});
  }
  return out;
}

// Every witness with a fixed sum of multiplicities.
std::vector<ObstructionWitness> search_sigma(const DivisorClass& l_s, int k, int r, std::int64_t sigma,
                                             const SearchOptions& opts, bool n_ample) {
  std::vector<ObstructionWitness> found;
  const auto candidates = candidates_for(sigma, r, opts.formula);
  if (candidates.empty()) return found;
  const std::int64_t t = k + 1;
  // nd = L_S.D_S - t*sigma < 2k + 2 bounds L_S.D_S = a*beta + b*alpha.
  const std::int64_t ld_max = 2 * static_cast<std::int64_t>(k) + 1 + t * sigma;
  for (std::int64_t alpha = 0; l_s.b * alpha <= ld_max; ++alpha) {
    for (std::int64_t beta = 0; l_s.b * alpha + l_s.a * beta <= ld_max; ++beta) {
      const DivisorClass d_s{alpha, beta, l_s.surface};
      if (!is_nonzero_effective_cone(d_s)) continue;
      const std::int64_t nd = intersect(l_s, d_s) - t * sigma;
      if (opts.use_ampleness && n_ample && nd < 1) continue;
      const std::int64_t ds2 = self_intersection(d_s);
      for (const auto& c : candidates) {
        const std::int64_t d2 = ds2 - c.square_sum;
        if (bs_condition3(nd, d2, k)) found.push_back({d_s, c.mults, sigma, nd, d2, k});
      }
    }
  }
  return found;
}

void sort_witnesses(std::vector<ObstructionWitness>& w) {
  std::sort(w.begin(), w.end(), [](const ObstructionWitness& x, const ObstructionWitness& y) {
    return std::tie(x.d_s.a, x.d_s.b, x.sigma, x.mults) < std::tie(y.d_s.a, y.d_s.b, y.sigma, y.mults);
  });
}

}  // namespace

SearchBounds obstruction_bounds(const DivisorClass& l_s, int k, int r, const Rat& delta) {
  validate(l_s, k, r, delta);
  SearchBounds b;
  b.sigma_max = r == 0 ? 0 : floor(Rat(k + 1) / delta).get_si();
  // Seshadri bound above k+1 makes pi^*L_S - (k+1) sum E_i ample.
  b.n_ample = r == 0 ? true : star_holds(l_s, r, k, Rat(0));
  return b;
}

std::vector<ObstructionWitness> search_obstruction_serial(const DivisorClass& l_s, int k, int r, const Rat& delta,
                                                          const SearchOptions& opts) {
  const SearchBounds bounds = obstruction_bounds(l_s, k, r, delta);
  std::vector<ObstructionWitness> all;
  for (std::int64_t sigma = 0; sigma <= bounds.sigma_max; ++sigma) {
    auto part = search_sigma(l_s, k, r, sigma, opts, bounds.n_ample);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  sort_witnesses(all);
  return all;
}

std::vector<ObstructionWitness> search_obstruction(const DivisorClass& l_s, int k, int r, const Rat& delta,
                                                   const SearchOptions& opts) {
  const SearchBounds bounds = obstruction_bounds(l_s, k, r, delta);
  const auto n = static_cast<std::size_t>(bounds.sigma_max + 1);
  std::vector<std::vector<ObstructionWitness>> per_sigma(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t sigma = 0; sigma < count; ++sigma)
    per_sigma[static_cast<std::size_t>(sigma)] = search_sigma(l_s, k, r, sigma, opts, bounds.n_ample);

  std::vector<ObstructionWitness> all;
  for (auto& part : per_sigma)
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  sort_witnesses(all);
  return all;
}

}  // namespace kva
