#include "kva/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kva {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1, Rat(0));
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rat& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat Poly::operator()(const Rat& t) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly operator+(const Poly& x, const Poly& y) {
  std::vector<Rat> v(std::max(x.coeffs_.size(), y.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) v[i] += x.coeffs_[i];
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) v[i] += y.coeffs_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

Poly operator*(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Rat> v(x.coeffs_.size() + y.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) v[i + j] += x.coeffs_[i] * y.coeffs_[j];
  return Poly(std::move(v));
}

Poly operator*(const Poly& x, const Rat& c) {
  std::vector<Rat> v = x.coeffs_;
  for (auto& a : v) a *= c;
  return Poly(std::move(v));
}

Poly Poly::operator-() const { return *this * Rat(-1); }

Poly Poly::pow(unsigned e) const {
  Poly result{Rat(1)};
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(v));
}

Poly Poly::taylor_shift(const Rat& t0) const {
  // Horner in polynomial form: p(t0 + u) = (...(a_n (t0+u) + a_{n-1})(t0+u) ...).
  const Poly lin{t0, Rat(1)};
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Poly{*it};
  return acc;
}

void Poly::divmod(const Poly& divisor, Poly& quotient, Poly& remainder) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = coeffs_;
  const int dd = divisor.degree();
  std::vector<Rat> quo(rem.size() >= divisor.coeffs_.size() ? rem.size() - divisor.coeffs_.size() + 1 : 0,
                       Rat(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (sgn(rem[static_cast<std::size_t>(i)]) == 0) continue;
    const Rat f = rem[static_cast<std::size_t>(i)] / divisor.leading();
    quo[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  quotient = Poly(std::move(quo));
  remainder = Poly(std::move(rem));
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    const Rat mag = abs(c);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << (i == 0 || mag == 1 ? "" : "*") << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  Poly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  for (;;) {
    Poly q, r;
    chain[chain.size() - 2].divmod(chain.back(), q, r);
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int sign_variations_at(const std::vector<Poly>& chain, const Rat& t) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sgn(p(t)));
  return count_variations(signs);
}

int sign_variations_at_infinity(const std::vector<Poly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sgn(p.leading()));
  return count_variations(signs);
}

Rat root_bound(const Poly& p) {
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(abs(p.coeff(i) / p.leading())));
  return m + 1;
}

const char* to_string(RayPositivity::Method m) {
  return m == RayPositivity::Method::ShiftCoefficients ? "shift-coefficients" : "sturm";
}

RayPositivity poly_positive_on_ray(const Poly& p, const Rat& t0) {
  if (p.is_zero()) throw std::invalid_argument("poly_positive_on_ray: zero polynomial");
  RayPositivity out;
  out.shifted = p.taylor_shift(t0);

  const auto& sc = out.shifted.coeffs();
  const bool nonneg = std::all_of(sc.begin(), sc.end(), [](const Rat& c) { return sgn(c) >= 0; });
  if (nonneg && sgn(sc.front()) > 0) {
    out.positive = true;
    out.method = RayPositivity::Method::ShiftCoefficients;
    return out;
  }

  out.method = RayPositivity::Method::Sturm;
  const Rat at_t0 = p(t0);
  if (sgn(at_t0) <= 0) {
    out.counter_lo = t0;
    out.counter_hi = t0;
    out.counter_point = t0;
    return out;
  }

  const auto chain = sturm_sequence(p);
  const int v_t0 = sign_variations_at(chain, t0);
  out.roots_on_ray = v_t0 - sign_variations_at_infinity(chain);
  if (out.roots_on_ray == 0) {
    out.positive = true;
    return out;
  }

  // Isolate the smallest root on the ray; p > 0 on [t0, lo], and (lo, hi] holds a root.
  Rat lo = t0;
  Rat hi = std::max(root_bound(p), Rat(t0 + 1));
  for (int iter = 0; iter < 128; ++iter) {
    Rat mid = (lo + hi) / 2;
    const int s = sgn(p(mid));
    if (s <= 0) {
      out.counter_point = mid;
      hi = mid;
      if (s == 0) break;
      continue;
    }
    if (v_t0 - sign_variations_at(chain, mid) >= 1) hi = mid;
    else lo = mid;
  }
  if (!out.counter_point && sgn(p(hi)) <= 0) out.counter_point = hi;
  out.counter_lo = lo;
  out.counter_hi = hi;
  return out;
}

}  // namespace kva
