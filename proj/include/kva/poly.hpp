#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kva/rat.hpp"

namespace kva {

/// Dense univariate polynomial with rational coefficients, ascending degree.
/// Trailing zeros are always stripped, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);
  static Poly monomial(const Rat& c, int degree);
  static Poly variable() { return monomial(Rat(1), 1); }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& leading() const;
  Rat coeff(int i) const;

  Rat operator()(const Rat& t) const;

  friend Poly operator+(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Rat& c);
  Poly operator-() const;
  friend bool operator==(const Poly& x, const Poly& y) { return x.coeffs_ == y.coeffs_; }

  Poly pow(unsigned e) const;
  Poly derivative() const;
  /// q(u) = p(t0 + u).
  Poly taylor_shift(const Rat& t0) const;
  /// Euclidean division; throws std::domain_error on a zero divisor.
  void divmod(const Poly& divisor, Poly& quotient, Poly& remainder) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Outcome of deciding p(t) > 0 for all t >= t0.
struct RayPositivity {
  enum class Method { ShiftCoefficients, Sturm };

  bool positive = false;
  Method method = Method::ShiftCoefficients;
  /// Coefficients of p(t0 + u); all nonnegative with positive constant term
  /// when method == ShiftCoefficients and positive.
  Poly shifted;
  /// Distinct real roots of p in (t0, +inf), from the Sturm sequence.
  int roots_on_ray = 0;
  /// When not positive: t0 <= lo <= hi, and the interval holds a point where p <= 0.
  std::optional<Rat> counter_lo;
  std::optional<Rat> counter_hi;
  /// When not positive and one could be found: a rational t >= t0 with p(t) <= 0.
  std::optional<Rat> counter_point;
};

/// Decides whether p(t) > 0 on [t0, +inf). Tries the shifted-coefficient test
/// first, then Sturm root counting. Throws std::invalid_argument on the zero polynomial.
RayPositivity poly_positive_on_ray(const Poly& p, const Rat& t0);

/// Sturm chain p, p', -rem(...), ...
std::vector<Poly> sturm_sequence(const Poly& p);
/// Sign variations of the chain at t.
int sign_variations_at(const std::vector<Poly>& chain, const Rat& t);
/// Sign variations at +inf (leading coefficient signs).
int sign_variations_at_infinity(const std::vector<Poly>& chain);

/// Cauchy bound: every real root has |t| < bound.
Rat root_bound(const Poly& p);

const char* to_string(RayPositivity::Method m);

}  // namespace kva
