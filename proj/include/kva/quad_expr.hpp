#pragma once

#include <string>

#include "kva/rat.hpp"

namespace kva {

/// p + q*sqrt(s) with rational p, q and radicand s >= 0.
///
/// Arithmetic between two surds requires a shared radicand; mixing radicands
/// throws std::invalid_argument. Signs are decided without floating point.
class QuadExpr {
 public:
  QuadExpr() = default;
  /// Throws std::domain_error when s < 0.
  QuadExpr(Rat p, Rat q, Rat s);
  static QuadExpr rational(Rat p);

  const Rat& p() const { return p_; }
  const Rat& q() const { return q_; }
  const Rat& s() const { return s_; }

  friend QuadExpr operator+(const QuadExpr& x, const QuadExpr& y);
  friend QuadExpr operator-(const QuadExpr& x, const QuadExpr& y);
  friend QuadExpr operator*(const QuadExpr& x, const QuadExpr& y);
  friend QuadExpr operator+(const QuadExpr& x, const Rat& r);
  friend QuadExpr operator-(const QuadExpr& x, const Rat& r);
  friend QuadExpr operator*(const QuadExpr& x, const Rat& r);
  QuadExpr operator-() const;

  std::string to_string() const;
  double to_double() const;

 private:
  Rat p_{0};
  Rat q_{0};
  Rat s_{0};
};

/// Exact sign of p + q*sqrt(s) in {-1, 0, +1}.
int quad_sign(const QuadExpr& e);

/// Exact comparison against a rational: sign(e - r).
int quad_cmp(const QuadExpr& e, const Rat& r);

/// True iff lo < e < hi, decided by quad_sign.
bool quad_in_open_interval(const QuadExpr& e, const Rat& lo, const Rat& hi);

/// Largest n/1000 (n >= 0 integer) with n/1000 <= e. Throws std::domain_error for e < 0.
Rat quad_floor_milli(const QuadExpr& e);

}  // namespace kva
