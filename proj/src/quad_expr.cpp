#include "kva/quad_expr.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace kva {

QuadExpr::QuadExpr(Rat p, Rat q, Rat s) : p_(std::move(p)), q_(std::move(q)), s_(std::move(s)) {
  if (sgn(s_) < 0) throw std::domain_error("QuadExpr: negative radicand " + to_fraction_string(s_));
}

QuadExpr QuadExpr::rational(Rat p) { return QuadExpr(std::move(p), Rat(0), Rat(0)); }

namespace {

// Radicand shared by both operands; a purely rational operand adopts the other's.
Rat common_radicand(const QuadExpr& x, const QuadExpr& y) {
  const bool x_rational = sgn(x.q()) == 0 || sgn(x.s()) == 0;
  const bool y_rational = sgn(y.q()) == 0 || sgn(y.s()) == 0;
  if (x_rational) return y.s();
  if (y_rational || x.s() == y.s()) return x.s();
  throw std::invalid_argument("QuadExpr: mixed radicands " + to_fraction_string(x.s()) + " and " +
                              to_fraction_string(y.s()));
}

}  // namespace

QuadExpr operator+(const QuadExpr& x, const QuadExpr& y) {
  const Rat s = common_radicand(x, y);
  return QuadExpr(x.p_ + y.p_, x.q_ + y.q_, s);
}

QuadExpr operator-(const QuadExpr& x, const QuadExpr& y) { return x + (-y); }

QuadExpr operator*(const QuadExpr& x, const QuadExpr& y) {
  const Rat s = common_radicand(x, y);
  // (p1 + q1 r)(p2 + q2 r) with r^2 = s
  return QuadExpr(x.p_ * y.p_ + x.q_ * y.q_ * s, x.p_ * y.q_ + x.q_ * y.p_, s);
}

QuadExpr operator+(const QuadExpr& x, const Rat& r) { return QuadExpr(x.p_ + r, x.q_, x.s_); }
QuadExpr operator-(const QuadExpr& x, const Rat& r) { return QuadExpr(x.p_ - r, x.q_, x.s_); }
QuadExpr operator*(const QuadExpr& x, const Rat& r) { return QuadExpr(x.p_ * r, x.q_ * r, x.s_); }

QuadExpr QuadExpr::operator-() const { return QuadExpr(-p_, -q_, s_); }

std::string QuadExpr::to_string() const {
  return to_fraction_string(p_) + " + (" + to_fraction_string(q_) + ")*sqrt(" + to_fraction_string(s_) + ")";
}

double QuadExpr::to_double() const { return p_.get_d() + q_.get_d() * std::sqrt(s_.get_d()); }

int quad_sign(const QuadExpr& e) {
  const int sp = sgn(e.p());
  const int sq = sgn(e.s()) == 0 ? 0 : sgn(e.q());
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Signs conflict: the larger magnitude wins.
  const Rat p2 = e.p() * e.p();
  const Rat q2s = e.q() * e.q() * e.s();
  const int c = cmp(p2, q2s);
  if (c == 0) return 0;
  return c > 0 ? sp : sq;
}

int quad_cmp(const QuadExpr& e, const Rat& r) { return quad_sign(e - r); }

bool quad_in_open_interval(const QuadExpr& e, const Rat& lo, const Rat& hi) {
  return quad_cmp(e, lo) > 0 && quad_cmp(e, hi) < 0;
}

Rat quad_floor_milli(const QuadExpr& e) {
  if (quad_sign(e) < 0) throw std::domain_error("quad_floor_milli: negative value " + e.to_string());
  // Integer estimate of 1000*e, then exact correction. floor(sqrt(x)) = isqrt(floor(x)).
  const Rat scaled_q2s = e.q() * e.q() * e.s() * 1000000;
  Int root = isqrt(floor(scaled_q2s));
  if (sgn(e.q()) < 0) root = -root;
  Int n = floor(e.p() * 1000) + root;
  if (n < 0) n = 0;
  auto milli = [](const Int& k) { return make_rat(k, Int(1000)); };
  while (quad_cmp(e, milli(n + 1)) >= 0) ++n;
  while (n > 0 && quad_cmp(e, milli(n)) < 0) --n;
  return milli(n);
}

}  // namespace kva
