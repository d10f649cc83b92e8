#include "kva/rat.hpp"

#include <cmath>
#include <stdexcept>

namespace kva {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(std::int64_t num, std::int64_t den) {
  return make_rat(Int(std::to_string(num)), Int(std::to_string(den)));
}

std::strong_ordering rat_cmp(const Rat& x, const Rat& y) {
  // Denominators are positive, so the cross products preserve order.
  const Int lhs = x.get_num() * y.get_den();
  const Int rhs = y.get_num() * x.get_den();
  const int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int sign(const Rat& x) { return sgn(x); }
int sign(const Int& x) { return sgn(x); }

Int floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int isqrt(const Int& x) {
  if (x < 0) throw std::domain_error("isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

std::string to_fraction_string(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Int parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  Int v(std::string(s), 10);
  return neg ? Int(-v) : v;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    const Int d = parse_int(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return make_rat(parse_int(text.substr(0, slash)), d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    bool neg = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      neg = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if (!whole.empty() && !all_digits(whole)) throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const Int w = whole.empty() ? Int(0) : Int(std::string(whole), 10);
    const Int f(std::string(frac), 10);
    Rat r = make_rat(w * scale + f, scale);
    return neg ? Rat(-r) : r;
  }
  return Rat(parse_int(text));
}

double approx(const Rat& x) {
  return std::round(x.get_d() * 1e6) / 1e6;
}

}  // namespace kva
