#include "gosslv/frac.hpp"

#include <stdexcept>

namespace gosslv {

Frac Frac::make(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("Frac: zero denominator");
  const PrimeField& F = num.field();
  if (num.is_zero()) return zero(F);
  Poly g = Poly::gcd(num, den);
  if (!g.is_one()) {
    num = num / g;
    den = den / g;
  }
  std::uint32_t lc = den.leading();
  if (lc != 1) {
    std::uint32_t s = F.inv(lc);
    num = num.mul_scalar(s);
    den = den.mul_scalar(s);
  }
  Frac r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

Frac operator+(const Frac& a, const Frac& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Frac::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }

Frac operator*(const Frac& a, const Frac& b) {
  if (a.is_zero() || b.is_zero()) return Frac::zero(a.field());
  return Frac::make(a.num_ * b.num_, a.den_ * b.den_);
}

Frac operator/(const Frac& a, const Frac& b) { return a * b.inv(); }

Frac Frac::operator-() const {
  Frac r = *this;
  r.num_ = -r.num_;
  return r;
}

Frac Frac::inv() const {
  if (is_zero()) throw std::domain_error("Frac: inverse of zero");
  Frac r;
  std::uint32_t lc = num_.leading();
  std::uint32_t s = field().inv(lc);
  r.num_ = den_.mul_scalar(s);
  r.den_ = num_.mul_scalar(s);
  return r;
}

Frac Frac::pow(std::uint64_t e) const {
  if (e == 0) return one(field());
  Frac r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

Frac Frac::frob_pow(std::uint32_t e) const {
  Frac r;
  r.num_ = num_.frob_pow(e);
  r.den_ = den_.frob_pow(e);
  return r;
}

Frac Frac::mul_scalar(std::uint32_t s) const {
  s %= field().p();
  if (s == 0) return zero(field());
  Frac r = *this;
  r.num_ = r.num_.mul_scalar(s);
  return r;
}

std::string Frac::to_string(const std::string& var) const {
  if (is_integral()) return num_.to_string(var);
  std::string n = num_.to_string(var);
  std::string d = den_.to_string(var);
  if (num_.deg() > 0 || num_.nonzero_count() > 1) n = "(" + n + ")";
  if (den_.deg() > 0 || den_.nonzero_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace gosslv
