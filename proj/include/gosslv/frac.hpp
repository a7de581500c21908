#pragma once

#include <string>

#include "gosslv/laurent.hpp"
#include "gosslv/poly.hpp"

namespace gosslv {

// Element of K = F_q(theta) in lowest terms: den monic, gcd(num, den) = 1,
// zero is 0/1.  Canonical form makes == structural.
class Frac {
public:
  Frac() = default;
  explicit Frac(const Poly& p) : num_(p), den_(Poly::constant(p.field(), 1)) {}
  static Frac make(Poly num, Poly den);
  static Frac zero(const PrimeField& F) { return Frac(Poly(F)); }
  static Frac one(const PrimeField& F) { return Frac(Poly::constant(F, 1)); }
  static Frac constant(const PrimeField& F, std::uint32_t v) { return Frac(Poly::constant(F, v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const PrimeField& field() const { return num_.field(); }
  bool is_null() const { return num_.is_null(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integral() const { return den_.is_one(); }

  friend Frac operator+(const Frac& a, const Frac& b);
  friend Frac operator-(const Frac& a, const Frac& b);
  Frac& operator+=(const Frac& o) { *this = *this + o; return *this; }
  Frac& operator-=(const Frac& o) { *this = *this - o; return *this; }
  friend Frac operator*(const Frac& a, const Frac& b);
  friend Frac operator/(const Frac& a, const Frac& b);
  Frac operator-() const;
  friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

  Frac inv() const;
  Frac pow(std::uint64_t e) const;
  Frac frob_pow(std::uint32_t e) const;
  Frac mul_scalar(std::uint32_t s) const;

  std::int64_t v_inf() const {  // +"infinity" for zero
    return is_zero() ? Laurent::kInfVal : den_.deg() - num_.deg();
  }
  Laurent to_laurent(std::int64_t prec) const { return Laurent::from_fraction(num_, den_, prec); }

  std::string to_string(const std::string& var = "T") const;

private:
  Poly num_, den_;
};

}  // namespace gosslv
