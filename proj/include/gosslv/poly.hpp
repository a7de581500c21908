#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gosslv/field.hpp"

namespace gosslv {

// Dense polynomial in theta over a prime field; the coefficient ring A = F_q[theta].
// Coefficients are byte-packed (modulus <= 251), degree -1 encodes the zero
// polynomial.  Values carry a pointer to their interned field.
class Poly {
public:
  Poly() : F_(nullptr) {}
  explicit Poly(const PrimeField& F) : F_(&F) {}
  Poly(const PrimeField& F, std::vector<std::uint8_t> coeffs) : F_(&F), c_(std::move(coeffs)) {
    trim();
  }

  static Poly constant(const PrimeField& F, std::uint32_t v);
  static Poly monomial(const PrimeField& F, std::uint32_t v, std::int64_t k);
  static Poly theta(const PrimeField& F) { return monomial(F, 1, 1); }

  const PrimeField& field() const;
  std::uint32_t q() const { return field().p(); }
  bool is_null() const { return F_ == nullptr; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  std::int64_t deg() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  std::uint32_t coeff(std::int64_t k) const {
    return (k >= 0 && k < static_cast<std::int64_t>(c_.size())) ? c_[static_cast<std::size_t>(k)] : 0u;
  }
  std::uint32_t leading() const { return c_.empty() ? 0u : c_.back(); }
  std::size_t nonzero_count() const;
  const std::vector<std::uint8_t>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_ && !(a.F_ && b.F_ && a.F_ != b.F_); }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly mul_scalar(std::uint32_t s) const;
  Poly shifted(std::int64_t k) const;  // times theta^k, k >= 0
  Poly monic() const;

  // Exact exponent arithmetic.  pow() walks base-q digits of e so that huge
  // Frobenius-weight exponents never square dense intermediates; frob_pow(e)
  // is f -> f^(q^e), a pure exponent spread since coefficients are fixed by
  // Frobenius.
  Poly pow(std::uint64_t e) const;
  Poly frob_pow(std::uint32_t e) const;

  std::pair<Poly, Poly> divrem(const Poly& d) const;
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divrem(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divrem(b).second; }
  static Poly gcd(Poly a, Poly b);  // monic gcd

  std::uint32_t eval(std::uint32_t x) const;

  std::string to_string(const std::string& var = "T") const;
  static Poly parse(const PrimeField& F, const std::string& text, const std::string& var = "T");

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  const PrimeField* F_;
  std::vector<std::uint8_t> c_;
};

// j-th hyperderivative with respect to theta: theta^k -> binom(k, j) theta^(k-j).
Poly hyperderiv(const Poly& f, std::uint64_t j);

}  // namespace gosslv
