#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gosslv/poly.hpp"

namespace gosslv {

// Truncated Laurent series in u = 1/theta over F_q: the completion at the
// infinite place, normalized so v_inf(theta) = -1.  A value is known modulo
// u^prec (absolute precision); prec == kExactPrec marks finitely supported
// exact values.  Stored coefficients run from exponent `lead`, first one
// nonzero; a value that is zero to its precision has no stored coefficients.
class Laurent {
public:
  static constexpr std::int64_t kExactPrec = std::numeric_limits<std::int64_t>::max() / 4;
  static constexpr std::int64_t kInfVal = std::numeric_limits<std::int64_t>::max() / 4;

  Laurent() : F_(nullptr), lead_(0), prec_(kExactPrec) {}
  static Laurent zero(const PrimeField& F, std::int64_t prec = kExactPrec);
  static Laurent one(const PrimeField& F, std::int64_t prec = kExactPrec);
  static Laurent monomial(const PrimeField& F, std::uint32_t c, std::int64_t uexp,
                          std::int64_t prec = kExactPrec);
  // Exact image of a polynomial in theta (theta^k = u^-k).
  static Laurent from_poly(const Poly& f, std::int64_t prec = kExactPrec);
  // u-adic expansion of num/den to absolute precision prec; exact when the
  // long division terminates (e.g. den a unit times a power of theta).
  static Laurent from_fraction(const Poly& num, const Poly& den, std::int64_t prec);

  const PrimeField& field() const;
  std::uint32_t q() const { return field().p(); }
  bool is_null() const { return F_ == nullptr; }
  std::int64_t prec() const { return prec_; }
  bool exact() const { return prec_ == kExactPrec; }
  // Valuation lower bound: exact for nonzero stored values, prec for values
  // that vanish to their precision, kInfVal for exact zero.
  std::int64_t val() const {
    if (!c_.empty()) return lead_;
    return exact() ? kInfVal : prec_;
  }
  bool zero_to_prec() const { return c_.empty(); }
  std::uint32_t coeff(std::int64_t uexp) const;  // throws past precision
  std::int64_t lead() const { return lead_; }
  const std::vector<std::uint8_t>& coeffs() const { return c_; }

  Laurent operator-() const;
  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator+=(const Laurent& o) { *this = *this + o; return *this; }
  bool is_zero() const { return c_.empty() && exact(); }
  Laurent mul_scalar(std::uint32_t s) const;
  Laurent mul_upow(std::int64_t k) const;  // times u^k
  // 1/x to absolute precision result_prec (clamped by the input's own
  // relative precision); exact monomials invert exactly.
  Laurent inverse_to(std::int64_t result_prec) const;
  friend Laurent operator/(const Laurent& a, const Laurent& b);
  // x -> x^(q^e): exponent spread; precision scales by q^e as well.
  Laurent frob_pow(std::uint32_t e) const;
  Laurent pow(std::uint64_t e) const;
  Laurent truncated(std::int64_t prec) const;

  // Structural equality (same window, same coefficients, same precision).
  friend bool operator==(const Laurent& a, const Laurent& b);
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  // Number of leading u-exponents (from min(val)) on which a and b provably
  // agree, capped at joint precision; kExactPrec if identical exact values.
  static std::int64_t matched_coefficients(const Laurent& a, const Laurent& b);
  static bool agree_to(const Laurent& a, const Laurent& b, std::int64_t prec);

  std::string to_text() const;  // e.g. "1 - u^3 - u^5 + O(u^7)", balanced digits
  std::string to_json() const;
  static Laurent parse_json(const std::string& text);

  friend Laurent hyperderiv(const Laurent& f, std::uint64_t j);

private:
  void normalize();
  const PrimeField* F_;
  std::int64_t lead_;
  std::vector<std::uint8_t> c_;
  std::int64_t prec_;
};

// j-th hyperderivative with respect to theta on Laurent series:
// theta^k -> binom(k, j) theta^(k-j), i.e. u^m -> binom(-m, j) u^(m+j).
// The coefficient of u^(m+j) is known iff the input coefficient at u^m was
// stored, so the output is known modulo u^(prec+j).
Laurent hyperderiv(const Laurent& f, std::uint64_t j);

}  // namespace gosslv
