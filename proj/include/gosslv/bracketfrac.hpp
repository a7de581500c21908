#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gosslv/frac.hpp"
#include "gosslv/laurent.hpp"
#include "gosslv/poly.hpp"

namespace gosslv {

// Carlitz bracket [k] = theta^(q^k) - theta as a (2-term) polynomial.
Poly bracket(const PrimeField& F, std::uint32_t k);
// Expanded [k]^e: e+1 terms via the binomial theorem on (theta^(q^k) - theta)^e.
Poly bracket_pow(const PrimeField& F, std::uint32_t k, std::uint32_t e);
// Expanded product of bracket powers prod_k [k+1]^(exps[k]).
Poly bracket_product(const PrimeField& F, const std::vector<std::uint16_t>& exps);

// Element of K whose denominator is kept factored as a product of brackets:
// num / prod_k [k]^(e_k).  Everything on the logarithm-coefficient paths
// lives in this localization, and keeping the factorization means every
// product/rescale is a sparse-by-dense pass; the denominators at the sweep
// corners have expanded degree ~1e5 and must never be multiplied densely.
// The representation is not required to be reduced; equality cross-multiplies
// with the (small) exponent differences.
class BracketFrac {
public:
  BracketFrac() = default;
  explicit BracketFrac(Poly num) : num_(std::move(num)) {}
  static BracketFrac make(Poly num, std::vector<std::uint16_t> den_exps);
  static BracketFrac zero(const PrimeField& F) { return BracketFrac(Poly(F)); }
  static BracketFrac one(const PrimeField& F) { return BracketFrac(Poly::constant(F, 1)); }
  static BracketFrac zero_with_den(const PrimeField& F, std::vector<std::uint16_t> den_exps);

  const Poly& num() const { return num_; }
  const std::vector<std::uint16_t>& den_exps() const { return den_; }
  std::uint32_t den_exp(std::uint32_t k) const {
    return (k >= 1 && k <= den_.size()) ? den_[k - 1] : 0u;
  }
  const PrimeField& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_null() const { return num_.is_null(); }

  BracketFrac operator-() const;
  BracketFrac& operator+=(const BracketFrac& o);
  friend BracketFrac operator+(BracketFrac a, const BracketFrac& b) { a += b; return a; }
  friend BracketFrac operator-(BracketFrac a, const BracketFrac& b) { a += -b; return a; }
  friend BracketFrac operator*(const BracketFrac& a, const BracketFrac& b);
  BracketFrac mul_poly(const Poly& p) const;
  BracketFrac mul_scalar(std::uint32_t s) const;
  // divide by [k]^e (denominator exponent bump)
  BracketFrac div_bracket(std::uint32_t k, std::uint32_t e = 1) const;
  // multiply by [k]^e, cancelling against the denominator first
  BracketFrac mul_bracket(std::uint32_t k, std::uint32_t e = 1) const;

  // Exact equality of the represented values (cross-multiplied).
  friend bool operator==(const BracketFrac& a, const BracketFrac& b);
  friend bool operator!=(const BracketFrac& a, const BracketFrac& b) { return !(a == b); }

  // Cancel denominator brackets that divide the numerator (greedy, highest
  // bracket first; deterministic but not a canonical form since brackets are
  // not coprime).
  BracketFrac reduced() const;

  std::int64_t v_inf() const;  // +"infinity" sentinel for zero
  Frac to_frac() const;        // expands the denominator; use at tame degrees
  Laurent to_laurent(std::int64_t prec) const;

  std::string to_string(const std::string& var = "T") const;

private:
  void trim() {
    while (!den_.empty() && den_.back() == 0) den_.pop_back();
    if (num_.is_zero()) den_.clear();
  }
  Poly num_;
  std::vector<std::uint16_t> den_;
};

}  // namespace gosslv
