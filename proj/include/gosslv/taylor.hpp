#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gosslv/frac.hpp"

namespace gosslv {

// Truncated Taylor expansion around t = theta in the local parameter
// s = t - theta, with exact coefficients in F (a field-like value type).
// Coefficient j of a function expanded here *is* its j-th hyperderivative
// with respect to t evaluated at theta, which is how all "evaluate the
// derivative at theta" steps are realized.
template <class F>
class Taylor {
public:
  Taylor() = default;
  explicit Taylor(std::vector<F> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::logic_error("Taylor: empty coefficient list");
  }
  static Taylor zeros(const F& like, std::size_t order) {
    std::vector<F> c(order + 1, like - like);
    return Taylor(std::move(c));
  }
  static Taylor constant(const F& value, std::size_t order) {
    Taylor r = zeros(value, order);
    r.c_[0] = value;
    return r;
  }
  // expansion of s + a0 (i.e. t - theta + a0)
  static Taylor linear(const F& a0, const F& one, std::size_t order) {
    Taylor r = constant(a0, order);
    if (order >= 1) r.c_[1] = one;
    return r;
  }

  std::size_t order() const { return c_.size() - 1; }
  const F& operator[](std::size_t j) const { return c_.at(j); }
  F& operator[](std::size_t j) { return c_.at(j); }
  const std::vector<F>& coeffs() const { return c_; }

  friend Taylor operator+(const Taylor& a, const Taylor& b) {
    std::size_t m = std::min(a.order(), b.order());
    std::vector<F> c(m + 1, a.c_[0]);
    for (std::size_t j = 0; j <= m; ++j) c[j] = a.c_[j] + b.c_[j];
    return Taylor(std::move(c));
  }
  friend Taylor operator-(const Taylor& a, const Taylor& b) {
    std::size_t m = std::min(a.order(), b.order());
    std::vector<F> c(m + 1, a.c_[0]);
    for (std::size_t j = 0; j <= m; ++j) c[j] = a.c_[j] - b.c_[j];
    return Taylor(std::move(c));
  }
  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    std::size_t m = std::min(a.order(), b.order());
    Taylor r = zeros(a.c_[0], m);
    for (std::size_t i = 0; i <= m; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= m; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  Taylor scale(const F& s) const {
    Taylor r = *this;
    for (auto& v : r.c_) v = v * s;
    return r;
  }

  // multiply by (s + a0), same truncation order
  Taylor mul_s_plus(const F& a0) const {
    Taylor r = zeros(c_[0], order());
    for (std::size_t j = 0; j <= order(); ++j) {
      r.c_[j] = c_[j] * a0;
      if (j >= 1) r.c_[j] += c_[j - 1];
    }
    return r;
  }

  // multiplicative inverse; requires an invertible constant term and an
  // element type with .inv()
  Taylor inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("Taylor: inverse needs a unit constant term");
    F u = c_[0].inv();
    Taylor r = zeros(c_[0], order());
    r.c_[0] = u;
    for (std::size_t k = 1; k <= order(); ++k) {
      F s = c_[0] - c_[0];  // zero
      for (std::size_t i = 1; i <= k; ++i) s += c_[i] * r.c_[k - i];
      r.c_[k] = -(u * s);
    }
    return r;
  }

private:
  std::vector<F> c_;
};

// Polynomial in the deformation variable t with coefficients in K, dense in t.
using TPoly = std::vector<Frac>;

TPoly tpoly_zero(const PrimeField& F);
TPoly tpoly_from(std::vector<Frac> coeffs);
bool tpoly_is_zero(const TPoly& f);
TPoly tpoly_add(const TPoly& a, const TPoly& b);
TPoly tpoly_sub(const TPoly& a, const TPoly& b);
TPoly tpoly_mul(const TPoly& a, const TPoly& b);
TPoly tpoly_scale(const TPoly& a, const Frac& s);
// (t - c)^e
TPoly tpoly_linear_pow(const Frac& c, std::uint32_t e);
Frac tpoly_eval(const TPoly& f, const Frac& x);
std::string tpoly_to_string(const TPoly& f);

// Expansion of f(t) around t = theta to the given order (exact coefficients).
Taylor<Frac> tpoly_taylor(const TPoly& f, std::size_t order, const PrimeField& F);
// Expansion of num/den around t = theta; den(theta) must be nonzero.
Taylor<Frac> taylor_of_fraction(const TPoly& num, const TPoly& den, std::size_t order,
                                const PrimeField& F);
// Rewrite sum_j c_j s^j back as a polynomial in t (s = t - theta).
TPoly taylor_to_tpoly(const Taylor<Frac>& f, const PrimeField& F);

}  // namespace gosslv
