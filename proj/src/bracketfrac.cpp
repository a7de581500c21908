#include "gosslv/bracketfrac.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gosslv {

Poly bracket(const PrimeField& F, std::uint32_t k) {
  if (k == 0) return Poly::constant(F, 1);  // empty bracket convention [0] = 1
  std::int64_t e = 1;
  for (std::uint32_t t = 0; t < k; ++t) e *= F.p();
  Poly r = Poly::monomial(F, 1, e);
  return r - Poly::theta(F);
}

Poly bracket_pow(const PrimeField& F, std::uint32_t k, std::uint32_t e) {
  if (e == 0 || k == 0) return Poly::constant(F, 1);
  std::int64_t m = 1;
  for (std::uint32_t t = 0; t < k; ++t) m *= F.p();
  // (theta^m - theta)^e = sum_j binom(e,j) (-1)^(e-j) theta^(m j + e - j)
  Poly r(F);
  for (std::uint32_t j = 0; j <= e; ++j) {
    std::uint32_t c = lucas_binomial(static_cast<std::int64_t>(e), j, F);
    if (((e - j) & 1u) != 0) c = F.neg(c);
    if (!c) continue;
    r += Poly::monomial(F, c, m * j + (e - j));
  }
  return r;
}

Poly bracket_product(const PrimeField& F, const std::vector<std::uint16_t>& exps) {
  Poly r = Poly::constant(F, 1);
  for (std::size_t k = exps.size(); k-- > 0;) {
    if (exps[k]) r = r * bracket_pow(F, static_cast<std::uint32_t>(k + 1), exps[k]);
  }
  return r;
}

BracketFrac BracketFrac::make(Poly num, std::vector<std::uint16_t> den_exps) {
  BracketFrac r(std::move(num));
  r.den_ = std::move(den_exps);
  r.trim();
  return r;
}

BracketFrac BracketFrac::zero_with_den(const PrimeField& F, std::vector<std::uint16_t> den_exps) {
  // Denominator shell for in-place accumulation: exponents are kept even
  // though the numerator is still zero.
  BracketFrac r{Poly(F)};
  r.den_ = std::move(den_exps);
  while (!r.den_.empty() && r.den_.back() == 0) r.den_.pop_back();
  return r;
}

BracketFrac BracketFrac::operator-() const {
  BracketFrac r = *this;
  r.num_ = -r.num_;
  return r;
}

BracketFrac& BracketFrac::operator+=(const BracketFrac& o) {
  if (o.is_zero()) return *this;
  const PrimeField& F = o.field();
  if (num_.is_null()) num_ = Poly(F);
  // lcm of the factored denominators
  std::vector<std::uint16_t> lcm(std::max(den_.size(), o.den_.size()), 0);
  for (std::size_t i = 0; i < lcm.size(); ++i) {
    std::uint16_t a = i < den_.size() ? den_[i] : 0;
    std::uint16_t b = i < o.den_.size() ? o.den_[i] : 0;
    lcm[i] = std::max(a, b);
  }
  bool self_scaled = false;
  std::vector<std::uint16_t> diff(lcm.size(), 0);
  for (std::size_t i = 0; i < lcm.size(); ++i) {
    diff[i] = static_cast<std::uint16_t>(lcm[i] - (i < den_.size() ? den_[i] : 0));
    if (diff[i]) self_scaled = true;
  }
  if (self_scaled && !num_.is_zero()) num_ = num_ * bracket_product(F, diff);
  for (std::size_t i = 0; i < lcm.size(); ++i)
    diff[i] = static_cast<std::uint16_t>(lcm[i] - (i < o.den_.size() ? o.den_[i] : 0));
  bool other_scaled = false;
  for (auto d : diff)
    if (d) other_scaled = true;
  if (other_scaled) {
    num_ += o.num_ * bracket_product(F, diff);
  } else {
    num_ += o.num_;
  }
  den_ = std::move(lcm);
  trim();
  return *this;
}

BracketFrac operator*(const BracketFrac& a, const BracketFrac& b) {
  BracketFrac r(a.num_ * b.num_);
  if (r.is_zero()) return r;
  r.den_.assign(std::max(a.den_.size(), b.den_.size()), 0);
  for (std::size_t i = 0; i < r.den_.size(); ++i) {
    std::uint32_t s = (i < a.den_.size() ? a.den_[i] : 0u) + (i < b.den_.size() ? b.den_[i] : 0u);
    if (s > 0xffffu) throw std::domain_error("BracketFrac: denominator exponent overflow");
    r.den_[i] = static_cast<std::uint16_t>(s);
  }
  r.trim();
  return r;
}

BracketFrac BracketFrac::mul_poly(const Poly& p) const {
  BracketFrac r = *this;
  r.num_ = r.num_ * p;
  r.trim();
  return r;
}

BracketFrac BracketFrac::mul_scalar(std::uint32_t s) const {
  BracketFrac r = *this;
  r.num_ = r.num_.mul_scalar(s);
  r.trim();
  return r;
}

BracketFrac BracketFrac::div_bracket(std::uint32_t k, std::uint32_t e) const {
  if (k == 0 || e == 0) return *this;
  BracketFrac r = *this;
  if (r.is_zero()) return r;
  if (r.den_.size() < k) r.den_.resize(k, 0);
  std::uint32_t s = r.den_[k - 1] + e;
  if (s > 0xffffu) throw std::domain_error("BracketFrac: denominator exponent overflow");
  r.den_[k - 1] = static_cast<std::uint16_t>(s);
  return r;
}

BracketFrac BracketFrac::mul_bracket(std::uint32_t k, std::uint32_t e) const {
  if (k == 0 || e == 0) return *this;
  BracketFrac r = *this;
  std::uint32_t cancel = std::min<std::uint32_t>(e, r.den_exp(k));
  if (cancel) r.den_[k - 1] = static_cast<std::uint16_t>(r.den_[k - 1] - cancel);
  if (e > cancel) r.num_ = r.num_ * bracket_pow(field(), k, e - cancel);
  r.trim();
  return r;
}

bool operator==(const BracketFrac& a, const BracketFrac& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const PrimeField& F = a.field();
  std::size_t n = std::max(a.den_.size(), b.den_.size());
  std::vector<std::uint16_t> da(n, 0), db(n, 0);
  bool need_a = false, need_b = false;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint16_t ea = i < a.den_.size() ? a.den_[i] : 0;
    std::uint16_t eb = i < b.den_.size() ? b.den_[i] : 0;
    std::uint16_t m = std::min(ea, eb);
    da[i] = static_cast<std::uint16_t>(eb - m);  // scale a by b's surplus
    db[i] = static_cast<std::uint16_t>(ea - m);
    need_a = need_a || da[i];
    need_b = need_b || db[i];
  }
  Poly lhs = need_a ? a.num_ * bracket_product(F, da) : a.num_;
  Poly rhs = need_b ? b.num_ * bracket_product(F, db) : b.num_;
  return lhs == rhs;
}

namespace {

// f mod (theta^m - theta) by exponent folding (theta^e == theta^(e-(m-1)) for
// e >= m): one pass, no quotient.  Screens reduced()'s trial divisions, which
// on the big logarithm numerators nearly always fail.
bool bracket_divides(const Poly& f, std::int64_t m) {
  const auto& c = f.coeffs();
  if (static_cast<std::int64_t>(c.size()) <= m)
    return f.is_zero();
  std::vector<std::uint32_t> fold(static_cast<std::size_t>(m), 0);
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (!c[e]) continue;
    std::size_t t = e < static_cast<std::size_t>(m)
                        ? e
                        : static_cast<std::size_t>((e - 1) % (m - 1)) + 1;
    fold[t] += c[e];
  }
  const std::uint32_t p = f.field().p();
  for (std::uint32_t v : fold)
    if (v % p) return false;
  return true;
}

}  // namespace

BracketFrac BracketFrac::reduced() const {
  if (is_zero()) return *this;
  BracketFrac r = *this;
  const PrimeField& F = field();
  std::int64_t m = 1;
  std::vector<std::int64_t> qpow(r.den_.size() + 1, 1);
  for (std::size_t k = 1; k < qpow.size(); ++k) {
    if (m < (std::numeric_limits<std::int64_t>::max() / F.p()))
      m *= F.p();
    qpow[k] = m;
  }
  for (std::size_t k = r.den_.size(); k-- > 0;) {
    while (r.den_[k] > 0) {
      if (!bracket_divides(r.num_, qpow[k + 1])) break;
      auto qr = r.num_.divrem(bracket(F, static_cast<std::uint32_t>(k + 1)));
      if (!qr.second.is_zero()) break;
      r.num_ = std::move(qr.first);
      --r.den_[k];
    }
  }
  r.trim();
  return r;
}

std::int64_t BracketFrac::v_inf() const {
  if (is_zero()) return Laurent::kInfVal;
  const std::int64_t p = field().p();
  std::int64_t v = -num_.deg();
  std::int64_t qk = 1;
  for (std::size_t k = 0; k < den_.size(); ++k) {
    qk *= p;
    v += qk * den_[k];
  }
  return v;
}

Frac BracketFrac::to_frac() const {
  return Frac::make(num_, bracket_product(field(), den_));
}

Laurent BracketFrac::to_laurent(std::int64_t prec) const {
  if (is_zero()) return Laurent::zero(field(), prec);
  return Laurent::from_fraction(num_, bracket_product(field(), den_), prec);
}

std::string BracketFrac::to_string(const std::string& var) const {
  std::string out = "(" + num_.to_string(var) + ")";
  bool any = false;
  for (std::size_t k = 0; k < den_.size(); ++k) {
    if (!den_[k]) continue;
    out += any ? "*" : " / ";
    any = true;
    out += "[" + std::to_string(k + 1) + "]";
    if (den_[k] > 1) out += "^" + std::to_string(den_[k]);
  }
  return out;
}

}  // namespace gosslv
