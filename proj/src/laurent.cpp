#include "gosslv/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace gosslv {

namespace {

constexpr std::int64_t kWindowCap = 1LL << 26;

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= Laurent::kExactPrec || b >= Laurent::kExactPrec) return Laurent::kExactPrec;
  std::int64_t s = a + b;
  return s >= Laurent::kExactPrec ? Laurent::kExactPrec : s;
}

std::int64_t sat_mul(std::int64_t a, std::int64_t m) {
  if (a >= Laurent::kExactPrec / (m > 0 ? m : 1)) return Laurent::kExactPrec;
  if (a <= -(Laurent::kExactPrec / (m > 0 ? m : 1))) return -Laurent::kExactPrec;
  return a * m;
}

}  // namespace

const PrimeField& Laurent::field() const {
  if (!F_) throw std::logic_error("Laurent: null value used");
  return *F_;
}

void Laurent::normalize() {
  if (prec_ != kExactPrec) {
    while (!c_.empty() && lead_ + static_cast<std::int64_t>(c_.size()) > prec_) c_.pop_back();
  }
  std::size_t drop = 0;
  while (drop < c_.size() && c_[drop] == 0) ++drop;
  if (drop) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(drop));
    lead_ += static_cast<std::int64_t>(drop);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) lead_ = 0;
}

Laurent Laurent::zero(const PrimeField& F, std::int64_t prec) {
  Laurent r;
  r.F_ = &F;
  r.prec_ = prec;
  return r;
}

Laurent Laurent::one(const PrimeField& F, std::int64_t prec) { return monomial(F, 1, 0, prec); }

Laurent Laurent::monomial(const PrimeField& F, std::uint32_t c, std::int64_t uexp, std::int64_t prec) {
  Laurent r = zero(F, prec);
  c %= F.p();
  if (c && uexp < prec) {
    r.lead_ = uexp;
    r.c_.push_back(static_cast<std::uint8_t>(c));
  }
  return r;
}

Laurent Laurent::from_poly(const Poly& f, std::int64_t prec) {
  Laurent r = zero(f.field(), prec);
  if (f.is_zero()) return r;
  r.lead_ = -f.deg();
  r.c_.resize(static_cast<std::size_t>(f.deg()) + 1);
  for (std::int64_t k = 0; k <= f.deg(); ++k)
    r.c_[static_cast<std::size_t>(f.deg() - k)] = static_cast<std::uint8_t>(f.coeff(k));
  r.normalize();
  return r;
}

Laurent Laurent::from_fraction(const Poly& num, const Poly& den, std::int64_t prec) {
  const PrimeField& F = num.field();
  if (den.is_zero()) throw std::domain_error("Laurent::from_fraction: zero denominator");
  if (num.is_zero()) return zero(F, prec);
  const std::int64_t lead = den.deg() - num.deg();
  const std::int64_t terms = prec - lead;
  if (terms <= 0) return zero(F, prec);
  if (terms > kWindowCap) throw std::domain_error("Laurent::from_fraction: window too large");
  // u-adic long division of the exponent-reversed polynomials.
  std::vector<std::uint32_t> rem(static_cast<std::size_t>(std::max(num.deg() + 1, terms + den.deg() + 1)), 0);
  for (std::int64_t k = 0; k <= num.deg(); ++k)
    rem[static_cast<std::size_t>(k)] = num.coeff(num.deg() - k);
  const std::uint32_t lcinv = F.inv(den.leading());
  Laurent r = zero(F, prec);
  r.lead_ = lead;
  r.c_.assign(static_cast<std::size_t>(terms), 0);
  for (std::int64_t k = 0; k < terms; ++k) {
    std::uint32_t c = F.mul(rem[static_cast<std::size_t>(k)], lcinv);
    r.c_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(c);
    if (!c) continue;
    for (std::int64_t i = 0; i <= den.deg(); ++i) {
      std::uint32_t dv = den.coeff(den.deg() - i);
      if (!dv) continue;
      auto& slot = rem[static_cast<std::size_t>(k + i)];
      slot = F.sub(slot, F.mul(c, dv));
    }
  }
  bool terminated = true;
  for (std::int64_t k = terms; k < terms + den.deg() + 1 && terminated; ++k)
    if (rem[static_cast<std::size_t>(k)]) terminated = false;
  if (terminated) r.prec_ = kExactPrec;
  r.normalize();
  return r;
}

std::uint32_t Laurent::coeff(std::int64_t uexp) const {
  if (uexp >= prec_) throw std::domain_error("Laurent::coeff: index beyond precision");
  if (c_.empty() || uexp < lead_ || uexp >= lead_ + static_cast<std::int64_t>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(uexp - lead_)];
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  if (F_)
    for (auto& v : r.c_) v = static_cast<std::uint8_t>(F_->neg(v));
  return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  const PrimeField& F = a.field();
  if (&b.field() != &F) throw std::logic_error("Laurent: field mismatch");
  Laurent r = Laurent::zero(F, std::min(a.prec_, b.prec_));
  std::int64_t start = std::min(a.c_.empty() ? r.prec_ : a.lead_, b.c_.empty() ? r.prec_ : b.lead_);
  if (start >= r.prec_) return r;
  std::int64_t stop = r.prec_;
  if (r.prec_ == Laurent::kExactPrec) {
    stop = std::max(a.c_.empty() ? start : a.lead_ + static_cast<std::int64_t>(a.c_.size()),
                    b.c_.empty() ? start : b.lead_ + static_cast<std::int64_t>(b.c_.size()));
  }
  if (stop - start > kWindowCap) throw std::domain_error("Laurent: window too large");
  r.lead_ = start;
  r.c_.assign(static_cast<std::size_t>(stop - start), 0);
  for (std::int64_t m = start; m < stop; ++m) {
    std::uint32_t av = (!a.c_.empty() && m >= a.lead_ && m < a.lead_ + static_cast<std::int64_t>(a.c_.size()))
                           ? a.c_[static_cast<std::size_t>(m - a.lead_)]
                           : 0u;
    std::uint32_t bv = (!b.c_.empty() && m >= b.lead_ && m < b.lead_ + static_cast<std::int64_t>(b.c_.size()))
                           ? b.c_[static_cast<std::size_t>(m - b.lead_)]
                           : 0u;
    r.c_[static_cast<std::size_t>(m - start)] = static_cast<std::uint8_t>(F.add(av, bv));
  }
  r.normalize();
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  const PrimeField& F = a.field();
  if (&b.field() != &F) throw std::logic_error("Laurent: field mismatch");
  std::int64_t prec = std::min(sat_add(a.prec_, b.val()), sat_add(b.prec_, a.val()));
  Laurent r = Laurent::zero(F, prec);
  if (a.c_.empty() || b.c_.empty()) return r;
  std::int64_t lead = a.lead_ + b.lead_;
  std::int64_t len = static_cast<std::int64_t>(a.c_.size() + b.c_.size()) - 1;
  if (prec != Laurent::kExactPrec) len = std::min(len, prec - lead);
  if (len <= 0) return r;
  if (len > kWindowCap) throw std::domain_error("Laurent: window too large");
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(len), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    std::uint64_t av = a.c_[i];
    if (!av || static_cast<std::int64_t>(i) >= len) continue;
    std::size_t jmax = std::min(b.c_.size(), static_cast<std::size_t>(len - static_cast<std::int64_t>(i)));
    for (std::size_t j = 0; j < jmax; ++j) acc[i + j] += av * b.c_[j];
  }
  r.lead_ = lead;
  r.c_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i)
    r.c_[i] = static_cast<std::uint8_t>(acc[i] % F.p());
  r.normalize();
  return r;
}

Laurent Laurent::mul_scalar(std::uint32_t s) const {
  const PrimeField& F = field();
  s %= F.p();
  if (s == 0) return zero(F, prec_);
  Laurent r = *this;
  for (auto& v : r.c_) v = static_cast<std::uint8_t>(F.mul(v, s));
  r.normalize();
  return r;
}

Laurent Laurent::mul_upow(std::int64_t k) const {
  Laurent r = *this;
  if (!r.c_.empty()) r.lead_ += k;
  if (r.prec_ != kExactPrec) r.prec_ += k;
  return r;
}

Laurent Laurent::inverse_to(std::int64_t result_prec) const {
  const PrimeField& F = field();
  if (c_.empty()) throw std::domain_error("Laurent: inverse of (indistinguishable-from-)zero");
  const std::int64_t L = lead_;
  if (c_.size() == 1 && exact()) {
    return monomial(F, F.inv(c_[0]), -L);
  }
  // Need result_prec + L relative terms; the input supplies prec - L of them.
  std::int64_t rel = result_prec + L;
  if (prec_ != kExactPrec) rel = std::min(rel, prec_ - L);
  if (rel <= 0) return zero(F, result_prec);
  if (rel > kWindowCap) throw std::domain_error("Laurent: window too large");
  std::vector<std::uint32_t> g(static_cast<std::size_t>(rel), 0);
  const std::uint32_t inv0 = F.inv(c_[0]);
  g[0] = inv0;
  for (std::int64_t k = 1; k < rel; ++k) {
    std::uint32_t s = 0;
    std::int64_t imax = std::min<std::int64_t>(k, static_cast<std::int64_t>(c_.size()) - 1);
    for (std::int64_t i = 1; i <= imax; ++i)
      s = F.add(s, F.mul(c_[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(k - i)]));
    g[static_cast<std::size_t>(k)] = F.mul(F.neg(s), inv0);
  }
  Laurent r = zero(F, -L + rel);
  r.lead_ = -L;
  r.c_.assign(g.begin(), g.end());
  r.normalize();
  r = r.truncated(std::min(result_prec, r.prec_));
  return r;
}

Laurent operator/(const Laurent& a, const Laurent& b) {
  if (b.c_.empty()) throw std::domain_error("Laurent: division by (indistinguishable-from-)zero");
  if (b.exact() && b.c_.size() == 1) {
    Laurent r = a.mul_scalar(b.field().inv(b.c_[0]));
    return r.mul_upow(-b.lead_);
  }
  std::int64_t target = Laurent::kExactPrec;
  if (a.prec_ != Laurent::kExactPrec) target = std::min(target, a.prec_ - b.val());
  if (b.prec_ != Laurent::kExactPrec) target = std::min(target, b.prec_ - 2 * b.val() + a.val());
  if (target >= Laurent::kExactPrec)
    throw std::domain_error("Laurent: exact division by a non-monomial needs explicit precision");
  return a * b.inverse_to(target - a.val());
}

Laurent Laurent::frob_pow(std::uint32_t e) const {
  const PrimeField& F = field();
  std::int64_t m = 1;
  for (std::uint32_t t = 0; t < e; ++t) {
    if (m > kWindowCap) throw std::domain_error("Laurent::frob_pow: stride too large");
    m *= F.p();
  }
  if (m == 1) return *this;
  Laurent r = zero(F, prec_ == kExactPrec ? kExactPrec : sat_mul(prec_, m));
  if (c_.empty()) return r;
  std::int64_t len = (static_cast<std::int64_t>(c_.size()) - 1) * m + 1;
  if (len > kWindowCap) throw std::domain_error("Laurent::frob_pow: window too large");
  r.lead_ = sat_mul(lead_, m);
  r.c_.assign(static_cast<std::size_t>(len), 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) r.c_[i * static_cast<std::size_t>(m)] = c_[i];
  r.normalize();
  return r;
}

Laurent Laurent::pow(std::uint64_t e) const {
  Laurent r = one(field());
  Laurent base = *this;
  // plain binary powering; exponents here stay small
  while (e) {
    if (e & 1) r = r * base;
    if (e >>= 1) base = base * base;
  }
  return r;
}

Laurent Laurent::truncated(std::int64_t prec) const {
  Laurent r = *this;
  r.prec_ = std::min(prec_, prec);
  r.normalize();
  return r;
}

bool operator==(const Laurent& a, const Laurent& b) {
  return a.lead_ == b.lead_ && a.prec_ == b.prec_ && a.c_ == b.c_ &&
         !(a.F_ && b.F_ && a.F_ != b.F_);
}

std::int64_t Laurent::matched_coefficients(const Laurent& a, const Laurent& b) {
  std::int64_t limit = std::min(a.prec_, b.prec_);
  std::int64_t start = std::min(a.val(), b.val());
  if (limit == kExactPrec) {
    // both exact: either identical or they diverge at some stored exponent
    if (a.c_ == b.c_ && (a.c_.empty() || a.lead_ == b.lead_)) return kExactPrec;
    limit = std::max(a.lead_ + static_cast<std::int64_t>(a.c_.size()),
                     b.lead_ + static_cast<std::int64_t>(b.c_.size()));
  }
  if (start >= limit) return 0;
  for (std::int64_t m = start; m < limit; ++m)
    if (a.coeff(m) != b.coeff(m)) return m - start;
  return limit - start;
}

bool Laurent::agree_to(const Laurent& a, const Laurent& b, std::int64_t prec) {
  if (a.prec_ < prec || b.prec_ < prec) return false;
  std::int64_t start = std::min(a.val(), b.val());
  for (std::int64_t m = start; m < prec; ++m)
    if (a.coeff(m) != b.coeff(m)) return false;
  return true;
}

std::string Laurent::to_text() const {
  const std::uint32_t p = field().p();
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::uint32_t v = c_[i];
    if (!v) continue;
    std::int64_t m = lead_ + static_cast<std::int64_t>(i);
    std::int64_t bal = (v <= p / 2) ? static_cast<std::int64_t>(v)
                                    : static_cast<std::int64_t>(v) - static_cast<std::int64_t>(p);
    bool neg = bal < 0;
    std::uint64_t mag = static_cast<std::uint64_t>(neg ? -bal : bal);
    std::string piece;
    if (m == 0) {
      piece = std::to_string(mag);
    } else {
      if (mag != 1) piece = std::to_string(mag) + "*";
      piece += "u";
      if (m != 1) piece += "^" + std::to_string(m);
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + piece;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  if (prec_ != kExactPrec) {
    std::string oterm = "O(u^" + std::to_string(prec_) + ")";
    out = out.empty() ? oterm : out + " + " + oterm;
  } else if (out.empty()) {
    out = "0";
  }
  return out;
}

std::string Laurent::to_json() const {
  std::int64_t lead = c_.empty() ? 0 : lead_;
  std::int64_t prec = prec_;
  if (prec == kExactPrec) prec = lead + static_cast<std::int64_t>(c_.size());
  std::string out = "{\"lead\": " + std::to_string(lead) + ", \"coeffs\": [";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(static_cast<std::uint32_t>(c_[i]));
  }
  out += "], \"prec\": " + std::to_string(prec) + ", \"q\": " + std::to_string(field().p()) + "}";
  return out;
}

Laurent Laurent::parse_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  const PrimeField& F = PrimeField::get(j.at("q").get<std::uint32_t>());
  Laurent r = zero(F, j.at("prec").get<std::int64_t>());
  r.lead_ = j.at("lead").get<std::int64_t>();
  for (const auto& v : j.at("coeffs")) r.c_.push_back(static_cast<std::uint8_t>(v.get<std::uint32_t>() % F.p()));
  r.normalize();
  return r;
}

Laurent hyperderiv(const Laurent& f, std::uint64_t j) {
  if (j == 0) return f;
  const PrimeField& F = f.field();
  std::int64_t jj = static_cast<std::int64_t>(j);
  Laurent r = Laurent::zero(F, f.prec() == Laurent::kExactPrec ? Laurent::kExactPrec : f.prec() + jj);
  if (f.coeffs().empty()) return r;
  r.c_.assign(f.coeffs().size(), 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    std::uint32_t v = f.coeffs()[i];
    if (!v) continue;
    std::int64_t m = f.lead() + static_cast<std::int64_t>(i);
    r.c_[i] = static_cast<std::uint8_t>(F.mul(v, lucas_binomial(-m, j, F)));
  }
  r.lead_ = f.lead() + jj;
  r.normalize();
  return r;
}

}  // namespace gosslv
