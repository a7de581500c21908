#include "gosslv/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace gosslv {

namespace {
constexpr std::int64_t kMaxDegree = 1LL << 26;  // hard cap against runaway exponent spreads
}

const PrimeField& Poly::field() const {
  if (!F_) throw std::logic_error("Poly: null value used");
  return *F_;
}

Poly Poly::constant(const PrimeField& F, std::uint32_t v) {
  Poly r(F);
  v %= F.p();
  if (v) r.c_.push_back(static_cast<std::uint8_t>(v));
  return r;
}

Poly Poly::monomial(const PrimeField& F, std::uint32_t v, std::int64_t k) {
  if (k < 0) throw std::domain_error("Poly::monomial: negative exponent");
  if (k > kMaxDegree) throw std::domain_error("Poly::monomial: exponent too large");
  Poly r(F);
  v %= F.p();
  if (v) {
    r.c_.assign(static_cast<std::size_t>(k) + 1, 0);
    r.c_.back() = static_cast<std::uint8_t>(v);
  }
  return r;
}

std::size_t Poly::nonzero_count() const {
  std::size_t n = 0;
  for (auto v : c_)
    if (v) ++n;
  return n;
}

Poly Poly::operator-() const {
  Poly r = *this;
  if (F_) {
    for (auto& v : r.c_) v = static_cast<std::uint8_t>(F_->neg(v));
  }
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) { *this = o; return *this; }
  const PrimeField& F = field();
  if (&o.field() != &F) throw std::logic_error("Poly: field mismatch");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] = static_cast<std::uint8_t>(F.add(c_[i], o.c_[i]));
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) { *this = -o; return *this; }
  const PrimeField& F = field();
  if (&o.field() != &F) throw std::logic_error("Poly: field mismatch");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] = static_cast<std::uint8_t>(F.sub(c_[i], o.c_[i]));
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.F_ ? Poly(a.field()) : Poly(b.field());
  const PrimeField& F = a.field();
  if (&b.field() != &F) throw std::logic_error("Poly: field mismatch");
  // Drive the convolution from the sparser operand: the bracket polynomials
  // and Frobenius powers that dominate the heavy paths have very few terms.
  const Poly* s = &a;
  const Poly* d = &b;
  if (s->nonzero_count() > d->nonzero_count()) std::swap(s, d);
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < s->c_.size(); ++i) {
    std::uint64_t ci = s->c_[i];
    if (!ci) continue;
    const auto& dc = d->c_;
    std::uint64_t* out = acc.data() + i;
    for (std::size_t j = 0; j < dc.size(); ++j) out[j] += ci * dc[j];
  }
  Poly r(F);
  r.c_.resize(acc.size());
  const std::uint32_t p = F.p();
  for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<std::uint8_t>(acc[i] % p);
  r.trim();
  return r;
}

Poly Poly::mul_scalar(std::uint32_t sv) const {
  const PrimeField& F = field();
  sv %= F.p();
  if (sv == 0) return Poly(F);
  if (sv == 1) return *this;
  Poly r = *this;
  for (auto& v : r.c_) v = static_cast<std::uint8_t>(F.mul(v, sv));
  r.trim();
  return r;
}

Poly Poly::shifted(std::int64_t k) const {
  if (k < 0) throw std::domain_error("Poly::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  if (deg() + k > kMaxDegree) throw std::domain_error("Poly::shifted: degree cap exceeded");
  Poly r(field());
  r.c_.assign(static_cast<std::size_t>(k), 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return mul_scalar(field().inv(leading()));
}

Poly Poly::frob_pow(std::uint32_t e) const {
  const PrimeField& F = field();
  if (e == 0 || is_constant()) return *this;
  std::int64_t stride = 1;
  for (std::uint32_t t = 0; t < e; ++t) {
    if (stride > kMaxDegree / F.p()) throw std::domain_error("Poly::frob_pow: degree cap exceeded");
    stride *= F.p();
  }
  if (stride * deg() > kMaxDegree) throw std::domain_error("Poly::frob_pow: degree cap exceeded");
  Poly r(F);
  r.c_.assign(static_cast<std::size_t>(deg() * stride) + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) r.c_[i * static_cast<std::size_t>(stride)] = c_[i];
  return r;
}

Poly Poly::pow(std::uint64_t e) const {
  const PrimeField& F = field();
  Poly r = Poly::constant(F, 1);
  if (e == 0) return r;
  if (is_zero()) return Poly(F);
  std::uint32_t level = 0;
  std::uint64_t rest = e;
  while (rest) {
    std::uint32_t digit = static_cast<std::uint32_t>(rest % F.p());
    if (digit) {
      Poly base = frob_pow(level);
      for (std::uint32_t t = 0; t < digit; ++t) r = r * base;
    }
    rest /= F.p();
    ++level;
  }
  return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  const PrimeField& F = field();
  if (d.is_zero()) throw std::domain_error("Poly::divrem: division by zero");
  if (&d.field() != &F) throw std::logic_error("Poly: field mismatch");
  Poly quo(F), rem = *this;
  if (deg() < d.deg()) return {quo, rem};
  quo.c_.assign(static_cast<std::size_t>(deg() - d.deg()) + 1, 0);
  const std::uint32_t lcinv = F.inv(d.leading());
  while (!rem.is_zero() && rem.deg() >= d.deg()) {
    std::int64_t shift = rem.deg() - d.deg();
    std::uint32_t cq = F.mul(rem.leading(), lcinv);
    quo.c_[static_cast<std::size_t>(shift)] = static_cast<std::uint8_t>(cq);
    // rem -= cq * theta^shift * d, touching only d's nonzero slots
    for (std::size_t i = 0; i < d.c_.size(); ++i) {
      if (!d.c_[i]) continue;
      std::size_t k = i + static_cast<std::size_t>(shift);
      rem.c_[k] = static_cast<std::uint8_t>(F.sub(rem.c_[k], F.mul(cq, d.c_[i])));
    }
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

std::uint32_t Poly::eval(std::uint32_t x) const {
  const PrimeField& F = field();
  std::uint32_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = F.add(F.mul(r, x), c_[i]);
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    std::uint32_t v = c_[i];
    if (!v) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(v);
    } else {
      if (v != 1) {
        out += std::to_string(v);
        out += "*";
      }
      out += var;
      if (i > 1) {
        out += "^";
        out += std::to_string(i);
      }
    }
  }
  return out;
}

Poly Poly::parse(const PrimeField& F, const std::string& text, const std::string& var) {
  Poly r(F);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw std::invalid_argument("Poly::parse: empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      if (first) throw std::invalid_argument("Poly::parse: empty input");
      break;
    }
    std::int64_t sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("Poly::parse: expected '+' or '-'");
    }
    skip_ws();
    std::int64_t coeff = 1;
    bool have_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = coeff * 10 + (text[pos] - '0');
        if (coeff > (1LL << 40)) coeff %= F.p();
        ++pos;
      }
      have_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    std::int64_t exp = 0;
    if (pos + var.size() <= text.size() && text.compare(pos, var.size(), var) == 0) {
      pos += var.size();
      exp = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
          throw std::invalid_argument("Poly::parse: bad exponent");
        exp = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          exp = exp * 10 + (text[pos] - '0');
          if (exp > kMaxDegree) throw std::invalid_argument("Poly::parse: exponent too large");
          ++pos;
        }
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("Poly::parse: expected coefficient or variable");
    }
    r += Poly::monomial(F, F.from_int(sign * coeff), exp);
    first = false;
  }
  return r;
}

Poly hyperderiv(const Poly& f, std::uint64_t j) {
  const PrimeField& F = f.field();
  if (j == 0) return f;
  Poly r(F);
  for (std::int64_t k = static_cast<std::int64_t>(j); k <= f.deg(); ++k) {
    std::uint32_t c = f.coeff(k);
    if (!c) continue;
    std::uint32_t bin = lucas_binomial(k, j, F);
    if (!bin) continue;
    r += Poly::monomial(F, F.mul(c, bin), k - static_cast<std::int64_t>(j));
  }
  return r;
}

}  // namespace gosslv
