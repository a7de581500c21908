#include "gosslv/carlitz.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "gosslv/bracketfrac.hpp"

namespace gosslv {

CarlitzTable& CarlitzTable::get(const PrimeField& F) {
  static std::mutex mu;
  static std::map<std::uint32_t, CarlitzTable*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(F.p());
  if (it == cache.end()) it = cache.emplace(F.p(), new CarlitzTable(F)).first;
  return *it->second;
}

const Poly& CarlitzTable::D(std::uint32_t i) {
  if (d_.empty()) d_.push_back(Poly::constant(F_, 1));
  while (d_.size() <= i) {
    std::uint32_t k = static_cast<std::uint32_t>(d_.size());
    d_.push_back(bracket(F_, k) * d_.back().frob_pow(1));
  }
  return d_[i];
}

const Poly& CarlitzTable::L(std::uint32_t i) {
  if (l_.empty()) l_.push_back(Poly::constant(F_, 1));
  while (l_.size() <= i) {
    std::uint32_t k = static_cast<std::uint32_t>(l_.size());
    l_.push_back(-(bracket(F_, k) * l_.back()));
  }
  return l_[i];
}

std::int64_t CarlitzTable::deg_D(const PrimeField& F, std::uint32_t i) {
  std::int64_t qi = 1;
  for (std::uint32_t t = 0; t < i; ++t) qi *= F.p();
  return static_cast<std::int64_t>(i) * qi;
}

std::int64_t CarlitzTable::deg_L(const PrimeField& F, std::uint32_t i) {
  // q + q^2 + ... + q^i
  std::int64_t s = 0, qk = 1;
  for (std::uint32_t t = 1; t <= i; ++t) {
    qk *= F.p();
    s += qk;
  }
  return s;
}

Poly CarlitzTable::factorial(std::uint64_t n) {
  Poly r = Poly::constant(F_, 1);
  std::uint32_t j = 0;
  while (n) {
    std::uint32_t digit = static_cast<std::uint32_t>(n % F_.p());
    for (std::uint32_t t = 0; t < digit; ++t) r = r * D(j);
    n /= F_.p();
    ++j;
  }
  return r;
}

Laurent polylog_eval(std::uint32_t n, const Laurent& z, std::int64_t prec) {
  const PrimeField& F = z.field();
  const std::int64_t q = F.p();
  const std::int64_t vz = z.val();
  if (vz < Laurent::kInfVal && (q - 1) * vz + static_cast<std::int64_t>(n) * q <= 0)
    throw std::domain_error("polylog_eval: input outside the convergence domain");
  CarlitzTable& C = CarlitzTable::get(F);
  Laurent acc = Laurent::zero(F, prec);
  if (vz >= Laurent::kInfVal) return acc;
  std::int64_t qi = 1;
  for (std::uint32_t i = 0;; ++i) {
    // v(z^(q^i) / L_i^n) = q^i v(z) + n deg L_i, strictly increasing inside
    // the domain, so the first term past prec ends the sum.
    std::int64_t vterm = qi * vz + static_cast<std::int64_t>(n) * CarlitzTable::deg_L(F, i);
    if (vterm >= prec) break;
    Laurent inv_lin = Laurent::from_fraction(Poly::constant(F, 1), C.L(i).pow(n), prec - qi * vz);
    acc = acc + (z.frob_pow(i) * inv_lin).truncated(prec);
    if (qi > Laurent::kInfVal / (2 * q)) break;
    qi *= q;
  }
  return acc.truncated(prec);
}

Laurent zeta_block(const PrimeField& F, std::uint32_t s, std::uint32_t d, std::int64_t prec) {
  Laurent acc = Laurent::zero(F, prec);
  const std::uint32_t q = F.p();
  std::uint64_t count = 1;
  for (std::uint32_t t = 0; t < d; ++t) count *= q;
  std::vector<std::uint8_t> coeffs(d + 1, 0);
  coeffs[d] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (std::uint32_t j = 0; j < d; ++j) {
      coeffs[j] = static_cast<std::uint8_t>(rest % q);
      rest /= q;
    }
    Poly a(F, std::vector<std::uint8_t>(coeffs));
    acc = acc + Laurent::from_fraction(Poly::constant(F, 1), a.pow(s), prec);
  }
  return acc;
}

Laurent zeta_truncated(const PrimeField& F, std::uint32_t s, std::uint32_t maxdeg,
                       std::int64_t prec) {
  if (s == 0) throw std::domain_error("zeta_truncated: exponent must be positive");
  Laurent acc = Laurent::zero(F, prec);
  for (std::uint32_t d = 0; d <= maxdeg; ++d) acc = acc + zeta_block(F, s, d, prec);
  return acc;
}

}  // namespace gosslv
