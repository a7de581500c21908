#include "gosslv/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace gosslv {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::domain_error("PrimeField: modulus is not prime");
  if (p > 251) throw std::domain_error("PrimeField: modulus too large for byte-packed coefficients");
  inv_.assign(p, 0);
  for (std::uint32_t a = 1; a < p; ++a) inv_[a] = pow(a, p - 2);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  return inv_[a];
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % p_, base = a % p_;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

const PrimeField& PrimeField::get(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, PrimeField*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, new PrimeField(p)).first;
  return *it->second;
}

std::uint32_t lucas_binomial(std::int64_t i, std::uint64_t j, const PrimeField& F) {
  if (i < 0) {
    // binom(-i, j) = (-1)^j binom(i+j-1, j)
    std::uint64_t top = static_cast<std::uint64_t>(-i) + j - 1;
    std::uint32_t v = lucas_binomial(static_cast<std::int64_t>(top), j, F);
    return (j & 1) ? F.neg(v) : v;
  }
  std::uint64_t n = static_cast<std::uint64_t>(i), k = j;
  const std::uint32_t p = F.p();
  std::uint32_t r = 1;
  while (k) {
    std::uint32_t nd = static_cast<std::uint32_t>(n % p), kd = static_cast<std::uint32_t>(k % p);
    if (kd > nd) return 0;
    // small digit binomial
    std::uint32_t num = 1, den = 1;
    for (std::uint32_t t = 0; t < kd; ++t) {
      num = F.mul(num, (nd - t) % p);
      den = F.mul(den, (t + 1) % p);
    }
    r = F.mul(r, F.mul(num, F.inv(den)));
    n /= p;
    k /= p;
  }
  return r;
}

}  // namespace gosslv
