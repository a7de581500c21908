#include "gosslv/irreducibles.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace gosslv {

namespace {

Poly mulmod(const Poly& x, const Poly& y, const Poly& w) {
  return (x * y).divrem(w).second;
}

Poly powmod_q(const Poly& x, const Poly& w) {
  const PrimeField& F = x.field();
  std::uint32_t e = F.p();
  Poly base = x;
  Poly acc = Poly::constant(F, 1);
  while (e > 0) {
    if (e & 1) acc = mulmod(acc, base, w);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, w);
  }
  return acc;
}

std::vector<std::uint32_t> prime_divisors(std::uint32_t d) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t l = 2; l * l <= d; ++l) {
    if (d % l == 0) {
      out.push_back(l);
      while (d % l == 0) d /= l;
    }
  }
  if (d > 1) out.push_back(d);
  return out;
}

bool certified_irreducible(const Poly& w, std::uint32_t d) {
  const PrimeField& F = w.field();
  const Poly theta = Poly::theta(F);
  // frob[e] = theta^{q^e} mod w, built incrementally.
  Poly t = theta.divrem(w).second;
  std::vector<Poly> frob(d + 1, Poly(F));
  frob[0] = t;
  for (std::uint32_t e = 1; e <= d; ++e) frob[e] = powmod_q(frob[e - 1], w);
  if (!(frob[d] - frob[0]).is_zero()) return false;
  for (std::uint32_t l : prime_divisors(d)) {
    Poly g = Poly::gcd(frob[d / l] - frob[0], w);
    if (g.deg() != 0) return false;
  }
  return true;
}

} // namespace

Poly frobenius_power_mod(const Poly& x, std::uint32_t e, const Poly& w) {
  Poly r = x.divrem(w).second;
  for (std::uint32_t i = 0; i < e; ++i) r = powmod_q(r, w);
  return r;
}

const std::vector<Poly>& monic_irreducibles(const PrimeField& F, std::uint32_t d) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Poly>> cache;
  if (d == 0) throw std::invalid_argument("monic_irreducibles: degree must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(F.p(), d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const std::uint32_t q = F.p();
  std::vector<Poly> out;
  // Walk candidates as base-q counters over the low d coefficients; the counter
  // value enumerates coefficient vectors lexicographically with the constant
  // coefficient fastest.
  std::vector<std::uint8_t> c(d + 1, 0);
  c[d] = 1;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < d; ++i) total *= q;
  for (std::uint64_t v = 0; v < total; ++v) {
    std::uint64_t x = v;
    for (std::uint32_t i = 0; i < d; ++i) {
      c[i] = static_cast<std::uint8_t>(x % q);
      x /= q;
    }
    if (d > 1 && c[0] == 0) continue;
    Poly w(F, c);
    if (d > 1) {
      // cheap root filter before the certification powmods
      bool has_root = false;
      for (std::uint32_t r = 0; r < q && !has_root; ++r) has_root = (w.eval(r) == 0);
      if (has_root) continue;
    }
    if (certified_irreducible(w, d)) out.push_back(w);
  }
  auto res = cache.emplace(key, std::move(out));
  return res.first->second;
}

std::vector<Poly> monic_irreducibles_upto(const PrimeField& F, std::uint32_t D) {
  std::vector<Poly> out;
  for (std::uint32_t d = 1; d <= D; ++d) {
    const auto& layer = monic_irreducibles(F, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

} // namespace gosslv
