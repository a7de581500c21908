#include "gosslv/drinfeld.hpp"

#include <bit>
#include <stdexcept>

namespace gosslv {

Drinfeld::Drinfeld(Poly a_, Poly b_) : a(std::move(a_)), b(std::move(b_)) {
  if (b.is_zero()) throw std::invalid_argument("Drinfeld: rank-2 leading coefficient must be nonzero");
  if (&a.field() != &b.field()) throw std::invalid_argument("Drinfeld: mixed fields");
}

std::uint32_t Drinfeld::a_const() const {
  if (!a.is_constant()) throw std::logic_error("Drinfeld: a is not constant");
  return a.coeff(0);
}

std::uint32_t Drinfeld::b_const() const {
  if (!b.is_constant()) throw std::logic_error("Drinfeld: b is not constant");
  return b.coeff(0);
}

std::uint32_t Drinfeld::twist_scale() const {
  const PrimeField& F = field();
  return F.neg(F.inv(b_const()));
}

Drinfeld Drinfeld::twist() const {
  const PrimeField& F = field();
  std::uint32_t g = twist_scale();
  std::uint32_t at = F.mul(a_const(), g);
  std::uint32_t bt = F.mul(b_const(), F.pow(g, q() + 1));
  return Drinfeld(Poly::constant(F, at), Poly::constant(F, bt));
}

std::vector<ShadowedPartition> shadowed_partitions(std::uint32_t n) {
  if (n > 30) throw std::invalid_argument("shadowed_partitions: bitmask width exceeded");
  if (n == 0) return {ShadowedPartition{}};
  std::vector<ShadowedPartition> out;
  for (const auto& U : shadowed_partitions(n - 1)) {
    out.push_back({U.s1 | (1u << (n - 1)), U.s2});
  }
  if (n >= 2) {
    for (const auto& U : shadowed_partitions(n - 2)) {
      out.push_back({U.s1, U.s2 | (1u << (n - 2))});
    }
  }
  return out;
}

std::uint64_t weight1(std::uint32_t set, std::uint32_t q) {
  std::uint64_t w = 0;
  for (std::uint32_t i = 0; set >> i; ++i) {
    if ((set >> i) & 1u) {
      std::uint64_t p = 1;
      for (std::uint32_t k = 0; k < i; ++k) p *= q;
      w += p;
    }
  }
  return w;
}

std::uint64_t weight2(std::uint32_t set, std::uint32_t q) {
  return weight1(set & ~1u, q);
}

std::uint64_t bracket_set(const ShadowedPartition& U) {
  std::uint64_t b = (static_cast<std::uint64_t>(U.s1) << 1) | (static_cast<std::uint64_t>(U.s2) << 2);
  if ((static_cast<std::uint64_t>(U.s1) << 1) & (static_cast<std::uint64_t>(U.s2) << 2))
    throw std::logic_error("bracket_set: shadowed partition with colliding brackets");
  return b;
}

BracketFrac partition_component(const Drinfeld& phi, const ShadowedPartition& U) {
  const std::uint32_t q = phi.q();
  std::uint64_t w = U.first_kind() ? weight2(U.s1, q) : weight1(U.s1, q);
  Poly num = phi.a.pow(w) * phi.b.pow(weight1(U.s2, q));
  unsigned parity = (std::popcount(U.s1) + std::popcount(U.s2)) & 1u;
  if (parity) num = -num;
  std::uint64_t bset = bracket_set(U);
  std::vector<std::uint16_t> exps;
  for (std::uint32_t k = 1; bset >> k; ++k)
    exps.push_back(static_cast<std::uint16_t>((bset >> k) & 1u));
  return BracketFrac::make(std::move(num), std::move(exps));
}

GammaParts ft_gamma(const Drinfeld& phi, std::uint32_t n) {
  const PrimeField& F = phi.field();
  BracketFrac f = BracketFrac::zero(F), t = BracketFrac::zero(F);
  for (const auto& U : shadowed_partitions(n)) {
    BracketFrac c = partition_component(phi, U);
    if (U.first_kind())
      f += c;
    else
      t += c;
  }
  return GammaParts{f, t, f.mul_poly(phi.a) + t};
}

namespace {

std::vector<BracketFrac> recursion_values(const Drinfeld& phi, std::uint32_t n,
                                          const BracketFrac& v0, const BracketFrac& v1) {
  std::vector<BracketFrac> g;
  g.push_back(v0);
  if (n >= 1) g.push_back(v1);
  for (std::uint32_t i = 2; i <= n; ++i) {
    BracketFrac s = g[i - 1].mul_poly(phi.a.frob_pow(i - 1)) + g[i - 2].mul_poly(phi.b.frob_pow(i - 2));
    g.push_back((-s).div_bracket(i));
  }
  return g;
}

} // namespace

BracketFrac gamma_recursive(const Drinfeld& phi, std::uint32_t n) {
  const PrimeField& F = phi.field();
  BracketFrac g1 = BracketFrac::make(-phi.a, {1});  // gamma_1 = a / L_1 = -a/[1]
  return recursion_values(phi, n, BracketFrac::one(F), g1)[n];
}

BracketFrac f_recursive(const Drinfeld& phi, std::uint32_t n) {
  const PrimeField& F = phi.field();
  BracketFrac f1 = BracketFrac::make(Poly::constant(F, F.neg(1)), {1});  // -1/[1]
  return recursion_values(phi, n, BracketFrac::zero(F), f1)[n];
}

namespace {

void formal_accumulate(FormalSum& s, const FormalKey& k, std::uint32_t coeff, const PrimeField& F) {
  auto it = s.find(k);
  std::uint32_t v = F.add(it == s.end() ? 0u : it->second, coeff);
  if (v == 0) {
    if (it != s.end()) s.erase(it);
  } else if (it == s.end()) {
    s.emplace(k, v);
  } else {
    it->second = v;
  }
}

FormalSum formal_from_partitions(std::uint32_t n, const PrimeField& F, bool f_only) {
  const std::uint32_t q = F.p();
  FormalSum out;
  for (const auto& U : shadowed_partitions(n)) {
    if (f_only && !U.first_kind()) continue;
    FormalKey key;
    if (U.first_kind())
      key.a_exp = weight2(U.s1, q) + (f_only ? 0 : 1);
    else
      key.a_exp = weight1(U.s1, q);
    key.b_exp = weight1(U.s2, q);
    key.mask = bracket_set(U) >> 1;
    unsigned parity = (std::popcount(U.s1) + std::popcount(U.s2)) & 1u;
    formal_accumulate(out, key, parity ? F.neg(1) : 1u, F);
  }
  return out;
}

// one recursion step: out += c * x shifted by (a_add, b_add, bracket i)
void formal_step(FormalSum& out, const FormalSum& x, std::uint64_t a_add, std::uint64_t b_add,
                 std::uint32_t i, std::uint32_t scale, const PrimeField& F) {
  for (const auto& [k, c] : x) {
    FormalKey nk = k;
    nk.a_exp += a_add;
    nk.b_exp += b_add;
    std::uint64_t bit = 1ull << (i - 1);
    if (nk.mask & bit) throw std::logic_error("formal_step: bracket exponent would exceed one");
    nk.mask |= bit;
    formal_accumulate(out, nk, F.mul(c, scale), F);
  }
}

FormalSum formal_recursive(std::uint32_t n, const PrimeField& F, bool f_variant) {
  std::uint64_t qp = 1;  // q^{i-2} rolling
  std::vector<FormalSum> g(n + 1);
  FormalKey unit;
  if (!f_variant) g[0].emplace(unit, 1u);
  if (n >= 1) {
    FormalKey k1;
    k1.a_exp = f_variant ? 0 : 1;
    k1.mask = 1;
    g[1].emplace(k1, F.neg(1));
  }
  for (std::uint32_t i = 2; i <= n; ++i) {
    FormalSum s;
    formal_step(s, g[i - 1], qp * F.p(), 0, i, F.neg(1), F);  // -a^{q^{i-1}} g_{i-1} / [i]
    formal_step(s, g[i - 2], 0, qp, i, F.neg(1), F);          // -b^{q^{i-2}} g_{i-2} / [i]
    g[i] = std::move(s);
    qp *= F.p();
  }
  return g[n];
}

} // namespace

FormalSum formal_gamma_partitions(std::uint32_t n, const PrimeField& F) {
  return formal_from_partitions(n, F, false);
}
FormalSum formal_f_partitions(std::uint32_t n, const PrimeField& F) {
  return formal_from_partitions(n, F, true);
}
FormalSum formal_gamma_recursive(std::uint32_t n, const PrimeField& F) {
  return formal_recursive(n, F, false);
}
FormalSum formal_f_recursive(std::uint32_t n, const PrimeField& F) {
  return formal_recursive(n, F, true);
}

BracketFrac formal_value(const FormalSum& s, const Drinfeld& phi) {
  const PrimeField& F = phi.field();
  BracketFrac acc = BracketFrac::zero(F);
  for (const auto& [k, c] : s) {
    Poly num = (phi.a.pow(k.a_exp) * phi.b.pow(k.b_exp)).mul_scalar(c);
    std::vector<std::uint16_t> exps;
    for (std::uint32_t j = 0; k.mask >> j; ++j)
      exps.push_back(static_cast<std::uint16_t>((k.mask >> j) & 1u));
    acc += BracketFrac::make(std::move(num), std::move(exps));
  }
  return acc;
}

std::vector<Frac> exp_coeffs(const Drinfeld& phi, std::uint32_t imax) {
  const PrimeField& F = phi.field();
  std::vector<Frac> xi;
  xi.push_back(Frac::one(F));
  Frac a{phi.a}, b{phi.b};
  for (std::uint32_t i = 1; i <= imax; ++i) {
    Frac s = a * xi[i - 1].frob_pow(1);
    if (i >= 2) s = s + b * xi[i - 2].frob_pow(2);
    xi.push_back(s / Frac(bracket(F, i)));
  }
  return xi;
}

Laurent drinfeld_log_eval(const Drinfeld& phi, const Laurent& z, std::int64_t prec) {
  const PrimeField& F = phi.field();
  if (z.val() < 0) throw std::domain_error("drinfeld_log_eval: argument valuation is negative");
  Laurent acc = Laurent::zero(F, prec);
  std::int64_t last_v = -1;
  std::int64_t qi = 1;
  for (std::uint32_t i = 0; i <= 64; ++i) {
    BracketFrac gi = ft_gamma(phi, i).gamma;
    std::int64_t vg = gi.v_inf();
    std::int64_t vz = z.val();
    if (vz == Laurent::kInfVal || vg == Laurent::kInfVal) break;
    if (qi > Laurent::kInfVal / (2 * (vz + 1) + 2)) break;
    std::int64_t vterm = vg + qi * vz;
    if (vterm >= prec) break;
    if (vterm <= last_v)
      throw std::domain_error("drinfeld_log_eval: term valuations do not increase");
    last_v = vterm;
    acc = acc + (z.frob_pow(i) * gi.to_laurent(prec - qi * vz)).truncated(prec);
    if (qi > Laurent::kInfVal / F.p()) break;
    qi *= F.p();
  }
  return acc.truncated(prec);
}

}  // namespace gosslv
