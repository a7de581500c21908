#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "gosslv/bracketfrac.hpp"
#include "gosslv/frac.hpp"
#include "gosslv/laurent.hpp"
#include "gosslv/poly.hpp"

namespace gosslv {

// Rank-2 Drinfeld module phi_theta = theta + a tau + b tau^2 with a, b in A,
// b != 0.  The twist (which trivializes the leading coefficient) is only
// defined when both coefficients are constants.
struct Drinfeld {
  Poly a, b;

  Drinfeld(Poly a_, Poly b_);
  const PrimeField& field() const { return a.field(); }
  std::uint32_t q() const { return a.q(); }
  bool is_constant() const { return a.is_constant() && b.is_constant(); }
  std::uint32_t a_const() const;
  std::uint32_t b_const() const;

  // gamma^(q-1) = -1/b; twisted coefficients a~ = a g, b~ = b g^(q+1) with
  // g = -b^{-1}.  Involutive; fixes modules with b = -1.
  Drinfeld twist() const;
  std::uint32_t twist_scale() const;  // g = -b^{-1} as a field element
};

// Shadowed partition of {0, ..., n-1}: disjoint S1, S2 with
// S1 u S2 u (S2 + 1) = {0, ..., n-1}.  Sets are bitmasks (bit i = element i).
struct ShadowedPartition {
  std::uint32_t s1 = 0, s2 = 0;
  bool first_kind() const { return (s1 & 1u) != 0; }  // 0 in S1
};

// All shadowed partitions of {0..n-1}, ordered by recursive descent on the
// largest element (n-1 joins S1 first, then n-2 joins S2).  Count follows the
// Fibonacci recurrence.
std::vector<ShadowedPartition> shadowed_partitions(std::uint32_t n);

// w1(S) = sum_{i in S} q^i, w2(S) = sum_{i in S, i != 0} q^i.
std::uint64_t weight1(std::uint32_t set, std::uint32_t q);
std::uint64_t weight2(std::uint32_t set, std::uint32_t q);

// Bracket index set B(U) = (S1 + 1) u (S2 + 2) as a bitmask over {1, ...};
// disjointness is an invariant of shadowed partitions.
std::uint64_t bracket_set(const ShadowedPartition& U);

// Value of the single-partition component
//   a^w b^{w1(S2)} / prod_{i in S1} (-[i+1]) prod_{i in S2} (-[i+2]),
// w = w2(S1) for first-kind partitions (the gamma convention folds the extra
// factor a in separately), w = w1(S1) otherwise.
BracketFrac partition_component(const Drinfeld& phi, const ShadowedPartition& U);

// Logarithm coefficients of phi split by partition kind: gamma_n = a F_n + T_n
// with F_n the first-kind sum and T_n the rest.  F_0 = 0, T_0 = 1.
struct GammaParts {
  BracketFrac f, t, gamma;
};
GammaParts ft_gamma(const Drinfeld& phi, std::uint32_t n);

// Independent recursions for the same values:
//   gamma_i = -(a^{q^{i-1}} gamma_{i-1} + b^{q^{i-2}} gamma_{i-2}) / [i]
//   F_i     = -(a^{q^{i-1}} F_{i-1} + b^{q^{i-2}} F_{i-2}) / [i],  F_1 = -1/[1].
BracketFrac gamma_recursive(const Drinfeld& phi, std::uint32_t n);
BracketFrac f_recursive(const Drinfeld& phi, std::uint32_t n);

// Formal-sum layer: coefficients of gamma_n as Z_{>=0}-combinations of
// monomials a^i b^j / prod [k]^(mask_k) with squarefree bracket masks.  The
// partition enumeration and the recursion are compared term-by-term here,
// independent of any evaluation, which keeps the deep-n identity checks exact
// and cheap.
struct FormalKey {
  std::uint64_t a_exp = 0, b_exp = 0;
  std::uint64_t mask = 0;  // bit k-1 set <=> one factor [k] in the denominator
  friend bool operator<(const FormalKey& x, const FormalKey& y) {
    return std::tie(x.a_exp, x.b_exp, x.mask) < std::tie(y.a_exp, y.b_exp, y.mask);
  }
  friend bool operator==(const FormalKey& x, const FormalKey& y) {
    return x.a_exp == y.a_exp && x.b_exp == y.b_exp && x.mask == y.mask;
  }
};
// term -> signed multiplicity mod p presented as a field element; the sign
// (-1)^{|S1|+|S2|} is folded into the coefficient.
using FormalSum = std::map<FormalKey, std::uint32_t>;

FormalSum formal_gamma_partitions(std::uint32_t n, const PrimeField& F);
FormalSum formal_f_partitions(std::uint32_t n, const PrimeField& F);
FormalSum formal_gamma_recursive(std::uint32_t n, const PrimeField& F);
FormalSum formal_f_recursive(std::uint32_t n, const PrimeField& F);
// Evaluate a formal sum at concrete module coefficients.
BracketFrac formal_value(const FormalSum& s, const Drinfeld& phi);

// Exponential coefficients xi_0 = 1, xi_i = (a xi_{i-1}^q + b xi_{i-2}^{q^2}) / [i].
std::vector<Frac> exp_coeffs(const Drinfeld& phi, std::uint32_t imax);

// log_phi(z) = sum_i gamma_i z^{q^i} to absolute precision prec.  Requires
// v_inf(z) >= 0 and strictly increasing term valuations (throws otherwise).
Laurent drinfeld_log_eval(const Drinfeld& phi, const Laurent& z, std::int64_t prec);

}  // namespace gosslv
