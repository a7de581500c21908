#pragma once

#include <cstdint>

#include "gosslv/laurent.hpp"
#include "gosslv/poly.hpp"

namespace gosslv {

// Memoized Carlitz data per prime field: D_0 = 1, D_i = [i] D_{i-1}^q and the
// *signed* L_0 = 1, L_i = (-1)^i [i][i-1]...[1].  That sign convention is used
// everywhere downstream (logarithm denominators, polylogs, closed rows).
class CarlitzTable {
public:
  static CarlitzTable& get(const PrimeField& F);

  const Poly& D(std::uint32_t i);
  const Poly& L(std::uint32_t i);
  const PrimeField& field() const { return F_; }

  static std::int64_t deg_D(const PrimeField& F, std::uint32_t i);  // i * q^i
  static std::int64_t deg_L(const PrimeField& F, std::uint32_t i);  // (q^(i+1)-q)/(q-1)

  // Carlitz factorial of n (the product over base-q digits n_j of D_j^(n_j)).
  Poly factorial(std::uint64_t n);

private:
  explicit CarlitzTable(const PrimeField& F) : F_(F) {}
  const PrimeField& F_;
  std::vector<Poly> d_, l_;
};

// n-th Carlitz polylogarithm sum_{i>=0} z^(q^i) / L_i^n to precision prec.
// Domain: v_inf(z) > -n q/(q-1); outside it term valuations do not increase
// and the call throws.
Laurent polylog_eval(std::uint32_t n, const Laurent& z, std::int64_t prec);

// Truncated zeta value sum over monic a with deg a <= maxdeg of a^(-s).
Laurent zeta_truncated(const PrimeField& F, std::uint32_t s, std::uint32_t maxdeg,
                       std::int64_t prec);
// Single-degree block sum_{deg a = d, monic} a^(-s).
Laurent zeta_block(const PrimeField& F, std::uint32_t s, std::uint32_t d, std::int64_t prec);

}  // namespace gosslv
