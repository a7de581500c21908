#pragma once

#include <cstdint>
#include <vector>

#include "gosslv/poly.hpp"

namespace gosslv {

// Monic irreducibles of exact degree d over F_q, in lexicographic order of the
// coefficient vector (constant coefficient varies fastest).  Every returned
// polynomial is certified irreducible via the distinct-degree criterion:
//   w | theta^{q^d} - theta   and   gcd(w, theta^{q^{d/l}} - theta) = 1
// for each prime l dividing d.  Results are memoized per (q, d).
const std::vector<Poly>& monic_irreducibles(const PrimeField& F, std::uint32_t d);

// All monic irreducibles of degree 1..D, concatenated in increasing degree.
std::vector<Poly> monic_irreducibles_upto(const PrimeField& F, std::uint32_t D);

// x^{q^e} mod w.
Poly frobenius_power_mod(const Poly& x, std::uint32_t e, const Poly& w);

} // namespace gosslv
