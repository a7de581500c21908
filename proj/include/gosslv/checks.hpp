#pragma once

#include <cstdint>
#include <utility>

#include "gosslv/drinfeld.hpp"
#include "gosslv/poly.hpp"
#include "gosslv/tensor.hpp"

namespace gosslv {
namespace checks {

// Exact identity drivers shared by `gosslv selftest` and the acceptance
// runner.  Every function returns true iff the identity holds exactly at the
// given parameters; preconditions throw.

// gamma_n = a F_n + T_n: partition enumeration vs recursion, compared as
// formal sums in a, b, [k] (all coefficient values at once).
bool formal_log_coeff_identity(const PrimeField& F, std::uint32_t n);
// Same comparison at concrete module coefficients.
bool log_coeff_value_identity(const Drinfeld& phi, std::uint32_t n);

// P_i for i <= imax: ad(N)-recursion = t-deformation assembly, and last two
// rows = closed forms.
bool log_matrix_three_way(const TensorModule& M, std::uint32_t imax);
// Recursion residual [i] P_i - ad(N)(P_i) + P_{i-1} E^{(i-1)} = 0.
bool log_matrix_residual(const TensorModule& M, std::uint32_t imax);
// Entry valuations >= n(q^i - q)/(q - 1), strictly positive from i = 2 on.
bool log_matrix_valuations(const TensorModule& M, std::uint32_t imax);
// Twist law P~_i = (-1)^i b^{-i} P_i (constant coefficients).
bool twist_scaling_law(const Drinfeld& phi, std::uint32_t n, std::uint32_t imax);
// sum_{j+k=i} P_j Q_k^{(j)} = 0 for 1 <= i <= imax, and the rank-2 analogue.
bool tensor_exp_log_inverse(const TensorModule& M, std::uint32_t imax);
bool drinfeld_exp_log_inverse(const Drinfeld& phi, std::uint32_t imax);

// Dual-motive witness identities, and agreement of the sigma-relation
// t-action with the module-side theta-action on random coordinate vectors.
bool motive_witness_identities(const Drinfeld& phi, std::uint32_t n, bool twisted);
bool motive_action_consistency(const Drinfeld& phi, std::uint32_t n, bool twisted,
                               std::uint32_t trials, std::uint64_t seed);

// Euler-product oracles: the exponent-s power factor product agrees with the
// truncated zeta sum below u^{s(d+1)} for every d <= D, and the Carlitz
// module has |C(A/wA)|_A = w - 1.
bool trivial_matches_zeta(const PrimeField& F, std::uint32_t s, std::uint32_t D);
bool carlitz_unit_counts(const PrimeField& F, std::uint32_t dmax);

// Class-module formula: matched-coefficient counts (regulator vs L-value,
// regulator vs 2x2 minor) for the twisted tensor module.
std::pair<std::int64_t, std::int64_t> class_formula_counts(const Drinfeld& phi, std::uint32_t n,
                                                           std::uint32_t D, std::int64_t prec,
                                                           int threads = 1);

// Per-prime consistency: |G~_n(A/wA)|_A = w^{2n+1} - trace * w^n + (-1/b)^deg w
// (with the theta-action side equal to w^{2n+1}), and the inverted-charpoly
// factor at s = n+1 equals the Taelman factor as series.
bool goss_charpoly_identity(const Drinfeld& phi, std::uint32_t n, const Poly& w);
bool goss_taelman_factor_match(const Drinfeld& phi, std::uint32_t n, const Poly& w,
                               std::int64_t prec);

// Characteristic polynomial vs the permutation-expansion oracle on random
// matrices (dim <= 6).
bool charpoly_oracle(const PrimeField& F, std::uint32_t dim, std::uint32_t trials,
                     std::uint64_t seed);
// d_n[f g] = d_n[f] d_n[g].
bool d_matrix_multiplicative(const Poly& f, const Poly& g, std::uint32_t n);

}  // namespace checks
}  // namespace gosslv
