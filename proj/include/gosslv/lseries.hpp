#pragma once

#include <cstdint>
#include <vector>

#include "gosslv/drinfeld.hpp"
#include "gosslv/euler.hpp"
#include "gosslv/laurent.hpp"
#include "gosslv/residue.hpp"
#include "gosslv/tensor.hpp"

namespace gosslv {

// |M|_A: the monic generator of the Fitting ideal of a finite A-module,
// i.e. the characteristic polynomial of its theta-action with X renamed theta.
Poly fitting_generator(const FqMatrix& theta_action);

// theta-actions on Lie(G)(A/wA) and G(A/wA) as F_q-matrices of dimension
// dim(G) * deg w, built from multiplication and Frobenius blocks.
struct PointAction {
  FqMatrix lie, g;
};
PointAction point_action_tensor(const TensorModule& M, const ResidueField& R);
PointAction point_action_drinfeld(const Drinfeld& phi, bool twisted, const ResidueField& R);
PointAction point_action_carlitz(const ResidueField& R);

// Taelman Euler factor |Lie|_A / |G|_A at w, as 1 + O(u).
struct TaelmanFactor {
  Poly lie, g;
  Laurent factor;
};
TaelmanFactor taelman_factor_tensor(const TensorModule& M, const Poly& w, std::int64_t prec);
TaelmanFactor taelman_factor_drinfeld(const Drinfeld& phi, bool twisted, const Poly& w,
                                      std::int64_t prec);
TaelmanFactor taelman_factor_carlitz(const Poly& w, std::int64_t prec);
// Trivial Taelman motive at exponent s: factor (1 - w^{-s})^{-1}.
Laurent trivial_factor(const Poly& w, std::uint32_t s, std::int64_t prec);

// Goss Euler factor data at w for the motive dual to phi (constant
// coefficients): trace of the Frobenius product Pi = Theta_{d-1}...Theta_0
// descended to A, and the frozen-convention local polynomial
//   P_w(X) = 1 - trace X + (-1/b)^d w X^2.
// Construction asserts the F_q-descent of the trace and the determinant
// identity det Pi = (-1/b)^d w(t).
struct GossFactorData {
  Poly trace;    // element of A
  Poly pw_at_1;  // P_w(1), whose monic normalization is |phi(A/wA)|_A
};
GossFactorData goss_motive_data(const Drinfeld& phi, const ResidueField& R);
Laurent goss_factor(const Drinfeld& phi, const ResidueField& R, std::uint32_t s,
                    std::int64_t prec);

// Aggregated L-values over all primes of degree <= opt.max_prime_degree.
Laurent taelman_l_value_tensor(const TensorModule& M, const EulerOptions& opt);
Laurent taelman_l_value_drinfeld(const Drinfeld& phi, bool twisted, const EulerOptions& opt);
Laurent taelman_l_value_carlitz(const PrimeField& F, const EulerOptions& opt);
Laurent trivial_l_value(const PrimeField& F, std::uint32_t s, const EulerOptions& opt);
Laurent goss_l_value(const Drinfeld& phi, std::uint32_t s, const EulerOptions& opt);

// First-omitted-prime heuristics for the realized precision of a truncated
// product (Weil-type bound deg(trace) <= d/2 behind the half-integer slopes).
std::int64_t heuristic_precision_tensor(std::uint32_t n, std::uint32_t D);    // ceil((D+1)(n+1/2))
std::int64_t heuristic_precision_goss(std::uint32_t s, std::uint32_t D);      // ceil((D+1)(s-1/2))
std::int64_t heuristic_precision_power(std::uint32_t s, std::uint32_t D);     // s(D+1), exact window
std::int64_t heuristic_precision_drinfeld(std::uint32_t D);                   // ceil((D+1)/2)

// Closed-form RHS of the main identity:
//   (sum (-1)^i b^{-i} gamma_i / L_i^n) (1 + sum_{i>=1} (-1)^i b^{-(i-1)} F_{i-1} / L_i^n)
// - (sum_{i>=1} (-1)^i b^{-(i-1)} gamma_{i-1} / L_i^n) (sum (-1)^i b^{-i} F_i / L_i^n).
// terms == 0 lets the term-valuation stopping rule decide; otherwise caps i.
Laurent rhs_theorem(const Drinfeld& phi, std::uint32_t n, std::int64_t prec,
                    std::uint32_t terms = 0);

}  // namespace gosslv
