#pragma once

#include <cstdint>
#include <vector>

#include "gosslv/bracketfrac.hpp"
#include "gosslv/drinfeld.hpp"
#include "gosslv/laurent.hpp"
#include "gosslv/matrix.hpp"

namespace gosslv {

// n-th tensor-power t-module G_n attached to a rank-2 module phi: dimension
// 2n+1, theta-action theta*Id + N + E*tau with N the double-shift nilpotent
// (ones at (j, j+2)) and E supported in the last two rows.  The twisted
// variant scales E by -1/b (constants only), which trivializes the top
// coefficient of the underlying module.
struct TensorModule {
  Drinfeld phi;
  std::uint32_t n;
  bool twisted = false;

  TensorModule(Drinfeld phi_, std::uint32_t n_, bool twisted_ = false);
  const PrimeField& field() const { return phi.field(); }
  std::uint32_t q() const { return phi.q(); }
  std::uint32_t dim() const { return 2 * n + 1; }
  std::uint32_t e_scale() const { return twisted ? phi.twist_scale() : 1u; }
};

Matrix<Poly> matrix_N(const TensorModule& M);
Matrix<Poly> matrix_E(const TensorModule& M);

// Action of f in A on the tangent space: banded matrix with the k-th
// hyperderivative of f at (j, j+2k).  This is multiplicative in f and equals
// the polynomial f(theta*Id + N).
Matrix<Poly> d_matrix(const Poly& f, std::uint32_t n);

// Logarithm coefficients P_0 = Id, P_1, ..., P_imax from the recursion
//   ([i] - ad(N)) P_i = -P_{i-1} E^{(i-1)},
// solved by the terminating geometric series in the nilpotent ad(N).
std::vector<Matrix<BracketFrac>> log_coeffs(const TensorModule& M, std::uint32_t imax);

// Rows 2n and 2n+1 (1-indexed) of P_i in closed form, as a 2 x (2n+1) matrix:
// row 0 <-> row 2n (the F-row), row 1 <-> row 2n+1 (the gamma-row).
Matrix<BracketFrac> closed_bottom_rows(const TensorModule& M, std::uint32_t i);

// Full P_i assembled from the t-deformation: per-column Taylor expansions
// around t = theta of the gamma/F generating fractions, rows picking off
// hyperderivatives.  Independent of the ad(N) recursion.
Matrix<BracketFrac> deformation_log_coeff(const TensorModule& M, std::uint32_t i);

// Exponential coefficients Q_0 = Id, Q_i = sum_j ad(N)^j(E Q_{i-1}^{(1)}) / [i]^{j+1}.
std::vector<Matrix<Frac>> exp_coeffs_tensor(const TensorModule& M, std::uint32_t imax);

// Lower bound n (q^i - q)/(q - 1) for the valuation of every entry of P_i.
std::int64_t log_coeff_valuation_bound(const TensorModule& M, std::uint32_t i);

// Lambda[r][c] = coordinate r of Log(e_c), to absolute precision prec.  The
// valuation bound above caps the number of contributing coefficients (hard
// cap i <= 30).
Matrix<Laurent> log_basis_matrix(const TensorModule& M, std::int64_t prec);
// Log at an arbitrary integral vector (all coordinate valuations >= 0).
std::vector<Laurent> tensor_log_eval(const TensorModule& M, const std::vector<Laurent>& x,
                                     std::int64_t prec);

// Determinant by fraction-free-style elimination on valuations: pivot the
// entry of minimal valuation so every division is by the dominant term.
// prec caps the precision of intermediate inversions.
Laurent laurent_det(Matrix<Laurent> m, std::int64_t prec);

// det of the log-basis matrix: [A : U_n]-normalized regulator, 1 + O(u).
Laurent regulator(const TensorModule& M, std::int64_t prec);
// det of coordinates {2n, 2n+1} of Log(e_2n), Log(e_2n+1) (1-indexed).
Laurent minor2x2(const TensorModule& M, std::int64_t prec);

}  // namespace gosslv
