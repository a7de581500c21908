#pragma once

#include <cstdint>
#include <vector>

#include "gosslv/drinfeld.hpp"
#include "gosslv/taylor.hpp"

namespace gosslv {

// Dual t-motive H_n of the n-th tensor module: free of rank 2 over K[t] on
// h1, h2 with
//   sigma h1 = (1/(s b)) (t-theta)^n h2
//   sigma h2 = (1/s) (t-theta)^{n+1} h1 - (a c) (t-theta)^n h2,  c = 1/(s b)
// where s = 1 untwisted and s = -1/b for the twisted variant (so the twisted
// relations read sigma h1 = -(t-theta)^n h2 etc.).  Constant coefficients only.
struct DualMotive {
  Drinfeld phi;
  std::uint32_t n;
  bool twisted = false;

  DualMotive(Drinfeld phi_, std::uint32_t n_, bool twisted_ = false);
  const PrimeField& field() const { return phi.field(); }
  std::uint32_t dim() const { return 2 * n + 1; }
  std::uint32_t scale() const { return twisted ? phi.twist_scale() : 1u; }
};

// Element f1(t) h1 + f2(t) h2.
struct MotiveElement {
  TPoly f1, f2;
};

// Coordinate extraction delta_0 . iota: the (2n+1)-vector
//   [d^n f1, d^{n-1} f2, d^{n-1} f1, ..., f2, f1]  (d^k = k-th t-hyperderivative at theta),
// even slots (0-indexed 2j) carry d^{n-j} f1, odd slots d^{n-1-j} f2.
std::vector<Frac> delta0_iota(const PrimeField& F, std::uint32_t n, const MotiveElement& m);

// p_1(t): the degree-<= n Taylor truncation of (t - theta^q)^{-(n+1)} around
// t = theta, the polynomial kernel of the first inverse-Frobenius map.
TPoly inverse_frob_poly(const PrimeField& F, std::uint32_t n);

// Coordinates of phi_1(h1) and phi_1(h2) under delta_0 . iota.
std::vector<Frac> phi1_h1(const DualMotive& M);
std::vector<Frac> phi1_h2(const DualMotive& M);

// Witnesses expressing the last two standard basis vectors inside the
// d_n[A]-span of the phi_1 images:
//   d_n[c12] phi1(h2) = e_{2n+1},  d_n[c21] phi1(h1) + d_n[c22] phi1(h2) = e_{2n}
// with c12 = (theta-theta^q)^n/(s b), c21 = (theta-theta^q)^{n+1}/s,
// c22 = -a (theta-theta^q)^n/(s b).  Returns whether both identities hold.
bool w_basis_check(const DualMotive& M);

// t-action on coordinates via the sigma-relations (the [A_n, B_{n-1}, ...,
// B_0, A_0] bookkeeping) and via the module action (theta Id + N) x + E x^(1).
// Agreement of the two is the layout-consistency invariant.
std::vector<Poly> motive_t_action(const DualMotive& M, const std::vector<Poly>& coords);
std::vector<Poly> module_theta_action(const DualMotive& M, const std::vector<Poly>& coords);

// Defining congruence of p_1: p_1(t) (t - theta^q)^{n+1} = 1 mod (t-theta)^{n+1}.
bool truncation_identity(const PrimeField& F, std::uint32_t n);

}  // namespace gosslv
