#include "gosslv/dual_motive.hpp"

#include <stdexcept>

#include "gosslv/bracketfrac.hpp"
#include "gosslv/matrix.hpp"
#include "gosslv/tensor.hpp"

namespace gosslv {

DualMotive::DualMotive(Drinfeld phi_, std::uint32_t n_, bool twisted_)
    : phi(std::move(phi_)), n(n_), twisted(twisted_) {
  if (n == 0) throw std::invalid_argument("DualMotive: n must be >= 1");
  if (!phi.is_constant()) throw std::invalid_argument("DualMotive: constant coefficients required");
}

std::vector<Frac> delta0_iota(const PrimeField& F, std::uint32_t n, const MotiveElement& m) {
  Taylor<Frac> t1 = tpoly_taylor(m.f1, n, F);
  Taylor<Frac> t2 = tpoly_taylor(m.f2, n, F);
  std::vector<Frac> out(2 * n + 1, Frac::zero(F));
  for (std::uint32_t r = 0; r < 2 * n + 1; ++r) {
    std::uint32_t j = r / 2;
    out[r] = (r % 2 == 0) ? t1[n - j] : t2[n - 1 - j];
  }
  return out;
}

namespace {

// Taylor expansion of c/(t - theta^q)^e around t = theta, to order n.
Taylor<Frac> frob_pole_taylor(const PrimeField& F, std::uint32_t c, std::uint32_t e,
                              std::uint32_t n) {
  TPoly den = tpoly_linear_pow(Frac(Poly::theta(F).frob_pow(1)), e);
  TPoly num = tpoly_from({Frac::constant(F, c)});
  return taylor_of_fraction(num, den, n, F);
}

std::vector<Frac> unit_vector(const PrimeField& F, std::uint32_t dim, std::uint32_t k) {
  std::vector<Frac> e(dim, Frac::zero(F));
  e[k] = Frac::one(F);
  return e;
}

} // namespace

TPoly inverse_frob_poly(const PrimeField& F, std::uint32_t n) {
  return taylor_to_tpoly(frob_pole_taylor(F, 1, n + 1, n), F);
}

std::vector<Frac> phi1_h1(const DualMotive& M) {
  const PrimeField& F = M.field();
  const std::uint32_t n = M.n;
  Taylor<Frac> t1 = frob_pole_taylor(F, M.phi.a_const(), n + 1, n);
  Taylor<Frac> t2 = frob_pole_taylor(F, 1, n + 1, n);
  std::vector<Frac> out(M.dim(), Frac::zero(F));
  Frac s = Frac::constant(F, M.scale());
  for (std::uint32_t r = 0; r < M.dim(); ++r) {
    std::uint32_t j = r / 2;
    out[r] = ((r % 2 == 0) ? t1[n - j] : t2[n - 1 - j]) * s;
  }
  return out;
}

std::vector<Frac> phi1_h2(const DualMotive& M) {
  const PrimeField& F = M.field();
  const std::uint32_t n = M.n;
  Taylor<Frac> t1 = frob_pole_taylor(F, M.phi.b_const(), n, n);
  std::vector<Frac> out(M.dim(), Frac::zero(F));
  Frac s = Frac::constant(F, M.scale());
  for (std::uint32_t r = 0; r < M.dim(); ++r) {
    if (r % 2 != 0) continue;
    std::uint32_t j = r / 2;
    out[r] = t1[n - j] * s;
  }
  return out;
}

bool w_basis_check(const DualMotive& M) {
  const PrimeField& F = M.field();
  const std::uint32_t n = M.n;
  std::uint32_t s_inv = F.inv(M.scale());
  std::uint32_t b_inv = F.inv(M.phi.b_const());
  // (theta - theta^q)^n = (-1)^n [1]^n
  Poly base_n = bracket_pow(F, 1, n);
  Poly base_n1 = bracket_pow(F, 1, n + 1);
  if (n & 1u) base_n = -base_n;
  if ((n + 1) & 1u) base_n1 = -base_n1;
  Poly c12 = base_n.mul_scalar(F.mul(s_inv, b_inv));
  Poly c21 = base_n1.mul_scalar(s_inv);
  Poly c22 = base_n.mul_scalar(F.neg(F.mul(M.phi.a_const(), F.mul(s_inv, b_inv))));

  auto to_frac = [](const Poly& p) { return Frac(p); };
  Matrix<Frac> d12 = d_matrix(c12, n).map(to_frac);
  Matrix<Frac> d21 = d_matrix(c21, n).map(to_frac);
  Matrix<Frac> d22 = d_matrix(c22, n).map(to_frac);

  std::vector<Frac> lhs1 = d12.mul_vec(phi1_h2(M));
  if (lhs1 != unit_vector(F, M.dim(), M.dim() - 1)) return false;
  std::vector<Frac> v1 = d21.mul_vec(phi1_h1(M));
  std::vector<Frac> v2 = d22.mul_vec(phi1_h2(M));
  for (std::size_t k = 0; k < v1.size(); ++k) v1[k] += v2[k];
  return v1 == unit_vector(F, M.dim(), M.dim() - 2);
}

std::vector<Poly> motive_t_action(const DualMotive& M, const std::vector<Poly>& coords) {
  const PrimeField& F = M.field();
  const std::uint32_t n = M.n;
  if (coords.size() != M.dim()) throw std::invalid_argument("motive_t_action: wrong length");
  std::uint32_t s = M.scale();
  // layout: coords[2j] = A_{n-j}, coords[2j+1] = B_{n-1-j}
  std::vector<Poly> out(M.dim(), Poly(F));
  Poly theta = Poly::theta(F);
  // t = theta + (t - theta): the shift moves grade i to i+1; overflows reduce
  // through the sigma-relations back to grade 0.
  for (std::uint32_t j = 0; j <= n; ++j) {
    out[2 * j] = theta * coords[2 * j];
    if (j < n) out[2 * j] += coords[2 * j + 2];  // A_{n-j-1} shifts up
  }
  for (std::uint32_t j = 0; j + 1 <= n; ++j) {
    out[2 * j + 1] = theta * coords[2 * j + 1];
    if (j + 1 < n) out[2 * j + 1] += coords[2 * j + 3];
  }
  Poly an_q = coords[0].frob_pow(1);
  Poly bn1_q = (n >= 1) ? coords[1].frob_pow(1) : Poly(F);
  // A_n (t-theta)^{n+1} h1  ==  s (a A_n^q h1 + A_n^q b h2... ) reductions:
  out[2 * n] += an_q.mul_scalar(F.mul(s, M.phi.a_const())) + bn1_q.mul_scalar(F.mul(s, M.phi.b_const()));
  out[2 * n - 1] += an_q.mul_scalar(s);
  return out;
}

std::vector<Poly> module_theta_action(const DualMotive& M, const std::vector<Poly>& coords) {
  const PrimeField& F = M.field();
  if (coords.size() != M.dim()) throw std::invalid_argument("module_theta_action: wrong length");
  TensorModule G(M.phi, M.n, M.twisted);
  Matrix<Poly> N = matrix_N(G), E = matrix_E(G);
  Poly theta = Poly::theta(F);
  std::vector<Poly> out(M.dim(), Poly(F));
  for (std::size_t r = 0; r < M.dim(); ++r) {
    out[r] = theta * coords[r];
    for (std::size_t c = 0; c < M.dim(); ++c) {
      if (!N.at(r, c).is_zero()) out[r] += N.at(r, c) * coords[c];
      if (!E.at(r, c).is_zero()) out[r] += E.at(r, c) * coords[c].frob_pow(1);
    }
  }
  return out;
}

bool truncation_identity(const PrimeField& F, std::uint32_t n) {
  TPoly p1 = inverse_frob_poly(F, n);
  TPoly pole = tpoly_linear_pow(Frac(Poly::theta(F).frob_pow(1)), n + 1);
  Taylor<Frac> prod = tpoly_taylor(tpoly_mul(p1, pole), n, F);
  for (std::uint32_t j = 0; j <= n; ++j) {
    const Frac& c = prod[j];
    if (j == 0 ? !c.is_one() : !c.is_zero()) return false;
  }
  return true;
}

}  // namespace gosslv
