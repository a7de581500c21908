#include "gosslv/checks.hpp"

#include <random>
#include <vector>

#include "gosslv/carlitz.hpp"
#include "gosslv/dual_motive.hpp"
#include "gosslv/euler.hpp"
#include "gosslv/irreducibles.hpp"
#include "gosslv/laurent.hpp"
#include "gosslv/lseries.hpp"
#include "gosslv/residue.hpp"

namespace gosslv {
namespace checks {

bool formal_log_coeff_identity(const PrimeField& F, std::uint32_t n) {
  return formal_gamma_partitions(n, F) == formal_gamma_recursive(n, F) &&
         formal_f_partitions(n, F) == formal_f_recursive(n, F);
}

bool log_coeff_value_identity(const Drinfeld& phi, std::uint32_t n) {
  GammaParts g = ft_gamma(phi, n);
  return g.gamma == gamma_recursive(phi, n) && g.f == f_recursive(phi, n);
}

bool log_matrix_three_way(const TensorModule& M, std::uint32_t imax) {
  auto P = log_coeffs(M, imax);
  std::size_t D = M.dim();
  for (std::uint32_t i = 0; i <= imax; ++i) {
    if (deformation_log_coeff(M, i) != P[i]) return false;
    Matrix<BracketFrac> rows = closed_bottom_rows(M, i);
    for (std::size_t c = 0; c < D; ++c)
      if (!(rows.at(0, c) == P[i].at(D - 2, c)) || !(rows.at(1, c) == P[i].at(D - 1, c)))
        return false;
  }
  return true;
}

bool log_matrix_residual(const TensorModule& M, std::uint32_t imax) {
  const PrimeField& F = M.field();
  auto P = log_coeffs(M, imax);
  std::size_t D = M.dim();
  std::uint32_t s = M.e_scale();
  for (std::uint32_t i = 1; i <= imax; ++i) {
    Poly ai = M.phi.a.frob_pow(i - 1).mul_scalar(s);
    Poly bi = M.phi.b.frob_pow(i - 1).mul_scalar(s);
    for (std::size_t r = 0; r < D; ++r)
      for (std::size_t c = 0; c < D; ++c) {
        BracketFrac t = P[i].at(r, c).mul_bracket(i);
        if (r + 2 < D) t += -P[i].at(r + 2, c);  // -(N P)(r,c)
        if (c >= 2) t += P[i].at(r, c - 2);      // +(P N)(r,c)
        if (c == 0) {
          t += P[i - 1].at(r, D - 2).mul_scalar(s);
          t += P[i - 1].at(r, D - 1).mul_poly(ai);
        } else if (c == 1) {
          t += P[i - 1].at(r, D - 1).mul_poly(bi);
        }
        if (!t.is_zero()) return false;
      }
  }
  return true;
}

bool log_matrix_valuations(const TensorModule& M, std::uint32_t imax) {
  auto P = log_coeffs(M, imax);
  std::size_t D = M.dim();
  for (std::uint32_t i = 0; i <= imax; ++i) {
    std::int64_t bound = log_coeff_valuation_bound(M, i);
    for (std::size_t r = 0; r < D; ++r)
      for (std::size_t c = 0; c < D; ++c) {
        const BracketFrac& e = P[i].at(r, c);
        if (e.is_zero()) continue;
        std::int64_t v = e.v_inf();
        if (v < bound) return false;
        if (i >= 2 && v <= 0) return false;
      }
  }
  return true;
}

bool twist_scaling_law(const Drinfeld& phi, std::uint32_t n, std::uint32_t imax) {
  const PrimeField& F = phi.field();
  auto plain = log_coeffs(TensorModule(phi, n, false), imax);
  auto tw = log_coeffs(TensorModule(phi, n, true), imax);
  std::uint32_t g = phi.twist_scale();
  for (std::uint32_t i = 0; i <= imax; ++i) {
    std::uint32_t gi = F.pow(g, i);  // g^i = (-1)^i b^{-i}
    if (tw[i] != plain[i].map([&](const BracketFrac& x) { return x.mul_scalar(gi); }))
      return false;
  }
  return true;
}

bool tensor_exp_log_inverse(const TensorModule& M, std::uint32_t imax) {
  auto P = log_coeffs(M, imax);
  auto Q = exp_coeffs_tensor(M, imax);
  for (std::uint32_t i = 1; i <= imax; ++i) {
    Matrix<Frac> acc(M.dim(), M.dim(), Frac::zero(M.field()));
    for (std::uint32_t j = 0; j <= i; ++j) {
      auto Pj = P[j].map([](const BracketFrac& x) { return x.to_frac(); });
      acc = acc + Pj * Q[i - j].map([&](const Frac& x) { return x.frob_pow(j); });
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool drinfeld_exp_log_inverse(const Drinfeld& phi, std::uint32_t imax) {
  std::vector<Frac> xi = exp_coeffs(phi, imax);
  std::vector<Frac> gamma;
  for (std::uint32_t j = 0; j <= imax; ++j) gamma.push_back(gamma_recursive(phi, j).to_frac());
  for (std::uint32_t i = 1; i <= imax; ++i) {
    Frac acc = Frac::zero(phi.field());
    for (std::uint32_t j = 0; j <= i; ++j) acc += gamma[j] * xi[i - j].frob_pow(j);
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool motive_witness_identities(const Drinfeld& phi, std::uint32_t n, bool twisted) {
  return w_basis_check(DualMotive(phi, n, twisted));
}

bool motive_action_consistency(const Drinfeld& phi, std::uint32_t n, bool twisted,
                               std::uint32_t trials, std::uint64_t seed) {
  const PrimeField& F = phi.field();
  DualMotive M(phi, n, twisted);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, F.p() - 1);
  for (std::uint32_t t = 0; t < trials; ++t) {
    std::vector<Poly> x;
    for (std::uint32_t j = 0; j < M.dim(); ++j) {
      Poly p(F);
      for (std::int64_t k = 0; k <= 2; ++k) p += Poly::monomial(F, coeff(rng), k);
      x.push_back(p);
    }
    if (motive_t_action(M, x) != module_theta_action(M, x)) return false;
  }
  return true;
}

bool trivial_matches_zeta(const PrimeField& F, std::uint32_t s, std::uint32_t D) {
  for (std::uint32_t d = 1; d <= D; ++d) {
    std::int64_t window = static_cast<std::int64_t>(s) * (d + 1);
    EulerOptions opt{d, window + 3, 1, false};
    Laurent lhs = trivial_l_value(F, s, opt);
    Laurent rhs = zeta_truncated(F, s, d, window + 3);
    if (!Laurent::agree_to(lhs, rhs, window)) return false;
  }
  return true;
}

bool carlitz_unit_counts(const PrimeField& F, std::uint32_t dmax) {
  Poly one = Poly::constant(F, 1);
  for (std::uint32_t d = 1; d <= dmax; ++d)
    for (const Poly& w : monic_irreducibles(F, d)) {
      ResidueField R(w);
      PointAction pa = point_action_carlitz(R);
      if (fq_charpoly(pa.lie) != w || fq_charpoly(pa.g) != w - one) return false;
    }
  return true;
}

std::pair<std::int64_t, std::int64_t> class_formula_counts(const Drinfeld& phi, std::uint32_t n,
                                                           std::uint32_t D, std::int64_t prec,
                                                           int threads) {
  TensorModule M(phi, n, true);
  Laurent reg = regulator(M, prec);
  EulerOptions opt{D, prec, threads, false};
  Laurent lv = taelman_l_value_tensor(M, opt);
  Laurent mn = minor2x2(M, prec);
  return {Laurent::matched_coefficients(reg, lv), Laurent::matched_coefficients(reg, mn)};
}

bool goss_charpoly_identity(const Drinfeld& phi, std::uint32_t n, const Poly& w) {
  const PrimeField& F = phi.field();
  TensorModule M(phi, n, true);
  ResidueField R(w);
  GossFactorData data = goss_motive_data(phi, R);
  PointAction pa = point_action_tensor(M, R);
  std::uint32_t c = F.pow(F.neg(F.inv(phi.b_const())), R.deg());
  Poly rhs = w.pow(2 * n + 1) - data.trace * w.pow(n) + Poly::constant(F, c);
  return fq_charpoly(pa.lie) == w.pow(2 * n + 1) && fq_charpoly(pa.g) == rhs;
}

bool goss_taelman_factor_match(const Drinfeld& phi, std::uint32_t n, const Poly& w,
                               std::int64_t prec) {
  Laurent gf = goss_factor(phi, ResidueField(w), n + 1, prec);
  TaelmanFactor tf = taelman_factor_tensor(TensorModule(phi, n, true), w, prec);
  return Laurent::agree_to(gf, tf.factor, prec);
}

bool charpoly_oracle(const PrimeField& F, std::uint32_t dim, std::uint32_t trials,
                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, F.p() - 1);
  for (std::uint32_t t = 0; t < trials; ++t) {
    FqMatrix m(F, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = static_cast<std::uint8_t>(coeff(rng));
    if (fq_charpoly(m) != fq_charpoly_perm(m)) return false;
  }
  return true;
}

bool d_matrix_multiplicative(const Poly& f, const Poly& g, std::uint32_t n) {
  return d_matrix(f * g, n) == d_matrix(f, n) * d_matrix(g, n);
}

}  // namespace checks
}  // namespace gosslv
