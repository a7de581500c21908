#include "gosslv/tensor.hpp"

#include <stdexcept>

#include "gosslv/carlitz.hpp"
#include "gosslv/taylor.hpp"

namespace gosslv {

TensorModule::TensorModule(Drinfeld phi_, std::uint32_t n_, bool twisted_)
    : phi(std::move(phi_)), n(n_), twisted(twisted_) {
  if (n == 0) throw std::invalid_argument("TensorModule: n must be >= 1");
  if (twisted && !phi.is_constant())
    throw std::invalid_argument("TensorModule: twist requires constant coefficients");
}

Matrix<Poly> matrix_N(const TensorModule& M) {
  const PrimeField& F = M.field();
  std::size_t D = M.dim();
  Matrix<Poly> N(D, D, Poly(F));
  for (std::size_t j = 0; j + 2 < D; ++j) N.at(j, j + 2) = Poly::constant(F, 1);
  return N;
}

Matrix<Poly> matrix_E(const TensorModule& M) {
  const PrimeField& F = M.field();
  std::size_t D = M.dim();
  std::uint32_t s = M.e_scale();
  Matrix<Poly> E(D, D, Poly(F));
  E.at(D - 2, 0) = Poly::constant(F, s);
  E.at(D - 1, 0) = M.phi.a.mul_scalar(s);
  E.at(D - 1, 1) = M.phi.b.mul_scalar(s);
  return E;
}

Matrix<Poly> d_matrix(const Poly& f, std::uint32_t n) {
  const PrimeField& F = f.field();
  std::size_t D = 2 * n + 1;
  Matrix<Poly> m(D, D, Poly(F));
  for (std::uint32_t k = 0; 2 * k < D; ++k) {
    Poly h = hyperderiv(f, k);
    if (h.is_zero()) continue;
    for (std::size_t j = 0; j + 2 * k < D; ++j) m.at(j, j + 2 * k) = h;
  }
  return m;
}

namespace {

// ad(N)(X) = N X - X N with the double-shift N: row shift up vs column shift right.
Matrix<BracketFrac> ad_n(const Matrix<BracketFrac>& X, const BracketFrac& zero) {
  std::size_t D = X.rows();
  Matrix<BracketFrac> R(D, D, zero);
  for (std::size_t r = 0; r < D; ++r)
    for (std::size_t c = 0; c < D; ++c) {
      BracketFrac v = (r + 2 < D) ? X.at(r + 2, c) : zero;
      if (c >= 2) v += -X.at(r, c - 2);
      R.at(r, c) = v;
    }
  return R;
}

Matrix<Frac> ad_n_frac(const Matrix<Frac>& X, const Frac& zero) {
  std::size_t D = X.rows();
  Matrix<Frac> R(D, D, zero);
  for (std::size_t r = 0; r < D; ++r)
    for (std::size_t c = 0; c < D; ++c) {
      Frac v = (r + 2 < D) ? X.at(r + 2, c) : zero;
      if (c >= 2) v += -X.at(r, c - 2);
      R.at(r, c) = v;
    }
  return R;
}

} // namespace

std::vector<Matrix<BracketFrac>> log_coeffs(const TensorModule& M, std::uint32_t imax) {
  const PrimeField& F = M.field();
  const std::size_t D = M.dim();
  const std::uint32_t s = M.e_scale();
  const BracketFrac zero = BracketFrac::zero(F);
  std::vector<Matrix<BracketFrac>> P;
  P.push_back(Matrix<BracketFrac>::identity(D, zero, BracketFrac::one(F)));
  for (std::uint32_t i = 1; i <= imax; ++i) {
    Poly one_f = Poly::constant(F, s);
    Poly a_f = M.phi.a.frob_pow(i - 1).mul_scalar(s);
    Poly b_f = M.phi.b.frob_pow(i - 1).mul_scalar(s);
    const Matrix<BracketFrac>& Pp = P.back();
    // C = P_{i-1} E^{(i-1)}: only columns 0 and 1 survive.
    Matrix<BracketFrac> C(D, D, zero);
    for (std::size_t r = 0; r < D; ++r) {
      C.at(r, 0) = Pp.at(r, D - 2).mul_poly(one_f) + Pp.at(r, D - 1).mul_poly(a_f);
      C.at(r, 1) = Pp.at(r, D - 1).mul_poly(b_f);
    }
    Matrix<BracketFrac> acc(D, D, zero);
    Matrix<BracketFrac> X = C;
    for (std::uint32_t j = 0; j <= 2 * M.n; ++j) {
      if (j > 0) {
        X = ad_n(X, zero);
        if (X.is_zero()) break;
      }
      for (std::size_t r = 0; r < D; ++r)
        for (std::size_t c = 0; c < D; ++c) {
          if (X.at(r, c).is_zero()) continue;
          acc.at(r, c) += X.at(r, c).div_bracket(i, j + 1);
        }
    }
    Matrix<BracketFrac> Pi(D, D, zero);
    for (std::size_t r = 0; r < D; ++r)
      for (std::size_t c = 0; c < D; ++c) Pi.at(r, c) = (-acc.at(r, c)).reduced();
    P.push_back(std::move(Pi));
  }
  return P;
}

Matrix<BracketFrac> closed_bottom_rows(const TensorModule& M, std::uint32_t i) {
  const PrimeField& F = M.field();
  const std::uint32_t n = M.n;
  const BracketFrac zero = BracketFrac::zero(F);
  Matrix<BracketFrac> rows(2, M.dim(), zero);
  if (i == 0) {  // P_0 = Id; the [i]-power form only applies from i = 1 on
    rows.at(0, M.dim() - 2) = BracketFrac::one(F);
    rows.at(1, M.dim() - 1) = BracketFrac::one(F);
    return rows;
  }
  GammaParts gi = ft_gamma(M.phi, i);
  GammaParts gp = ft_gamma(M.phi, i - 1);
  Poly bq = M.phi.b.frob_pow(i - 1);
  // (-1)^{in} from 1/L_i^n with the signed L_i, applied as bracket divisions.
  auto div_l_pow_n = [&](BracketFrac x) {
    if ((static_cast<std::uint64_t>(i) * n) & 1u) x = -x;
    for (std::uint32_t k = 1; k <= i; ++k) x = x.div_bracket(k, n);
    return x;
  };
  std::uint32_t s = M.e_scale();
  std::uint32_t si = F.pow(s, i);  // twisted scale factor s^i on P_i
  for (std::uint32_t c = 0; c < M.dim(); ++c) {
    std::uint32_t k = c / 2 + 1;
    bool odd = (c % 2 == 0);
    std::uint32_t e = odd ? (n + 1 - k) : (n - k);
    BracketFrac gamma_part = odd ? gi.gamma : gp.gamma.mul_poly(bq);
    BracketFrac f_part = odd ? gi.f : gp.f.mul_poly(bq);
    Poly br = bracket_pow(F, i, e);
    if (e & 1u) br = -br;  // (-1)^e [i]^e
    rows.at(0, c) = div_l_pow_n(f_part.mul_poly(br)).mul_scalar(si).reduced();
    rows.at(1, c) = div_l_pow_n(gamma_part.mul_poly(br)).mul_scalar(si).reduced();
  }
  return rows;
}

Matrix<BracketFrac> deformation_log_coeff(const TensorModule& M, std::uint32_t i) {
  const PrimeField& F = M.field();
  const std::uint32_t n = M.n;
  const std::size_t D = M.dim();
  const std::uint32_t q = M.q();
  const BracketFrac zero = BracketFrac::zero(F);
  if (i == 0) return Matrix<BracketFrac>::identity(D, zero, BracketFrac::one(F));

  // pw[m][e] = Taylor of (s - [m])^{-e} to order n, s = t - theta.
  // Base series: (s - [m])^{-1} = -sum_j s^j / [m]^{j+1}.
  std::vector<std::vector<Taylor<BracketFrac>>> pw(i + 1);
  for (std::uint32_t m = 1; m <= i; ++m) {
    Taylor<BracketFrac> g = Taylor<BracketFrac>::zeros(zero, n);
    for (std::uint32_t j = 0; j <= n; ++j)
      g[j] = BracketFrac(Poly::constant(F, F.neg(1))).div_bracket(m, j + 1);
    pw[m].push_back(Taylor<BracketFrac>::constant(BracketFrac::one(F), n));
    for (std::uint32_t e = 1; e <= n + 1; ++e) pw[m].push_back(pw[m][e - 1] * g);
  }

  auto column_taylor = [&](std::uint32_t deg, std::int32_t pos_pow, const Poly& extra,
                           bool f_only) {
    // sum over shadowed partitions of `deg` of the Taylor expansion of
    //   extra * a^w b^{w1(S2)} * (s-[i])^{pos_pow} / ( L_i(t)^n * prod_{m in B} (s-[m]) )
    Taylor<BracketFrac> acc = Taylor<BracketFrac>::zeros(zero, n);
    for (const auto& U : shadowed_partitions(deg)) {
      if (f_only && !U.first_kind()) continue;
      std::uint64_t w = U.first_kind() ? (weight2(U.s1, q) + (f_only ? 0 : 1)) : weight1(U.s1, q);
      Poly m_u = M.phi.a.pow(w) * M.phi.b.pow(weight1(U.s2, q)) * extra;
      std::uint64_t bset = bracket_set(U);
      Taylor<BracketFrac> t = Taylor<BracketFrac>::constant(BracketFrac(m_u), n);
      for (std::uint32_t m = 1; m <= i; ++m) {
        std::int32_t e = -static_cast<std::int32_t>(n) - static_cast<std::int32_t>((bset >> m) & 1u);
        if (m == i) e += pos_pow;
        if (e < 0) t = t * pw[m][static_cast<std::uint32_t>(-e)];
        for (std::int32_t r = 0; r < e; ++r)
          t = t.mul_s_plus(BracketFrac(-bracket(F, m)));
      }
      acc = acc + t;
    }
    return acc;
  };

  Matrix<BracketFrac> P(D, D, zero);
  std::uint32_t si = F.pow(M.e_scale(), i);
  Poly one_extra = Poly::constant(F, 1);
  Poly b_extra = M.phi.b.frob_pow(i - 1);
  for (std::size_t c = 0; c < D; ++c) {
    std::uint32_t k = static_cast<std::uint32_t>(c) / 2 + 1;
    bool odd = (c % 2 == 0);
    std::uint32_t deg = odd ? i : i - 1;
    std::int32_t pos_pow = odd ? static_cast<std::int32_t>(n + 1 - k)
                               : static_cast<std::int32_t>(n - k);
    const Poly& extra = odd ? one_extra : b_extra;
    Taylor<BracketFrac> tg = column_taylor(deg, pos_pow, extra, false);
    Taylor<BracketFrac> tf = column_taylor(deg, pos_pow, extra, true);
    for (std::size_t r = 0; r < D; ++r) {
      std::uint32_t j = static_cast<std::uint32_t>(r) / 2;
      BracketFrac v = (r % 2 == 0) ? tg[n - j] : tf[n - 1 - j];
      P.at(r, c) = v.mul_scalar(si).reduced();
    }
  }
  return P;
}

std::vector<Matrix<Frac>> exp_coeffs_tensor(const TensorModule& M, std::uint32_t imax) {
  const PrimeField& F = M.field();
  const std::size_t D = M.dim();
  const Frac zero = Frac::zero(F);
  Frac s = Frac::constant(F, M.e_scale());
  Frac a = Frac(M.phi.a) * s, b = Frac(M.phi.b) * s;
  std::vector<Matrix<Frac>> Q;
  Q.push_back(Matrix<Frac>::identity(D, zero, Frac::one(F)));
  for (std::uint32_t i = 1; i <= imax; ++i) {
    Matrix<Frac> Xf(D, D, zero);  // E * Q_{i-1}^{(1)}: rows D-2, D-1 only
    for (std::size_t c = 0; c < D; ++c) {
      Frac q0 = Q.back().at(0, c).frob_pow(1);
      Frac q1 = Q.back().at(1, c).frob_pow(1);
      Xf.at(D - 2, c) = s * q0;
      Xf.at(D - 1, c) = a * q0 + b * q1;
    }
    Frac inv_br = Frac(bracket(F, i)).inv();
    Matrix<Frac> acc(D, D, zero);
    Matrix<Frac> X = Xf;
    Frac scale = inv_br;
    for (std::uint32_t j = 0; j <= 2 * M.n; ++j) {
      if (j > 0) {
        X = ad_n_frac(X, zero);
        if (X.is_zero()) break;
        scale = scale * inv_br;
      }
      for (std::size_t r = 0; r < D; ++r)
        for (std::size_t c = 0; c < D; ++c)
          if (!X.at(r, c).is_zero()) acc.at(r, c) += X.at(r, c) * scale;
    }
    Q.push_back(std::move(acc));
  }
  return Q;
}

std::int64_t log_coeff_valuation_bound(const TensorModule& M, std::uint32_t i) {
  const std::int64_t q = M.q();
  std::int64_t qi = 1;
  for (std::uint32_t k = 0; k < i; ++k) {
    if (qi > Laurent::kInfVal / q) return Laurent::kInfVal;
    qi *= q;
  }
  return static_cast<std::int64_t>(M.n) * (qi - q) / (q - 1);
}

Matrix<Laurent> log_basis_matrix(const TensorModule& M, std::int64_t prec) {
  const PrimeField& F = M.field();
  const std::size_t D = M.dim();
  Matrix<Laurent> L(D, D, Laurent::zero(F, prec));
  std::vector<Matrix<BracketFrac>> P;
  std::uint32_t imax = 0;
  while (imax < 30 && log_coeff_valuation_bound(M, imax + 1) < prec) ++imax;
  P = log_coeffs(M, imax);
  for (std::uint32_t i = 0; i <= imax; ++i)
    for (std::size_t r = 0; r < D; ++r)
      for (std::size_t c = 0; c < D; ++c) {
        const BracketFrac& v = P[i].at(r, c);
        if (v.is_zero()) continue;
        L.at(r, c) = L.at(r, c) + v.to_laurent(prec);
      }
  return L;
}

std::vector<Laurent> tensor_log_eval(const TensorModule& M, const std::vector<Laurent>& x,
                                     std::int64_t prec) {
  const PrimeField& F = M.field();
  const std::size_t D = M.dim();
  if (x.size() != D) throw std::invalid_argument("tensor_log_eval: wrong vector length");
  std::int64_t vx = Laurent::kInfVal;
  for (const auto& c : x) vx = std::min(vx, c.val());
  if (vx < 0) throw std::domain_error("tensor_log_eval: argument valuation is negative");
  std::vector<Laurent> acc(D, Laurent::zero(F, prec));
  std::uint32_t imax = 0;
  std::int64_t qi = 1;
  while (imax < 30) {
    std::int64_t qn = (qi > Laurent::kInfVal / F.p()) ? Laurent::kInfVal : qi * F.p();
    std::int64_t bound = log_coeff_valuation_bound(M, imax + 1);
    std::int64_t vterm = (bound >= prec || qn >= prec) ? Laurent::kInfVal
                                                       : bound + qn * std::min<std::int64_t>(vx, prec);
    if (vterm >= prec) break;
    ++imax;
    qi = qn;
  }
  std::vector<Matrix<BracketFrac>> P = log_coeffs(M, imax);
  for (std::uint32_t i = 0; i <= imax; ++i) {
    for (std::size_t r = 0; r < D; ++r) {
      for (std::size_t c = 0; c < D; ++c) {
        const BracketFrac& v = P[i].at(r, c);
        if (v.is_zero() || x[c].zero_to_prec()) continue;
        acc[r] = acc[r] + (v.to_laurent(prec) * x[c].frob_pow(i)).truncated(prec);
      }
    }
  }
  for (auto& v : acc) v = v.truncated(prec);
  return acc;
}

Laurent laurent_det(Matrix<Laurent> m, std::int64_t prec) {
  if (m.rows() != m.cols()) throw std::logic_error("laurent_det: square matrices only");
  const std::size_t D = m.rows();
  if (D == 0) throw std::logic_error("laurent_det: empty matrix");
  const PrimeField& F = m.at(0, 0).field();
  Laurent det = Laurent::one(F);
  for (std::size_t k = 0; k < D; ++k) {
    std::size_t piv = k;
    std::int64_t best = Laurent::kInfVal;
    for (std::size_t r = k; r < D; ++r) {
      if (m.at(r, k).zero_to_prec()) continue;
      if (m.at(r, k).val() < best) {
        best = m.at(r, k).val();
        piv = r;
      }
    }
    if (best == Laurent::kInfVal) {
      // column vanishes to working precision; so does the determinant
      std::int64_t p = prec;
      for (std::size_t r = k; r < D; ++r) p = std::min(p, m.at(r, k).prec());
      return Laurent::zero(F, p);
    }
    if (piv != k) {
      for (std::size_t c = 0; c < D; ++c) std::swap(m.at(piv, c), m.at(k, c));
      det = -det;
    }
    det = det * m.at(k, k);
    Laurent inv = m.at(k, k).inverse_to(prec);
    for (std::size_t r = k + 1; r < D; ++r) {
      if (m.at(r, k).zero_to_prec()) continue;
      Laurent f = m.at(r, k) * inv;
      for (std::size_t c = k + 1; c < D; ++c)
        m.at(r, c) = m.at(r, c) - f * m.at(k, c);
    }
  }
  return det;
}

Laurent regulator(const TensorModule& M, std::int64_t prec) {
  Matrix<Laurent> L = log_basis_matrix(M, prec);
  std::size_t D = M.dim();
  // The index is taken over A acting through d_n, so each Log(e_j) must be
  // rewritten in d-coordinates: Log(e_j) = sum_i c_ij d_n[.] e_i with
  // c_rj = Lambda_rj - sum_{k>=1} hyperderiv^k(c_{r+2k,j}).  The last two rows
  // are correction-free, which keeps minor2x2 on the raw matrix.
  for (std::size_t j = 0; j < D; ++j)
    for (std::size_t r = D; r-- > 0;)
      for (std::size_t k = 1; r + 2 * k < D; ++k)
        L.at(r, j) = L.at(r, j) - hyperderiv(L.at(r + 2 * k, j), k);
  return laurent_det(L, prec).truncated(prec);
}

Laurent minor2x2(const TensorModule& M, std::int64_t prec) {
  Matrix<Laurent> L = log_basis_matrix(M, prec);
  std::size_t r0 = 2 * M.n - 1, r1 = 2 * M.n;
  return (L.at(r0, r0) * L.at(r1, r1) - L.at(r0, r1) * L.at(r1, r0)).truncated(prec);
}

}  // namespace gosslv
