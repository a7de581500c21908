#include "gosslv/lseries.hpp"

#include <stdexcept>

#include "gosslv/carlitz.hpp"

namespace gosslv {

Poly fitting_generator(const FqMatrix& theta_action) { return fq_charpoly(theta_action); }

namespace {

// Block matrix of x -> (d-part) x + sum_e (coeff_e) x^{(e)} on (A/wA)^dim:
// the d-part contributes mult-blocks, each tau^e term a mult*frob^e block.
FqMatrix theta_plus_n_blocks(const TensorModule& M, const ResidueField& R) {
  const PrimeField& F = R.base();
  std::size_t D = M.dim(), d = R.deg();
  FqMatrix T(F, D * d);
  FqMatrix id = FqMatrix::identity(F, d);
  for (std::size_t j = 0; j < D; ++j) {
    T.set_block(j, j, R.theta_matrix());
    if (j + 2 < D) T.set_block(j, j + 2, id);
  }
  return T;
}

} // namespace

PointAction point_action_tensor(const TensorModule& M, const ResidueField& R) {
  if (!M.phi.is_constant())
    throw std::invalid_argument("point_action_tensor: constant coefficients required");
  const PrimeField& F = R.base();
  std::size_t D = M.dim();
  std::uint32_t s = M.e_scale();
  PointAction out{theta_plus_n_blocks(M, R), theta_plus_n_blocks(M, R)};
  FqMatrix fr = R.frobenius_matrix();
  out.g.set_block(D - 2, 0, fr.mul_scalar(s));
  out.g.set_block(D - 1, 0, fr.mul_scalar(F.mul(s, M.phi.a_const())));
  out.g.set_block(D - 1, 1, fr.mul_scalar(F.mul(s, M.phi.b_const())));
  return out;
}

PointAction point_action_drinfeld(const Drinfeld& phi, bool twisted, const ResidueField& R) {
  if (!phi.is_constant())
    throw std::invalid_argument("point_action_drinfeld: constant coefficients required");
  const Drinfeld m = twisted ? phi.twist() : phi;
  FqMatrix fr = R.frobenius_matrix();
  FqMatrix fr2 = fr * fr;
  PointAction out{R.theta_matrix(), R.theta_matrix()};
  out.g = out.g + fr.mul_scalar(m.a_const()) + fr2.mul_scalar(m.b_const());
  return out;
}

PointAction point_action_carlitz(const ResidueField& R) {
  PointAction out{R.theta_matrix(), R.theta_matrix()};
  out.g = out.g + R.frobenius_matrix();
  return out;
}

namespace {

TaelmanFactor make_factor(const PointAction& pa, std::int64_t prec) {
  TaelmanFactor f;
  f.lie = fitting_generator(pa.lie);
  f.g = fitting_generator(pa.g);
  f.factor = Laurent::from_fraction(f.lie, f.g, prec);
  return f;
}

} // namespace

TaelmanFactor taelman_factor_tensor(const TensorModule& M, const Poly& w, std::int64_t prec) {
  ResidueField R(w);
  return make_factor(point_action_tensor(M, R), prec);
}

TaelmanFactor taelman_factor_drinfeld(const Drinfeld& phi, bool twisted, const Poly& w,
                                      std::int64_t prec) {
  ResidueField R(w);
  return make_factor(point_action_drinfeld(phi, twisted, R), prec);
}

TaelmanFactor taelman_factor_carlitz(const Poly& w, std::int64_t prec) {
  ResidueField R(w);
  return make_factor(point_action_carlitz(R), prec);
}

Laurent trivial_factor(const Poly& w, std::uint32_t s, std::int64_t prec) {
  const PrimeField& F = w.field();
  if (s == 0) throw std::invalid_argument("trivial_factor: s >= 1 required");
  // (1 - w^{-s})^{-1} = w^s / (w^s - 1)
  Poly ws = w.pow(s);
  return Laurent::from_fraction(ws, ws - Poly::constant(F, 1), prec);
}

GossFactorData goss_motive_data(const Drinfeld& phi, const ResidueField& R) {
  if (!phi.is_constant())
    throw std::invalid_argument("goss_motive_data: constant coefficients required");
  const PrimeField& F = R.base();
  const std::uint32_t d = R.deg();
  std::uint32_t a = phi.a_const(), b = phi.b_const();
  std::uint32_t binv = F.inv(b);
  // 2x2 matrices over (A/wA)[t]; t-coefficients are residue reps (deg < d).
  using TP = std::vector<Poly>;
  auto tp_const = [&](const Poly& c) { return TP{R.reduce(c)}; };
  auto tp_mul = [&](const TP& x, const TP& y) {
    TP r(x.size() + y.size() - 1, Poly(F));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero()) continue;
        r[i + j] += R.reduce(x[i] * y[j]);
      }
    }
    while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    return r;
  };
  auto tp_add = [&](const TP& x, const TP& y) {
    TP r = x.size() >= y.size() ? x : y;
    const TP& small = x.size() >= y.size() ? y : x;
    for (std::size_t i = 0; i < small.size(); ++i) r[i] += small[i];
    while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    return r;
  };
  struct M2 {
    TP e00, e01, e10, e11;
  };
  auto mul2 = [&](const M2& x, const M2& y) {
    return M2{tp_add(tp_mul(x.e00, y.e00), tp_mul(x.e01, y.e10)),
              tp_add(tp_mul(x.e00, y.e01), tp_mul(x.e01, y.e11)),
              tp_add(tp_mul(x.e10, y.e00), tp_mul(x.e11, y.e10)),
              tp_add(tp_mul(x.e10, y.e01), tp_mul(x.e11, y.e11))};
  };
  TP zero = tp_const(Poly(F));
  M2 pi;
  bool first = true;
  for (std::uint32_t i = 0; i < d; ++i) {
    // Theta_i = [[0, (t - theta^{q^i})/b], [1, -a/b]]
    Poly tb = R.theta_qpow(i);
    M2 th{zero,
          TP{(-tb).mul_scalar(binv), Poly::constant(F, binv)},
          tp_const(Poly::constant(F, 1)),
          tp_const(Poly::constant(F, F.neg(F.mul(a, binv))))};
    pi = first ? th : mul2(th, pi);
    first = false;
  }
  // trace must descend to F_q[t]: every t-coefficient a constant residue.
  TP tr = tp_add(pi.e00, pi.e11);
  Poly trace_a(F);
  for (std::size_t j = 0; j < tr.size(); ++j) {
    if (tr[j].deg() > 0)
      throw std::logic_error("goss_motive_data: trace does not descend to F_q[t]");
    if (!tr[j].is_zero())
      trace_a += Poly::monomial(F, tr[j].coeff(0), static_cast<std::int64_t>(j));
  }
  // det Pi = (-1/b)^d w(t) (checked): c = (-1/b)^d.
  std::uint32_t c = F.pow(F.neg(binv), d);
  TP det = tp_add(tp_mul(pi.e00, pi.e11), [&] {
    TP m = tp_mul(pi.e01, pi.e10);
    for (auto& v : m) v = -v;
    return m;
  }());
  const Poly& w = R.modulus();
  for (std::size_t j = 0; j < std::max<std::size_t>(det.size(), d + 1); ++j) {
    Poly expect = Poly::constant(F, F.mul(c, w.coeff(static_cast<std::int64_t>(j))));
    Poly got = j < det.size() ? det[j] : Poly(F);
    if (got != expect) throw std::logic_error("goss_motive_data: determinant identity failed");
  }
  GossFactorData out;
  out.trace = trace_a;
  out.pw_at_1 = Poly::constant(F, 1) - trace_a + w.mul_scalar(c);
  return out;
}

Laurent goss_factor(const Drinfeld& phi, const ResidueField& R, std::uint32_t s,
                    std::int64_t prec) {
  if (s == 0) throw std::invalid_argument("goss_factor: s >= 1 required");
  const PrimeField& F = R.base();
  GossFactorData d = goss_motive_data(phi, R);
  const Poly& w = R.modulus();
  std::uint32_t c = F.pow(F.neg(F.inv(phi.b_const())), R.deg());
  // P_w(w^{-s}) = 1 - trace w^{-s} + c w^{1-2s}
  Laurent pw = Laurent::one(F, prec) - Laurent::from_fraction(d.trace, w.pow(s), prec) +
               Laurent::from_fraction(Poly::constant(F, c), w.pow(2 * s - 1), prec);
  return pw.inverse_to(prec);
}

Laurent taelman_l_value_tensor(const TensorModule& M, const EulerOptions& opt) {
  return euler_product(M.field(), opt, [&](const Poly& w) {
    return taelman_factor_tensor(M, w, opt.prec).factor;
  });
}

Laurent taelman_l_value_drinfeld(const Drinfeld& phi, bool twisted, const EulerOptions& opt) {
  return euler_product(phi.field(), opt, [&](const Poly& w) {
    return taelman_factor_drinfeld(phi, twisted, w, opt.prec).factor;
  });
}

Laurent taelman_l_value_carlitz(const PrimeField& F, const EulerOptions& opt) {
  return euler_product(F, opt, [&](const Poly& w) {
    return taelman_factor_carlitz(w, opt.prec).factor;
  });
}

Laurent trivial_l_value(const PrimeField& F, std::uint32_t s, const EulerOptions& opt) {
  return euler_product(F, opt, [&](const Poly& w) {
    return trivial_factor(w, s, opt.prec);
  });
}

Laurent goss_l_value(const Drinfeld& phi, std::uint32_t s, const EulerOptions& opt) {
  return euler_product(phi.field(), opt, [&](const Poly& w) {
    return goss_factor(phi, ResidueField(w), s, opt.prec);
  });
}

std::int64_t heuristic_precision_tensor(std::uint32_t n, std::uint32_t D) {
  return (static_cast<std::int64_t>(D + 1) * (2 * n + 1) + 1) / 2;
}
std::int64_t heuristic_precision_goss(std::uint32_t s, std::uint32_t D) {
  return (static_cast<std::int64_t>(D + 1) * (2 * s - 1) + 1) / 2;
}
std::int64_t heuristic_precision_power(std::uint32_t s, std::uint32_t D) {
  return static_cast<std::int64_t>(s) * (D + 1);
}
std::int64_t heuristic_precision_drinfeld(std::uint32_t D) {
  return (static_cast<std::int64_t>(D) + 2) / 2;
}

Laurent rhs_theorem(const Drinfeld& phi, std::uint32_t n, std::int64_t prec,
                    std::uint32_t terms) {
  const PrimeField& F = phi.field();
  if (!phi.is_constant())
    throw std::invalid_argument("rhs_theorem: constant coefficients required");
  std::uint32_t binv = F.inv(phi.b_const());
  Laurent sg = Laurent::zero(F, prec), sgp = Laurent::zero(F, prec);
  Laurent sf = Laurent::zero(F, prec), sfp = Laurent::zero(F, prec);
  GammaParts prev{BracketFrac::zero(F), BracketFrac::zero(F), BracketFrac::zero(F)};
  for (std::uint32_t i = 0;; ++i) {
    if (terms > 0 && i >= terms) break;
    std::int64_t vmin = static_cast<std::int64_t>(n) * CarlitzTable::deg_L(F, i);
    if (vmin >= prec) break;
    GammaParts cur = ft_gamma(phi, i);
    auto term = [&](const BracketFrac& x, std::uint32_t bpow) {
      BracketFrac t = x.mul_scalar(F.pow(binv, bpow));
      if ((static_cast<std::uint64_t>(i) * n + i) & 1u) t = -t;  // (-1)^i and L_i^n sign
      for (std::uint32_t k = 1; k <= i; ++k) t = t.div_bracket(k, n);
      return t.to_laurent(prec);
    };
    sg = sg + term(cur.gamma, i);
    sf = sf + term(cur.f, i);
    if (i >= 1) {
      sgp = sgp + term(prev.gamma, i - 1);
      sfp = sfp + term(prev.f, i - 1);
    }
    prev = cur;
  }
  Laurent one = Laurent::one(F, prec);
  return (sg * (one + sfp) - sgp * sf).truncated(prec);
}

}  // namespace gosslv
