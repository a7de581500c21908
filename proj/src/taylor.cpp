#include "gosslv/taylor.hpp"

namespace gosslv {

namespace {
void tpoly_trim(TPoly& f) {
  while (f.size() > 1 && f.back().is_zero()) f.pop_back();
}
}  // namespace

TPoly tpoly_zero(const PrimeField& F) { return {Frac::zero(F)}; }

TPoly tpoly_from(std::vector<Frac> coeffs) {
  TPoly f = std::move(coeffs);
  if (f.empty()) throw std::logic_error("tpoly_from: empty");
  tpoly_trim(f);
  return f;
}

bool tpoly_is_zero(const TPoly& f) { return f.size() == 1 && f[0].is_zero(); }

TPoly tpoly_add(const TPoly& a, const TPoly& b) {
  TPoly r = a.size() >= b.size() ? a : b;
  const TPoly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
  tpoly_trim(r);
  return r;
}

TPoly tpoly_sub(const TPoly& a, const TPoly& b) {
  return tpoly_add(a, tpoly_scale(b, Frac::constant(b[0].field(), b[0].field().p() - 1)));
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
  const PrimeField& F = a[0].field();
  if (tpoly_is_zero(a) || tpoly_is_zero(b)) return tpoly_zero(F);
  TPoly r(a.size() + b.size() - 1, Frac::zero(F));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  tpoly_trim(r);
  return r;
}

TPoly tpoly_scale(const TPoly& a, const Frac& s) {
  TPoly r = a;
  for (auto& v : r) v = v * s;
  tpoly_trim(r);
  return r;
}

TPoly tpoly_linear_pow(const Frac& c, std::uint32_t e) {
  const PrimeField& F = c.field();
  TPoly r = tpoly_from({Frac::one(F)});
  TPoly lin = tpoly_from({-c, Frac::one(F)});
  for (std::uint32_t t = 0; t < e; ++t) r = tpoly_mul(r, lin);
  return r;
}

Frac tpoly_eval(const TPoly& f, const Frac& x) {
  Frac r = Frac::zero(x.field());
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

std::string tpoly_to_string(const TPoly& f) {
  if (tpoly_is_zero(f)) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + f[i].to_string() + ")";
    if (i == 1) out += "*t";
    if (i > 1) out += "*t^" + std::to_string(i);
  }
  return out;
}

Taylor<Frac> tpoly_taylor(const TPoly& f, std::size_t order, const PrimeField& F) {
  // Horner in s: f(theta + s) built from the top coefficient down.
  Frac theta(Poly::theta(F));
  Taylor<Frac> r = Taylor<Frac>::constant(f.back(), order);
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    r = r.mul_s_plus(theta);
    r[0] = r[0] + f[i];
  }
  return r;
}

Taylor<Frac> taylor_of_fraction(const TPoly& num, const TPoly& den, std::size_t order,
                                const PrimeField& F) {
  Taylor<Frac> d = tpoly_taylor(den, order, F);
  if (d[0].is_zero())
    throw std::domain_error("taylor_of_fraction: denominator vanishes at theta");
  return tpoly_taylor(num, order, F) * d.inverse();
}

TPoly taylor_to_tpoly(const Taylor<Frac>& f, const PrimeField& F) {
  TPoly r = tpoly_zero(F);
  Frac theta(Poly::theta(F));
  TPoly pow = tpoly_from({Frac::one(F)});
  TPoly lin = tpoly_from({-theta, Frac::one(F)});
  for (std::size_t j = 0; j <= f.order(); ++j) {
    if (!f[j].is_zero()) r = tpoly_add(r, tpoly_scale(pow, f[j]));
    if (j < f.order()) pow = tpoly_mul(pow, lin);
  }
  return r;
}

}  // namespace gosslv
