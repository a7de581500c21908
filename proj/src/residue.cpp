#include "gosslv/residue.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gosslv/irreducibles.hpp"

namespace gosslv {

const PrimeField& FqMatrix::field() const {
  if (!F_) throw std::logic_error("FqMatrix: null matrix");
  return *F_;
}

FqMatrix FqMatrix::identity(const PrimeField& F, std::size_t n) {
  FqMatrix m(F, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
  if (a.n_ != b.n_) throw std::logic_error("FqMatrix: shape mismatch");
  const PrimeField& F = a.field();
  FqMatrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k)
    r.a_[k] = static_cast<std::uint8_t>(F.add(r.a_[k], b.a_[k]));
  return r;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  if (a.n_ != b.n_) throw std::logic_error("FqMatrix: shape mismatch");
  const PrimeField& F = a.field();
  const std::uint64_t p = F.p();
  std::size_t n = a.n_;
  FqMatrix r(F, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::uint32_t x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t v = r.at(i, j) + x * b.at(k, j);
        r.at(i, j) = static_cast<std::uint8_t>(v % p);
      }
    }
  return r;
}

FqMatrix FqMatrix::mul_scalar(std::uint32_t s) const {
  const PrimeField& F = field();
  FqMatrix r = *this;
  for (auto& v : r.a_) v = static_cast<std::uint8_t>(F.mul(v, s));
  return r;
}

void FqMatrix::set_block(std::size_t bi, std::size_t bj, const FqMatrix& b) {
  std::size_t d = b.n_;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) at(bi * d + i, bj * d + j) = b.at(i, j);
}

Poly fq_charpoly(const FqMatrix& m) {
  const PrimeField& F = m.field();
  std::size_t n = m.dim();
  if (n == 0) return Poly::constant(F, 1);
  // similarity reduction to upper Hessenberg
  FqMatrix h = m;
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = 0;
    for (std::size_t r = c + 1; r < n; ++r)
      if (h.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv == 0) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(c + 1, j), h.at(piv, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, c + 1), h.at(i, piv));
    }
    std::uint32_t inv = F.inv(h.at(c + 1, c));
    for (std::size_t r = c + 2; r < n; ++r) {
      std::uint32_t t = F.mul(h.at(r, c), inv);
      if (t == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        h.at(r, j) = static_cast<std::uint8_t>(F.sub(h.at(r, j), F.mul(t, h.at(c + 1, j))));
      for (std::size_t i = 0; i < n; ++i)
        h.at(i, c + 1) = static_cast<std::uint8_t>(F.add(h.at(i, c + 1), F.mul(t, h.at(i, r))));
    }
  }
  // p_m = (X - h[m-1][m-1]) p_{m-1} - sum_i h[i-1][m-1] (prod_{j=i..m-1} h[j][j-1]) p_{i-1}
  std::vector<Poly> p;
  p.push_back(Poly::constant(F, 1));
  for (std::size_t mm = 1; mm <= n; ++mm) {
    Poly x_minus = Poly::monomial(F, 1, 1) - Poly::constant(F, h.at(mm - 1, mm - 1));
    Poly acc = x_minus * p[mm - 1];
    std::uint32_t prod = 1;
    for (std::size_t i = mm - 1; i >= 1; --i) {
      prod = F.mul(prod, h.at(i, i - 1));
      if (prod == 0) break;
      std::uint32_t coef = F.mul(h.at(i - 1, mm - 1), prod);
      if (coef != 0) acc -= p[i - 1].mul_scalar(coef);
    }
    p.push_back(acc);
  }
  return p[n];
}

Poly fq_charpoly_perm(const FqMatrix& m) {
  const PrimeField& F = m.field();
  std::size_t n = m.dim();
  if (n > 6) throw std::invalid_argument("fq_charpoly_perm: reference oracle capped at dim 6");
  // entries of X*Id - m as degree <= 1 polynomials
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  Poly det = Poly(F);
  std::vector<std::size_t> perm = idx;
  // iterate all permutations with parity tracking
  std::sort(perm.begin(), perm.end());
  do {
    // parity by counting inversions
    unsigned inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Poly term = Poly::constant(F, 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      Poly e = Poly::constant(F, F.neg(m.at(i, perm[i])));
      if (i == perm[i]) e += Poly::monomial(F, 1, 1);
      term = term * e;
    }
    if (inv & 1u) term = -term;
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

ResidueField::ResidueField(const Poly& w) : w_(w) {
  if (!w.is_monic() || w.deg() < 1) throw std::invalid_argument("ResidueField: monic modulus required");
  const PrimeField& F = w.field();
  d_ = static_cast<std::uint32_t>(w.deg());
  theta_ = FqMatrix(F, d_);
  for (std::uint32_t j = 0; j + 1 < d_; ++j) theta_.at(j + 1, j) = 1;
  for (std::uint32_t i = 0; i < d_; ++i)
    theta_.at(i, d_ - 1) = static_cast<std::uint8_t>(F.neg(w.coeff(i)));
  frob_ = FqMatrix(F, d_);
  Poly tq = frobenius_power_mod(Poly::theta(F), 1, w_);
  Poly col = Poly::constant(F, 1);
  for (std::uint32_t j = 0; j < d_; ++j) {
    for (std::uint32_t i = 0; i < d_; ++i)
      frob_.at(i, j) = static_cast<std::uint8_t>(col.coeff(i));
    if (j + 1 < d_) col = (col * tq).divrem(w_).second;
  }
}

Poly ResidueField::reduce(const Poly& x) const { return x.divrem(w_).second; }

FqMatrix ResidueField::mult_matrix(const Poly& x) const {
  const PrimeField& F = base();
  Poly r = reduce(x);
  FqMatrix m(F, d_);
  Poly col = r;
  for (std::uint32_t j = 0; j < d_; ++j) {
    for (std::uint32_t i = 0; i < d_; ++i)
      m.at(i, j) = static_cast<std::uint8_t>(col.coeff(i));
    if (j + 1 < d_) col = col.shifted(1).divrem(w_).second;
  }
  return m;
}

Poly ResidueField::theta_qpow(std::uint32_t e) const {
  return frobenius_power_mod(Poly::theta(base()), e, w_);
}

}  // namespace gosslv
