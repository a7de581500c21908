#pragma once

#include <cstdint>
#include <vector>

#include "gosslv/poly.hpp"

namespace gosslv {

// Square matrix over F_q, byte-packed, used for theta-actions on finite
// A-modules (dimensions stay small: (2n+1) * deg w).
class FqMatrix {
public:
  FqMatrix() : F_(nullptr), n_(0) {}
  FqMatrix(const PrimeField& F, std::size_t n) : F_(&F), n_(n), a_(n * n, 0) {}
  static FqMatrix identity(const PrimeField& F, std::size_t n);

  const PrimeField& field() const;
  std::size_t dim() const { return n_; }
  std::uint8_t& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::uint8_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
  FqMatrix mul_scalar(std::uint32_t s) const;
  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }
  friend bool operator!=(const FqMatrix& a, const FqMatrix& b) { return !(a == b); }

  // Write `b` into the dim-`d` block at block position (bi, bj).
  void set_block(std::size_t bi, std::size_t bj, const FqMatrix& b);

private:
  const PrimeField* F_;
  std::size_t n_;
  std::vector<std::uint8_t> a_;
};

// Monic characteristic polynomial of m, returned as an element of A (the
// variable renamed theta).  Hessenberg reduction + the last-column recurrence.
Poly fq_charpoly(const FqMatrix& m);
// Reference implementation by signed permutation expansion; dim <= 6.
Poly fq_charpoly_perm(const FqMatrix& m);

// A/wA in the polynomial basis 1, theta, ..., theta^(d-1).
class ResidueField {
public:
  explicit ResidueField(const Poly& w);

  const Poly& modulus() const { return w_; }
  std::uint32_t deg() const { return d_; }
  const PrimeField& base() const { return w_.field(); }
  const FqMatrix& theta_matrix() const { return theta_; }    // x -> theta x
  const FqMatrix& frobenius_matrix() const { return frob_; } // x -> x^q
  FqMatrix mult_matrix(const Poly& x) const;                 // x-> (a mod w) x
  Poly reduce(const Poly& x) const;
  Poly theta_qpow(std::uint32_t e) const;                    // theta^{q^e} mod w

private:
  Poly w_;
  std::uint32_t d_;
  FqMatrix theta_, frob_;
};

}  // namespace gosslv
