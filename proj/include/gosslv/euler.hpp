#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gosslv/laurent.hpp"
#include "gosslv/poly.hpp"

namespace gosslv {

// Euler products over monic irreducibles of degree <= max_prime_degree, in
// canonical order (degree, then lexicographic coefficients).  The per-prime
// factor map must be pure.  Parallelism only fills the pre-sized factor
// vector; the reduction always runs sequentially in canonical order, so the
// result is bit-identical for every thread count, including the forced-serial
// reference path.
struct EulerOptions {
  std::uint32_t max_prime_degree = 0;
  std::int64_t prec = 40;
  int threads = 1;      // <= 0 means the OpenMP default
  bool serial = false;  // force the reference implementation
};

Laurent euler_product(const PrimeField& F, const EulerOptions& opt,
                      const std::function<Laurent(const Poly&)>& factor_at,
                      std::vector<Laurent>* factors_out = nullptr);

}  // namespace gosslv
