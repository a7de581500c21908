#include "gosslv/euler.hpp"

#include <exception>

#include "gosslv/irreducibles.hpp"

#ifdef GOSSLV_OPENMP
#include <omp.h>
#endif

namespace gosslv {

Laurent euler_product(const PrimeField& F, const EulerOptions& opt,
                      const std::function<Laurent(const Poly&)>& factor_at,
                      std::vector<Laurent>* factors_out) {
  std::vector<Poly> primes = monic_irreducibles_upto(F, opt.max_prime_degree);
  std::vector<Laurent> factors(primes.size());
  bool parallel = !opt.serial;
#ifdef GOSSLV_OPENMP
  if (parallel) {
    int nt = opt.threads > 0 ? opt.threads : omp_get_max_threads();
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(primes.size()); ++i) {
      try {
        factors[static_cast<std::size_t>(i)] = factor_at(primes[static_cast<std::size_t>(i)]);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  }
#else
  parallel = false;
#endif
  if (!parallel) {
    for (std::size_t i = 0; i < primes.size(); ++i) factors[i] = factor_at(primes[i]);
  }
  Laurent acc = Laurent::one(F, opt.prec);
  for (const Laurent& f : factors) acc = acc * f;
  if (factors_out) *factors_out = std::move(factors);
  return acc.truncated(opt.prec);
}

}  // namespace gosslv
