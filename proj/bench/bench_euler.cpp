// Times the Euler-product engine: forced-serial reference vs the OpenMP fill,
// on the twisted tensor L-value at growing prime-degree cutoffs.  Run as
//   bench_euler [q a b n Dmax prec]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>

#include "gosslv/drinfeld.hpp"
#include "gosslv/euler.hpp"
#include "gosslv/field.hpp"
#include "gosslv/lseries.hpp"
#include "gosslv/tensor.hpp"

using namespace gosslv;

namespace {

double run(const TensorModule& M, uint32_t D, int64_t prec, bool serial, int threads,
           Laurent* out) {
  EulerOptions opt;
  opt.max_prime_degree = D;
  opt.prec = prec;
  opt.serial = serial;
  opt.threads = threads;
  auto t0 = std::chrono::steady_clock::now();
  *out = taelman_l_value_tensor(M, opt);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  uint32_t q = argc > 1 ? std::atoi(argv[1]) : 3;
  uint32_t a = argc > 2 ? std::atoi(argv[2]) : 1;
  uint32_t b = argc > 3 ? std::atoi(argv[3]) : 2;
  uint32_t n = argc > 4 ? std::atoi(argv[4]) : 1;
  uint32_t dmax = argc > 5 ? std::atoi(argv[5]) : 9;
  int64_t prec = argc > 6 ? std::atol(argv[6]) : 26;

  const PrimeField& F = PrimeField::get(q);
  TensorModule M(Drinfeld(Poly::constant(F, a), Poly::constant(F, b)), n, true);
  std::printf("L(G~_%u) over F_%u, a=%u b=%u, prec %lld\n", n, q, a, b,
              static_cast<long long>(prec));
  std::printf("%4s %10s %10s %8s  %s\n", "D", "serial", "openmp", "speedup", "agree");

  for (uint32_t D = 4; D <= dmax; ++D) {
    Laurent ref, par;
    double ts = run(M, D, prec, true, 1, &ref);
    double tp = run(M, D, prec, false, 0, &par);  // 0 = OpenMP default team
    std::printf("%4u %9.3fs %9.3fs %7.2fx  %s\n", D, ts, tp, ts / tp,
                ref == par ? "bitwise" : "MISMATCH");
    if (!(ref == par)) return 1;
  }
  return 0;
}
