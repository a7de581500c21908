#include <doctest.h>

#include <random>
#include <stdexcept>

#include "gosslv/carlitz.hpp"
#include "gosslv/checks.hpp"
#include "gosslv/drinfeld.hpp"
#include "gosslv/field.hpp"
#include "gosslv/poly.hpp"

using namespace gosslv;

namespace {

Drinfeld random_module(const PrimeField& F, std::mt19937_64& rng) {
  auto rand_poly = [&](bool nonzero) {
    Poly r(F);
    do {
      r = Poly(F);
      for (std::int64_t k = 0; k <= 2; ++k)
        r = r + Poly::monomial(F, static_cast<std::uint32_t>(rng() % F.p()), k);
    } while (nonzero && r.is_zero());
    return r;
  };
  return Drinfeld(rand_poly(false), rand_poly(true));
}

}  // namespace

TEST_CASE("shadowed partition enumeration") {
  // counts follow the Fibonacci recurrence
  std::size_t prev2 = 1, prev1 = 1;  // n = 0, 1
  CHECK(shadowed_partitions(0).size() == 1);
  CHECK(shadowed_partitions(1).size() == 1);
  for (std::uint32_t n = 2; n <= 15; ++n) {
    std::size_t cnt = shadowed_partitions(n).size();
    CHECK(cnt == prev1 + prev2);
    prev2 = prev1;
    prev1 = cnt;
  }
  // n = 3: three partitions, two of the first kind
  auto p3 = shadowed_partitions(3);
  REQUIRE(p3.size() == 3);
  std::size_t first = 0;
  for (const auto& U : p3)
    if (U.first_kind()) ++first;
  CHECK(first == 2);
  // defining property: S1, S2, S2+1 disjoint with union {0..n-1}
  for (std::uint32_t n = 0; n <= 12; ++n)
    for (const auto& U : shadowed_partitions(n)) {
      std::uint32_t shift = U.s2 << 1;
      CHECK((U.s1 & U.s2) == 0);
      CHECK((U.s1 & shift) == 0);
      CHECK((U.s2 & shift) == 0);
      CHECK((U.s1 | U.s2 | shift) == (n ? (1u << n) - 1 : 0));
    }
}

TEST_CASE("partition weights") {
  CHECK(weight1(0b101, 3) == 1 + 9);
  CHECK(weight2(0b101, 3) == 9);  // drops element 0
  CHECK(weight1(0, 3) == 0);
  CHECK(weight1(0b11, 5) == 1 + 5);
}

TEST_CASE("single-partition components at n = 1") {
  const PrimeField& F = PrimeField::get(3);
  Drinfeld phi(Poly::parse(F, "T"), Poly::parse(F, "2"));
  // the unique partition of {0} is S1 = {0}, first kind, giving -1/[1]
  auto p1 = shadowed_partitions(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].first_kind());
  BracketFrac c = partition_component(phi, p1[0]);
  CHECK(c == -BracketFrac::make(Poly::constant(F, 1), {1}));
  GammaParts g = ft_gamma(phi, 1);
  CHECK(g.f == c);
  CHECK(g.t.is_zero());
  // gamma_1 = a F_1 = -a/[1]
  CHECK(g.gamma == c.mul_poly(phi.a));
}

TEST_CASE("closed form vs recursions at polynomial coefficients") {
  std::mt19937_64 rng(2026);
  for (std::uint32_t q : {3u, 5u}) {
    const PrimeField& F = PrimeField::get(q);
    std::uint32_t nmax = q == 3 ? 6 : 4;
    for (int t = 0; t < 8; ++t) {
      Drinfeld phi = random_module(F, rng);
      for (std::uint32_t n = 0; n <= nmax; ++n) {
        GammaParts g = ft_gamma(phi, n);
        CHECK(g.gamma == gamma_recursive(phi, n));
        CHECK(g.f == f_recursive(phi, n));
      }
    }
  }
}

TEST_CASE("formal identity of partition and recursion sums") {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const PrimeField& F = PrimeField::get(q);
    for (std::uint32_t n = 0; n <= 12; ++n) {
      CHECK(formal_gamma_partitions(n, F) == formal_gamma_recursive(n, F));
      CHECK(formal_f_partitions(n, F) == formal_f_recursive(n, F));
    }
  }
}

TEST_CASE("formal sums evaluate to the recursion values") {
  const PrimeField& F = PrimeField::get(3);
  Drinfeld phi(Poly::parse(F, "T+1"), Poly::parse(F, "2*T^2+1"));
  for (std::uint32_t n = 0; n <= 5; ++n) {
    CHECK(formal_value(formal_gamma_recursive(n, F), phi) == gamma_recursive(phi, n));
    CHECK(formal_value(formal_f_partitions(n, F), phi) == f_recursive(phi, n));
  }
}

TEST_CASE("exponential coefficients and the composition identity") {
  const PrimeField& F = PrimeField::get(3);
  Drinfeld phi(Poly::parse(F, "1"), Poly::parse(F, "2"));
  auto xi = exp_coeffs(phi, 4);
  CarlitzTable& C = CarlitzTable::get(F);
  CHECK(xi[0] == Frac::one(F));
  CHECK(xi[1] == Frac::make(phi.a, C.D(1)));  // a/[1]
  CHECK(checks::drinfeld_exp_log_inverse(phi, 6));
  CHECK(checks::drinfeld_exp_log_inverse(Drinfeld(Poly::parse(F, "T"), Poly::parse(F, "T+1")), 5));
}

TEST_CASE("twist bookkeeping") {
  const PrimeField& F5 = PrimeField::get(5);
  Drinfeld phi(Poly::constant(F5, 2), Poly::constant(F5, 3));
  Drinfeld tw = phi.twist();
  std::uint32_t g = phi.twist_scale();
  CHECK(F5.mul(F5.from_int(-1), F5.inv(3)) == g);
  CHECK(tw.a_const() == F5.mul(2, g));
  CHECK(tw.b_const() == F5.mul(3, F5.pow(g, 6)));  // b g^(q+1)
  // the twisted module's own twist undoes the first one
  CHECK(tw.twist().a_const() == phi.a_const());
  CHECK(tw.twist().b_const() == phi.b_const());
  // b = -1 is a fixed point
  const PrimeField& F3 = PrimeField::get(3);
  Drinfeld fixed(Poly::constant(F3, 1), Poly::constant(F3, 2));
  CHECK(fixed.twist_scale() == 1);
  CHECK(fixed.twist().b_const() == 2);
  CHECK_THROWS_AS(Drinfeld(Poly::constant(F3, 1), Poly(F3)), std::invalid_argument);
}

TEST_CASE("logarithm evaluation domain") {
  const PrimeField& F = PrimeField::get(3);
  Drinfeld phi(Poly::constant(F, 1), Poly::constant(F, 1));
  Laurent one = Laurent::one(F, 20);
  Laurent lg = drinfeld_log_eval(phi, one, 20);
  // leading terms: 1 + gamma_1 + gamma_2 + ... evaluated at z = 1
  Laurent brute = Laurent::zero(F, 20);
  for (std::uint32_t i = 0; i <= 4; ++i)
    brute = brute + gamma_recursive(phi, i).to_laurent(20);
  CHECK(Laurent::agree_to(lg, brute, 20));
  // v(z) < 0 leaves the convergence domain
  CHECK_THROWS_AS(drinfeld_log_eval(phi, Laurent::monomial(F, 1, -1, 10), 10),
                  std::domain_error);
}
