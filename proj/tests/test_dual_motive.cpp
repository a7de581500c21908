#include <doctest.h>

#include <cstdint>

#include "gosslv/checks.hpp"
#include "gosslv/dual_motive.hpp"
#include "gosslv/field.hpp"
#include "gosslv/taylor.hpp"

using namespace gosslv;

namespace {

Drinfeld mod_const(const PrimeField& F, uint32_t a, uint32_t b) {
  return Drinfeld(Poly::constant(F, a), Poly::constant(F, b));
}

}  // namespace

TEST_CASE("inverse-Frobenius kernel satisfies its defining congruence") {
  for (uint32_t q : {3u, 5u, 7u}) {
    const PrimeField& F = PrimeField::get(q);
    for (uint32_t n = 1; n <= 6; ++n) {
      CAPTURE(q);
      CAPTURE(n);
      CHECK(truncation_identity(F, n));
    }
  }
}

TEST_CASE("p_1 has degree <= n and unit value at theta") {
  // q = 3, n = 2: (t - theta^q)^{n+1} is a Frobenius cube, so it is constant
  // mod (t - theta)^3 and p_1 collapses to a constant too.
  const PrimeField& F = PrimeField::get(3);
  uint32_t n = 2;
  TPoly p1 = inverse_frob_poly(F, n);
  CHECK(p1.size() <= n + 1);

  // p_1(theta) (theta - theta^q)^{n+1} = 1: the congruence evaluated at the
  // expansion point.
  Frac theta(Poly::parse(F, "T"));
  Frac thetaq(Poly::parse(F, "T^3"));
  Frac val = tpoly_eval(p1, theta) * (theta - thetaq).pow(n + 1);
  CHECK(val == Frac::one(F));

  // q = 5, n = 2: no collapse, full degree n.
  const PrimeField& F5 = PrimeField::get(5);
  TPoly p5 = inverse_frob_poly(F5, n);
  CHECK(p5.size() == n + 1);
  Frac theta5(Poly::parse(F5, "T"));
  Frac theta5q(Poly::parse(F5, "T^5"));
  CHECK(tpoly_eval(p5, theta5) * (theta5 - theta5q).pow(n + 1) == Frac::one(F5));
}

TEST_CASE("delta0_iota coordinate layout") {
  const PrimeField& F = PrimeField::get(3);
  Frac theta(Poly::parse(F, "T"));

  // n = 1, f1 = t - theta, f2 = 1: [d^1 f1, f2, f1] at t = theta.
  MotiveElement m;
  m.f1 = tpoly_from({-theta, Frac::one(F)});
  m.f2 = tpoly_from({Frac::one(F)});
  auto v = delta0_iota(F, 1, m);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Frac::one(F));
  CHECK(v[1] == Frac::one(F));
  CHECK(v[2] == Frac::zero(F));

  // n = 2, f1 = (t - theta)^2: only the top slot d^2 f1 = 1 survives.
  MotiveElement m2;
  m2.f1 = tpoly_linear_pow(theta, 2);
  m2.f2 = tpoly_zero(F);
  auto v2 = delta0_iota(F, 2, m2);
  REQUIRE(v2.size() == 5);
  CHECK(v2[0] == Frac::one(F));
  for (size_t k = 1; k < 5; ++k) CHECK(v2[k].is_zero());

  // Odd slots walk f2: n = 2, f2 = t - theta gives d^1 f2 = 1 at slot 1.
  MotiveElement m3;
  m3.f1 = tpoly_zero(F);
  m3.f2 = tpoly_from({-theta, Frac::one(F)});
  auto v3 = delta0_iota(F, 2, m3);
  CHECK(v3[1] == Frac::one(F));
  CHECK(v3[3].is_zero());  // d^0 f2 at theta = 0
  for (size_t k : {0u, 2u, 4u}) CHECK(v3[k].is_zero());
}

TEST_CASE("witnesses land on the last two basis vectors") {
  const PrimeField& F3 = PrimeField::get(3);
  const PrimeField& F5 = PrimeField::get(5);
  struct Pt {
    const PrimeField* F;
    uint32_t n;
  } pts[] = {{&F3, 1}, {&F5, 1}, {&F5, 2}};

  for (const auto& pt : pts) {
    uint32_t q = pt.F->p();
    for (uint32_t a = 0; a < q; ++a)
      for (uint32_t b = 1; b < q; ++b)
        for (bool twisted : {false, true}) {
          CAPTURE(q);
          CAPTURE(pt.n);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(twisted);
          DualMotive M(mod_const(*pt.F, a, b), pt.n, twisted);
          CHECK(w_basis_check(M));
        }
  }
}

TEST_CASE("full witness identities at representative modules") {
  const PrimeField& F3 = PrimeField::get(3);
  const PrimeField& F5 = PrimeField::get(5);
  const PrimeField& F7 = PrimeField::get(7);
  CHECK(checks::motive_witness_identities(mod_const(F3, 1, 2), 1, false));
  CHECK(checks::motive_witness_identities(mod_const(F3, 1, 2), 1, true));
  CHECK(checks::motive_witness_identities(mod_const(F3, 2, 1), 1, true));
  CHECK(checks::motive_witness_identities(mod_const(F5, 2, 3), 2, false));
  CHECK(checks::motive_witness_identities(mod_const(F5, 0, 4), 2, true));
  CHECK(checks::motive_witness_identities(mod_const(F7, 3, 5), 3, true));
}

TEST_CASE("sigma-relation t-action agrees with the module theta-action") {
  const PrimeField& F3 = PrimeField::get(3);
  const PrimeField& F5 = PrimeField::get(5);
  CHECK(checks::motive_action_consistency(mod_const(F3, 1, 2), 1, false, 12, 41));
  CHECK(checks::motive_action_consistency(mod_const(F3, 2, 2), 1, true, 12, 42));
  CHECK(checks::motive_action_consistency(mod_const(F5, 1, 4), 2, false, 8, 43));
  CHECK(checks::motive_action_consistency(mod_const(F5, 3, 1), 2, true, 8, 44));
}

TEST_CASE("the two action routes agree on a hand vector") {
  const PrimeField& F = PrimeField::get(3);
  DualMotive M(mod_const(F, 1, 2), 1, false);

  std::vector<Poly> x = {Poly::parse(F, "T"), Poly::constant(F, 1), Poly::parse(F, "T^2+2")};
  auto via_motive = motive_t_action(M, x);
  auto via_module = module_theta_action(M, x);
  REQUIRE(via_motive.size() == 3);
  for (size_t k = 0; k < 3; ++k) CHECK(via_motive[k] == via_module[k]);
}
