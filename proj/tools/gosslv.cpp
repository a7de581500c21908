// gosslv: exact special values of Goss/Taelman L-series attached to rank-2
// Drinfeld modules over F_q[theta] and their tensor-power t-modules.
//
// Exit codes: 0 success (verify: identity confirmed), 1 verification
// mismatch, 2 usage or precondition error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <string>

#include "gosslv/carlitz.hpp"
#include "gosslv/checks.hpp"
#include "gosslv/drinfeld.hpp"
#include "gosslv/euler.hpp"
#include "gosslv/field.hpp"
#include "gosslv/frac.hpp"
#include "gosslv/laurent.hpp"
#include "gosslv/lseries.hpp"
#include "gosslv/poly.hpp"
#include "gosslv/report.hpp"
#include "gosslv/tensor.hpp"

namespace {

using namespace gosslv;

struct Options {
  std::uint32_t q = 3;
  std::uint32_t n = 1;
  std::uint32_t i = 1;
  std::uint32_t maxdeg = 8;
  std::uint32_t terms = 0;
  int threads = 1;
  std::int64_t prec = 40;
  std::string a = "0";
  std::string b = "1";
  std::string json_path;
};

bool is_prime(std::uint32_t m) {
  if (m < 2) return false;
  for (std::uint32_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

const PrimeField& field_for(const Options& o) {
  if (!is_prime(o.q)) throw std::invalid_argument("--q must be prime");
  return PrimeField::get(o.q);
}

Drinfeld module_for(const Options& o) {
  const PrimeField& F = field_for(o);
  Poly a = Poly::parse(F, o.a);
  Poly b = Poly::parse(F, o.b);
  if (b.is_zero()) throw std::invalid_argument("--b must be nonzero");
  return Drinfeld(a, b);
}

void write_json(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << body;
  if (!out.flush()) throw std::invalid_argument("failed writing " + path);
}

std::string set_text(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (std::uint32_t e = 0; mask >> e; ++e)
    if (mask & (1u << e)) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
  return s + "}";
}

int run_gamma(const Options& o) {
  Drinfeld phi = module_for(o);
  for (std::uint32_t k = 0; k <= o.n; ++k)
    std::printf("gamma_%u = %s\n", k, gamma_recursive(phi, k).to_frac().to_string().c_str());
  return 0;
}

int run_partitions(const Options& o) {
  if (o.n > 30) throw std::invalid_argument("--n too large for partition listing");
  auto parts = shadowed_partitions(o.n);
  std::size_t first = 0;
  for (const ShadowedPartition& U : parts) {
    if (U.first_kind()) ++first;
    std::printf("S1=%s S2=%s%s\n", set_text(U.s1).c_str(), set_text(U.s2).c_str(),
                U.first_kind() ? "  (first kind)" : "");
  }
  std::printf("count=%zu first_kind=%zu\n", parts.size(), first);
  return 0;
}

int run_logcoeff(const Options& o) {
  Drinfeld phi = module_for(o);
  if (o.i > 30) throw std::invalid_argument("--i too large");
  TensorModule M(phi, o.n, false);
  Matrix<BracketFrac> P = log_coeffs(M, o.i).back();
  std::printf("P_%u for tensor power n=%u (dim %u)\n", o.i, o.n, M.dim());
  for (std::size_t r = 0; r < M.dim(); ++r)
    for (std::size_t c = 0; c < M.dim(); ++c)
      std::printf("P[%zu][%zu] = %s\n", r, c, P.at(r, c).to_frac().to_string().c_str());
  return 0;
}

int run_regulator(const Options& o) {
  Drinfeld phi = module_for(o);
  TensorModule M(phi, o.n, true);
  Laurent reg = regulator(M, o.prec);
  Laurent mnr = minor2x2(M, o.prec);
  std::printf("regulator = %s\n", reg.to_text().c_str());
  std::printf("minor2x2 = %s\n", mnr.to_text().c_str());
  if (!o.json_path.empty()) {
    nlohmann::ordered_json j;
    j["regulator"] = nlohmann::ordered_json::parse(reg.to_json());
    j["minor2x2"] = nlohmann::ordered_json::parse(mnr.to_json());
    write_json(o.json_path, j.dump(2) + "\n");
  }
  return 0;
}

int run_taelman(const Options& o) {
  Drinfeld phi = module_for(o);
  TensorModule M(phi, o.n, true);
  EulerOptions opt;
  opt.max_prime_degree = o.maxdeg;
  opt.prec = o.prec;
  opt.threads = o.threads;
  Laurent L = taelman_l_value_tensor(M, opt);
  std::printf("L = %s\n", L.to_text().c_str());
  std::printf("heuristic_precision = %lld\n",
              static_cast<long long>(heuristic_precision_tensor(o.n, o.maxdeg)));
  if (!o.json_path.empty()) write_json(o.json_path, L.to_json() + "\n");
  return 0;
}

int run_goss_rhs(const Options& o) {
  Drinfeld phi = module_for(o);
  Laurent rhs = rhs_theorem(phi, o.n, o.prec, o.terms);
  std::printf("rhs = %s\n", rhs.to_text().c_str());
  if (!o.json_path.empty()) write_json(o.json_path, rhs.to_json() + "\n");
  return 0;
}

int run_zeta(const Options& o) {
  const PrimeField& F = field_for(o);
  if (o.n == 0) throw std::invalid_argument("--n (the exponent) must be positive");
  std::uint32_t maxdeg = o.terms ? o.terms : 8;
  Laurent z = zeta_truncated(F, o.n, maxdeg, o.prec);
  std::printf("zeta_%u(deg<=%u) = %s\n", o.n, maxdeg, z.to_text().c_str());
  if (!o.json_path.empty()) write_json(o.json_path, z.to_json() + "\n");
  return 0;
}

int run_verify(const Options& o) {
  Drinfeld phi = module_for(o);
  VerificationReport r = verify_theorem(phi, o.n, o.maxdeg, o.prec, o.threads);
  std::printf("q=%u n=%u a=%s b=%s max_prime_degree=%u prec=%lld\n", r.q, r.n, r.a.c_str(),
              r.b.c_str(), r.max_prime_degree, static_cast<long long>(r.prec));
  std::printf("lhs = %s\n", r.lhs.to_text().c_str());
  std::printf("rhs = %s\n", r.rhs.to_text().c_str());
  std::printf("regulator = %s\n", r.regulator.to_text().c_str());
  std::printf("minor2x2 = %s\n", r.minor.to_text().c_str());
  std::printf("matched_coefficients = %lld\n", static_cast<long long>(r.matched_coefficients));
  std::printf("heuristic_precision = %lld\n", static_cast<long long>(r.heuristic_precision));
  std::printf("stabilization = %lld\n", static_cast<long long>(r.stabilization));
  std::printf("verified = %s\n", r.verified ? "true" : "false");
  if (!o.json_path.empty()) write_json(o.json_path, verification_report_json(r));
  return r.verified ? 0 : 1;
}

int run_selftest() {
  bool all = true;
  auto step = [&](const char* name, bool ok) {
    std::printf("%s %s\n", ok ? "ok  " : "FAIL", name);
    if (!ok) all = false;
  };

  for (std::uint32_t q : {3u, 5u}) {
    const PrimeField& F = PrimeField::get(q);
    bool formal = true;
    for (std::uint32_t n = 1; n <= 8; ++n) formal = formal && checks::formal_log_coeff_identity(F, n);
    step(q == 3 ? "logarithm coefficient recursions, formal, q=3"
                : "logarithm coefficient recursions, formal, q=5",
         formal);
  }
  {
    const PrimeField& F = PrimeField::get(3);
    Drinfeld phi(Poly::parse(F, "T+1"), Poly::parse(F, "2*T"));
    bool v = true;
    for (std::uint32_t n = 1; n <= 4; ++n) v = v && checks::log_coeff_value_identity(phi, n);
    step("logarithm coefficient recursions, polynomial coefficients", v);
  }
  {
    const PrimeField& F = PrimeField::get(3);
    TensorModule M(Drinfeld(Poly::constant(F, 1), Poly::constant(F, 2)), 1);
    step("tensor logarithm matrix, three constructions, q=3 n=1",
         checks::log_matrix_three_way(M, 4) && checks::log_matrix_residual(M, 4) &&
             checks::log_matrix_valuations(M, 4));
  }
  {
    const PrimeField& F = PrimeField::get(5);
    TensorModule M(Drinfeld(Poly::constant(F, 2), Poly::constant(F, 3)), 2);
    step("tensor logarithm matrix, three constructions, q=5 n=2",
         checks::log_matrix_three_way(M, 3) && checks::log_matrix_valuations(M, 3));
  }
  {
    bool tw = true;
    for (std::uint32_t q : {3u, 5u}) {
      const PrimeField& F = PrimeField::get(q);
      for (std::uint32_t b = 1; b < q; ++b)
        tw = tw && checks::twist_scaling_law(Drinfeld(Poly::constant(F, 1), Poly::constant(F, b)),
                                             1, 4);
    }
    step("twist scaling of logarithm coefficients", tw);
  }
  {
    const PrimeField& F3 = PrimeField::get(3);
    const PrimeField& F5 = PrimeField::get(5);
    step("dual-motive witness identities",
         checks::motive_witness_identities(Drinfeld(Poly::constant(F3, 1), Poly::constant(F3, 2)),
                                           1, true) &&
             checks::motive_witness_identities(
                 Drinfeld(Poly::constant(F5, 2), Poly::constant(F5, 1)), 2, true));
  }
  {
    const PrimeField& F = PrimeField::get(3);
    TensorModule M(Drinfeld(Poly::constant(F, 1), Poly::constant(F, 2)), 1);
    step("exponential/logarithm composition",
         checks::tensor_exp_log_inverse(M, 3) &&
             checks::drinfeld_exp_log_inverse(Drinfeld(Poly::constant(F, 1), Poly::constant(F, 2)),
                                              5));
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Special L-values of rank-2 Drinfeld modules and their tensor powers"};
  app.require_subcommand(1);
  Options o;

  auto add_module_flags = [&](CLI::App* cmd) {
    cmd->add_option("--q", o.q, "field characteristic (prime)");
    cmd->add_option("--a", o.a, "tau coefficient, polynomial in T");
    cmd->add_option("--b", o.b, "tau^2 coefficient, polynomial in T, nonzero");
  };

  CLI::App* gamma = app.add_subcommand("gamma", "logarithm coefficients gamma_0..gamma_n of phi");
  add_module_flags(gamma);
  gamma->add_option("--n", o.n, "largest index");

  CLI::App* partitions =
      app.add_subcommand("partitions", "shadowed partitions of {0..n-1} in enumeration order");
  partitions->add_option("--n", o.n, "partition parameter");

  CLI::App* logcoeff =
      app.add_subcommand("logcoeff", "logarithm coefficient matrix P_i of the tensor module");
  add_module_flags(logcoeff);
  logcoeff->add_option("--n", o.n, "tensor power");
  logcoeff->add_option("--i", o.i, "coefficient index");

  CLI::App* regulator_cmd = app.add_subcommand(
      "regulator", "regulator and bottom 2x2 minor of the twisted tensor module");
  add_module_flags(regulator_cmd);
  regulator_cmd->add_option("--n", o.n, "tensor power");
  regulator_cmd->add_option("--prec", o.prec, "absolute u-adic precision");
  regulator_cmd->add_option("--json", o.json_path, "write series as JSON to this path");

  CLI::App* taelman = app.add_subcommand(
      "taelman", "truncated Taelman L-value of the twisted tensor module");
  add_module_flags(taelman);
  taelman->add_option("--n", o.n, "tensor power");
  taelman->add_option("--prec", o.prec, "absolute u-adic precision");
  taelman->add_option("--max-prime-deg", o.maxdeg, "Euler product over primes of degree <= this");
  taelman->add_option("--threads", o.threads, "worker threads for the Euler product");
  taelman->add_option("--json", o.json_path, "write series as JSON to this path");

  CLI::App* goss = app.add_subcommand("goss-rhs", "closed-form series side of the main identity");
  add_module_flags(goss);
  goss->add_option("--n", o.n, "tensor power");
  goss->add_option("--prec", o.prec, "absolute u-adic precision");
  goss->add_option("--terms", o.terms, "cap on series terms (0 = valuation stopping rule)");
  goss->add_option("--json", o.json_path, "write series as JSON to this path");

  CLI::App* zeta = app.add_subcommand("zeta", "degree-truncated zeta value sum a^(-n)");
  zeta->add_option("--q", o.q, "field characteristic (prime)");
  zeta->add_option("--n", o.n, "exponent");
  zeta->add_option("--terms", o.terms, "largest monic degree in the sum (default 8)");
  zeta->add_option("--prec", o.prec, "absolute u-adic precision");
  zeta->add_option("--json", o.json_path, "write series as JSON to this path");

  CLI::App* verify = app.add_subcommand(
      "verify", "compare the truncated Euler product with the closed-form series");
  add_module_flags(verify);
  verify->add_option("--n", o.n, "tensor power");
  verify->add_option("--prec", o.prec, "absolute u-adic precision");
  verify->add_option("--max-prime-deg", o.maxdeg, "Euler product over primes of degree <= this");
  verify->add_option("--threads", o.threads, "worker threads for the Euler product");
  verify->add_option("--json", o.json_path, "write the verification report to this path");

  app.add_subcommand("selftest", "run the exact-identity suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gamma->parsed()) return run_gamma(o);
    if (partitions->parsed()) return run_partitions(o);
    if (logcoeff->parsed()) return run_logcoeff(o);
    if (regulator_cmd->parsed()) return run_regulator(o);
    if (taelman->parsed()) return run_taelman(o);
    if (goss->parsed()) return run_goss_rhs(o);
    if (zeta->parsed()) return run_zeta(o);
    if (verify->parsed()) return run_verify(o);
    return run_selftest();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
