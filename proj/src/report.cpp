#include "gosslv/report.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "gosslv/euler.hpp"
#include "gosslv/lseries.hpp"
#include "gosslv/tensor.hpp"

namespace gosslv {

VerificationReport verify_theorem(const Drinfeld& phi, std::uint32_t n, std::uint32_t D,
                                  std::int64_t prec, int threads, bool serial) {
  const PrimeField& F = phi.field();
  if (!phi.is_constant())
    throw std::invalid_argument("verify_theorem: constant coefficients required");
  if (n == 0) throw std::invalid_argument("verify_theorem: n >= 1 required");
  if (2 * n + 1 > F.p()) throw std::invalid_argument("verify_theorem: 2n+1 <= q required");
  if (D == 0) throw std::invalid_argument("verify_theorem: max prime degree >= 1 required");

  TensorModule M(phi, n, /*twisted=*/true);
  EulerOptions opt{D, prec, threads, serial};
  EulerOptions opt_prev{D - 1, prec, threads, serial};

  VerificationReport r;
  r.q = F.p();
  r.n = n;
  r.a = phi.a.to_string();
  r.b = phi.b.to_string();
  r.max_prime_degree = D;
  r.prec = prec;
  r.lhs = taelman_l_value_tensor(M, opt);
  r.rhs = rhs_theorem(phi, n, prec);
  r.regulator = regulator(M, prec);
  r.minor = minor2x2(M, prec);
  r.matched_coefficients = Laurent::matched_coefficients(r.lhs, r.rhs);
  r.heuristic_precision = heuristic_precision_tensor(n, D);
  r.stabilization = Laurent::matched_coefficients(r.lhs, taelman_l_value_tensor(M, opt_prev));
  // Trust the lesser of the a-priori estimate and the observed movement when
  // one more prime degree is added, never more than the working precision.
  std::int64_t trusted = std::min({r.heuristic_precision, r.stabilization, prec});
  r.verified = r.matched_coefficients >= trusted;
  return r;
}

std::string verification_report_json(const VerificationReport& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["a"] = r.a;
  j["b"] = r.b;
  j["max_prime_degree"] = r.max_prime_degree;
  j["prec"] = r.prec;
  j["lhs"] = json::parse(r.lhs.to_json());
  j["rhs"] = json::parse(r.rhs.to_json());
  j["regulator"] = json::parse(r.regulator.to_json());
  j["minor2x2"] = json::parse(r.minor.to_json());
  j["matched_coefficients"] = r.matched_coefficients;
  j["heuristic_precision"] = r.heuristic_precision;
  j["verified"] = r.verified;
  return j.dump(2) + "\n";
}

LogValueReport log_identity_report(const Drinfeld& phi, std::uint32_t D, std::int64_t prec,
                                   int threads) {
  const PrimeField& F = phi.field();
  LogValueReport r;
  EulerOptions opt{D, prec, threads, false};
  r.l_value = taelman_l_value_drinfeld(phi, /*twisted=*/true, opt);
  r.log_one = drinfeld_log_eval(phi.twist(), Laurent::one(F, prec), prec);
  r.matched_coefficients = Laurent::matched_coefficients(r.l_value, r.log_one);
  r.heuristic_precision = heuristic_precision_drinfeld(D);
  return r;
}

}  // namespace gosslv
