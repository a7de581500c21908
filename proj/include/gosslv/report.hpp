#pragma once

#include <cstdint>
#include <string>

#include "gosslv/drinfeld.hpp"
#include "gosslv/laurent.hpp"

namespace gosslv {

// Outcome of the main-identity verification at one parameter point:
// LHS = truncated Euler product for the twisted tensor module, RHS = the
// closed-form series, both to absolute precision prec.  `verified` holds when
// the matched-coefficient count reaches the smaller of the first-omitted-
// prime heuristic and the empirical D-1 vs D stabilization count (capped by
// the working precision).
struct VerificationReport {
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  std::string a, b;  // coefficient polynomials, text form
  std::uint32_t max_prime_degree = 0;
  std::int64_t prec = 0;
  Laurent lhs, rhs, regulator, minor;
  std::int64_t matched_coefficients = 0;
  std::int64_t heuristic_precision = 0;
  std::int64_t stabilization = 0;  // lhs(D) vs lhs(D-1) agreement count
  bool verified = false;
};

VerificationReport verify_theorem(const Drinfeld& phi, std::uint32_t n, std::uint32_t D,
                                  std::int64_t prec, int threads = 1, bool serial = false);

std::string verification_report_json(const VerificationReport& r);

// L(phi~/A) against log_{phi~}(1): the rank-2 analogue of the log-algebraic
// identity for the Carlitz module.
struct LogValueReport {
  Laurent l_value, log_one;
  std::int64_t matched_coefficients = 0;
  std::int64_t heuristic_precision = 0;
};
LogValueReport log_identity_report(const Drinfeld& phi, std::uint32_t D, std::int64_t prec,
                                   int threads = 1);

}  // namespace gosslv
