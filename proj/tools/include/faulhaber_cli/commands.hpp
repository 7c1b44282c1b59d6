#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faulhaber/evaluation.hpp"
#include "faulhaber/poly.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber::cli {

enum class OutputFormat { Json, Csv, Latex };

std::optional<OutputFormat> parse_format(std::string_view s);

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidArgument = 2,
  kMethodDisagreement = 3,
  kStrategyDisagreement = 4,
  kIdentityError = 5,
};

struct Result {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

// Default bound for the naive strategy, overridden by FAULHABER_NAIVE_LIMIT.
BigInt default_naive_limit();
BigInt naive_limit_from_env();

Result cmd_bernoulli(long max_n, bool genocchi, OutputFormat format);
Result cmd_faulhaber(long n, const std::string& method, const std::string& basis, OutputFormat format);
Result cmd_powersum(long n, const BigInt& m, const std::string& strategy, const BigInt& naive_limit);
Result cmd_verify(const std::string& suite, long max_n);
Result cmd_rfold(long n, long r, OutputFormat format);
Result cmd_bench(long n, const BigInt& m, int reps, const BigInt& naive_limit);

// LaTeX rendering helpers, exposed for tests.
std::string latex_rational(const Rational& q);
std::string latex_poly(const Poly& p, const std::string& var);

}  // namespace faulhaber::cli
