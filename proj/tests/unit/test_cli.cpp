#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/numbers.hpp"
#include "faulhaber/serialize.hpp"
#include "faulhaber_cli/commands.hpp"
#include "fixtures/reference_tables.hpp"

using namespace faulhaber;
using namespace faulhaber::cli;
using nlohmann::json;

namespace {

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST(CliBernoulli, Csv) {
  const Result r = cmd_bernoulli(8, false, OutputFormat::Csv);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(has_line(r.out, "6,1/42"));
  EXPECT_TRUE(has_line(r.out, "1,-1/2"));
  EXPECT_EQ(cmd_bernoulli(0, false, OutputFormat::Csv).out, "0,1\n");
  EXPECT_TRUE(has_line(cmd_bernoulli(10, true, OutputFormat::Csv).out, "10,-155"));
  EXPECT_EQ(cmd_bernoulli(-1, false, OutputFormat::Csv).exit_code, kInvalidArgument);
}

TEST(CliBernoulli, JsonRoundTrip) {
  const json j = json::parse(cmd_bernoulli(30, false, OutputFormat::Json).out);
  const auto v = j.at("values").get<std::vector<Rational>>();
  ASSERT_EQ(v.size(), 31u);
  for (long n = 0; n <= 30; ++n) EXPECT_EQ(v[static_cast<std::size_t>(n)], bernoulli(n));
}

TEST(CliFaulhaber, LatexMatchesPrintedRows) {
  EXPECT_EQ(cmd_faulhaber(9, "auto", "y", OutputFormat::Latex).out,
            "$F_9(y)$ & $\\frac{1}{5} ( 16 y^3 - 20 y^2 + 12 y - 3 )$ \\\\\n");
  EXPECT_EQ(cmd_faulhaber(2, "auto", "y", OutputFormat::Latex).out, "$F_2(y)$ & $1$ \\\\\n");
  EXPECT_EQ(cmd_faulhaber(12, "gv", "y", OutputFormat::Latex).out,
            "$F_{12}(y)$ & $\\frac{1}{455} ( 3360 y^5 - 8400 y^4 + 11480 y^3 - 9440 y^2 + 4146 y - 691 )$ \\\\\n");
  EXPECT_EQ(cmd_faulhaber(9, "auto", "u", OutputFormat::Latex).out,
            "$S_9(x)$ & $\\frac{1}{10} u^2 ( u^3 - \\frac{5}{2} u^2 + 3 u - \\frac{3}{2} )$ \\\\\n");
  EXPECT_EQ(cmd_faulhaber(3, "auto", "u", OutputFormat::Latex).out, "$S_3(x)$ & $\\frac{1}{4} u^2$ \\\\\n");
  EXPECT_EQ(cmd_faulhaber(2, "auto", "xi", OutputFormat::Latex).out,
            "$S_2(x)$ & $-\\frac{1}{3} (x-\\frac{1}{2}) \\xi$ \\\\\n");
  EXPECT_EQ(cmd_faulhaber(4, "auto", "xi", OutputFormat::Latex).out,
            "$S_4(x)$ & $+\\frac{1}{5} (x-\\frac{1}{2}) \\xi ( \\xi + \\frac{1}{3} )$ \\\\\n");
}

TEST(CliFaulhaber, OmegaAndCsv) {
  const json j = json::parse(cmd_faulhaber(9, "auto", "omega", OutputFormat::Json).out);
  EXPECT_EQ(j.at("coeffs").get<Poly>(), omega_form(9));
  const Result csv = cmd_faulhaber(7, "chain", "y", OutputFormat::Csv);
  EXPECT_EQ(csv.out, "7,0,1/3\n7,1,-4/3\n7,2,2\n");
  EXPECT_EQ(cmd_faulhaber(8, "auto", "omega", OutputFormat::Csv).exit_code, kInvalidArgument);
  EXPECT_EQ(cmd_faulhaber(1, "auto", "y", OutputFormat::Csv).exit_code, kInvalidArgument);
  EXPECT_EQ(cmd_faulhaber(5, "bogus", "y", OutputFormat::Csv).exit_code, kInvalidArgument);
}

TEST(CliFaulhaber, AutoNeverDisagrees) {
  for (long n = 2; n <= 101; ++n) EXPECT_EQ(cmd_faulhaber(n, "auto", "y", OutputFormat::Json).exit_code, 0) << n;
}

TEST(CliPowersum, Examples) {
  const BigInt lim = default_naive_limit();
  for (const char* s : {"naive", "bernoulli", "faulhaber"}) EXPECT_EQ(cmd_powersum(9, 3, s, lim).out, "513\n") << s;
  EXPECT_EQ(cmd_powersum(3, 10, "faulhaber", lim).out, "2025\n");
  EXPECT_EQ(cmd_powersum(0, 5, "naive", lim).out, "5\n");
  EXPECT_EQ(cmd_powersum(9, 3, "omega", lim).out, "513\n");
  EXPECT_EQ(cmd_powersum(2, 100, "naive", BigInt(10)).exit_code, kInvalidArgument);
  EXPECT_EQ(cmd_powersum(2, 100, "bernoulli", BigInt(10)).out, "328350\n");
}

TEST(CliPowersum, EnvOverride) {
  setenv("FAULHABER_NAIVE_LIMIT", "42", 1);
  EXPECT_EQ(naive_limit_from_env(), BigInt(42));
  unsetenv("FAULHABER_NAIVE_LIMIT");
  EXPECT_EQ(naive_limit_from_env(), default_naive_limit());
}

TEST(CliPowersum, StrategiesAgreeOnRandomInputs) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> pick_n(0, 40), pick_m(0, 300);
  for (int i = 0; i < 100; ++i) {
    const long n = pick_n(rng);
    const BigInt m = pick_m(rng);
    const BigInt expect = power_sum_brute(n, m);
    for (auto s : {Strategy::Naive, Strategy::Bernoulli, Strategy::Faulhaber}) EXPECT_EQ(PowerSumEvaluator(n, s)(m), expect);
    if (n >= 3 && n % 2) EXPECT_EQ(PowerSumEvaluator(n, Strategy::Omega)(m), expect);
  }
}

TEST(CliVerify, Suites) {
  for (const char* s : {"zero-sums", "historical", "stern", "rfold", "symmetry", "recurrences"}) {
    const Result r = cmd_verify(s, 13);
    EXPECT_EQ(r.exit_code, 0) << s << "\n" << r.out;
    EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
  }
  EXPECT_EQ(cmd_verify("all", 3).exit_code, 0);
  EXPECT_EQ(cmd_verify("all", 2).exit_code, kInvalidArgument);
  EXPECT_EQ(cmd_verify("nope", 5).exit_code, kInvalidArgument);
}

TEST(CliRfold, Examples) {
  const json a = json::parse(cmd_rfold(3, 1, OutputFormat::Json).out);
  EXPECT_EQ(a.at("g").get<Poly>(), Poly({Rational(0), Rational(1, 2)}));
  EXPECT_EQ(a.at("d").get<long>(), 1);
  EXPECT_EQ(cmd_rfold(6, 4, OutputFormat::Latex).exit_code, 0);
  const json c = json::parse(cmd_rfold(1, 1, OutputFormat::Json).out);
  EXPECT_EQ(c.at("g").get<Poly>(), Poly::constant(1));
  EXPECT_EQ(cmd_rfold(0, 1, OutputFormat::Json).exit_code, kInvalidArgument);
}

TEST(CliBench, Examples) {
  const BigInt lim = default_naive_limit();
  const Result a = cmd_bench(3, 10, 1, lim);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_TRUE(has_line(a.out, "value=2025"));
  EXPECT_NE(a.out.find("naive:"), std::string::npos);
  EXPECT_TRUE(has_line(cmd_bench(2, 0, 1, lim).out, "value=0"));
  const Result big = cmd_bench(101, 1000000, 1, BigInt(1000));
  EXPECT_EQ(big.exit_code, 0);
  EXPECT_TRUE(has_line(big.out, "value=" + PowerSumEvaluator(101, Strategy::Bernoulli)(BigInt(1000000)).get_str()));
  EXPECT_NE(big.out.find("naive: skipped"), std::string::npos);
  EXPECT_EQ(cmd_bench(1, 10, 1, lim).exit_code, kInvalidArgument);
}

TEST(CliBench, MultiplicationCounts) {
  long mb = 0, mf = 0;
  PowerSumEvaluator(101, Strategy::Bernoulli)(BigInt(1000000), &mb);
  PowerSumEvaluator(101, Strategy::Faulhaber)(BigInt(1000000), &mf);
  EXPECT_EQ(mb, 102);
  EXPECT_EQ(mf, 3 + 49);
}
