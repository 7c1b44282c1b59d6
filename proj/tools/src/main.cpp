#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "faulhaber_cli/commands.hpp"

using namespace faulhaber;
using namespace faulhaber::cli;

namespace {

int emit(const Result& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

bool parse_bigint(const std::string& s, BigInt& out) { return !s.empty() && out.set_str(s, 10) == 0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact power sums, Bernoulli numbers and Faulhaber polynomials"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"latex", OutputFormat::Latex}};
  OutputFormat format = OutputFormat::Csv;
  std::string naive_limit_arg;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json, csv or latex")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  long max_n = 0;
  bool genocchi = false;
  auto* bern = app.add_subcommand("bernoulli", "Bernoulli (or Genocchi) numbers 0..N");
  bern->add_option("--max", max_n, "largest index")->required();
  bern->add_flag("--genocchi", genocchi, "emit Genocchi numbers instead");
  add_format(bern);

  long n = 0;
  std::string method = "auto", basis = "y";
  auto* faul = app.add_subcommand("faulhaber", "Faulhaber polynomial F_n or a rebased companion");
  faul->add_option("--n", n, "power")->required();
  faul->add_option("--method", method, "auto, substitution, gv, triangular or chain");
  faul->add_option("--basis", basis, "y, u, xi or omega");
  add_format(faul);

  std::string m_arg, strategy = "faulhaber";
  auto* ps = app.add_subcommand("powersum", "Exact sum of v^n for 0 <= v < m");
  ps->add_option("--n", n, "power")->required();
  ps->add_option("--m", m_arg, "upper bound (exclusive), any size")->required();
  ps->add_option("--strategy", strategy, "naive, bernoulli, faulhaber or omega");
  ps->add_option("--naive-limit", naive_limit_arg, "largest m accepted by the naive strategy");

  std::string suite = "all";
  long verify_max = 41;
  auto* ver = app.add_subcommand("verify", "Check identity families up to a bound");
  ver->add_option("--suite", suite, "all, recurrences, symmetry, zero-sums, stern, rfold or historical");
  ver->add_option("--max", verify_max, "largest n");

  long r = 1;
  auto* rf = app.add_subcommand("rfold", "Factor the r-fold power sum");
  rf->add_option("--n", n, "power")->required();
  rf->add_option("--r", r, "fold count")->required();
  add_format(rf);

  int reps = 5;
  auto* bench = app.add_subcommand("bench", "Time the evaluation strategies");
  bench->add_option("--n", n, "power")->required();
  bench->add_option("--m", m_arg, "upper bound (exclusive)")->required();
  bench->add_option("--reps", reps, "repetitions");
  bench->add_option("--naive-limit", naive_limit_arg, "largest m timed with the naive strategy");

  CLI11_PARSE(app, argc, argv);

  BigInt naive_limit = naive_limit_from_env();
  if (!naive_limit_arg.empty() && !parse_bigint(naive_limit_arg, naive_limit)) {
    std::cerr << "invalid --naive-limit\n";
    return kInvalidArgument;
  }
  BigInt m;
  if ((ps->parsed() || bench->parsed()) && !parse_bigint(m_arg, m)) {
    std::cerr << "invalid --m '" << m_arg << "'\n";
    return kInvalidArgument;
  }

  try {
    if (bern->parsed()) return emit(cmd_bernoulli(max_n, genocchi, format));
    if (faul->parsed()) return emit(cmd_faulhaber(n, method, basis, format));
    if (ps->parsed()) return emit(cmd_powersum(n, m, strategy, naive_limit));
    if (ver->parsed()) return emit(cmd_verify(suite, verify_max));
    if (rf->parsed()) return emit(cmd_rfold(n, r, format));
    if (bench->parsed()) return emit(cmd_bench(n, m, reps, naive_limit));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kIdentityError;
  }
  return kInvalidArgument;
}
