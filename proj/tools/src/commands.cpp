#include "faulhaber_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/errors.hpp"
#include "faulhaber/faulhaber_poly.hpp"
#include "faulhaber/historical.hpp"
#include "faulhaber/numbers.hpp"
#include "faulhaber/reciprocal.hpp"
#include "faulhaber/serialize.hpp"

namespace faulhaber::cli {

namespace {

using nlohmann::json;

Result fail(int code, std::string msg) { return Result{code, {}, std::move(msg) + "\n"}; }

std::string sub(long n) { return n < 10 ? std::to_string(n) : "{" + std::to_string(n) + "}"; }

std::string rationals_csv_row(long n, long k, const Rational& v) {
  return std::to_string(n) + "," + std::to_string(k) + "," + v.str() + "\n";
}

// p = c * q with q having coprime integer coefficients and positive leading term.
std::pair<Rational, Poly> split_content(const Poly& p) {
  if (p.is_zero()) return {Rational(0), Poly()};
  BigInt num = 0, den = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
  }
  Rational content(num, den);
  if (p.leading().sign() < 0) content = -content;
  return {content, p * (Rational(1) / content)};
}

std::optional<Method> parse_method(std::string_view s) {
  for (auto m : {Method::Substitution, Method::GesselViennot, Method::Triangular, Method::Chain})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

std::optional<BasisTag> parse_basis(std::string_view s) {
  for (auto b : {BasisTag::Y, BasisTag::U, BasisTag::Xi, BasisTag::Omega})
    if (s == to_string(b)) return b;
  return std::nullopt;
}

const char* latex_var(BasisTag b) {
  switch (b) {
    case BasisTag::Y: return "y";
    case BasisTag::U: return "u";
    case BasisTag::Xi: return "\\xi";
    case BasisTag::Omega: return "\\omega";
  }
  return "?";
}

// S_n rebased; for even n the factor (x - 1/2) is divided out first.
Poly companion(long n, BasisTag b) {
  Poly s = power_sum_poly(n);
  if (n % 2 == 0) s = exact_divide(s, Poly{Rational(-1, 2), Rational(1)});
  if (b == BasisTag::Omega) return omega_form(n);
  return rebase_quadratic(s, SubstitutionBasis::of(b));
}

// "pref t^j ( inner )" with inner monic, the layout of the appendix tables.
std::string latex_factored(const Poly& p, const std::string& var, bool show_plus) {
  std::size_t j = 0;
  while (j < p.coeffs().size() && p.coeffs()[j].is_zero()) ++j;
  const Rational lead = p.leading();
  const Poly inner = Poly(std::vector<Rational>(p.coeffs().begin() + static_cast<long>(j), p.coeffs().end())) *
                     (Rational(1) / lead);
  std::string s;
  if (show_plus && lead.sign() > 0) s += "+";
  if (lead == Rational(-1)) s += "-";
  else if (lead != Rational(1)) s += latex_rational(lead);
  auto add = [&s](const std::string& part) {
    if (!s.empty() && s != "+" && s != "-") s += " ";
    s += part;
  };
  if (show_plus) add("(x-\\frac{1}{2})");
  if (j == 1) add(var);
  if (j > 1) add(var + "^" + std::to_string(j));
  if (inner.degree() > 0) add("( " + latex_poly(inner, var) + " )");
  if (s.empty() || s == "+" || s == "-") s += "1";
  return s;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "latex") return OutputFormat::Latex;
  return std::nullopt;
}

std::string latex_rational(const Rational& q) {
  if (q.is_integer()) return q.str();
  const BigInt num = q.numerator();
  const std::string frac = "\\frac{" + BigInt(abs(num)).get_str() + "}{" + q.denominator().get_str() + "}";
  return q.sign() < 0 ? "-" + frac : frac;
}

std::string latex_poly(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (long i = p.degree(); i >= 0; --i) {
    const Rational c = p.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    const Rational a = abs(c);
    std::string term;
    if (i == 0 || a != Rational(1)) term = latex_rational(a);
    if (i > 0) {
      if (!term.empty()) term += " ";
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (s.empty()) s = c.sign() < 0 ? "-" + term : term;
    else s += (c.sign() < 0 ? " - " : " + ") + term;
  }
  return s;
}

BigInt default_naive_limit() { return BigInt(10000000); }

BigInt naive_limit_from_env() {
  const char* v = std::getenv("FAULHABER_NAIVE_LIMIT");
  if (!v) return default_naive_limit();
  BigInt out;
  if (out.set_str(v, 10) != 0 || out < 0) return default_naive_limit();
  return out;
}

Result cmd_bernoulli(long max_n, bool genocchi, OutputFormat format) {
  if (max_n < 0) return fail(kInvalidArgument, "bernoulli: --max must be >= 0");
  std::vector<Rational> v;
  for (long n = 0; n <= max_n; ++n) v.push_back(genocchi ? Rational(faulhaber::genocchi(n)) : bernoulli(n));
  Result r;
  switch (format) {
    case OutputFormat::Json: {
      const json j = {{"kind", genocchi ? "genocchi" : "bernoulli"}, {"values", v}};
      r.out = j.dump(2) + "\n";
      break;
    }
    case OutputFormat::Csv:
      for (long n = 0; n <= max_n; ++n) r.out += std::to_string(n) + "," + v[static_cast<std::size_t>(n)].str() + "\n";
      break;
    case OutputFormat::Latex: {
      const char* sym = genocchi ? "\\mathbf{G}" : "\\mathbf{B}";
      for (long n = 0; n <= max_n; ++n)
        r.out += "$" + std::string(sym) + "_" + sub(n) + "$ & $" + latex_rational(v[static_cast<std::size_t>(n)]) + "$ \\\\\n";
      break;
    }
  }
  return r;
}

Result cmd_faulhaber(long n, const std::string& method, const std::string& basis, OutputFormat format) {
  if (n < 2) return fail(kInvalidArgument, "faulhaber: --n must be >= 2");
  const auto b = parse_basis(basis);
  if (!b) return fail(kInvalidArgument, "faulhaber: unknown basis '" + basis + "'");
  if (*b == BasisTag::Omega && (n % 2 == 0 || n < 3)) return fail(kInvalidArgument, "faulhaber: omega basis needs odd n");
  if (method != "auto" && !parse_method(method)) return fail(kInvalidArgument, "faulhaber: unknown method '" + method + "'");

  FaulhaberPoly f;
  try {
    if (method == "auto") {
      f = faulhaber_by_substitution(n);
      for (auto m : {Method::GesselViennot, Method::Triangular, Method::Chain})
        if (faulhaber(n, m) != f)
          return fail(kMethodDisagreement, std::string("faulhaber: method ") + to_string(m) + " disagrees at n=" + std::to_string(n));
    } else {
      f = faulhaber(n, *parse_method(method));
    }
  } catch (const IdentityError& e) {
    return fail(kIdentityError, e.what());
  }

  const Poly p = *b == BasisTag::Y ? f.poly() : companion(n, *b);
  Result r;
  switch (format) {
    case OutputFormat::Json: {
      const json j = {{"n", n}, {"basis", basis}, {"method", method}, {"coeffs", p}};
      r.out = j.dump(2) + "\n";
      break;
    }
    case OutputFormat::Csv:
      for (std::size_t k = 0; k < p.coeffs().size(); ++k) r.out += rationals_csv_row(n, static_cast<long>(k), p.coeffs()[k]);
      break;
    case OutputFormat::Latex:
      if (*b == BasisTag::Y) {
        const auto [c, q] = split_content(p);
        std::string body;
        if (q.degree() == 0) body = latex_rational(c);
        else if (c == Rational(1)) body = latex_poly(q, "y");
        else body = latex_rational(c) + " ( " + latex_poly(q, "y") + " )";
        r.out = "$F_" + sub(n) + "(y)$ & $" + body + "$ \\\\\n";
      } else {
        r.out = "$S_" + sub(n) + "(x)$ & $" + latex_factored(p, latex_var(*b), n % 2 == 0) + "$ \\\\\n";
      }
      break;
  }
  return r;
}

Result cmd_powersum(long n, const BigInt& m, const std::string& strategy, const BigInt& naive_limit) {
  if (n < 0) return fail(kInvalidArgument, "powersum: --n must be >= 0");
  if (m < 0) return fail(kInvalidArgument, "powersum: --m must be >= 0");
  const auto s = parse_strategy(strategy);
  if (!s) return fail(kInvalidArgument, "powersum: unknown strategy '" + strategy + "'");
  if (*s == Strategy::Naive && m > naive_limit)
    return fail(kInvalidArgument, "powersum: m exceeds the naive limit " + naive_limit.get_str());
  if (*s == Strategy::Omega && (n < 3 || n % 2 == 0)) return fail(kInvalidArgument, "powersum: omega needs odd n >= 3");

  const BigInt value = PowerSumEvaluator(n, *s)(m);
  for (auto other : {Strategy::Bernoulli, Strategy::Faulhaber})
    if (other != *s && PowerSumEvaluator(n, other)(m) != value)
      return fail(kStrategyDisagreement, std::string("powersum: ") + to_string(other) + " disagrees with " + strategy);
  return Result{kOk, value.get_str() + "\n", {}};
}

namespace {

struct Family {
  std::string name;
  std::function<void(std::vector<std::string>&, long&)> run;
};

struct FamilyReport {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
};

// Runs one check, turning exceptions into failure messages.
void check(std::vector<std::string>& fails, long& count, const std::string& label, const std::function<bool()>& f) {
  ++count;
  try {
    if (!f()) fails.push_back(label);
  } catch (const std::exception& e) {
    fails.push_back(label + ": " + e.what());
  }
}

std::vector<Family> families(const std::string& suite, long N) {
  std::map<std::string, std::vector<Family>> all;
  auto& rec = all["recurrences"];
  rec.push_back({"faulhaber invariants", [N](auto& f, long& c) {
                   for (long n = 2; n <= N; ++n)
                     check(f, c, "n=" + std::to_string(n), [n] { return invariant_violations(faulhaber(n)).empty(); });
                 }});
  rec.push_back({"faulhaber methods agree", [N](auto& f, long& c) {
                   for (long n = 2; n <= N; ++n)
                     check(f, c, "n=" + std::to_string(n), [n] {
                       const auto s = faulhaber_by_substitution(n);
                       for (auto m : {Method::GesselViennot, Method::Triangular, Method::Chain})
                         if (faulhaber(n, m) != s) return false;
                       return reconstruct_power_sum(s) == power_sum_poly(n);
                     });
                 }});
  rec.push_back({"theta recurrences", [N](auto& f, long& c) {
                   for (long n = 3; n <= N; ++n)
                     check(f, c, "n=" + std::to_string(n), [n] {
                       return theta_recurrence_residual(n).is_zero() &&
                              (n < 5 || n % 2 == 0 || theta_recurrence2_residual(n).is_zero());
                     });
                 }});
  rec.push_back({"knuth residuals", [N](auto& f, long& c) {
                   for (long n = 5; n <= N; n += 2)
                     check(f, c, "n=" + std::to_string(n), [n] {
                       const auto r = knuth_residuals(n);
                       return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.is_zero(); });
                     });
                 }});
  rec.push_back({"lambda recurrence", [N](auto& f, long& c) {
                   for (long n = 0; n <= N; ++n)
                     for (long k = 0; k <= n; ++k)
                       check(f, c, "n=" + std::to_string(n) + ",k=" + std::to_string(k), [n, k] {
                         const Rational b = b_frak_small(n, k);
                         return lambda_bernoulli_substitution(n, k) == (n % 2 ? -b : b);
                       });
                 }});
  rec.push_back({"reciprocal derivatives", [N](auto& f, long& c) {
                   for (long n = 0; n <= std::min(N, 16L); ++n)
                     for (long k = 0; k <= std::min(N, 16L); ++k)
                       for (long l = 0; l <= std::min(n, k); ++l)
                         check(f, c, "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",l=" + std::to_string(l),
                               [n, k, l] {
                                 return evaluate(recip_derivative_closed(n, k, l), Rational(1)) ==
                                        recip_derivative_at_one(n, k, l);
                               });
                 }});

  auto& sym = all["symmetry"];
  sym.push_back({"bernoulli reflection", [N](auto& f, long& c) {
                   for (long n = 0; n <= N; ++n)
                     check(f, c, "n=" + std::to_string(n), [n] {
                       const Poly b = bernoulli_poly(n);
                       return compose(b, Poly{1, -1}) == (n % 2 ? -b : b);
                     });
                 }});
  sym.push_back({"reciprocal reflection", [N](auto& f, long& c) {
                   for (long n = 1; n <= N; ++n)
                     for (long k = 0; k <= N + 1; ++k)
                       check(f, c, "n=" + std::to_string(n) + ",k=" + std::to_string(k),
                             [n, k] { return recip_reflect_residual(n, k).is_zero(); });
                 }});
  sym.push_back({"B-frak symmetries", [N](auto& f, long& c) {
                   for (long n = 0; n <= N; ++n) {
                     check(f, c, "n=" + std::to_string(n), [n] {
                       (void)B_frak_numbers(n);
                       (void)b_frak_poly(n, n + 1);
                       return true;
                     });
                   }
                 }});
  sym.push_back({"central coefficients", [N](auto& f, long& c) {
                   for (long n = 3; n <= N; n += 2)
                     check(f, c, "n=" + std::to_string(n), [n] {
                       const auto v = central_coeffs(n).values;
                       const int s = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
                       for (long k = 1; k <= (n - 1) / 2; ++k)
                         if (v[static_cast<std::size_t>(k)].sign() != s) return false;
                       return true;
                     });
                 }});
  sym.push_back({"anti-palindromy", [N](auto& f, long& c) {
                   for (long n = 3; n <= std::min(N, 21L); n += 2)
                     check(f, c, "n=" + std::to_string(n), [n] { return anti_palindromy_failures(n).empty(); });
                 }});
  sym.push_back({"bridge to faulhaber", [N](auto& f, long& c) {
                   for (long n = 3; n <= N; n += 2)
                     check(f, c, "n=" + std::to_string(n), [n] { return bridge_to_faulhaber(n) == faulhaber(n); });
                 }});

  auto& zero = all["zero-sums"];
  zero.push_back({"bernoulli zero sums", [N](auto& f, long& c) {
                    for (long n = 1; n <= N; n += 2)
                      check(f, c, "n=" + std::to_string(n), [n] {
                        const auto r = zero_sum_checks(n);
                        return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.is_zero(); });
                      });
                  }});
  zero.push_back({"reciprocity", [N](auto& f, long& c) {
                    for (long r = 0; r <= N; ++r)
                      for (long s = 0; s <= N; ++s)
                        check(f, c, "r=" + std::to_string(r) + ",s=" + std::to_string(s),
                              [r, s] { return reciprocity_check(r, s).is_zero(); });
                  }});

  all["stern"].push_back({"stern formula", [N](auto& f, long& c) {
                            for (long l = 1; l <= std::max(1L, (N - 1) / 2); ++l)
                              check(f, c, "l=" + std::to_string(l), [l] { return stern_residual(l).is_zero(); });
                          }});

  all["rfold"].push_back({"r-fold factorization", [N](auto& f, long& c) {
                            for (long n = 1; n <= N; ++n)
                              for (long r = 1; r <= 4; ++r)
                                check(f, c, "n=" + std::to_string(n) + ",r=" + std::to_string(r), [n, r] {
                                  const RFoldSum s = rfold(n, r);
                                  return compose(s.g, Poly{Rational(0), Rational(r), Rational(1)}) * rfold_sum_poly(s.d, r) ==
                                         s.poly;
                                });
                          }});

  auto& hist = all["historical"];
  hist.push_back({"jacobi", [N](auto& f, long& c) {
                    for (long m = 2; 2 * m - 1 <= N; ++m)
                      check(f, c, "m=" + std::to_string(m), [m] { return jacobi_coeffs(m).A.front() == Rational(1); });
                  }});
  hist.push_back({"schroeder", [N](auto& f, long& c) {
                    for (long m = 1; 2 * m <= N; ++m)
                      check(f, c, "m=" + std::to_string(m), [m] {
                        const auto s = schroeder_coeffs(m);
                        return s.even_power_sum() == power_sum_poly(2 * m) &&
                               s.odd_power_sum() == power_sum_poly(2 * m + 1);
                      });
                  }});
  hist.push_back({"bold F and Appell pairs", [N](auto& f, long& c) {
                    for (long n = 3; n <= N; n += 2)
                      check(f, c, "n=" + std::to_string(n), [n] {
                        const auto [up, down] = frak_F_pair(n);
                        return !bold_F(n).is_zero() && derivative(up) == Rational(n) * down;
                      });
                  }});
  hist.push_back({"raabe multiplication", [N](auto& f, long& c) {
                    for (long k = 2; k <= 4; ++k)
                      for (long n = 1; n <= N; ++n)
                        check(f, c, "n=" + std::to_string(n) + ",k=" + std::to_string(k),
                              [n, k] {
                                (void)b_hat(n, k);
                                return true;
                              });
                  }});

  std::vector<Family> out;
  if (suite == "all") {
    for (const char* name : {"recurrences", "symmetry", "zero-sums", "stern", "rfold", "historical"})
      for (auto& f : all[name]) out.push_back(f);
  } else if (all.count(suite)) {
    out = all[suite];
  }
  return out;
}

}  // namespace

Result cmd_verify(const std::string& suite, long max_n) {
  if (max_n < 3) return fail(kInvalidArgument, "verify: --max must be >= 3");
  const auto fams = families(suite, max_n);
  if (fams.empty()) return fail(kInvalidArgument, "verify: unknown suite '" + suite + "'");

  std::vector<std::future<FamilyReport>> jobs;
  for (const auto& fam : fams)
    jobs.push_back(std::async(std::launch::async, [fam] {
      FamilyReport r{fam.name, 0, {}};
      fam.run(r.failures, r.checks);
      return r;
    }));

  Result res;
  long total = 0, failed = 0;
  for (auto& j : jobs) {
    const FamilyReport r = j.get();
    total += r.checks;
    failed += static_cast<long>(r.failures.size());
    std::ostringstream line;
    if (r.failures.empty()) {
      line << "[PASS] " << r.name << ": " << r.checks << " checks\n";
    } else {
      line << "[FAIL] " << r.name << ": " << r.failures.size() << " of " << r.checks << " failed (first: " << r.failures.front()
           << ")\n";
    }
    res.out += line.str();
  }
  res.out += std::to_string(total - failed) + "/" + std::to_string(total) + " checks passed\n";
  res.exit_code = failed ? kCheckFailed : kOk;
  return res;
}

Result cmd_rfold(long n, long r, OutputFormat format) {
  if (n < 1 || r < 1) return fail(kInvalidArgument, "rfold: --n and --r must be >= 1");
  RFoldSum s;
  try {
    s = rfold(n, r);
  } catch (const IdentityError& e) {
    return fail(kIdentityError, e.what());
  }
  Result out;
  switch (format) {
    case OutputFormat::Json: {
      const json j = {{"n", n}, {"r", r}, {"d", s.d}, {"sum", s.poly}, {"g", s.g}};
      out.out = j.dump(2) + "\n";
      break;
    }
    case OutputFormat::Csv:
      out.out += "d," + std::to_string(s.d) + "\n";
      for (std::size_t k = 0; k < s.poly.coeffs().size(); ++k)
        out.out += "sum," + std::to_string(k) + "," + s.poly.coeffs()[k].str() + "\n";
      for (std::size_t k = 0; k < s.g.coeffs().size(); ++k)
        out.out += "g," + std::to_string(k) + "," + s.g.coeffs()[k].str() + "\n";
      break;
    case OutputFormat::Latex: {
      const std::string tag = std::to_string(n) + "," + std::to_string(r);
      out.out = "$\\mathcal{S}_{" + tag + "}(m)$ & $" + latex_poly(s.poly, "m") + "$ \\\\\n";
      out.out += "$g_{" + tag + "}(v)$ & $" + latex_poly(s.g, "v") + "$ \\\\\n";
      out.out += "$d$ & $" + std::to_string(s.d) + "$ \\\\\n";
      break;
    }
  }
  return out;
}

Result cmd_bench(long n, const BigInt& m, int reps, const BigInt& naive_limit) {
  if (n < 2) return fail(kInvalidArgument, "bench: --n must be >= 2");
  if (m < 0) return fail(kInvalidArgument, "bench: --m must be >= 0");
  if (reps < 1) return fail(kInvalidArgument, "bench: --reps must be >= 1");

  std::vector<Strategy> strategies = {Strategy::Bernoulli, Strategy::Faulhaber};
  if (n >= 3 && n % 2) strategies.push_back(Strategy::Omega);
  if (m <= naive_limit) strategies.push_back(Strategy::Naive);

  struct Row {
    Strategy s;
    BigInt value;
    long mults = 0;
    double best_us = 0;
  };
  std::vector<Row> rows;
  for (auto s : strategies) {
    const PowerSumEvaluator ev(n, s);
    Row row{s, 0, 0, 0};
    row.value = ev(m, &row.mults);
    for (int i = 0; i < reps; ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      const BigInt v = ev(m);
      const double us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
      if (v != row.value) return fail(kStrategyDisagreement, "bench: unstable result");
      if (i == 0 || us < row.best_us) row.best_us = us;
    }
    rows.push_back(row);
  }
  for (const auto& r : rows)
    if (r.value != rows.front().value)
      return fail(kStrategyDisagreement, std::string("bench: ") + to_string(r.s) + " disagrees with " + to_string(rows.front().s));

  std::ostringstream os;
  os << "n=" << n << " m=" << m.get_str() << " reps=" << reps << "\n";
  os << "value=" << rows.front().value.get_str() << "\n";
  for (const auto& r : rows)
    os << to_string(r.s) << ": mults=" << r.mults << " best_us=" << r.best_us << "\n";
  if (m > naive_limit) os << "naive: skipped (m above " << naive_limit.get_str() << ")\n";
  return Result{kOk, os.str(), {}};
}

}  // namespace faulhaber::cli
