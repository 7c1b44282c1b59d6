#include "faulhaber/reciprocal.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/errors.hpp"
#include "faulhaber/numbers.hpp"

namespace faulhaber {

namespace {

std::string nk(long n, long k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

Rational sign_pow(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational fact(long n) { return Rational(factorial(static_cast<unsigned long>(n))); }

LaurentPoly lpow(const LaurentPoly& p, unsigned e) {
  LaurentPoly r = LaurentPoly::monomial(Rational(1), 0);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

Rational b_frak_closed(long n, long k) {
  Rational s;
  for (long v = 0; v <= k; ++v) s += Rational(binomial(2 * k - v, k) * binomial(n, v)) * bernoulli(n - v);
  return sign_pow(n) * fact(k) * s;
}

// Rows of b_{n,k} from the recurrence, grown on demand.
std::mutex table_mu;
std::vector<std::vector<Rational>> table_rows;

void grow_table(long max_n) {
  while (static_cast<long>(table_rows.size()) <= max_n) {
    const long n = static_cast<long>(table_rows.size());
    std::vector<Rational> row(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
      if (n < 2 || k < 2) {
        row[static_cast<std::size_t>(k)] = b_frak_closed(n, k);
        continue;
      }
      // b_{n,k} = 2(2k-1) b_{n,k-1} + n(n-1) b_{n-2,k-2}
      row[static_cast<std::size_t>(k)] =
          Rational(2 * (2 * k - 1)) * row[static_cast<std::size_t>(k - 1)] +
          Rational(n * (n - 1)) * table_rows[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(k - 2)];
    }
    table_rows.push_back(std::move(row));
  }
}

Poly lambda_raw(long n, long k) {
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  for (long v = 0; v <= std::min(k, n); ++v)
    c[static_cast<std::size_t>(n - v)] =
        Rational(binomial(n, v)) * falling_factorial(Rational(2 * k - v), static_cast<unsigned long>(k));
  return Poly(std::move(c));
}

std::vector<Rational> B_frak_raw(long n) {
  std::vector<Rational> v(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k)
    for (long j = k; j <= n; ++j)
      v[static_cast<std::size_t>(k)] += Rational(binomial(n, j) * binomial(j, k)) * bernoulli(j);
  return v;
}

}  // namespace

RecipBernoulli recip_bernoulli(long n, long k) {
  if (n < 0) throw std::domain_error("recip_bernoulli: negative n");
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = Rational(binomial(n, i)) * bernoulli(i);
  return {n, k, LaurentPoly(k - n, std::move(c))};
}

LaurentPoly recip_reflect_residual(long n, long k) {
  if (n < 1) throw std::domain_error("recip_reflect_residual: need n >= 1");
  const LaurentPoly b = recip_bernoulli(n, k).laurent;
  return reflect_argument(b) - sign_pow(n + k) * (b + LaurentPoly::monomial(Rational(n), k - n + 1));
}

LaurentPoly hoppe_psi(const LaurentPoly& h, unsigned n, unsigned k) {
  LaurentPoly out;
  const LaurentPoly minus_h = -h;
  for (unsigned j = 1; j <= k; ++j)
    out += Rational(binomial(k, j)) * lpow(minus_h, k - j) * derivative(lpow(h, j), n);
  return out;
}

Poly hoppe_derivative(const Poly& g, const Poly& h, unsigned n) {
  if (n < 1) throw std::domain_error("hoppe_derivative: need n >= 1");
  const LaurentPoly hl = LaurentPoly::from_poly(h);
  LaurentPoly acc;
  for (unsigned k = 1; k <= n; ++k) {
    const Poly gk = derivative(g, k);
    if (gk.is_zero()) break;
    acc += LaurentPoly::from_poly(compose(gk, h)) * hoppe_psi(hl, n, k) * (Rational(1) / fact(k));
  }
  const Poly result = *acc.to_poly();
  if (result != derivative(compose(g, h), n))
    throw IdentityError(Violation::HoppeMismatch, "order " + std::to_string(n));
  return result;
}

Rational lah_via_hoppe(long n, long k) {
  if (k < 1 || k > n) throw std::domain_error("lah_via_hoppe: need 1 <= k <= n");
  const LaurentPoly psi = hoppe_psi(LaurentPoly::monomial(Rational(1), -1), static_cast<unsigned>(n),
                                    static_cast<unsigned>(k));
  return psi.coeff(-(n + k)) / fact(k);
}

LaurentPoly recip_derivative_hoppe(long n, long l) {
  if (n < 0 || l < 0) throw std::domain_error("recip_derivative_hoppe: negative index");
  if (l == 0) return recip_bernoulli(n, 0).laurent;
  LaurentPoly out;
  for (long v = 1; v <= std::min(l, n); ++v) {
    const Rational c = Rational(lah(l, v)) * falling_factorial(Rational(n), static_cast<unsigned long>(v));
    out += c * LaurentPoly::monomial(Rational(1), -(l + v)) * recip_bernoulli(n - v, 0).laurent;
  }
  return out;
}

LaurentPoly recip_derivative_leibniz(long n, long k, long l) {
  if (l < 0) throw std::domain_error("recip_derivative_leibniz: negative order");
  LaurentPoly out;
  for (long i = 0; i <= l; ++i) {
    const Rational c = Rational(binomial(l, i)) * falling_factorial(Rational(k), static_cast<unsigned long>(l - i));
    if (c.is_zero()) continue;
    out += c * LaurentPoly::monomial(Rational(1), k - (l - i)) * recip_derivative_hoppe(n, i);
  }
  return out;
}

LaurentPoly recip_derivative_closed(long n, long k, long l) {
  if (l < 0 || n < l || k < l) throw std::domain_error("recip_derivative_closed: need n, k >= l >= 0");
  LaurentPoly out;
  for (long v = 0; v <= l; ++v)
    out += sign_pow(v) * Rational(binomial(k - v, k - l) * binomial(n, v)) *
           recip_bernoulli(n - v, k - l - v).laurent;
  out *= fact(l);
  if (out != derivative(recip_bernoulli(n, k).laurent, static_cast<unsigned>(l)))
    throw IdentityError(Violation::ClosedFormMismatch, nk(n, k) + " l=" + std::to_string(l));
  return out;
}

Rational recip_derivative_at_one(long n, long k, long l) {
  if (l < 0 || n < l || k < l) throw std::domain_error("recip_derivative_at_one: need n, k >= l >= 0");
  Rational s;
  for (long v = 0; v <= l; ++v) s += Rational(binomial(k - v, k - l) * binomial(n, v)) * bernoulli(n - v);
  return sign_pow(n) * fact(l) * s;
}

std::vector<std::vector<Rational>> b_frak_recurrence_table(long max_n) {
  if (max_n < 0) return {};
  std::lock_guard lock(table_mu);
  grow_table(max_n);
  return {table_rows.begin(), table_rows.begin() + max_n + 1};
}

Rational b_frak_small(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("b_frak_small: need 0 <= k <= n");
  const Rational closed = b_frak_closed(n, k);
  Rational recurred;
  {
    std::lock_guard lock(table_mu);
    grow_table(n);
    recurred = table_rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
  if (closed != recurred) throw IdentityError(Violation::RecurrenceMismatch, nk(n, k));
  return closed;
}

Poly lambda_poly(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("lambda_poly: need 0 <= k <= n");
  Poly p = lambda_raw(n, k);
  // n(n-1) L_{n-2,k-2} = L_{n,k} - 2(2k-1) L_{n,k-1}
  if (n >= 2 && k >= 2) {
    const Poly lhs = Rational(n * (n - 1)) * lambda_raw(n - 2, k - 2);
    const Poly rhs = p - Rational(2 * (2 * k - 1)) * lambda_raw(n, k - 1);
    if (lhs != rhs) throw IdentityError(Violation::LambdaRecurrence, nk(n, k));
  }
  return p;
}

Rational lambda_bernoulli_substitution(long n, long k) {
  const Poly p = lambda_poly(n, k);
  Rational s;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) s += p.coeffs()[j] * bernoulli(static_cast<long>(j));
  return s;
}

BFrakNumbers B_frak_numbers(long n) {
  if (n < 0) throw std::domain_error("B_frak_numbers: negative n");
  BFrakNumbers out{n, B_frak_raw(n)};
  const auto& v = out.values;
  auto fail = [n](const std::string& what) {
    throw IdentityError(Violation::SymmetryViolation, "n=" + std::to_string(n) + ": " + what);
  };
  for (long k = 0; k <= n; ++k)
    if (v[static_cast<std::size_t>(k)] != sign_pow(n) * v[static_cast<std::size_t>(n - k)]) fail("reflection");
  if (v.front() != sign_pow(n) * bernoulli(n) || v.back() != bernoulli(n)) fail("endpoints");
  const Poly p = out.poly();
  if (evaluate(p, Rational(-1)) != Rational(1)) fail("value at -1");
  const Rational half_g = genocchi(n) / Rational(2);
  if (evaluate(p, Rational(1)) != bernoulli(n) + half_g) fail("value at 1");
  Rational head;
  for (long k = 0; k < n; ++k) head += v[static_cast<std::size_t>(k)];
  if (head != half_g) fail("Genocchi sum");
  if (shift(*recip_bernoulli(n, n).laurent.to_poly(), Rational(1)) != p) fail("shifted reciprocal form");
  return out;
}

Poly b_frak_poly(long n, long k) {
  if (k < n) throw std::domain_error("b_frak_poly: need k >= n");
  const Poly p = B_frak_numbers(n).poly() * pow(Poly{1, 1}, static_cast<unsigned>(k - n));
  if (shift(*recip_bernoulli(n, k).laurent.to_poly(), Rational(1)) != p)
    throw IdentityError(Violation::SymmetryViolation, nk(n, k) + ": shifted reciprocal form");
  const PalindromeClass want = n % 2 == 0 ? PalindromeClass::Palindromic : PalindromeClass::AntiPalindromic;
  if (palindrome_class(p, static_cast<int>(k)) != want)
    throw IdentityError(Violation::SymmetryViolation, nk(n, k) + ": palindromy");
  return p;
}

std::variant<Poly, TruncatedSeries> B_frak_series(long n, long k, std::size_t order) {
  if (n < 0) throw std::domain_error("B_frak_series: negative n");
  if (k >= n) return b_frak_poly(n, k);
  return TruncatedSeries::from_poly(B_frak_numbers(n).poly(), order) *
         TruncatedSeries::binomial_series(Rational(k - n), order);
}

CentralCoeffs central_coeffs(long n) {
  if (n < 3 || n % 2 == 0) throw std::domain_error("central_coeffs: need odd n >= 3");
  const std::vector<Rational> Bf = B_frak_numbers(n).values;
  CentralCoeffs out{n, {}};
  for (long k = 0; k <= n; ++k) {
    const auto series = B_frak_series(n, 2 * k, static_cast<std::size_t>(k));
    const Rational a = std::holds_alternative<Poly>(series)
                           ? std::get<Poly>(series).coeff(static_cast<std::size_t>(k))
                           : std::get<TruncatedSeries>(series).coeff(static_cast<std::size_t>(k));
    const Rational b = b_frak_small(n, k) / fact(k);
    Rational c;
    for (long v = 0; v <= k; ++v) c += Rational(binomial(2 * k - n, k - v)) * Bf[static_cast<std::size_t>(v)];
    if (a != b || b != c)
      throw IdentityError(Violation::RouteMismatch, nk(n, k) + ": " + a.str() + ", " + b.str() + ", " + c.str());
    out.values.push_back(a);
  }
  return out;
}

std::vector<Rational> zero_sum_checks(long n) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("zero_sum_checks: need odd n >= 1");
  const std::vector<Rational> Bf = B_frak_raw(n);
  std::vector<Rational> out;
  for (long k = (n + 1) / 2; k <= n; ++k) {
    Rational s1, s2;
    for (long v = 0; v <= k; ++v) {
      s1 += Rational(binomial(2 * k - v, k) * binomial(n, v)) * bernoulli(n - v);
      s2 += Rational(binomial(2 * k - n, k - v)) * Bf[static_cast<std::size_t>(v)];
    }
    out.push_back(s1);
    out.push_back(s2);
  }
  return out;
}

std::vector<std::string> anti_palindromy_failures(long n) {
  if (n < 3 || n % 2 == 0) throw std::domain_error("anti_palindromy_failures: need odd n >= 3");
  std::vector<std::string> out;
  const CentralCoeffs cc = central_coeffs(n);
  for (long k = (n + 1) / 2; k <= n; ++k) {
    const Poly p = std::get<Poly>(B_frak_series(n, 2 * k, 0));
    if (palindrome_class(p, static_cast<int>(2 * k)) != PalindromeClass::AntiPalindromic)
      out.push_back(nk(n, k) + ": not anti-palindromic");
    if (!p.coeff(static_cast<std::size_t>(k)).is_zero()) out.push_back(nk(n, k) + ": central coefficient");
    if (!evaluate(recip_derivative_closed(n, 2 * k, k), Rational(1)).is_zero())
      out.push_back(nk(n, k) + ": derivative at 1");
    if (!cc.values[static_cast<std::size_t>(k)].is_zero()) out.push_back(nk(n, k) + ": cf");
  }
  return out;
}

FaulhaberPoly bridge_to_faulhaber(long n) {
  if (n < 3 || n % 2 == 0) throw std::domain_error("bridge_to_faulhaber: need odd n >= 3");
  const long d = faulhaber_degree(n);
  const FaulhaberPoly ref = faulhaber(n);
  const FaulhaberPoly ref_even = faulhaber(n - 1);
  const Poly F = ref.poly();
  FaulhaberPoly out{n, {}};
  for (long k = 0; k <= d; ++k) {
    const Rational b = b_frak_small(n, k + 1);
    const Rational fk = sign_pow(k + 1) * pow(Rational(2), k + 2) / fact(k + 2) * b;
    const Rational fk_even =
        sign_pow(k + 1) * Rational(3, n) * pow(Rational(2), k + 1) / fact(k + 1) * b;
    const Rational dk = sign_pow(k + 1) * pow(Rational(2), k + 2) / Rational((k + 1) * (k + 2)) *
                        evaluate(recip_derivative_closed(n, 2 * (k + 1), k + 1), Rational(1));
    if (fk != ref.coeffs[static_cast<std::size_t>(k)])
      throw IdentityError(Violation::BridgeMismatch, nk(n, k) + ": F_n coefficient");
    if (fk_even != ref_even.coeffs[static_cast<std::size_t>(k)])
      throw IdentityError(Violation::BridgeMismatch, nk(n, k) + ": F_{n-1} coefficient");
    if (dk != evaluate(derivative(F, static_cast<unsigned>(k)), Rational(0)))
      throw IdentityError(Violation::BridgeMismatch, nk(n, k) + ": derivative at 0");
    out.coeffs.push_back(fk);
  }
  return out;
}

Rational reciprocity_check(long r, long s) {
  if (r < 0 || s < 0) throw std::domain_error("reciprocity_check: negative index");
  Rational lhs, rhs;
  for (long v = 0; v <= r; ++v) lhs += Rational(binomial(r, v)) * bernoulli(s + v);
  for (long v = 0; v <= s; ++v) rhs += Rational(binomial(s, v)) * bernoulli(r + v);
  return sign_pow(r) * lhs - sign_pow(s) * rhs;
}

}  // namespace faulhaber
