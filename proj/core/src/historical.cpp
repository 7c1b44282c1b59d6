#include "faulhaber/historical.hpp"

#include <stdexcept>
#include <string>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/errors.hpp"
#include "faulhaber/faulhaber_poly.hpp"
#include "faulhaber/numbers.hpp"

namespace faulhaber {

namespace {

std::vector<Rational> jacobi_raw(long m) {
  const long n = 2 * m - 1;
  const Poly c = rebase_quadratic(power_sum_poly(n), SubstitutionBasis::of(BasisTag::U));
  std::vector<Rational> A(static_cast<std::size_t>(m));
  for (long k = 0; k < m; ++k) A[static_cast<std::size_t>(k)] = c.coeff(static_cast<std::size_t>(m - k)) * Rational(n + 1);
  return A;
}

[[noreturn]] void jacobi_fail(long m, const std::string& what) {
  throw IdentityError(Violation::JacobiRecurrence, "m=" + std::to_string(m) + ": " + what);
}

[[noreturn]] void schroeder_fail(long m, const std::string& what) {
  throw IdentityError(Violation::SchroederIdentity, "m=" + std::to_string(m) + ": " + what);
}

Rational beta_or_gamma(long m, long k, bool gamma) {
  // (-1)^{k+1} 4^{-k} sum_v C(2m+2 | 2m+1, 2v) C(m-v+1 | m-v, k-v) (4^v - 2) B_{2v}
  const long top = gamma ? 2 * m + 1 : 2 * m + 2;
  const long base = gamma ? m : m + 1;
  Rational s;
  for (long v = 0; v <= k; ++v)
    s += Rational(binomial(top, 2 * v) * binomial(base - v, k - v)) *
         (pow(Rational(4), v) - Rational(2)) * bernoulli(2 * v);
  const Rational sign = k % 2 == 0 ? Rational(-1) : Rational(1);
  return sign * pow(Rational(4), -k) * s;
}

const Poly& xi() {
  static const Poly p = SubstitutionBasis::of(BasisTag::Xi).quadratic;
  return p;
}

}  // namespace

JacobiCoeffs jacobi_coeffs(long m) {
  if (m < 2) throw std::domain_error("jacobi_coeffs: need m >= 2");
  const long n = 2 * m - 1;
  JacobiCoeffs out{m, jacobi_raw(m)};
  const auto& A = out.A;

  if (A[0] != Rational(1)) jacobi_fail(m, "A_0 != 1");
  if (!A[static_cast<std::size_t>(m - 1)].is_zero()) jacobi_fail(m, "A_{m-1} != 0");

  const FaulhaberPoly F = faulhaber(n);
  const long d = faulhaber_degree(n);
  for (long k = 0; k <= m - 2; ++k)
    if (A[static_cast<std::size_t>(k)] * pow(Rational(2), m - k) / Rational(n + 1) !=
        F.coeffs[static_cast<std::size_t>(d - k)])
      jacobi_fail(m, "conversion to F_n at k=" + std::to_string(k));

  // C(2m,2) A_k^{(m-1)} = C(2m-2k,2) A_k^{(m)} + C(m-k+1,2) A_{k-1}^{(m)}, 0 <= k <= m-2
  if (m >= 3) {
    const std::vector<Rational> prev = jacobi_raw(m - 1);
    for (long k = 0; k <= m - 2; ++k) {
      const Rational lhs = Rational(binomial(2 * m, 2)) * prev[static_cast<std::size_t>(k)];
      Rational rhs = Rational(binomial(2 * m - 2 * k, 2)) * A[static_cast<std::size_t>(k)];
      if (k >= 1) rhs += Rational(binomial(m - k + 1, 2)) * A[static_cast<std::size_t>(k - 1)];
      if (lhs != rhs) jacobi_fail(m, "recurrence in m at k=" + std::to_string(k));
    }
  }

  // sum_{j<=k} C(m-j, 2k+1-2j) A_j = 0, 1 <= k < m
  for (long k = 1; k < m; ++k) {
    Rational s;
    for (long j = 0; j <= k; ++j) s += Rational(binomial(m - j, 2 * k + 1 - 2 * j)) * A[static_cast<std::size_t>(j)];
    if (!s.is_zero()) jacobi_fail(m, "recurrence in k at k=" + std::to_string(k));
  }
  return out;
}

Poly SchroederCoeffs::odd_power_sum() const {
  // P_{2m+1} = (-1)^{m+1}/(2m+2)! sum_{k=2}^{m+1} beta_{m-k+1} xi^k, S = (2m+1)! P
  Poly sum;
  for (long k = 2; k <= m + 1; ++k)
    sum += beta[static_cast<std::size_t>(m - k + 1)] * pow(xi(), static_cast<unsigned>(k));
  const Rational sign = m % 2 == 0 ? Rational(-1) : Rational(1);
  const Rational P = sign / Rational(factorial(static_cast<unsigned long>(2 * m + 2)));
  return sum * (P * Rational(factorial(static_cast<unsigned long>(2 * m + 1))));
}

Poly SchroederCoeffs::even_power_sum() const {
  // P_{2m}/(x - 1/2) = (-1)^m/(2m+1)! sum_{k=1}^{m} gamma_{m-k} xi^k, S = (2m)! P
  Poly sum;
  for (long k = 1; k <= m; ++k)
    sum += gamma[static_cast<std::size_t>(m - k)] * pow(xi(), static_cast<unsigned>(k));
  const Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
  const Rational P = sign / Rational(factorial(static_cast<unsigned long>(2 * m + 1)));
  return Poly{Rational(-1, 2), Rational(1)} * sum * (P * Rational(factorial(static_cast<unsigned long>(2 * m))));
}

SchroederCoeffs schroeder_coeffs(long m) {
  if (m < 1) throw std::domain_error("schroeder_coeffs: need m >= 1");
  SchroederCoeffs out;
  out.m = m;
  for (long k = 0; k < m; ++k) {
    out.beta.push_back(beta_or_gamma(m, k, false));
    out.gamma.push_back(beta_or_gamma(m, k, true));
  }
  const auto& beta = out.beta;
  const auto& gamma = out.gamma;
  auto at = [](const std::vector<Rational>& v, long k) { return v[static_cast<std::size_t>(k)]; };

  for (long k = 0; k < m; ++k) {
    if (at(beta, k).sign() <= 0 || at(gamma, k).sign() <= 0) schroeder_fail(m, "positivity at k=" + std::to_string(k));
    if (Rational(m + 1) * at(gamma, k) != Rational(m - k + 1) * at(beta, k))
      schroeder_fail(m, "beta/gamma proportionality at k=" + std::to_string(k));
  }

  if (at(beta, 0) != Rational(1)) schroeder_fail(m, "beta_0 != 1");
  if (at(beta, m - 1) != Rational(binomial(2 * m + 2, 2)) * abs(bernoulli(2 * m)))
    schroeder_fail(m, "beta_{m-1} special value");
  if (m >= 2 && at(beta, m - 1) * Rational(2) != at(beta, m - 2)) schroeder_fail(m, "beta_{m-1} = beta_{m-2}/2");

  // C(2m-2k+2,2) b_k^{(m)} = C(m-k+2,2) b_{k-1}^{(m)} + C(2m+2,2) b_k^{(m-1)},
  // with b_{-1} = 0 and b_{m-1}^{(m-1)} = 0.
  if (m >= 2) {
    std::vector<Rational> prev;
    for (long k = 0; k < m - 1; ++k) prev.push_back(beta_or_gamma(m - 1, k, false));
    for (long k = 0; k < m; ++k) {
      const Rational lhs = Rational(binomial(2 * m - 2 * k + 2, 2)) * at(beta, k);
      Rational rhs = k < m - 1 ? Rational(binomial(2 * m + 2, 2)) * at(prev, k) : Rational();
      if (k >= 1) rhs += Rational(binomial(m - k + 2, 2)) * at(beta, k - 1);
      if (lhs != rhs) schroeder_fail(m, "recurrence at k=" + std::to_string(k));
    }
  }

  const JacobiCoeffs J = jacobi_coeffs(m + 1);
  for (long k = 0; k < m; ++k) {
    const Rational signed_beta = k % 2 == 0 ? at(beta, k) : -at(beta, k);
    if (at(J.A, k) != signed_beta) schroeder_fail(m, "Jacobi link at k=" + std::to_string(k));
  }

  if (out.odd_power_sum() != power_sum_poly(2 * m + 1)) schroeder_fail(m, "odd reconstruction");
  if (out.even_power_sum() != power_sum_poly(2 * m)) schroeder_fail(m, "even reconstruction");
  return out;
}

Poly rfold_sum_poly(long n, long r) {
  if (n < 1 || r < 1) throw std::domain_error("rfold: need n, r >= 1");
  Poly p = Poly::monomial(Rational(1), static_cast<std::size_t>(n));
  for (long i = 0; i < r; ++i) p = summation_operator(p);
  return p;
}

RFoldSum rfold(long n, long r) {
  RFoldSum out;
  out.n = n;
  out.r = r;
  out.d = n % 2 == 1 ? 1 : 2;
  out.poly = rfold_sum_poly(n, r);
  const Poly base = rfold_sum_poly(out.d, r);
  const Poly q = exact_divide(out.poly, base);
  out.g = rebase_quadratic(q, Poly{Rational(0), Rational(r), Rational(1)});
  return out;
}

}  // namespace faulhaber
