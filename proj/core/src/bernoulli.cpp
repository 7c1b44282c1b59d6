#include "faulhaber/bernoulli.hpp"

#include <stdexcept>
#include <string>

#include "faulhaber/errors.hpp"
#include "faulhaber/numbers.hpp"

namespace faulhaber {

Poly bernoulli_poly(long n) {
  if (n < 0) throw std::domain_error("bernoulli_poly: negative index");
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = Rational(binomial(n, k)) * bernoulli(n - k);
  return Poly(std::move(c));
}

Poly power_sum_poly(long n) {
  if (n < 0) throw std::domain_error("power_sum_poly: negative index");
  Poly b = bernoulli_poly(n + 1) - Poly::constant(bernoulli(n + 1));
  return b * Rational(1, n + 1);
}

BigInt power_sum_brute(long n, const BigInt& m) {
  if (n < 0) throw std::domain_error("power_sum_brute: negative index");
  BigInt acc = 0, term;
  for (BigInt v = 0; v < m; ++v) {
    mpz_pow_ui(term.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
    acc += term;
  }
  return acc;
}

Poly old_convention(long n) { return shift(power_sum_poly(n), Rational(1)); }

Poly b_diamond(long n) {
  if (n < 1) throw std::domain_error("b_diamond: need n >= 1");
  return bernoulli_poly(n) + Poly::monomial(Rational(n, 2), static_cast<std::size_t>(n - 1));
}

Poly b_hat(long n, long k) {
  if (n < 1 || k < 1) throw std::domain_error("b_hat: need n, k >= 1");
  const Poly bn = bernoulli_poly(n);
  const Poly lhs = scale_argument(bn, Rational(k)) * pow(Rational(k), 1 - n) - bn;
  Poly rhs;
  for (long v = 1; v < k; ++v) rhs += shift(bn, Rational(v, k));
  if (lhs != rhs)
    throw IdentityError(Violation::RaabeViolation,
                        "n=" + std::to_string(n) + " k=" + std::to_string(k));
  return lhs;
}

Poly HalfExpansion::reconstruct() const {
  const Poly t{Rational(-1, 2), Rational(1)};
  Poly out;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    out += coeffs[j] * pow(t, static_cast<unsigned>(n - 2 * static_cast<long>(j)));
  return out;
}

HalfExpansion half_expansion(long n) {
  if (n < 1) throw std::domain_error("half_expansion: need n >= 1");
  HalfExpansion h;
  h.n = n;
  for (long v = 0; v <= n; v += 2) h.coeffs.push_back(Rational(binomial(n, v)) * bernoulli_half(v));
  return h;
}

Poly omega_form(long n) {
  if (n < 3 || n % 2 == 0) throw std::domain_error("omega_form: need odd n >= 3");
  return rebase_quadratic(power_sum_poly(n), SubstitutionBasis::of(BasisTag::Omega));
}

Poly stern_residual(long l) {
  if (l < 1) throw std::domain_error("stern_residual: need l >= 1");
  Poly sum;
  for (long v = 1; v <= l; v += 2) sum += Rational(binomial(l, v)) * power_sum_poly(2 * l - v);
  return pow(power_sum_poly(1), static_cast<unsigned>(l)) - sum * pow(Rational(2), 1 - l);
}

}  // namespace faulhaber
