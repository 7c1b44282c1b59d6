#pragma once

#include <string>
#include <variant>
#include <vector>

#include "faulhaber/faulhaber_poly.hpp"
#include "faulhaber/laurent.hpp"
#include "faulhaber/poly.hpp"
#include "faulhaber/rational.hpp"
#include "faulhaber/series.hpp"

namespace faulhaber {

// x^k B_n(1/x), with exponents in [k - n, k].
struct RecipBernoulli {
  long n = 0;
  long k = 0;
  LaurentPoly laurent;
};

RecipBernoulli recip_bernoulli(long n, long k);

// B(-x) - (-1)^(n+k) (B(x) + n x^(k-n+1)) for B = x^k B_n(1/x); zero for n >= 1.
LaurentPoly recip_reflect_residual(long n, long k);

// n-th derivative of g(h(t)) by Hoppe's formula. Throws
// IdentityError(HoppeMismatch) if it differs from differentiating g(h(t)) directly.
Poly hoppe_derivative(const Poly& g, const Poly& h, unsigned n);

// psi_{n,k}(h) = sum_{j=1}^{k} C(k,j) (-h)^(k-j) D^n h^j.
LaurentPoly hoppe_psi(const LaurentPoly& h, unsigned n, unsigned k);

// The signed Lah number read off psi_{n,k}(1/t): coefficient of t^-(n+k), over k!.
Rational lah_via_hoppe(long n, long k);

// D^l B_n(1/x) as a sum of Lah numbers times x^-(l+v) B_n^(v)(1/x).
LaurentPoly recip_derivative_hoppe(long n, long l);

// D^l (x^k B_n(1/x)) assembled by Leibniz' rule from recip_derivative_hoppe.
LaurentPoly recip_derivative_leibniz(long n, long k, long l);

// l! sum_{v=0}^{l} (-1)^v C(k-v, k-l) C(n, v) B_{n-v, k-l-v}(x), for n, k >= l >= 0.
// Throws IdentityError(ClosedFormMismatch) if it differs from the direct derivative.
LaurentPoly recip_derivative_closed(long n, long k, long l);

// (-1)^n l! sum_{v=0}^{l} C(k-v, k-l) C(n, v) B_{n-v}: the value of the above at x = 1.
Rational recip_derivative_at_one(long n, long k, long l);

// b_{n,k}, the k-th derivative of x^{2k} B_n(1/x) at 1, for 0 <= k <= n.
// Computed by the closed sum and by the three-term recurrence in (n, k);
// throws IdentityError(RecurrenceMismatch) if they disagree.
Rational b_frak_small(long n, long k);

// Rows 0..max_n of b_{n,k} built only from the recurrence and two seed columns.
std::vector<std::vector<Rational>> b_frak_recurrence_table(long max_n);

// sum_v C(n, v) (2k - v)_k x^(n-v), 0 <= k <= n. Throws
// IdentityError(LambdaRecurrence) if the recurrence in (n, k) fails.
Poly lambda_poly(long n, long k);

// lambda_poly(n, k) with x^j replaced by B_j.
Rational lambda_bernoulli_substitution(long n, long k);

// B_{n,k} = sum_{v>=k} C(n,v) C(v,k) B_v for k = 0..n.
struct BFrakNumbers {
  long n = 0;
  std::vector<Rational> values;

  Poly poly() const { return Poly(values); }
};

// Throws IdentityError(SymmetryViolation) when any of the reflection, endpoint
// or Genocchi relations fail.
BFrakNumbers B_frak_numbers(long n);

// B_n(x) (1+x)^(k-n) for k >= n, checked against x^k B_n(1/x) shifted by one.
Poly b_frak_poly(long n, long k);

// B_n(x) (1+x)^(k-n): a Poly when k >= n, otherwise truncated at x^order.
std::variant<Poly, TruncatedSeries> B_frak_series(long n, long k, std::size_t order);

// cf_{n,k} for k = 0..n, odd n >= 3.
struct CentralCoeffs {
  long n = 0;
  std::vector<Rational> values;
};

// Three independent routes; throws IdentityError(RouteMismatch) on disagreement.
CentralCoeffs central_coeffs(long n);

// For k in [(n+1)/2, n], the Bernoulli-number sum and the B_{n,v} sum, in that
// order; every entry is zero. Odd n >= 1.
std::vector<Rational> zero_sum_checks(long n);

// Empty when the anti-palindromy chain holds for every k >= (n+1)/2 up to n.
std::vector<std::string> anti_palindromy_failures(long n);

// F_n from b_{n,k+1}; compares F_n, F_{n-1} and the derivatives of F_n at 0
// with the faulhaber module. Throws IdentityError(BridgeMismatch).
FaulhaberPoly bridge_to_faulhaber(long n);

// (-1)^r sum_v C(r,v) B_{s+v} - (-1)^s sum_v C(s,v) B_{r+v}.
Rational reciprocity_check(long r, long s);

}  // namespace faulhaber
