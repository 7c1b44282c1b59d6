#pragma once

#include <vector>

#include "faulhaber/poly.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

// S_n(x) = 1/(n+1) sum_k A[k] u^(m-k) with u = x(x-1), n = 2m - 1.
struct JacobiCoeffs {
  long m = 0;
  std::vector<Rational> A;  // A_0 .. A_{m-1}
};

// Throws IdentityError(JacobiRecurrence) if the coefficients disagree with
// F_n, or fail Jacobi's recurrence in m or Knuth's recurrence in k.
JacobiCoeffs jacobi_coeffs(long m);

// Positive coefficients giving S_{2m+1} and S_{2m} / (x - 1/2) in xi = -x(x-1).
struct SchroederCoeffs {
  long m = 0;
  std::vector<Rational> beta;   // beta_0 .. beta_{m-1}
  std::vector<Rational> gamma;  // gamma_0 .. gamma_{m-1}

  // S_{2m+1}(x) rebuilt from beta.
  Poly odd_power_sum() const;
  // S_{2m}(x) rebuilt from gamma, including the (x - 1/2) factor.
  Poly even_power_sum() const;
};

// Throws IdentityError(SchroederIdentity) on any failed internal check.
SchroederCoeffs schroeder_coeffs(long m);

// Iterated sum S_{n,r} (old convention) with S_{n,r}(x) = g(x(x+r)) S_{d,r}(x).
struct RFoldSum {
  long n = 0;
  long r = 0;
  Poly poly;
  Poly g;
  long d = 0;
};

// r-fold sum of v^n, starting at v = 1.
Poly rfold_sum_poly(long n, long r);

// Throws IdentityError(NonzeroRemainder / NotInBasis) if the factorization fails.
RFoldSum rfold(long n, long r);

}  // namespace faulhaber
