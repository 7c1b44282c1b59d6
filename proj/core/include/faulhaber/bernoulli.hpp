#pragma once

#include <vector>

#include "faulhaber/poly.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

// B_n(x) = sum_k C(n,k) B_{n-k} x^k.
Poly bernoulli_poly(long n);

// S_n(x) with S_n(m) = 0^n + 1^n + ... + (m-1)^n; S_0(x) = x.
Poly power_sum_poly(long n);

// Literal summation of v^n for 0 <= v < m.
BigInt power_sum_brute(long n, const BigInt& m);

// S_n(x + 1), the sum running from 1 to x.
Poly old_convention(long n);

// B_n(x) + (n/2) x^(n-1); an odd or even function according to n.
Poly b_diamond(long n);

// k^(1-n) B_n(kx) - B_n(x). Also builds sum_{v=1}^{k-1} B_n(x + v/k) and throws
// IdentityError(RaabeViolation) if the two disagree.
Poly b_hat(long n, long k);

// B_n(x) expanded around x = 1/2: coeffs[j] multiplies (x - 1/2)^(n - 2j).
struct HalfExpansion {
  long n = 0;
  std::vector<Rational> coeffs;

  Poly reconstruct() const;
};

HalfExpansion half_expansion(long n);

// For odd n >= 3: W with S_n(x) = W((2x - 1)^2).
Poly omega_form(long n);

// S_1(x)^l - 2^(1-l) sum_{odd v <= l} C(l, v) S_{2l-v}(x); zero for every l >= 1.
Poly stern_residual(long l);

}  // namespace faulhaber
