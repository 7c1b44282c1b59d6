#pragma once

#include <string>
#include <utility>
#include <vector>

#include "faulhaber/poly.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

// F_n(y) = sum_k coeffs[k] y^k, with S_n(x) = f_n(x) F_n(x(x-1)/2).
struct FaulhaberPoly {
  long n = 0;
  std::vector<Rational> coeffs;

  Poly poly() const { return Poly(coeffs); }
  friend bool operator==(const FaulhaberPoly&, const FaulhaberPoly&) = default;
};

// floor(n/2) - 1.
long faulhaber_degree(long n);

// S_2(x) for even n, S_1(x)^2 for odd n.
Poly faulhaber_factor(long n);

enum class Method { Substitution, GesselViennot, Triangular, Chain };

const char* to_string(Method m) noexcept;

// Divide S_n by f_n and rebase the quotient in y = x(x-1)/2.
FaulhaberPoly faulhaber_by_substitution(long n);

// Closed-form coefficients, odd n only.
FaulhaberPoly faulhaber_gv(long n);

// Solves the lower-triangular system tying f_{n,k} to Bernoulli numbers, odd n only.
FaulhaberPoly faulhaber_triangular(long n);

// F_n with n odd to F_{n-1}.
FaulhaberPoly faulhaber_step_down(const FaulhaberPoly& odd);

// Builds F_3, F_5, ..., F_n, each from its predecessor and its leading
// coefficient. Throws IdentityError(ChainInconsistency) if F_n(0) comes out wrong.
FaulhaberPoly faulhaber_chain(long n);

// Any method for any n >= 2. The odd-only methods reach even n by stepping
// down from n + 1.
FaulhaberPoly faulhaber(long n, Method method);

// Memoised reference construction (closed form, stepped down for even n).
FaulhaberPoly faulhaber(long n);

// Empty when every structural property holds; otherwise one line per failure.
std::vector<std::string> invariant_violations(const FaulhaberPoly& f);

// f_n(x) * F_n(x(x-1)/2), which must equal S_n(x).
Poly reconstruct_power_sum(const FaulhaberPoly& f);

// Odd n:  n F_{n-1} - 3 theta_{1/2} F_n.
// Even n: n y^2 F_{n-1} - (1/6) theta_1 (F_n - F_n(0)) - 2y theta_{2/3} F_n.
Poly theta_recurrence_residual(long n);

// Odd n >= 5:
// n(n-1) y^2 F_{n-2} - (1/2) theta_{1/2} theta_1 (F_n - F_n(0)) - 6y theta_{1/2} theta_{2/3} F_n.
Poly theta_recurrence2_residual(long n);

// For 0 <= l < d_n: sum_{k=l}^{d_n} C(k+2, 2(k-l)+1) 2^{l-k} f_{n,k}.
// Throws IdentityError(KnuthSupport) if a term with k > 2l + 1 is nonzero.
std::vector<Rational> knuth_residuals(long n);

// Bold F_n(u) = sum_k (-1)^k cf_{n,k} u^k from the central coefficients, with
// (2x - 1) F_n(x(x-1)) = B_n(x) checked. Odd n >= 3.
Poly bold_F(long n);

// (y^2 F_n(y), (2/3) y F_{n-1}(y)) for odd n, with the Appell relation between
// them and both power-sum identities checked.
std::pair<Poly, Poly> frak_F_pair(long n);

}  // namespace faulhaber
