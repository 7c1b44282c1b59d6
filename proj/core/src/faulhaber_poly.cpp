#include "faulhaber/faulhaber_poly.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/errors.hpp"
#include "faulhaber/numbers.hpp"
#include "faulhaber/reciprocal.hpp"

namespace faulhaber {

namespace {

void require_odd(long n, const char* who) {
  if (n < 3 || n % 2 == 0) throw std::domain_error(std::string(who) + ": need odd n >= 3");
}

const Poly& y_of_x() {
  static const Poly y = SubstitutionBasis::of(BasisTag::Y).quadratic;
  return y;
}

Rational two_pow(long e) { return pow(Rational(2), e); }

Rational leading_coefficient(long n) { return two_pow((n + 1) / 2) / Rational(n + 1); }

std::string label(long n) { return "n=" + std::to_string(n); }

}  // namespace

long faulhaber_degree(long n) { return n / 2 - 1; }

Poly faulhaber_factor(long n) {
  if (n < 2) throw std::domain_error("faulhaber_factor: need n >= 2");
  return n % 2 == 0 ? power_sum_poly(2) : pow(y_of_x(), 2);
}

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::Substitution: return "substitution";
    case Method::GesselViennot: return "gv";
    case Method::Triangular: return "triangular";
    case Method::Chain: return "chain";
  }
  return "?";
}

FaulhaberPoly faulhaber_by_substitution(long n) {
  if (n < 2) throw std::domain_error("faulhaber_by_substitution: need n >= 2");
  const Poly q = exact_divide(power_sum_poly(n), faulhaber_factor(n));
  const Poly F = rebase_quadratic(q, SubstitutionBasis::of(BasisTag::Y));
  return {n, F.coeffs()};
}

FaulhaberPoly faulhaber_gv(long n) {
  require_odd(n, "faulhaber_gv");
  const long d = faulhaber_degree(n);
  std::vector<Rational> c(static_cast<std::size_t>(d + 1));
  for (long k = 0; k <= d; ++k) {
    Rational s;
    for (long v = 0; v <= k + 1; ++v)
      s += Rational(binomial(2 * k + 2 - v, k + 1) * binomial(n, v)) * bernoulli(n - v);
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    c[static_cast<std::size_t>(k)] = sign * two_pow(k + 2) / Rational(k + 2) * s;
  }
  return {n, std::move(c)};
}

FaulhaberPoly faulhaber_triangular(long n) {
  require_odd(n, "faulhaber_triangular");
  // C(n, l+1) B_{n-l-1} = (l+2) sum_{k<=l} C(k+2, l-k) 2^{-(k+2)} f_k
  const long d = faulhaber_degree(n);
  std::vector<Rational> f(static_cast<std::size_t>(d + 1));
  for (long l = 0; l <= d; ++l) {
    Rational rhs = Rational(binomial(n, l + 1)) * bernoulli(n - l - 1) / Rational(l + 2);
    for (long k = 0; k < l; ++k)
      rhs -= Rational(binomial(k + 2, l - k)) * two_pow(-(k + 2)) * f[static_cast<std::size_t>(k)];
    f[static_cast<std::size_t>(l)] = rhs / two_pow(-(l + 2));
  }
  return {n, std::move(f)};
}

FaulhaberPoly faulhaber_step_down(const FaulhaberPoly& odd) {
  require_odd(odd.n, "faulhaber_step_down");
  std::vector<Rational> c = odd.coeffs;
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] *= Rational(3, 2 * odd.n) * Rational(static_cast<long>(k) + 2);
  return {odd.n - 1, std::move(c)};
}

FaulhaberPoly faulhaber_chain(long n) {
  require_odd(n, "faulhaber_chain");
  // C(n,2) f_{n-2,k} = (1/2) C(2k+6,2) f_{n,k+1} + (1/4) C(k+4,2) f_{n,k+2}
  std::vector<Rational> prev{Rational(1)};  // F_3
  for (long m = 5; m <= n; m += 2) {
    const long d = faulhaber_degree(m);
    std::vector<Rational> cur(static_cast<std::size_t>(d + 1));
    cur[static_cast<std::size_t>(d)] = leading_coefficient(m);
    auto at = [&](long k) { return k <= d ? cur[static_cast<std::size_t>(k)] : Rational(); };
    for (long k = d - 1; k >= 0; --k) {
      const Rational lhs = Rational(binomial(m, 2)) * prev[static_cast<std::size_t>(k)];
      const Rational known = Rational(binomial(k + 4, 2)) * at(k + 2) / Rational(4);
      const Rational solved = (lhs - known) * Rational(2) / Rational(binomial(2 * k + 6, 2));
      if (k + 1 == d) {
        if (solved != cur[static_cast<std::size_t>(d)])
          throw IdentityError(Violation::ChainInconsistency, label(m) + ": leading coefficient");
        continue;
      }
      cur[static_cast<std::size_t>(k + 1)] = solved;
    }
    if (d >= 1) {
      Rational rest;
      for (long k = 1; k <= d; ++k) rest += cur[static_cast<std::size_t>(k)];
      cur[0] = Rational(1) - rest;
    }
    if (cur[0] != Rational(2 * m) * bernoulli(m - 1))
      throw IdentityError(Violation::ChainInconsistency, label(m) + ": F(0)");
    prev = std::move(cur);
  }
  return {n, std::move(prev)};
}

FaulhaberPoly faulhaber(long n, Method method) {
  if (n < 2) throw std::domain_error("faulhaber: need n >= 2");
  if (method == Method::Substitution) return faulhaber_by_substitution(n);
  if (n % 2 == 0) return faulhaber_step_down(faulhaber(n + 1, method));
  switch (method) {
    case Method::GesselViennot: return faulhaber_gv(n);
    case Method::Triangular: return faulhaber_triangular(n);
    case Method::Chain: return faulhaber_chain(n);
    case Method::Substitution: break;
  }
  return faulhaber_by_substitution(n);
}

FaulhaberPoly faulhaber(long n) {
  static std::shared_mutex mu;
  static std::map<long, FaulhaberPoly> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  FaulhaberPoly f = faulhaber(n, Method::GesselViennot);
  std::unique_lock lock(mu);
  return cache.emplace(n, std::move(f)).first->second;
}

std::vector<std::string> invariant_violations(const FaulhaberPoly& f) {
  std::vector<std::string> out;
  const long n = f.n;
  const long d = faulhaber_degree(n);
  if (static_cast<long>(f.coeffs.size()) != d + 1) {
    out.push_back(label(n) + ": expected " + std::to_string(d + 1) + " coefficients");
    return out;
  }
  Rational sum;
  for (const auto& c : f.coeffs) sum += c;
  if (sum != Rational(1)) out.push_back(label(n) + ": F(1) = " + sum.str());
  for (long k = 0; k <= d; ++k) {
    const int want = (d - k) % 2 == 0 ? 1 : -1;
    if (f.coeffs[static_cast<std::size_t>(k)].sign() != want)
      out.push_back(label(n) + ": sign of coefficient " + std::to_string(k));
  }
  const Rational f0 = n % 2 == 0 ? Rational(6) * bernoulli(n) : Rational(2 * n) * bernoulli(n - 1);
  if (f.coeffs[0] != f0) out.push_back(label(n) + ": F(0) = " + f.coeffs[0].str() + ", want " + f0.str());
  if (n % 2 == 1 && f.coeffs.back() != leading_coefficient(n))
    out.push_back(label(n) + ": leading coefficient " + f.coeffs.back().str());
  return out;
}

Poly reconstruct_power_sum(const FaulhaberPoly& f) {
  return faulhaber_factor(f.n) * compose(f.poly(), y_of_x());
}

Poly theta_recurrence_residual(long n) {
  if (n < 3) throw std::domain_error("theta_recurrence_residual: need n >= 3");
  const Poly Fn = faulhaber(n).poly();
  const Poly Fm = faulhaber(n - 1).poly();
  const Poly y = Poly::identity();
  if (n % 2 == 1) return Rational(n) * Fm - Rational(3) * theta(Fn, Rational(1, 2));
  const Poly shifted = Fn - Poly::constant(Fn.coeff(0));
  return Rational(n) * y * y * Fm - Rational(1, 6) * theta(shifted, Rational(1)) -
         Rational(2) * y * theta(Fn, Rational(2, 3));
}

Poly theta_recurrence2_residual(long n) {
  if (n < 5 || n % 2 == 0) throw std::domain_error("theta_recurrence2_residual: need odd n >= 5");
  const Poly Fn = faulhaber(n).poly();
  const Poly Fm = faulhaber(n - 2).poly();
  const Poly y = Poly::identity();
  const Poly shifted = Fn - Poly::constant(Fn.coeff(0));
  const Rational half(1, 2);
  return Rational(n * (n - 1)) * y * y * Fm - half * theta(theta(shifted, Rational(1)), half) -
         Rational(6) * y * theta(theta(Fn, Rational(2, 3)), half);
}

std::vector<Rational> knuth_residuals(long n) {
  if (n < 5 || n % 2 == 0) throw std::domain_error("knuth_residuals: need odd n >= 5");
  const FaulhaberPoly f = faulhaber(n);
  const long d = faulhaber_degree(n);
  std::vector<Rational> out;
  for (long l = 0; l < d; ++l) {
    Rational s;
    for (long k = l; k <= d; ++k) {
      const Rational term = Rational(binomial(k + 2, 2 * (k - l) + 1)) * two_pow(l - k) *
                            f.coeffs[static_cast<std::size_t>(k)];
      if (k > 2 * l + 1 && !term.is_zero())
        throw IdentityError(Violation::KnuthSupport, label(n) + " l=" + std::to_string(l));
      s += term;
    }
    out.push_back(s);
  }
  return out;
}

Poly bold_F(long n) {
  require_odd(n, "bold_F");
  const CentralCoeffs cc = central_coeffs(n);
  std::vector<Rational> c(cc.values.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = k % 2 == 0 ? cc.values[k] : -cc.values[k];
  const Poly F(std::move(c));

  const Poly u = SubstitutionBasis::of(BasisTag::U).quadratic;
  const Poly bn = bernoulli_poly(n);
  if (Poly{-1, 2} * compose(F, u) != bn)
    throw IdentityError(Violation::BnFp, label(n) + ": (2x-1) F(u) != B_n(x)");
  const Poly halved = exact_divide(bn, Poly{Rational(-1, 2), Rational(1)}) * Rational(1, 2);
  if (rebase_quadratic(halved, u) != F)
    throw IdentityError(Violation::BnFp, label(n) + ": B_n/(2x-1) not matching in u");
  if (F.degree() != (n - 1) / 2 || !F.coeff(0).is_zero())
    throw IdentityError(Violation::BnFp, label(n) + ": degree or constant term");
  return F;
}

std::pair<Poly, Poly> frak_F_pair(long n) {
  require_odd(n, "frak_F_pair");
  const Poly y = Poly::identity();
  const Poly upper = y * y * faulhaber(n).poly();
  const Poly lower = Rational(2, 3) * y * faulhaber(n - 1).poly();
  if (derivative(upper) != Rational(n) * lower)
    throw IdentityError(Violation::Appell, label(n) + ": derivative");
  if (compose(upper, y_of_x()) != power_sum_poly(n))
    throw IdentityError(Violation::Appell, label(n) + ": S_n");
  if (compose(lower, y_of_x()) * derivative(y_of_x()) != power_sum_poly(n - 1))
    throw IdentityError(Violation::Appell, label(n) + ": S_{n-1}");
  return {upper, lower};
}

}  // namespace faulhaber
