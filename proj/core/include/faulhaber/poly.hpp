#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "faulhaber/rational.hpp"

namespace faulhaber {

// Dense univariate polynomial over the rationals; coeffs()[i] is the
// coefficient of x^i. Trailing zeros are always trimmed, so the zero
// polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly identity();

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
  Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly pow(const Poly& p, unsigned e);

Rational evaluate(const Poly& p, const Rational& x0);

Poly derivative(const Poly& p, unsigned times = 1);

// Antiderivative with zero constant term.
Poly antiderivative(const Poly& p);

// p(q(x)).
Poly compose(const Poly& p, const Poly& q);

// p(x + c).
Poly shift(const Poly& p, const Rational& c);

// p(c x).
Poly scale_argument(const Poly& p, const Rational& c);

// p(x + 1) - p(x).
Poly forward_difference(const Poly& p);

// P with P(m) = sum_{v=1}^{m} p(v) for every integer m >= 0.
Poly summation_operator(const Poly& p);

// p + alpha * t * p'.
Poly theta(const Poly& p, const Rational& alpha);

struct DivResult {
  Poly quotient;
  Poly remainder;
};

DivResult divide(const Poly& p, const Poly& d);

// Throws IdentityError(NonzeroRemainder) when d does not divide p.
Poly exact_divide(const Poly& p, const Poly& d);

enum class BasisTag { Y, U, Xi, Omega };

struct SubstitutionBasis {
  BasisTag tag;
  Poly quadratic;

  static SubstitutionBasis of(BasisTag tag);
};

const char* to_string(BasisTag tag) noexcept;

// Coefficients c with p(x) = sum_k c_k q(x)^k. Throws IdentityError(NotInBasis)
// when no such expansion exists. q must have degree exactly 2.
Poly rebase_quadratic(const Poly& p, const Poly& q);
Poly rebase_quadratic(const Poly& p, const SubstitutionBasis& basis);

enum class PalindromeClass { Palindromic, AntiPalindromic, QuasiPalindromic, None };

const char* to_string(PalindromeClass c) noexcept;

// Compares a_v with a_{n-v} for 0 <= v <= n and reports the strongest class.
PalindromeClass palindrome_class(const Poly& p, int n);

std::string to_string(const Poly& p, const std::string& var = "x");
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace faulhaber
