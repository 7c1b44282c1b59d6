#pragma once

#include <optional>
#include <string>
#include <vector>

#include "faulhaber/poly.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

// Finite sum of integer powers of x. coeffs()[i] belongs to x^(min_exp() + i).
// Zero coefficients are trimmed at both ends; the zero value has min_exp 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long min_exp, std::vector<Rational> coeffs);

  static LaurentPoly from_poly(const Poly& p);
  static LaurentPoly monomial(const Rational& c, long exp);

  long min_exp() const { return min_exp_; }
  long max_exp() const { return min_exp_ + static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(long exp) const;

  // The ordinary polynomial, if no negative exponent is present.
  std::optional<Poly> to_poly() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_exp_ == b.min_exp_ && a.c_ == b.c_;
  }

 private:
  void normalize();
  long min_exp_ = 0;
  std::vector<Rational> c_;
};

LaurentPoly derivative(const LaurentPoly& p, unsigned times = 1);

// Throws std::domain_error at x0 = 0 when a negative exponent is present.
Rational evaluate(const LaurentPoly& p, const Rational& x0);

// p(-x).
LaurentPoly reflect_argument(const LaurentPoly& p);

std::string to_string(const LaurentPoly& p, const std::string& var = "x");

}  // namespace faulhaber
