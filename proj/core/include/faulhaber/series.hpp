#pragma once

#include <string>
#include <vector>

#include "faulhaber/poly.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

// Power series known up to and including x^order. Explicit zeros are kept so
// that coeffs().size() == order() + 1 always.
class TruncatedSeries {
 public:
  TruncatedSeries() : c_(1) {}
  TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

  static TruncatedSeries from_poly(const Poly& p, std::size_t order);

  // (1 + x)^alpha for any rational alpha.
  static TruncatedSeries binomial_series(const Rational& alpha, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }

  // Drops everything above x^order; order must not exceed the current one.
  TruncatedSeries truncate(std::size_t order) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

std::string to_string(const TruncatedSeries& s, const std::string& var = "x");

}  // namespace faulhaber
