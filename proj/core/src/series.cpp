#include "faulhaber/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace faulhaber {

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, std::size_t order) {
  std::vector<Rational> v(order + 1);
  for (std::size_t i = 0; i <= order; ++i) v[i] = p.coeff(i);
  return TruncatedSeries(order, std::move(v));
}

TruncatedSeries TruncatedSeries::binomial_series(const Rational& alpha, std::size_t order) {
  // C(alpha, i) built incrementally: C(alpha, i) = C(alpha, i-1) (alpha - i + 1) / i.
  std::vector<Rational> v(order + 1);
  Rational c(1);
  for (std::size_t i = 0; i <= order; ++i) {
    v[i] = c;
    c = c * (alpha - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i + 1));
  }
  return TruncatedSeries(order, std::move(v));
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("TruncatedSeries: cannot raise order");
  return TruncatedSeries(order, std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(order + 1)));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = a.c_[i] + b.c_[i];
  return TruncatedSeries(n, std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return TruncatedSeries(n, std::move(v));
}

TruncatedSeries operator*(TruncatedSeries a, const Rational& s) {
  for (auto& c : a.c_) c *= s;
  return a;
}

std::string to_string(const TruncatedSeries& s, const std::string& var) {
  std::string body = to_string(Poly(s.coeffs()), var);
  return body + " + O(" + var + "^" + std::to_string(s.order() + 1) + ")";
}

}  // namespace faulhaber
