#include "faulhaber/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace faulhaber {

LaurentPoly::LaurentPoly(long min_exp, std::vector<Rational> coeffs)
    : min_exp_(min_exp), c_(std::move(coeffs)) {
  normalize();
}

void LaurentPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    min_exp_ += static_cast<long>(lead);
  }
  if (c_.empty()) min_exp_ = 0;
}

LaurentPoly LaurentPoly::from_poly(const Poly& p) { return LaurentPoly(0, p.coeffs()); }

LaurentPoly LaurentPoly::monomial(const Rational& c, long exp) { return LaurentPoly(exp, {c}); }

Rational LaurentPoly::coeff(long exp) const {
  if (exp < min_exp_ || exp > max_exp()) return Rational();
  return c_[static_cast<std::size_t>(exp - min_exp_)];
}

std::optional<Poly> LaurentPoly::to_poly() const {
  if (is_zero()) return Poly();
  if (min_exp_ < 0) return std::nullopt;
  std::vector<Rational> v(static_cast<std::size_t>(min_exp_), Rational());
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const long lo = std::min(min_exp_, o.min_exp_);
  const long hi = std::max(max_exp(), o.max_exp());
  std::vector<Rational> v(static_cast<std::size_t>(hi - lo + 1));
  for (long e = lo; e <= hi; ++e) v[static_cast<std::size_t>(e - lo)] = coeff(e) + o.coeff(e);
  min_exp_ = lo;
  c_ = std::move(v);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  normalize();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  Poly pa(a.c_), pb(b.c_);
  return LaurentPoly(a.min_exp_ + b.min_exp_, (pa * pb).coeffs());
}

LaurentPoly derivative(const LaurentPoly& p, unsigned times) {
  LaurentPoly r = p;
  for (unsigned t = 0; t < times && !r.is_zero(); ++t) {
    std::vector<Rational> v;
    v.reserve(r.coeffs().size());
    for (long e = r.min_exp(); e <= r.max_exp(); ++e) v.push_back(r.coeff(e) * Rational(e));
    r = LaurentPoly(r.min_exp() - 1, std::move(v));
  }
  return r;
}

Rational evaluate(const LaurentPoly& p, const Rational& x0) {
  if (p.is_zero()) return Rational();
  if (x0.is_zero()) {
    if (p.min_exp() < 0) throw std::domain_error("LaurentPoly: evaluation at 0 with negative exponent");
    return p.coeff(0);
  }
  Rational acc;
  for (long e = p.max_exp(); e >= p.min_exp(); --e) acc = acc * x0 + p.coeff(e);
  return acc * pow(x0, p.min_exp());
}

LaurentPoly reflect_argument(const LaurentPoly& p) {
  std::vector<Rational> v = p.coeffs();
  for (std::size_t i = 0; i < v.size(); ++i)
    if ((p.min_exp() + static_cast<long>(i)) % 2 != 0) v[i] = -v[i];
  return LaurentPoly(p.min_exp(), std::move(v));
}

std::string to_string(const LaurentPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = p.max_exp(); e >= p.min_exp(); --e) {
    const Rational c = p.coeff(e);
    if (c.is_zero()) continue;
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    const Rational mag = abs(c);
    if (e == 0 || mag != Rational(1)) {
      os << mag;
      if (e != 0) os << "*";
    }
    if (e == 1) os << var;
    else if (e != 0) os << var << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return os.str();
}

}  // namespace faulhaber
