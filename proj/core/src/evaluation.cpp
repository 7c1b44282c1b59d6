#include "faulhaber/evaluation.hpp"

#include <stdexcept>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/faulhaber_poly.hpp"

namespace faulhaber {

namespace {

BigInt ipow(const BigInt& b, unsigned long e, long* mults) {
  BigInt r = 1, x = b;
  bool first = true;
  while (e) {
    if (e & 1) {
      if (first) {
        r = x;
        first = false;
      } else {
        r *= x;
        if (mults) ++*mults;
      }
    }
    e >>= 1;
    if (e) {
      x *= x;
      if (mults) ++*mults;
    }
  }
  return r;
}

}  // namespace

IntegerForm IntegerForm::of(const Poly& p) {
  IntegerForm f;
  for (const auto& c : p.coeffs()) mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), c.denominator().get_mpz_t());
  for (const auto& c : p.coeffs()) f.coeffs.push_back(BigInt(c.numerator() * (f.den / c.denominator())));
  return f;
}

BigInt IntegerForm::eval_scaled(const BigInt& x, long* mults) const {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (it != coeffs.rbegin()) {
      acc *= x;
      if (mults) ++*mults;
    }
    acc += *it;
  }
  return acc;
}

const char* to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Naive: return "naive";
    case Strategy::Bernoulli: return "bernoulli";
    case Strategy::Faulhaber: return "faulhaber";
    case Strategy::Omega: return "omega";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view s) {
  for (auto v : {Strategy::Naive, Strategy::Bernoulli, Strategy::Faulhaber, Strategy::Omega})
    if (s == to_string(v)) return v;
  return std::nullopt;
}

PowerSumEvaluator::PowerSumEvaluator(long n, Strategy s) : n_(n), s_(s) {
  if (n < 0) throw std::domain_error("power sum: negative n");
  switch (s) {
    case Strategy::Naive: break;
    case Strategy::Bernoulli: main_ = IntegerForm::of(power_sum_poly(n)); break;
    case Strategy::Faulhaber:
      if (n >= 2) main_ = IntegerForm::of(faulhaber(n).poly());
      break;
    case Strategy::Omega:
      if (n < 3 || n % 2 == 0) throw std::domain_error("omega strategy needs odd n >= 3");
      main_ = IntegerForm::of(omega_form(n));
      break;
  }
}

BigInt PowerSumEvaluator::operator()(const BigInt& m, long* mults) const {
  if (m < 0) throw std::domain_error("power sum: negative m");
  auto count = [mults] {
    if (mults) ++*mults;
  };
  switch (s_) {
    case Strategy::Naive: {
      BigInt s = 0;
      for (BigInt v = 0; v < m; ++v) s += n_ == 0 ? BigInt(1) : ipow(v, static_cast<unsigned long>(n_), mults);
      return s;
    }
    case Strategy::Bernoulli: return main_.eval_scaled(m, mults) / main_.den;
    case Strategy::Faulhaber: {
      if (n_ == 0) return m;
      BigInt y = m * (m - 1);
      count();
      y /= 2;
      if (n_ == 1) return y;
      BigInt f;
      if (n_ % 2) {
        f = y * y;
      } else {
        f = y * (2 * m - 1);
        f /= 3;
      }
      count();
      BigInt r = main_.eval_scaled(y, mults) * f;
      count();
      return r / main_.den;
    }
    case Strategy::Omega: {
      const BigInt t = 2 * m - 1;
      const BigInt w = t * t;
      count();
      return main_.eval_scaled(w, mults) / main_.den;
    }
  }
  return 0;
}

}  // namespace faulhaber
