#include "faulhaber/numbers.hpp"

#include <mutex>
#include <stdexcept>

namespace faulhaber {

BigInt binomial(long x, long k) {
  if (k < 0) return 0;
  BigInt r;
  BigInt top = x;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational falling_factorial(const Rational& x, unsigned long k) {
  Rational r(1);
  for (unsigned long i = 0; i < k; ++i) r *= x - Rational(static_cast<long>(i));
  return r;
}

BigInt lah(long n, long k) {
  if (k < 1 || k > n) throw std::domain_error("lah: need 1 <= k <= n");
  BigInt r = factorial(static_cast<unsigned long>(n)) / factorial(static_cast<unsigned long>(k)) *
             binomial(n - 1, k - 1);
  return (n % 2 == 0) ? r : BigInt(-r);
}

Rational BernoulliCache::get(std::size_t n) {
  {
    std::shared_lock lock(mu_);
    if (n < values_.size()) return values_[n];
  }
  std::unique_lock lock(mu_);
  grow_to(n);
  return values_[n];
}

void BernoulliCache::grow_to(std::size_t n) {
  // B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k
  while (values_.size() <= n) {
    const long m = static_cast<long>(values_.size());
    if (m >= 3 && m % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    Rational acc;
    for (long k = 0; k < m; ++k) {
      if (k >= 3 && k % 2 == 1) continue;
      acc += Rational(binomial(m + 1, k)) * values_[static_cast<std::size_t>(k)];
    }
    values_.push_back(-acc / Rational(m + 1));
  }
}

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

Rational bernoulli(long n) {
  if (n < 0) throw std::domain_error("bernoulli: negative index");
  return bernoulli_cache().get(static_cast<std::size_t>(n));
}

Rational genocchi(long n) {
  if (n < 0) throw std::domain_error("genocchi: negative index");
  return Rational(2) * (Rational(1) - pow(Rational(2), n)) * bernoulli(n);
}

Rational bernoulli_half(long n) {
  if (n < 0) throw std::domain_error("bernoulli_half: negative index");
  return (pow(Rational(2), 1 - n) - Rational(1)) * bernoulli(n);
}

}  // namespace faulhaber
