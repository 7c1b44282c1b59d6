#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "faulhaber/rational.hpp"

namespace faulhaber {

// Binomial coefficient C(x, k) for any integer x (so C(-1, k) = (-1)^k).
// Returns 0 for k < 0.
BigInt binomial(long x, long k);

BigInt factorial(unsigned long n);

// x (x - 1) ... (x - k + 1); equals 1 for k = 0.
Rational falling_factorial(const Rational& x, unsigned long k);

// Signed Lah numbers L_{n,k} = (-1)^n n!/k! C(n-1, k-1), 1 <= k <= n.
BigInt lah(long n, long k);

// Bernoulli numbers with B_1 = -1/2, memoised and safe to share across threads.
class BernoulliCache {
 public:
  Rational get(std::size_t n);

 private:
  void grow_to(std::size_t n);

  std::shared_mutex mu_;
  std::vector<Rational> values_{Rational(1)};
};

BernoulliCache& bernoulli_cache();

Rational bernoulli(long n);

// Genocchi numbers G_n = 2 (1 - 2^n) B_n.
Rational genocchi(long n);

// B_n(1/2) = (2^{1-n} - 1) B_n.
Rational bernoulli_half(long n);

}  // namespace faulhaber
