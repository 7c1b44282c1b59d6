#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "faulhaber/poly.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

// A polynomial with rational coefficients as integer coefficients over one
// common denominator, so evaluation at integers stays in BigInt.
struct IntegerForm {
  std::vector<BigInt> coeffs;
  BigInt den = 1;

  static IntegerForm of(const Poly& p);
  // Horner; adds one to *mults per big-integer multiplication.
  BigInt eval_scaled(const BigInt& x, long* mults = nullptr) const;
};

enum class Strategy { Naive, Bernoulli, Faulhaber, Omega };

const char* to_string(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(std::string_view s);

// Precomputed evaluation plan for sum_{v<m} v^n under one strategy.
class PowerSumEvaluator {
 public:
  PowerSumEvaluator(long n, Strategy s);

  long n() const { return n_; }
  Strategy strategy() const { return s_; }
  BigInt operator()(const BigInt& m, long* mults = nullptr) const;

 private:
  long n_;
  Strategy s_;
  IntegerForm main_;
};

}  // namespace faulhaber
