#pragma once

#include <compare>

#include "eulersums/bigreal.hpp"
#include "eulersums/errors.hpp"

namespace eulersums {

inline constexpr int kMaxLogPower = 12;

// The function ln^a(k) * k^(-j).
struct LogPowerMonomial {
  int a = 0;
  int j = 0;
  auto operator<=>(const LogPowerMonomial&) const = default;
};

// Exact Bernoulli number B_n for even n >= 0 (B_0 = 1, B_2 = 1/6, ...). Cached.
Rational bernoulli(int n);

struct TailValue {
  BigReal value;
  BigReal error;  // twice the last included correction
};

// Sum over k > K of ln^a(k)/k^j by Euler-Maclaurin, accurate to 10^-digits.
// Throws std::domain_error for j < 2 and PrecisionError when the correction
// terms stop decreasing before reaching 10^(-digits-5).
BigReal tail_log_power(int a, int j, long K, int digits);
TailValue tail_log_power_ex(int a, int j, long K, int digits);

}  // namespace eulersums
