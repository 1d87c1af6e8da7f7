#include "eulersums/numerics.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace eulersums {

namespace {

// Tangent numbers T_1..T_n by the in-place integer recurrence; then
// B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
std::vector<Rational> bernoulli_table(int count) {
  std::vector<Integer> t(count + 1);
  if (count >= 1) t[1] = 1;
  for (int k = 2; k <= count; ++k) t[k] = t[k - 1] * (k - 1);
  for (int k = 2; k <= count; ++k)
    for (int j = k; j <= count; ++j) t[j] = t[j - 1] * (j - k) + t[j] * (j - k + 2);
  std::vector<Rational> b(count + 1);
  b[0] = 1;
  for (int k = 1; k <= count; ++k) {
    Integer four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    Rational q(t[k] * (2 * k), four_k * (four_k - 1));
    q.canonicalize();
    b[k] = (k % 2 == 1) ? q : Rational(-q);
  }
  return b;
}

std::mutex& bernoulli_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Rational>& bernoulli_cache() {
  static std::vector<Rational> cache;
  return cache;
}

using TailKey = std::tuple<int, int, long, int>;

std::mutex& tail_mutex() {
  static std::mutex m;
  return m;
}

std::map<TailKey, TailValue>& tail_cache() {
  static std::map<TailKey, TailValue> cache;
  return cache;
}

TailValue compute_tail(int a, int j, long K, int digits) {
  const int w = digits + kGuardDigits;
  BigReal k_real(K, w);
  BigReal ln_k = log(k_real);
  std::vector<BigReal> ln_pow;
  ln_pow.emplace_back(1, w);
  for (int b = 1; b <= a; ++b) ln_pow.push_back(ln_pow.back() * ln_k);

  // Integral from K to infinity: sum_b a!/b! ln^b K K^(1-j) / (j-1)^(a-b+1).
  BigReal integral(w);
  {
    Integer fact_ratio = 1;  // a!/b!, b descending from a
    for (int b = a; b >= 0; --b) {
      if (b < a) fact_ratio *= (b + 1);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(j - 1), static_cast<unsigned long>(a - b + 1));
      Rational c(fact_ratio, den);
      c.canonicalize();
      integral += ln_pow[b] * c;
    }
    integral *= pow(k_real, static_cast<long>(1 - j));
  }

  BigReal k_inv = BigReal(1, w) / k_real;
  BigReal k_neg_pow = pow(k_real, static_cast<long>(-j));  // K^(-j-r)
  BigReal value = integral - ln_pow[a] * k_neg_pow / 2;

  // Derivative r of ln^a x * x^(-j) is x^(-j-r) * sum_b p[b] ln^b x.
  std::vector<Integer> p(a + 1, 0);
  p[a] = 1;
  int r = 0;
  auto differentiate = [&]() {
    std::vector<Integer> q(a + 1, 0);
    for (int b = 0; b <= a; ++b) {
      q[b] = -static_cast<long>(j + r) * p[b];
      if (b + 1 <= a) q[b] += (b + 1) * p[b + 1];
    }
    p.swap(q);
    ++r;
    k_neg_pow *= k_inv;
  };

  const BigReal threshold = BigReal::pow10(-(digits + 5), w);
  BigReal prev(w);
  BigReal last(w);
  Integer factorial = 1;  // (2m)!
  for (int m = 1;; ++m) {
    if (m == 1) {
      differentiate();
    } else {
      differentiate();
      differentiate();
    }
    factorial *= (2 * m - 1) * (2 * m);
    BigReal deriv(w);
    for (int b = 0; b <= a; ++b)
      if (p[b] != 0) deriv += ln_pow[b] * BigReal(p[b], w);
    deriv *= k_neg_pow;
    Rational coef(bernoulli(2 * m) / factorial);
    BigReal term = deriv * coef;
    BigReal mag = abs(term);
    if (mag < threshold) {
      value -= term;
      last = mag;
      break;
    }
    if (m >= 2 && compare(mag, prev) >= 0)
      throw PrecisionError("Euler-Maclaurin corrections stopped decreasing: K too small for requested digits");
    if (m > 100000) throw PrecisionError("Euler-Maclaurin correction limit reached");
    value -= term;
    prev = mag;
  }
  return TailValue{value, last * 2};
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0 || n % 2 != 0) throw std::domain_error("bernoulli: n must be even and non-negative");
  const int idx = n / 2;
  std::lock_guard<std::mutex> lock(bernoulli_mutex());
  auto& cache = bernoulli_cache();
  if (static_cast<int>(cache.size()) <= idx) {
    int count = std::max<int>(idx, 2 * static_cast<int>(cache.size()));
    count = std::max(count, 32);
    cache = bernoulli_table(count);
  }
  return cache[idx];
}

TailValue tail_log_power_ex(int a, int j, long K, int digits) {
  if (j < 2) throw std::domain_error("tail_log_power: j must be >= 2");
  if (a < 0 || a > kMaxLogPower) throw std::domain_error("tail_log_power: log power out of range");
  if (K < 2) throw std::domain_error("tail_log_power: K must be >= 2");
  const TailKey key{a, j, K, digits};
  {
    std::lock_guard<std::mutex> lock(tail_mutex());
    auto it = tail_cache().find(key);
    if (it != tail_cache().end()) return it->second;
  }
  TailValue v = compute_tail(a, j, K, digits);
  std::lock_guard<std::mutex> lock(tail_mutex());
  return tail_cache().emplace(key, std::move(v)).first->second;
}

BigReal tail_log_power(int a, int j, long K, int digits) { return tail_log_power_ex(a, j, K, digits).value; }

}  // namespace eulersums
