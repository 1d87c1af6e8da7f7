#pragma once

#include <vector>

#include "eulersums/bigreal.hpp"
#include "eulersums/numerics.hpp"

namespace eulersums {

enum class Family { H, h };

// X^(order)_{scale*k + shift}; H^(n)_k = sum_{i<=k} 1/i^n, h^(n)_k = sum_{i<=k} 1/(2i-1)^n.
struct HarmonicKind {
  Family family = Family::H;
  int order = 1;
  int scale = 1;
  int shift = 0;
  auto operator<=>(const HarmonicKind&) const = default;
};

// Exact value at index scale*k + shift (must be >= 0).
Rational harmonic_exact(const HarmonicKind& kind, long k);
// Exact values at indices scale*k + shift for k = 1..K, built incrementally.
std::vector<Rational> harmonic_exact_table(const HarmonicKind& kind, long K);
// Values for k = 1..K (element 0 is k = 1) at digits + kGuardDigits precision.
std::vector<BigReal> prefix_table(const HarmonicKind& kind, long K, int digits);

// Truncated asymptotic expansion sum_{a,j} c[a][j] ln^a(k) k^(-j), 0 <= j <= J.
class AsymptoticSeries {
 public:
  AsymptoticSeries(int max_log, int J, int precision_digits);

  static AsymptoticSeries constant(const BigReal& c, int J, int precision_digits);

  int max_log() const { return max_log_; }
  int order() const { return J_; }
  int precision() const { return prec_; }

  const BigReal& coeff(int a, int j) const { return c_[index(a, j)]; }
  BigReal& coeff(int a, int j) { return c_[index(a, j)]; }
  const BigReal& constant_part() const { return coeff(0, 0); }

  // Smallest j carrying a nonzero coefficient (order()+1 if the series is zero).
  int leading_j() const;
  // Largest a with a nonzero coefficient at the leading j.
  int leading_a() const;

  BigReal evaluate(long k) const;
  BigReal evaluate(const BigReal& k) const;

  AsymptoticSeries& operator+=(const AsymptoticSeries& o);
  AsymptoticSeries& operator-=(const AsymptoticSeries& o);
  AsymptoticSeries& scale(const BigReal& s);
  AsymptoticSeries& scale(const Rational& s);
  // Formal derivative in k, truncated at order().
  AsymptoticSeries derivative() const;

  // Error model |exact(k) - series(k)| <= error_c * ln^error_a(k) * k^-(J+1).
  double error_c = 1.0;
  int error_a = 0;

 private:
  std::size_t index(int a, int j) const { return static_cast<std::size_t>(a) * (J_ + 1) + j; }
  void widen(int max_log);
  int max_log_;
  int J_;
  int prec_;
  std::vector<BigReal> c_;
};

AsymptoticSeries series_product(const AsymptoticSeries& a, const AsymptoticSeries& b, int J);
AsymptoticSeries series_power(const AsymptoticSeries& a, int power, int J);
// (alpha*k + beta)^(-e) expanded in 1/k.
AsymptoticSeries linear_power_series(long alpha, long beta, int e, int J, int precision_digits);
// Asymptotic expansion of X_{scale*k+shift}; constants (gamma, zeta(n), lambda(n)) included.
AsymptoticSeries expansion(const HarmonicKind& kind, int J, int digits);

}  // namespace eulersums
