#include "eulersums/harmonic.hpp"

#include <algorithm>
#include <stdexcept>

#include "eulersums/constants.hpp"

namespace eulersums {

namespace {

long effective_index(const HarmonicKind& kind, long k) {
  const long idx = kind.scale * k + kind.shift;
  if (idx < 0) throw std::domain_error("harmonic index is negative");
  return idx;
}

Rational summand_exact(Family family, int order, long i) {
  Integer base = family == Family::H ? Integer(i) : Integer(2 * i - 1);
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(order));
  return Rational(1, den);
}

}  // namespace

Rational harmonic_exact(const HarmonicKind& kind, long k) {
  const long idx = effective_index(kind, k);
  Rational s = 0;
  for (long i = 1; i <= idx; ++i) s += summand_exact(kind.family, kind.order, i);
  return s;
}

std::vector<Rational> harmonic_exact_table(const HarmonicKind& kind, long K) {
  std::vector<Rational> out;
  out.reserve(K);
  Rational s = 0;
  long done = 0;
  for (long k = 1; k <= K; ++k) {
    const long idx = effective_index(kind, k);
    for (; done < idx; ++done) s += summand_exact(kind.family, kind.order, done + 1);
    out.push_back(s);
  }
  return out;
}

std::vector<BigReal> prefix_table(const HarmonicKind& kind, long K, int digits) {
  const int w = digits + kGuardDigits;
  std::vector<BigReal> out;
  out.reserve(K);
  BigReal s(w);
  long done = 0;
  for (long k = 1; k <= K; ++k) {
    const long idx = effective_index(kind, k);
    for (; done < idx; ++done) {
      const long i = done + 1;
      const unsigned long base = kind.family == Family::H ? i : 2 * i - 1;
      s += BigReal(1, w) / ipow(base, static_cast<unsigned long>(kind.order), w);
    }
    out.push_back(s);
  }
  return out;
}

AsymptoticSeries::AsymptoticSeries(int max_log, int J, int precision_digits)
    : max_log_(max_log), J_(J), prec_(precision_digits) {
  if (max_log < 0 || J < 0) throw std::invalid_argument("invalid series shape");
  if (max_log > kMaxLogPower) throw std::domain_error("log power exceeds the configured cap");
  c_.reserve(static_cast<std::size_t>(max_log + 1) * (J + 1));
  for (int i = 0; i < (max_log + 1) * (J + 1); ++i) c_.emplace_back(precision_digits);
}

AsymptoticSeries AsymptoticSeries::constant(const BigReal& c, int J, int precision_digits) {
  AsymptoticSeries s(0, J, precision_digits);
  s.coeff(0, 0) = c.rounded(precision_digits);
  return s;
}

int AsymptoticSeries::leading_j() const {
  for (int j = 0; j <= J_; ++j)
    for (int a = 0; a <= max_log_; ++a)
      if (!coeff(a, j).is_zero()) return j;
  return J_ + 1;
}

int AsymptoticSeries::leading_a() const {
  const int j = leading_j();
  if (j > J_) return 0;
  for (int a = max_log_; a >= 0; --a)
    if (!coeff(a, j).is_zero()) return a;
  return 0;
}

BigReal AsymptoticSeries::evaluate(long k) const { return evaluate(BigReal(k, prec_)); }

BigReal AsymptoticSeries::evaluate(const BigReal& k) const {
  BigReal ln_k = log(k);
  BigReal k_inv = BigReal(1, prec_) / k;
  std::vector<BigReal> ln_pow{BigReal(1, prec_)};
  for (int a = 1; a <= max_log_; ++a) ln_pow.push_back(ln_pow.back() * ln_k);
  BigReal total(prec_);
  BigReal kp(1, prec_);
  for (int j = 0; j <= J_; ++j) {
    BigReal col(prec_);
    for (int a = 0; a <= max_log_; ++a)
      if (!coeff(a, j).is_zero()) col.add_product(coeff(a, j), ln_pow[a]);
    total.add_product(col, kp);
    kp *= k_inv;
  }
  return total;
}

void AsymptoticSeries::widen(int max_log) {
  if (max_log <= max_log_) return;
  if (max_log > kMaxLogPower) throw std::domain_error("log power exceeds the configured cap");
  std::vector<BigReal> c;
  c.reserve(static_cast<std::size_t>(max_log + 1) * (J_ + 1));
  for (int a = 0; a <= max_log; ++a)
    for (int j = 0; j <= J_; ++j) c.push_back(a <= max_log_ ? coeff(a, j) : BigReal(prec_));
  c_.swap(c);
  max_log_ = max_log;
}

AsymptoticSeries& AsymptoticSeries::operator+=(const AsymptoticSeries& o) {
  widen(o.max_log_);
  for (int a = 0; a <= o.max_log_; ++a)
    for (int j = 0; j <= std::min(J_, o.J_); ++j)
      if (!o.coeff(a, j).is_zero()) coeff(a, j) += o.coeff(a, j);
  return *this;
}

AsymptoticSeries& AsymptoticSeries::operator-=(const AsymptoticSeries& o) {
  widen(o.max_log_);
  for (int a = 0; a <= o.max_log_; ++a)
    for (int j = 0; j <= std::min(J_, o.J_); ++j)
      if (!o.coeff(a, j).is_zero()) coeff(a, j) -= o.coeff(a, j);
  return *this;
}

AsymptoticSeries& AsymptoticSeries::scale(const BigReal& s) {
  for (auto& c : c_)
    if (!c.is_zero()) c *= s;
  return *this;
}

AsymptoticSeries& AsymptoticSeries::scale(const Rational& s) {
  for (auto& c : c_)
    if (!c.is_zero()) c *= s;
  return *this;
}

AsymptoticSeries AsymptoticSeries::derivative() const {
  AsymptoticSeries d(max_log_, J_, prec_);
  for (int a = 0; a <= max_log_; ++a) {
    for (int j = 0; j + 1 <= J_; ++j) {
      const BigReal& c = coeff(a, j);
      if (c.is_zero()) continue;
      if (j != 0) d.coeff(a, j + 1) -= c * static_cast<long>(j);
      if (a > 0) d.coeff(a - 1, j + 1) += c * static_cast<long>(a);
    }
  }
  d.error_a = error_a;
  d.error_c = error_c;
  return d;
}

AsymptoticSeries series_product(const AsymptoticSeries& x, const AsymptoticSeries& y, int J) {
  struct Entry {
    int a, j;
    const BigReal* c;
  };
  auto nonzero = [](const AsymptoticSeries& s) {
    std::vector<Entry> v;
    for (int a = 0; a <= s.max_log(); ++a)
      for (int j = 0; j <= s.order(); ++j)
        if (!s.coeff(a, j).is_zero()) v.push_back({a, j, &s.coeff(a, j)});
    return v;
  };
  const auto ex = nonzero(x), ey = nonzero(y);
  int top = 0;
  for (const auto& p : ex)
    for (const auto& q : ey)
      if (p.j + q.j <= J) top = std::max(top, p.a + q.a);
  if (top > kMaxLogPower) throw std::domain_error("product log power exceeds the configured cap");
  const int prec = std::min(x.precision(), y.precision());
  AsymptoticSeries r(top, J, prec);
  for (const auto& p : ex)
    for (const auto& q : ey)
      if (p.j + q.j <= J) r.coeff(p.a + q.a, p.j + q.j).add_product(*p.c, *q.c);
  r.error_a = x.error_a + y.error_a;
  r.error_c = x.error_c + y.error_c;
  return r;
}

AsymptoticSeries series_power(const AsymptoticSeries& a, int power, int J) {
  if (power < 0) throw std::invalid_argument("negative series power");
  AsymptoticSeries r = AsymptoticSeries::constant(BigReal(1, a.precision()), J, a.precision());
  for (int p = 0; p < power; ++p) r = series_product(r, a, J);
  return r;
}

AsymptoticSeries linear_power_series(long alpha, long beta, int e, int J, int precision_digits) {
  if (alpha <= 0) throw std::invalid_argument("linear factor needs a positive slope");
  AsymptoticSeries s(0, J, precision_digits);
  // (alpha k + beta)^-e = sum_r binom(-e, r) beta^r alpha^(-e-r) k^(-e-r)
  Integer alpha_e;
  mpz_ui_pow_ui(alpha_e.get_mpz_t(), static_cast<unsigned long>(alpha), static_cast<unsigned long>(e));
  Rational c(1, alpha_e);
  c.canonicalize();
  for (int r = 0; e + r <= J; ++r) {
    if (c == 0) break;
    s.coeff(0, e + r) = BigReal(c, precision_digits);
    c *= Rational(-(e + r) * beta, (r + 1) * alpha);
    c.canonicalize();
  }
  s.error_c = 1.0;
  s.error_a = 0;
  return s;
}

namespace {

// H^(n) evaluated at c*k.
AsymptoticSeries harmonic_scaled(int n, long c, int J, int digits) {
  const int w = digits + kGuardDigits;
  AsymptoticSeries s(n == 1 ? 1 : 0, J, w);
  auto c_pow_inv = [&](int p) {
    Integer cp;
    mpz_ui_pow_ui(cp.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(p));
    return Rational(1, cp);
  };
  if (n == 1) {
    s.coeff(1, 0) = BigReal(1, w);
    s.coeff(0, 0) = constant_value(ConstantId::gamma(), digits).rounded(w) + log(BigReal(c, w));
    if (J >= 1) s.coeff(0, 1) = BigReal(c_pow_inv(1) / 2, w);
    for (int j = 1; 2 * j <= J; ++j) {
      Rational q = -bernoulli(2 * j) / (2 * j) * c_pow_inv(2 * j);
      s.coeff(0, 2 * j) = BigReal(q, w);
    }
    return s;
  }
  s.coeff(0, 0) = constant_value(ConstantId::zeta(n), digits).rounded(w);
  // tail sum_{i>y} i^-n = y^(1-n)/(n-1) - y^-n/2 + sum_j B_2j/(2j)! (n)_(2j-1) y^(-n-2j+1)
  if (n - 1 <= J) s.coeff(0, n - 1) -= BigReal(c_pow_inv(n - 1) / (n - 1), w);
  if (n <= J) s.coeff(0, n) += BigReal(c_pow_inv(n) / 2, w);
  Integer rising = n;  // (n)_(2j-1)
  Integer fact = 2;    // (2j)!
  for (int j = 1; n + 2 * j - 1 <= J; ++j) {
    if (j > 1) {
      rising *= (n + 2 * j - 3);
      rising *= (n + 2 * j - 2);
      fact *= (2 * j - 1);
      fact *= (2 * j);
    }
    Rational q = bernoulli(2 * j) * Rational(rising, fact) * c_pow_inv(n + 2 * j - 1);
    s.coeff(0, n + 2 * j - 1) -= BigReal(q, w);
  }
  return s;
}

}  // namespace

AsymptoticSeries expansion(const HarmonicKind& kind, int J, int digits) {
  if (J < 0) throw std::invalid_argument("expansion order must be non-negative");
  if (J > 4000) throw std::domain_error("expansion order exceeds the configured cap");
  if (kind.order < 1 || kind.scale < 1) throw std::invalid_argument("invalid harmonic kind");
  const int w = digits + kGuardDigits;
  const long m = kind.scale;
  AsymptoticSeries s = kind.family == Family::H ? harmonic_scaled(kind.order, m, J, digits)
                                                : harmonic_scaled(kind.order, 2 * m, J, digits);
  if (kind.family == Family::h) {
    AsymptoticSeries half = harmonic_scaled(kind.order, m, J, digits);
    Integer two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(kind.order));
    half.scale(Rational(1, two_n));
    s -= half;
  }
  auto term = [&](long t) {
    return kind.family == Family::H ? linear_power_series(m, t, kind.order, J, w)
                                    : linear_power_series(2 * m, 2 * t - 1, kind.order, J, w);
  };
  if (kind.shift > 0)
    for (long t = 1; t <= kind.shift; ++t) s += term(t);
  if (kind.shift < 0)
    for (long t = kind.shift + 1; t <= 0; ++t) s -= term(t);
  s.error_a = kind.order == 1 ? 1 : 0;
  double top = 0.0;
  for (int a = 0; a <= s.max_log(); ++a) top = std::max(top, std::abs(s.coeff(a, J).to_double()));
  s.error_c = 2.0 * top + 1.0;
  return s;
}

}  // namespace eulersums
