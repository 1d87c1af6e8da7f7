#include "eulersums/sums.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "eulersums/errors.hpp"

namespace eulersums {

namespace {

int total_exponent(const std::vector<LinearFactor>& den) {
  int e = 0;
  for (const auto& f : den) e += f.exponent;
  return e;
}

int log_growth(const std::vector<Factor>& fs) {
  int a = 0;
  for (const auto& f : fs)
    if (f.kind.order == 1) a += f.power;
  return a;
}

int term_weight(const std::vector<Factor>& fs, const std::vector<LinearFactor>& den) {
  int w = total_exponent(den);
  for (const auto& f : fs) w += f.kind.order * f.power;
  return w;
}

// Running value of X_{scale*n+shift} for nondecreasing n.
class Runner {
 public:
  Runner(const HarmonicKind& kind, int w) : kind_(kind), value_(w), term_(w) {}

  const BigReal& at(long n) {
    const long idx = static_cast<long>(kind_.scale) * n + kind_.shift;
    if (idx < 0) throw std::domain_error("harmonic index is negative");
    while (done_ < idx) {
      ++done_;
      const unsigned long base = kind_.family == Family::H ? done_ : 2 * done_ - 1;
      mpfr_set_ui(term_.raw(), base, MPFR_RNDN);
      mpfr_pow_ui(term_.raw(), term_.raw(), static_cast<unsigned long>(kind_.order), MPFR_RNDN);
      mpfr_ui_div(term_.raw(), 1, term_.raw(), MPFR_RNDN);
      mpfr_add(value_.raw(), value_.raw(), term_.raw(), MPFR_RNDN);
    }
    return value_;
  }

 private:
  HarmonicKind kind_;
  long done_ = 0;
  BigReal value_;
  BigReal term_;
};

// Summand prod X^p * extra^q / prod (scale*n + offset)^e for increasing n.
class TermStream {
 public:
  TermStream(const std::vector<Factor>& fs, const std::vector<LinearFactor>& den, int w)
      : factors_(fs), den_(den), tmp_(w), den_value_(w) {
    for (const auto& f : fs) runners_.emplace_back(f.kind, w);
  }

  void value(long n, BigReal& out, const BigReal* extra, int extra_power) {
    mpfr_set_ui(out.raw(), 1, MPFR_RNDN);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const BigReal& x = runners_[i].at(n);
      if (factors_[i].power == 1) {
        mpfr_mul(out.raw(), out.raw(), x.raw(), MPFR_RNDN);
      } else {
        mpfr_pow_ui(tmp_.raw(), x.raw(), static_cast<unsigned long>(factors_[i].power), MPFR_RNDN);
        mpfr_mul(out.raw(), out.raw(), tmp_.raw(), MPFR_RNDN);
      }
    }
    if (extra) {
      mpfr_pow_ui(tmp_.raw(), extra->raw(), static_cast<unsigned long>(extra_power), MPFR_RNDN);
      mpfr_mul(out.raw(), out.raw(), tmp_.raw(), MPFR_RNDN);
    }
    mpfr_set_ui(den_value_.raw(), 1, MPFR_RNDN);
    for (const auto& f : den_) {
      const long base = static_cast<long>(f.scale) * n + f.offset;
      if (base <= 0) throw std::domain_error("denominator vanishes");
      mpfr_set_ui(tmp_.raw(), static_cast<unsigned long>(base), MPFR_RNDN);
      mpfr_pow_ui(tmp_.raw(), tmp_.raw(), static_cast<unsigned long>(f.exponent), MPFR_RNDN);
      mpfr_mul(den_value_.raw(), den_value_.raw(), tmp_.raw(), MPFR_RNDN);
    }
    mpfr_div(out.raw(), out.raw(), den_value_.raw(), MPFR_RNDN);
  }

 private:
  std::vector<Factor> factors_;
  std::vector<LinearFactor> den_;
  std::vector<Runner> runners_;
  BigReal tmp_;
  BigReal den_value_;
};

BigReal direct_impl(const SumDescriptor& d, long K, int w, BigReal* prefix_at_K) {
  TermStream outer(d.factors, d.denominator, w);
  std::optional<TermStream> inner;
  if (d.prefix) inner.emplace(d.prefix->factors, d.prefix->denominator, w);
  BigReal sum(w), t(w), g(w), P(w);
  for (long k = 1; k <= K; ++k) {
    if (inner) {
      inner->value(k, g, nullptr, 1);
      mpfr_add(P.raw(), P.raw(), g.raw(), MPFR_RNDN);
      outer.value(k, t, &P, d.prefix_power);
    } else {
      outer.value(k, t, nullptr, 1);
    }
    mpfr_add(sum.raw(), sum.raw(), t.raw(), MPFR_RNDN);
  }
  if (prefix_at_K) *prefix_at_K = P;
  return sum;
}

AsymptoticSeries denominator_series(const std::vector<LinearFactor>& den, int J, int w) {
  AsymptoticSeries s = AsymptoticSeries::constant(BigReal(1, w), J, w);
  for (const auto& f : den) s = series_product(s, linear_power_series(f.scale, f.offset, f.exponent, J, w), J);
  return s;
}

AsymptoticSeries numerator_series(const std::vector<Factor>& fs, int J, int digits) {
  const int w = digits + kGuardDigits;
  AsymptoticSeries s = AsymptoticSeries::constant(BigReal(1, w), J, w);
  for (const auto& f : fs) s = series_product(s, series_power(expansion(f.kind, J, digits), f.power, J), J);
  return s;
}

// Expansion of P(k) = sum_{i<=k} g(i) to order Jp: the Euler-Maclaurin form
// integral + g/2 + sum B_2m/(2m)! g^(2m-1), with the constant fixed by P(K).
AsymptoticSeries prefix_series(const InnerTerm& inner, int Jp, long K, const BigReal& P_K, int digits) {
  const int w = digits + kGuardDigits;
  const int je = total_exponent(inner.denominator);
  if (je < 1) throw DivergenceError("prefix summand does not decay");
  const int Jg = Jp + 1;
  AsymptoticSeries G = series_product(numerator_series(inner.factors, std::max(0, Jg - je), digits),
                                      denominator_series(inner.denominator, Jg, w), Jg);
  AsymptoticSeries D(G.max_log() + 1, Jp, w);
  for (int a = 0; a <= G.max_log(); ++a) {
    for (int j = 0; j <= Jg; ++j) {
      const BigReal& c = G.coeff(a, j);
      if (c.is_zero()) continue;
      if (j == 0) throw DivergenceError("prefix summand does not decay");
      if (j == 1) {
        D.coeff(a + 1, 0) += c / static_cast<long>(a + 1);
        continue;
      }
      // antiderivative of ln^a x x^-j is -x^(1-j) sum_b a!/b! ln^b x / (j-1)^(a-b+1)
      Integer fact_ratio = 1;
      for (int b = a; b >= 0; --b) {
        if (b < a) fact_ratio *= (b + 1);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(j - 1), static_cast<unsigned long>(a - b + 1));
        Rational q(fact_ratio, den);
        q.canonicalize();
        D.coeff(b, j - 1) -= c * q;
      }
    }
  }
  for (int a = 0; a <= G.max_log(); ++a)
    for (int j = 0; j <= Jp; ++j)
      if (!G.coeff(a, j).is_zero()) D.coeff(a, j) += G.coeff(a, j) / 2;
  AsymptoticSeries deriv = G;
  Integer factorial = 1;
  for (int m = 1;; ++m) {
    deriv = deriv.derivative();
    if (m > 1) deriv = deriv.derivative();
    factorial *= (2 * m - 1) * (2 * m);
    if (deriv.leading_j() > Jp) break;
    const Rational coef = bernoulli(2 * m) / factorial;
    for (int a = 0; a <= deriv.max_log(); ++a)
      for (int j = 0; j <= Jp; ++j)
        if (!deriv.coeff(a, j).is_zero()) D.coeff(a, j) += deriv.coeff(a, j) * coef;
  }
  D.coeff(0, 0) += P_K - D.evaluate(K);
  return D;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::string, int>, SumValue>& value_cache() {
  static std::map<std::pair<std::string, int>, SumValue> cache;
  return cache;
}

}  // namespace

int SumDescriptor::k_exponent() const {
  for (const auto& f : denominator)
    if (f.scale == 1 && f.offset == 0) return f.exponent;
  return 0;
}

int SumDescriptor::odd_exponent() const {
  int e = 0;
  for (const auto& f : denominator)
    if (f.scale == 2 && (f.offset == -1 || f.offset == 1)) e += f.exponent;
  return e;
}

int SumDescriptor::odd_shift() const {
  for (const auto& f : denominator)
    if (f.scale == 2 && (f.offset == -1 || f.offset == 1)) return f.offset;
  return 0;
}

int SumDescriptor::weight() const {
  int w = term_weight(factors, denominator);
  if (prefix) w += prefix_power * term_weight(prefix->factors, prefix->denominator);
  return w;
}

ConvergenceReport check_convergence(const SumDescriptor& d) {
  ConvergenceReport r;
  r.weight = d.weight();
  int a = log_growth(d.factors);
  bool ok = true;
  if (d.prefix) {
    const int je = total_exponent(d.prefix->denominator);
    if (je == 0) ok = false;
    if (je == 1) a += d.prefix_power * (log_growth(d.prefix->factors) + 1);
  }
  r.leading = {a, total_exponent(d.denominator)};
  r.convergent = ok && r.leading.j >= 2;
  return r;
}

BigReal eval_direct(const SumDescriptor& d, long K, int digits) {
  if (K < 0) throw std::invalid_argument("K must be non-negative");
  return direct_impl(d, K, digits + kGuardDigits, nullptr);
}

TailedValue eval_at(const SumDescriptor& d, long K, int J, int digits) {
  if (!check_convergence(d).convergent) throw DivergenceError("divergent sum: " + to_string(d));
  const int w = digits + kGuardDigits;
  const int je = total_exponent(d.denominator);
  J = std::max(J, je);
  BigReal P_K(w);
  BigReal value = direct_impl(d, K, w, &P_K);
  const int Jn = J - je;
  AsymptoticSeries N = numerator_series(d.factors, Jn, digits);
  if (d.prefix) {
    AsymptoticSeries P = prefix_series(*d.prefix, Jn, K, P_K, digits);
    N = series_product(N, series_power(P, d.prefix_power, Jn), Jn);
  }
  AsymptoticSeries F = series_product(N, denominator_series(d.denominator, J, w), J);
  BigReal last(w);
  for (int a = 0; a <= F.max_log(); ++a) {
    for (int j = 0; j <= J; ++j) {
      const BigReal& c = F.coeff(a, j);
      if (c.is_zero()) continue;
      if (j < 2) throw DivergenceError("summand decays too slowly: " + to_string(d));
      BigReal t = c * tail_log_power(a, j, K, digits + 5);
      value += t;
      if (j == J) last += t;
    }
  }
  return {value, abs(last)};
}

namespace {

EvalLimits& limits_ref() {
  static EvalLimits l;
  return l;
}

}  // namespace

void set_eval_limits(const EvalLimits& limits) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  limits_ref() = limits;
  value_cache().clear();
}

EvalLimits eval_limits() {
  std::lock_guard<std::mutex> lock(cache_mutex());
  return limits_ref();
}

SumValue eval_accelerated(const SumDescriptor& d, int digits) {
  const auto key = std::make_pair(to_string(d), digits);
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = value_cache().find(key);
    if (it != value_cache().end()) return it->second;
  }
  if (!check_convergence(d).convergent) throw DivergenceError("divergent sum: " + to_string(d));
  const EvalLimits caps = eval_limits();
  const int w = digits + kGuardDigits;
  const BigReal target = BigReal::pow10(-digits, w);
  long K = std::min<long>(4096, std::max<long>(caps.k_max / 2, 16));
  int J = std::min(digits / 2 + 8, std::max(caps.j_max - 10, 0));
  TailedValue v1 = eval_at(d, K, J, digits);
  SumValue out;
  for (int doubling = 0; doubling < 8; ++doubling) {
    TailedValue v2 = eval_at(d, 2 * K, J + 10, digits);
    BigReal diff = abs(v2.value - v1.value);
    out.value = v2.value;
    out.K_used = 2 * K;
    out.J_used = J + 10;
    BigReal bound = diff;
    if (v2.truncation > bound) bound = v2.truncation;
    const BigReal floor = BigReal::pow10(-(digits + 10), w);
    if (floor > bound) bound = floor;
    out.error_bound = bound;
    if (diff <= target) {
      out.converged = true;
      break;
    }
    if (4 * K > caps.k_max || J + 20 > caps.j_max) break;
    v1 = std::move(v2);
    K *= 2;
    J += 10;
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  return value_cache().emplace(key, out).first->second;
}

SumValue eval_lhs(const std::vector<LhsTerm>& lhs, int digits) {
  const int w = digits + kGuardDigits;
  SumValue out{BigReal(w), BigReal(w), 0, 0, true};
  for (const auto& t : lhs) {
    SumValue v = eval_accelerated(t.sum, digits);
    out.value += v.value * t.coefficient;
    out.error_bound += abs(v.error_bound * t.coefficient);
    out.K_used = std::max(out.K_used, v.K_used);
    out.J_used = std::max(out.J_used, v.J_used);
    out.converged = out.converged && v.converged;
  }
  return out;
}

BigReal sum_constant_value(const std::string& descriptor, int digits) {
  return eval_accelerated(parse_sum(descriptor), digits).value;
}

}  // namespace eulersums
