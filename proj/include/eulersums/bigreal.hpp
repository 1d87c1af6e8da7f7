#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>

namespace eulersums {

using Integer = mpz_class;
using Rational = mpq_class;

// Guard digits added on top of every requested precision.
inline constexpr int kGuardDigits = 15;

Rational make_rational(long num, long den = 1);
// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed text or q == 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

mpfr_prec_t digits_to_bits(int digits);

// Arbitrary-precision real with an explicit precision in decimal digits.
// Binary operations produce a result at the smaller of the two precisions.
class BigReal {
 public:
  BigReal();
  explicit BigReal(int digits);
  BigReal(long value, int digits);
  BigReal(const Integer& value, int digits);
  BigReal(const Rational& value, int digits);
  BigReal(std::string_view decimal, int digits);
  ~BigReal();

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;

  int digits() const { return digits_; }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  BigReal rounded(int digits) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Approximate floor(log10|x|); a very negative number for zero.
  long log10_abs() const;
  Integer round_to_integer() const;

  // Scientific notation with `significant` digits.
  std::string sci(int significant) const;
  // Fixed notation with `decimals` digits after the point.
  std::string fixed(int decimals) const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator*=(long o);
  BigReal& operator/=(long o);
  BigReal& operator+=(long o);
  BigReal& operator-=(long o);
  BigReal& operator*=(const Rational& o);

  // this += a * b without a temporary.
  void add_product(const BigReal& a, const BigReal& b);

  static BigReal pi(int digits);
  static BigReal ln2(int digits);
  static BigReal pow10(long e, int digits);

 private:
  void match_precision(const BigReal& o);
  mpfr_t v_;
  int digits_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a);
BigReal operator*(const BigReal& a, long b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(const BigReal& a, long b);
BigReal operator*(const BigReal& a, const Rational& b);

int compare(const BigReal& a, const BigReal& b);
int compare_abs(const BigReal& a, const BigReal& b);
inline bool operator<(const BigReal& a, const BigReal& b) { return compare(a, b) < 0; }
inline bool operator>(const BigReal& a, const BigReal& b) { return compare(a, b) > 0; }
inline bool operator<=(const BigReal& a, const BigReal& b) { return compare(a, b) <= 0; }
inline bool operator>=(const BigReal& a, const BigReal& b) { return compare(a, b) >= 0; }
inline bool operator==(const BigReal& a, const BigReal& b) { return compare(a, b) == 0; }

BigReal abs(const BigReal& x);
BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal pow(const BigReal& x, long n);
BigReal pow(const BigReal& x, const BigReal& y);
// x^n for an unsigned integer base, at the given precision.
BigReal ipow(unsigned long base, unsigned long n, int digits);
bool bitwise_equal(const BigReal& a, const BigReal& b);
// Exact value of a finite BigReal.
Rational to_rational(const BigReal& x);

}  // namespace eulersums
