#include "eulersums/bigreal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace eulersums {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) throw std::invalid_argument("malformed rational: " + std::string(text));
  std::string n(num[0] == '+' ? num.substr(1) : num);
  std::string d(den[0] == '+' ? den.substr(1) : den);
  Integer zn(n), zd(d);
  if (zd == 0) throw std::invalid_argument("zero denominator");
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 4;
}

BigReal::BigReal() : BigReal(30) {}

BigReal::BigReal(int digits) : digits_(digits) {
  mpfr_init2(v_, digits_to_bits(digits));
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, int digits) : digits_(digits) {
  mpfr_init2(v_, digits_to_bits(digits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const Integer& value, int digits) : digits_(digits) {
  mpfr_init2(v_, digits_to_bits(digits));
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, int digits) : digits_(digits) {
  mpfr_init2(v_, digits_to_bits(digits));
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(std::string_view decimal, int digits) : digits_(digits) {
  mpfr_init2(v_, digits_to_bits(digits));
  std::string s(decimal);
  if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("malformed decimal: " + s);
  }
}

BigReal::~BigReal() {
  if (v_->_mpfr_d) mpfr_clear(v_);
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
  *v_ = *other.v_;
  other.v_->_mpfr_d = nullptr;
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this == &other) return *this;
  if (!v_->_mpfr_d) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
  } else if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
  }
  mpfr_set(v_, other.v_, MPFR_RNDN);
  digits_ = other.digits_;
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  std::swap(*v_, *other.v_);
  std::swap(digits_, other.digits_);
  return *this;
}

BigReal BigReal::rounded(int digits) const {
  BigReal r(digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long BigReal::log10_abs() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  if (!mpfr_number_p(v_)) return 1L << 40;
  long e = mpfr_get_exp(v_);  // |x| in [2^(e-1), 2^e)
  return static_cast<long>(std::floor((e - 1) * 0.30102999566398120));
}

Integer BigReal::round_to_integer() const {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

std::string BigReal::sci(int significant) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(0, significant - 1), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string BigReal::fixed(int decimals) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", decimals, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  if (s.size() > 1 && s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

void BigReal::match_precision(const BigReal& o) {
  if (o.digits_ < digits_) {
    mpfr_prec_round(v_, digits_to_bits(o.digits_), MPFR_RNDN);
    digits_ = o.digits_;
  }
}

BigReal& BigReal::operator+=(const BigReal& o) {
  match_precision(o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& o) {
  match_precision(o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& o) {
  match_precision(o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& o) {
  match_precision(o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator+=(long o) {
  mpfr_add_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const Rational& o) {
  mpfr_mul_q(v_, v_, o.get_mpq_t(), MPFR_RNDN);
  return *this;
}

void BigReal::add_product(const BigReal& a, const BigReal& b) {
  mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN);
}

BigReal BigReal::pi(int digits) {
  BigReal r(digits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::ln2(int digits) {
  BigReal r(digits);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow10(long e, int digits) {
  BigReal r(10, digits);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

namespace {
int min_digits(const BigReal& a, const BigReal& b) { return std::min(a.digits(), b.digits()); }
}  // namespace

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(min_digits(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(min_digits(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(min_digits(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(min_digits(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a) {
  BigReal r(a.digits());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, long b) {
  BigReal r(a.digits());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigReal operator*(long a, const BigReal& b) { return b * a; }
BigReal operator/(const BigReal& a, long b) {
  BigReal r(a.digits());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, const Rational& b) {
  BigReal r(a.digits());
  mpfr_mul_q(r.raw(), a.raw(), b.get_mpq_t(), MPFR_RNDN);
  return r;
}

int compare(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.raw(), b.raw()); }
int compare_abs(const BigReal& a, const BigReal& b) { return mpfr_cmpabs(a.raw(), b.raw()); }

BigReal abs(const BigReal& x) {
  BigReal r(x.digits());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
BigReal log(const BigReal& x) {
  BigReal r(x.digits());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
BigReal exp(const BigReal& x) {
  BigReal r(x.digits());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
BigReal sqrt(const BigReal& x) {
  BigReal r(x.digits());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
BigReal pow(const BigReal& x, long n) {
  BigReal r(x.digits());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}
BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(min_digits(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
BigReal ipow(unsigned long base, unsigned long n, int digits) {
  BigReal r(digits);
  mpfr_ui_pow_ui(r.raw(), base, n, MPFR_RNDN);
  return r;
}
bool bitwise_equal(const BigReal& a, const BigReal& b) {
  if (mpfr_get_prec(a.raw()) != mpfr_get_prec(b.raw())) return false;
  if (mpfr_nan_p(a.raw()) || mpfr_nan_p(b.raw())) return false;
  return mpfr_equal_p(a.raw(), b.raw()) && mpfr_signbit(a.raw()) == mpfr_signbit(b.raw());
}

Rational to_rational(const BigReal& x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x.raw());
  return q;
}

}  // namespace eulersums
