#include "eulersums/closedform.hpp"

#include <cctype>

#include "eulersums/errors.hpp"
#include "eulersums/sums.hpp"

namespace eulersums {

void ClosedForm::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational ClosedForm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ClosedForm& ClosedForm::operator-=(const ClosedForm& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ClosedForm ClosedForm::scaled(const Rational& s) const {
  ClosedForm r;
  if (s == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
ClosedForm operator-(ClosedForm a, const ClosedForm& b) { return a -= b; }

namespace {

class FormParser {
 public:
  explicit FormParser(std::string_view s) : s_(s) {}

  ClosedForm parse() {
    ClosedForm cf;
    bool first = true;
    while (!at_end()) {
      const std::size_t start = p_;
      bool neg = false;
      if (accept('-')) {
        neg = true;
      } else if (!accept('+') && !first) {
        fail("expected '+' or '-'");
      }
      Rational c = 1;
      bool have_coef = false;
      if (peek_digit()) {
        c = rational();
        have_coef = true;
        if (accept('*') && !std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a constant after '*'");
      }
      Monomial m;
      if (std::isalpha(static_cast<unsigned char>(peek()))) {
        m = monomial();
      } else if (!have_coef) {
        p_ = start;
        fail("expected a coefficient or a constant");
      }
      cf.add(m, neg ? Rational(-c) : c);
      first = false;
    }
    if (first) fail("empty expression");
    return cf;
  }

 private:
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool at_end() {
    skip();
    return p_ >= s_.size();
  }
  char peek() {
    skip();
    return p_ < s_.size() ? s_[p_] : '\0';
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++p_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, p_); }

  Integer integer() {
    skip();
    const std::size_t start = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (start == p_) fail("expected a number");
    return Integer(std::string(s_.substr(start, p_ - start)));
  }

  Rational rational() {
    Integer num = integer();
    Integer den = 1;
    const std::size_t slash = p_;
    if (accept('/')) {
      den = integer();
      if (den == 0) {
        p_ = slash;
        fail("zero denominator");
      }
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  ConstantId atom() {
    skip();
    const std::size_t start = p_;
    if (s_.substr(p_, 2) == "S[") {
      p_ += 2;
      int depth = 1;
      const std::size_t body_start = p_;
      while (p_ < s_.size() && depth > 0) {
        if (s_[p_] == '[') ++depth;
        if (s_[p_] == ']') --depth;
        ++p_;
      }
      if (depth != 0) {
        p_ = start;
        fail("unterminated S[");
      }
      const std::string_view body = s_.substr(body_start, p_ - 1 - body_start);
      SumDescriptor d;
      try {
        d = parse_sum(body);
      } catch (const ParseError& e) {
        throw ParseError(std::string("in sum constant: ") + e.what(), body_start + e.position());
      }
      return ConstantId::sum_constant(body_string(d), d.weight());
    }
    while (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) ++p_;
    const std::string name(s_.substr(start, p_ - start));
    try {
      return constant_from_name(name);
    } catch (const UnknownNameError&) {
      throw UnknownNameError("unknown constant '" + name + "' at position " + std::to_string(start));
    }
  }

  Monomial monomial() {
    Monomial m;
    for (;;) {
      ConstantId id = atom();
      int e = 1;
      if (accept('^')) {
        Integer n = integer();
        if (n < 1 || n > 64) fail("exponent out of range");
        e = static_cast<int>(n.get_si());
      }
      m.multiply(id, e);
      if (peek() != '*') break;
      ++p_;
    }
    return m;
  }

  std::string_view s_;
  std::size_t p_ = 0;
};

}  // namespace

ClosedForm parse_closedform(std::string_view text) { return FormParser(text).parse(); }

std::string serialize(const ClosedForm& cf) {
  if (cf.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : cf.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (m.is_unit()) {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + "*";
      s += m.str();
    }
    first = false;
  }
  return s;
}

BigReal evaluate(const ClosedForm& cf, int digits) {
  const int w = digits + kGuardDigits;
  BigReal total(w);
  for (const auto& [m, c] : cf.terms()) total += monomial_value(m, digits) * c;
  return total;
}

std::set<int> weights(const ClosedForm& cf) {
  std::set<int> out;
  for (const auto& [m, c] : cf.terms()) out.insert(m.weight());
  return out;
}

bool is_homogeneous(const ClosedForm& cf) { return weights(cf).size() <= 1; }

}  // namespace eulersums
