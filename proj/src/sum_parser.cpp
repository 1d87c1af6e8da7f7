#include <algorithm>
#include <cctype>
#include <tuple>

#include "eulersums/errors.hpp"
#include "eulersums/sums.hpp"

namespace eulersums {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  std::size_t pos() const { return p_; }
  void set_pos(std::size_t p) { p_ = p; }

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
  bool accept(char c) {
    if (peek() != c) return false;
    ++p_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(p_, w.size()) != w) return false;
    p_ += w.size();
    return true;
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  long number() {
    skip();
    if (!peek_digit()) fail("expected a number");
    long v = 0;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
      v = v * 10 + (s_[p_] - '0');
      if (v > 1000000) fail("number too large");
      ++p_;
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, p_); }

  // '[' [N] var [+-N] ']' or '[' +-N ']'
  void index(char var, HarmonicKind& kind) {
    long scale = 1;
    long shift = 0;
    bool any = false;
    if (peek_digit()) {
      scale = number();
      if (!accept(var)) fail(std::string("expected '") + var + "' in index");
      any = true;
    } else if (accept(var)) {
      any = true;
    }
    if (peek() == '+' || peek() == '-') {
      const bool neg = accept('-');
      if (!neg) expect('+');
      shift = number();
      if (neg) shift = -shift;
      any = true;
    }
    if (!any) fail("empty index");
    if (scale < 1 || scale > 2) fail("index scale must be 1 or 2");
    if (scale + shift < 0) fail("index is negative at the first term");
    kind.scale = static_cast<int>(scale);
    kind.shift = static_cast<int>(shift);
    expect(']');
  }

  int exponent() {
    if (!accept('^')) return 1;
    const long e = number();
    if (e < 1 || e > 64) fail("exponent out of range");
    return static_cast<int>(e);
  }

  Factor harmonic_factor(char var) {
    Factor f;
    const char c = peek();
    if (c != 'H' && c != 'h') fail("expected H(n), h(n) or P[...]");
    ++p_;
    f.kind.family = c == 'H' ? Family::H : Family::h;
    expect('(');
    const long n = number();
    if (n < 1 || n > 12) fail("harmonic order out of range");
    f.kind.order = static_cast<int>(n);
    expect(')');
    if (accept('[')) index(var, f.kind);
    f.power = exponent();
    return f;
  }

  // [N] var [+-N] inside parentheses; returns false (position restored) if not linear.
  bool linear(char var, LinearFactor& lf) {
    const std::size_t start = p_;
    long scale = 1;
    if (peek_digit()) scale = number();
    if (!accept(var)) {
      p_ = start;
      return false;
    }
    long offset = 0;
    if (peek() == '+' || peek() == '-') {
      const bool neg = accept('-');
      if (!neg) expect('+');
      offset = number();
      if (neg) offset = -offset;
    }
    if (peek() != ')') {
      p_ = start;
      return false;
    }
    if (scale < 1 || scale > 2) fail("denominator slope must be 1 or 2");
    if (scale + offset < 1) fail("denominator vanishes at the first term");
    lf.scale = static_cast<int>(scale);
    lf.offset = static_cast<int>(offset);
    return true;
  }

  void denominator_factor(char var, std::vector<LinearFactor>& out, bool nested) {
    if (accept(var)) {
      LinearFactor lf;
      lf.exponent = exponent();
      out.push_back(lf);
      return;
    }
    if (!accept('(')) fail(std::string("expected '") + var + "' or '('");
    LinearFactor lf;
    if (linear(var, lf)) {
      expect(')');
      lf.exponent = exponent();
      out.push_back(lf);
      return;
    }
    if (nested) fail("nested product in denominator");
    denominator_product(var, out, true);
    expect(')');
  }

  void denominator_product(char var, std::vector<LinearFactor>& out, bool nested) {
    denominator_factor(var, out, nested);
    while (accept('*')) denominator_factor(var, out, nested);
  }

  InnerTerm term(char var, std::optional<InnerTerm>* prefix, int* prefix_power) {
    InnerTerm t;
    if (peek() == '1') {
      if (number() != 1) fail("numerator constant must be 1");
    } else {
      for (;;) {
        if (peek() == 'P') {
          if (!prefix) fail("prefix sums nest only one level");
          ++p_;
          if (prefix->has_value()) fail("at most one prefix factor");
          expect('[');
          InnerTerm inner = term('i', nullptr, nullptr);
          expect(']');
          *prefix = std::move(inner);
          *prefix_power = exponent();
        } else {
          t.factors.push_back(harmonic_factor(var));
        }
        if (!accept('*')) break;
      }
    }
    expect('/');
    denominator_product(var, t.denominator, false);
    return t;
  }

  SumDescriptor sum() {
    const bool wrapped = accept_word("sum");
    if (wrapped) expect('(');
    SumDescriptor d;
    InnerTerm outer = term('k', &d.prefix, &d.prefix_power);
    d.factors = std::move(outer.factors);
    d.denominator = std::move(outer.denominator);
    if (wrapped) expect(')');
    normalize(d);
    return d;
  }

 private:
  std::string_view s_;
  std::size_t p_ = 0;
};

void normalize_factors(std::vector<Factor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.kind < b.kind; });
  std::vector<Factor> out;
  for (const auto& f : fs) {
    if (!out.empty() && out.back().kind == f.kind)
      out.back().power += f.power;
    else
      out.push_back(f);
  }
  fs.swap(out);
}

void normalize_denominator(std::vector<LinearFactor>& ds) {
  std::sort(ds.begin(), ds.end(), [](const LinearFactor& a, const LinearFactor& b) {
    return std::tie(a.scale, a.offset) < std::tie(b.scale, b.offset);
  });
  std::vector<LinearFactor> out;
  for (const auto& f : ds) {
    if (!out.empty() && out.back().scale == f.scale && out.back().offset == f.offset)
      out.back().exponent += f.exponent;
    else
      out.push_back(f);
  }
  ds.swap(out);
}

std::string index_string(const HarmonicKind& k, char var) {
  if (k.scale == 1 && k.shift == 0) return "";
  std::string s = "[";
  if (k.scale != 1) s += std::to_string(k.scale) + var;
  if (k.shift > 0) s += "+" + std::to_string(k.shift);
  if (k.shift < 0) s += std::to_string(k.shift);
  return s + "]";
}

std::string factors_string(const std::vector<Factor>& fs, char var) {
  std::string s;
  for (const auto& f : fs) {
    if (!s.empty()) s += "*";
    s += f.kind.family == Family::H ? "H(" : "h(";
    s += std::to_string(f.kind.order) + ")" + index_string(f.kind, var);
    if (f.power != 1) s += "^" + std::to_string(f.power);
  }
  return s;
}

std::string linear_string(const LinearFactor& f, char var) {
  std::string s;
  if (f.scale == 1 && f.offset == 0) {
    s = std::string(1, var);
  } else {
    s = "(";
    if (f.scale != 1) s += std::to_string(f.scale);
    s += var;
    if (f.offset > 0) s += "+" + std::to_string(f.offset);
    if (f.offset < 0) s += std::to_string(f.offset);
    s += ")";
  }
  return s + "^" + std::to_string(f.exponent);
}

std::string denominator_string(const std::vector<LinearFactor>& ds, char var) {
  if (ds.size() == 1) return linear_string(ds[0], var);
  std::string s = "(";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) s += "*";
    s += linear_string(ds[i], var);
  }
  return s + ")";
}

std::string term_string(const std::vector<Factor>& fs, const std::string& extra, const std::vector<LinearFactor>& ds,
                        char var) {
  std::string num = factors_string(fs, var);
  if (!extra.empty()) num += (num.empty() ? "" : "*") + extra;
  if (num.empty()) num = "1";
  return num + " / " + denominator_string(ds, var);
}

}  // namespace

void normalize(SumDescriptor& d) {
  normalize_factors(d.factors);
  normalize_denominator(d.denominator);
  if (d.prefix) {
    normalize_factors(d.prefix->factors);
    normalize_denominator(d.prefix->denominator);
  }
}

SumDescriptor parse_sum(std::string_view text) {
  Parser p(text);
  SumDescriptor d = p.sum();
  if (!p.at_end()) p.fail("unexpected trailing text");
  return d;
}

std::vector<LhsTerm> parse_lhs(std::string_view text) {
  Parser p(text);
  std::vector<LhsTerm> out;
  bool first = true;
  while (!p.at_end()) {
    bool neg = false;
    if (p.accept('-')) {
      neg = true;
    } else if (!p.accept('+') && !first) {
      p.fail("expected '+' or '-'");
    }
    Rational c = 1;
    if (p.peek_digit()) {
      Integer num = static_cast<unsigned long>(p.number());
      Integer den = 1;
      if (p.accept('/')) den = static_cast<unsigned long>(p.number());
      if (den == 0) p.fail("zero denominator");
      c = Rational(num, den);
      c.canonicalize();
      p.expect('*');
    }
    if (neg) c = -c;
    const std::size_t at = p.pos();
    p.skip();
    if (!p.accept_word("sum")) p.fail("expected sum(");
    p.set_pos(at);
    out.push_back({c, p.sum()});
    first = false;
  }
  if (out.empty()) p.fail("empty sum expression");
  return out;
}

std::string body_string(const SumDescriptor& d) {
  std::string extra;
  if (d.prefix) {
    extra = "P[ " + term_string(d.prefix->factors, "", d.prefix->denominator, 'i') + " ]";
    if (d.prefix_power != 1) extra += "^" + std::to_string(d.prefix_power);
  }
  return term_string(d.factors, extra, d.denominator, 'k');
}

std::string to_string(const SumDescriptor& d) { return "sum( " + body_string(d) + " )"; }

std::string to_string(const std::vector<LhsTerm>& lhs) {
  std::string s;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    Rational c = lhs[i].coefficient;
    if (c < 0) {
      s += i ? " - " : "-";
      c = -c;
    } else if (i) {
      s += " + ";
    }
    if (c != 1) s += to_string(c) + "*";
    s += to_string(lhs[i].sum);
  }
  return s;
}

}  // namespace eulersums
