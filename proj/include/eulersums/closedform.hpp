#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "eulersums/bigreal.hpp"
#include "eulersums/constants.hpp"

namespace eulersums {

// Sum of rational multiples of basis monomials; zero coefficients are never stored.
class ClosedForm {
 public:
  using Terms = std::map<Monomial, Rational, CanonicalOrder>;

  ClosedForm() = default;

  void add(const Monomial& m, const Rational& c);
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  ClosedForm& operator+=(const ClosedForm& o);
  ClosedForm& operator-=(const ClosedForm& o);
  ClosedForm scaled(const Rational& s) const;

  friend bool operator==(const ClosedForm& a, const ClosedForm& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

ClosedForm operator+(ClosedForm a, const ClosedForm& b);
ClosedForm operator-(ClosedForm a, const ClosedForm& b);

// term := [sign] rational? ['*'] monomial?; atoms z<N>, ln2, li<N>, gamma, R<N>, S[ <sum body> ].
// Throws ParseError (with position) or UnknownNameError.
ClosedForm parse_closedform(std::string_view text);
// Canonical text, "0" for the empty form.
std::string serialize(const ClosedForm& cf);
BigReal evaluate(const ClosedForm& cf, int digits);

std::set<int> weights(const ClosedForm& cf);
// Every monomial carries the same weight (vacuously true for the empty form).
bool is_homogeneous(const ClosedForm& cf);

}  // namespace eulersums
