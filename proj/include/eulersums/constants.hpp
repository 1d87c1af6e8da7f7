#pragma once

#include <map>
#include <string>
#include <vector>

#include "eulersums/bigreal.hpp"

namespace eulersums {

enum class ConstKind { Zeta, LiHalf, Ln2, Gamma, Residual };

// A basis constant. Residuals are sums bound to a sum-DSL descriptor: the
// named ones R1..R4, or inline sum constants written S[...].
struct ConstantId {
  ConstKind kind = ConstKind::Ln2;
  int index = 0;           // n for Zeta(n) and LiHalf(n)
  std::string name;        // residuals only: "R1" or "S[<body>]"
  std::string descriptor;  // residuals only: "sum( <body> )"
  int weight = 1;

  static ConstantId zeta(int n);
  static ConstantId li_half(int n);
  static ConstantId ln2();
  static ConstantId gamma();
  // Named residual R1..R4; throws UnknownNameError otherwise.
  static ConstantId residual(const std::string& name);
  // Inline sum constant; `body` is the canonical text inside sum( ... ).
  static ConstantId sum_constant(const std::string& body, int weight);

  std::string symbol() const;
  bool is_residual() const { return kind == ConstKind::Residual; }
  bool is_even_zeta() const { return kind == ConstKind::Zeta && index % 2 == 0; }
};

bool operator==(const ConstantId& a, const ConstantId& b);
// Order of atoms inside a printed monomial: lighter first (ln2*z2).
bool print_before(const ConstantId& a, const ConstantId& b);

struct PrintOrder {
  bool operator()(const ConstantId& a, const ConstantId& b) const { return print_before(a, b); }
};

// Product of constants with positive exponents; empty = the unit monomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const ConstantId& id, int exponent = 1);

  void multiply(const ConstantId& id, int exponent = 1);
  Monomial operator*(const Monomial& o) const;
  const std::map<ConstantId, int, PrintOrder>& atoms() const { return atoms_; }
  bool is_unit() const { return atoms_.empty(); }
  int weight() const;
  int residual_count() const;
  std::string str() const;  // "ln2^2*z3", "1" for the unit

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.atoms_ == b.atoms_; }

 private:
  std::map<ConstantId, int, PrintOrder> atoms_;
};

// Canonical monomial order used by serialization, reports and bases.
bool canonical_less(const Monomial& a, const Monomial& b);

struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return canonical_less(a, b); }
};

// Value correct to 10^-digits, returned at digits + kGuardDigits precision.
// Memoized; identical calls return bitwise-identical values.
BigReal constant_value(const ConstantId& id, int digits);
BigReal monomial_value(const Monomial& m, int digits);

// Throws UnknownNameError for names outside z2..z12, ln2, li1..li12, gamma, R1..R4.
ConstantId constant_from_name(const std::string& name);

std::vector<Monomial> basis_monomials(int weight, bool include_residuals, bool include_lower_weights);

void set_digit_cap(int cap);
int digit_cap();

// On-disk cache ("name digits value" lines). The path defaults to $EULERSUMS_CACHE.
std::string default_cache_path();
void load_constant_cache(const std::string& path);
void save_constant_cache(const std::string& path);

}  // namespace eulersums
