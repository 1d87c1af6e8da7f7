#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulersums/bigreal.hpp"
#include "eulersums/harmonic.hpp"
#include "eulersums/numerics.hpp"

namespace eulersums {

// (scale*k + offset)^exponent; scale in {1, 2}, scale + offset >= 1.
struct LinearFactor {
  int scale = 1;
  int offset = 0;
  int exponent = 1;
  auto operator<=>(const LinearFactor&) const = default;
};

struct Factor {
  HarmonicKind kind;
  int power = 1;
  auto operator<=>(const Factor&) const = default;
};

// Summand over the inner index i of a prefix factor sum_{i<=k} inner(i).
struct InnerTerm {
  std::vector<Factor> factors;
  std::vector<LinearFactor> denominator;
  auto operator<=>(const InnerTerm&) const = default;
};

// sum_{k>=1} prod X^p * P(k)^q / prod (scale*k + offset)^e.
struct SumDescriptor {
  std::vector<Factor> factors;
  std::optional<InnerTerm> prefix;
  int prefix_power = 1;
  std::vector<LinearFactor> denominator;

  // Exponent of k, of the odd factor (2k -+ 1), and the odd factor's offset (-1 or +1; 0 if absent).
  int k_exponent() const;
  int odd_exponent() const;
  int odd_shift() const;
  // Weight by the a+b rule: sum of order*power, prefix weight, all denominator exponents.
  int weight() const;

  auto operator<=>(const SumDescriptor&) const = default;
};

struct LhsTerm {
  Rational coefficient;
  SumDescriptor sum;
};

// Sorts and merges factors so that equal sums print identically.
void normalize(SumDescriptor& d);

// Parses "sum( <numerator> / <denominator> )" (or a bare body). Throws ParseError.
SumDescriptor parse_sum(std::string_view text);
// Parses a rational combination "8*sum( ... ) - 2*sum( ... )". Throws ParseError.
std::vector<LhsTerm> parse_lhs(std::string_view text);

// Canonical body text, e.g. "H(1)*h(1) / k^5".
std::string body_string(const SumDescriptor& d);
// "sum( <body> )"
std::string to_string(const SumDescriptor& d);
std::string to_string(const std::vector<LhsTerm>& lhs);

struct ConvergenceReport {
  int weight = 0;
  LogPowerMonomial leading;  // leading ln^a(k) k^-j of the summand
  bool convergent = false;
};

ConvergenceReport check_convergence(const SumDescriptor& d);

// Partial sum over k = 1..K at digits + kGuardDigits precision. Never errors for finite K.
BigReal eval_direct(const SumDescriptor& d, long K, int digits);
// Partial sum plus the Euler-Maclaurin tail of the summand's expansion truncated at order J.
struct TailedValue {
  BigReal value;
  BigReal truncation;  // size of the last included expansion column
};
TailedValue eval_at(const SumDescriptor& d, long K, int J, int digits);

struct SumValue {
  BigReal value;
  BigReal error_bound;
  long K_used = 0;
  int J_used = 0;
  bool converged = false;
};

// Resource caps of the adaptive schedule; the default admits all 8 doublings from K = 4096.
struct EvalLimits {
  long k_max = 2097152;
  int j_max = 1000;
};
// Also clears the memo, whose values depend on the caps.
void set_eval_limits(const EvalLimits& limits);
EvalLimits eval_limits();

// Adaptive evaluation; memoized per (descriptor, digits). Throws DivergenceError.
SumValue eval_accelerated(const SumDescriptor& d, int digits);
// Rational combination of sums; the error bounds add up.
SumValue eval_lhs(const std::vector<LhsTerm>& lhs, int digits);

// Value of the sum written as "sum( <body> )", used for residual basis constants.
BigReal sum_constant_value(const std::string& descriptor, int digits);

}  // namespace eulersums
