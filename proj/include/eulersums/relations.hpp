#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulersums/bigreal.hpp"
#include "eulersums/closedform.hpp"
#include "eulersums/sums.hpp"

namespace eulersums {

inline constexpr long kDiscoveryMaxCoeff = 10000;
inline constexpr long kCorrectionMaxCoeff = 1000000;

struct RelationResult {
  // Primitive integer vector with sum c_i x_i ~ 0; first nonzero entry positive.
  std::optional<std::vector<Integer>> coefficients;
  BigReal residual;
  int confidence_digits = 0;
  // Lower bound on the Euclidean norm of any relation, when none was found.
  BigReal norm_bound;
  int iterations = 0;
  // "found", "norm-bound", "iteration-limit", "precision-exhausted" or "low-confidence".
  std::string status;
};

// Ferguson-Bailey PSLQ with gamma = sqrt(4/3). A relation is accepted when
// |sum c_i x_i| <= 10^-(digits-10) * max|c_i| and n*log10(max|c_i|) <= digits - 10.
// Throws PrecisionError if an input carries fewer than `digits` digits.
RelationResult pslq(const std::vector<BigReal>& values, const Integer& max_coeff, int digits);

// Rational with the smallest denominator in [lo, hi] (then the smallest |numerator|).
Rational simplest_rational(const Rational& lo, const Rational& hi);

struct Discovery {
  std::optional<ClosedForm> form;
  RelationResult relation;
  std::vector<Monomial> basis;
};

// Finds value = sum q_i m_i over the given basis with rational q_i.
Discovery discover_value(const BigReal& value, const std::vector<Monomial>& basis, int digits,
                         const Integer& max_coeff);
Discovery discover(const std::vector<LhsTerm>& lhs, int weight, bool include_residuals, bool include_lower_weights,
                   int digits, const Integer& max_coeff);

}  // namespace eulersums
