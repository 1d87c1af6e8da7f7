#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eulersums/bigreal.hpp"

namespace eulersums {

// Identity between finite harmonic sums, checked in exact rationals for k = 1..K.
struct FiniteIdentity {
  std::string id;
  std::string source;
  std::string statement;
  long default_max_k = 0;
  std::set<std::string> flags;  // "reading" marks one of several readings of a printed display
  // Both sides for k = 1..K; element 0 is k = 1.
  std::function<std::pair<std::vector<Rational>, std::vector<Rational>>(long K)> sides;
};

struct FiniteResult {
  std::string id;
  long checked = 0;
  std::optional<long> first_failure;  // smallest k where the sides differ
  bool holds() const { return !first_failure; }
};

const std::vector<FiniteIdentity>& finite_identities();
const FiniteIdentity* find_finite(const std::string& id);
// max_k <= 0 uses the identity's default range.
FiniteResult check_finite(const FiniteIdentity& id, long max_k = 0);

}  // namespace eulersums
