#pragma once

#include <string>
#include <vector>

#include "eulersums/catalog.hpp"

namespace eulersums {

// "millis" is emitted only with `timing`, so default output is byte-reproducible.
std::string format_json(const std::vector<VerificationReport>& reports, bool timing);
std::string format_text(const std::vector<VerificationReport>& reports, bool timing);
std::string format_summary(const VerifySummary& s);

// 4 if any entry is UNRESOLVED, else 1 if any is MISMATCH, else 0.
int exit_code(const std::vector<VerificationReport>& reports);

}  // namespace eulersums
