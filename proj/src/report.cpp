#include "eulersums/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace eulersums {

namespace {

constexpr int kResidualDigits = 3;

std::string tolerance_text(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", t);
  return buf;
}

std::string millis_text(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["status"] = to_string(r.status);
  j["residual"] = r.evaluated ? nlohmann::ordered_json(r.residual.sci(kResidualDigits)) : nlohmann::ordered_json();
  j["digits"] = r.digits;
  j["tolerance"] = tolerance_text(r.tolerance);
  j["source"] = r.source;
  if (r.evaluated) {
    j["lhs"] = r.lhs_value.sci(r.digits);
    j["rhs"] = r.rhs_value.sci(r.digits);
    j["error_bound"] = r.error_bound.sci(kResidualDigits);
  }
  if (r.correction) {
    const Correction& c = *r.correction;
    nlohmann::ordered_json cj;
    cj["resolved"] = c.resolved;
    if (c.form) {
      cj["form"] = serialize(*c.form);
      cj["tier"] = c.tier;
      cj["residual"] = c.residual.sci(kResidualDigits);
    } else {
      cj["form"] = nullptr;
      cj["diagnostics"] = c.diagnostics;
    }
    j["correction"] = cj;
  }
  if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
  if (timing) j["millis"] = std::stod(millis_text(r.millis));
  return j;
}

}  // namespace

std::string format_json(const std::vector<VerificationReport>& reports, bool timing) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, timing));
  return arr.dump(2) + "\n";
}

std::string format_text(const std::vector<VerificationReport>& reports, bool timing) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.id << "  " << to_string(r.status);
    if (r.evaluated) out << "  residual " << r.residual.sci(kResidualDigits);
    out << "  tol " << tolerance_text(r.tolerance) << "  [" << r.source << "]";
    if (timing) out << "  " << millis_text(r.millis) << " ms";
    out << "\n";
    if (!r.diagnostics.empty()) out << "    " << r.diagnostics << "\n";
    if (r.correction) {
      const Correction& c = *r.correction;
      if (c.form) {
        out << "    correction (" << c.tier << ", residual " << c.residual.sci(kResidualDigits)
            << "): " << serialize(*c.form) << "\n";
      } else {
        out << "    correction unresolved: " << c.diagnostics << "\n";
      }
    }
  }
  return out.str();
}

std::string format_summary(const VerifySummary& s) {
  std::ostringstream out;
  out << "verified " << s.verified << ", mismatch " << s.mismatch << " (corrected " << s.corrected
      << "), unresolved " << s.unresolved << ", skipped " << s.skipped << "\n";
  return out.str();
}

int exit_code(const std::vector<VerificationReport>& reports) {
  const VerifySummary s = summarize(reports);
  if (s.unresolved > 0) return 4;
  if (s.mismatch > 0) return 1;
  return 0;
}

}  // namespace eulersums
