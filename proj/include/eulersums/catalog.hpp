#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eulersums/bigreal.hpp"
#include "eulersums/closedform.hpp"
#include "eulersums/sums.hpp"

namespace eulersums {

// One catalog record: `id | weight | lhs | rhs | source | attrs`.
struct Identity {
  std::string id;
  int weight = 0;  // order as the catalog counts it: k(2k-1) adds one, not two
  std::vector<LhsTerm> lhs;
  ClosedForm rhs;
  std::string source;
  std::string family;           // "1".."8", "linear", "ternary", "biquadratic", "helper"
  std::set<std::string> flags;  // sigma-restored, typo-variant, candidate, duplicate, rearranged, approx
  std::optional<double> tolerance;

  bool approximate() const { return flags.count("approx") != 0; }
  bool mixed_weight() const { return !is_homogeneous(rhs); }
  bool has_flag(const std::string& f) const { return flags.count(f) != 0; }
  // Lower weights belong in the discovery basis when a denominator mixes k and (2k+c).
  bool mixed_denominator() const;
};

// Order of a sum as the catalog counts it: the a+b weight, one less for mixed k / (2k+c) denominators.
int catalog_order(const SumDescriptor& d);

// Parses one record; blank lines and '#' comments are rejected here and skipped by the loaders.
// Throws ParseError or UnknownNameError.
Identity parse_identity(std::string_view record);
std::string format_identity(const Identity& id);

std::vector<Identity> parse_catalog_text(std::string_view text);
std::vector<Identity> load_catalog_file(const std::string& path);

// Built-in catalog in source order; parsed once.
const std::vector<Identity>& builtin_catalog();
const Identity* find_identity(const std::vector<Identity>& catalog, const std::string& id);

// Disposition of every numbered display 5..178 of the source document.
struct CoverageEntry {
  int number = 0;
  std::string kind;  // "entry", "help", "finite", "template", "not-encodable"
  std::string note;
};
const std::vector<CoverageEntry>& coverage_table();

enum class Status { Verified, Mismatch, Unresolved, Skipped };
std::string to_string(Status s);

struct Correction {
  std::optional<ClosedForm> form;
  bool resolved = false;
  std::string tier;         // "single-term", "support", "graded", "graded-residuals", or empty
  BigReal residual;         // |lhs - correction| at the report digits
  std::string diagnostics;  // why no usable correction was produced
};

struct VerificationReport {
  std::string id;
  std::string source;
  Status status = Status::Skipped;
  bool evaluated = false;  // lhs, rhs and residual hold values
  BigReal lhs_value;
  BigReal rhs_value;
  BigReal residual;
  BigReal error_bound;
  int digits = 0;
  double tolerance = 0;
  std::optional<Correction> correction;
  std::string diagnostics;
  double millis = 0;
};

struct VerifyOptions {
  int digits = 30;
  std::optional<double> tolerance;  // overrides every per-entry tolerance
  bool correct = true;              // attempt a correction on MISMATCH
};

// Tolerance actually applied: explicit > per-entry > 10^-(digits-5).
double effective_tolerance(const Identity& id, const VerifyOptions& opt);

VerificationReport verify(const Identity& id, const VerifyOptions& opt);

struct CatalogFilter {
  std::vector<std::string> ids;
  std::optional<std::string> family;
  std::optional<int> weight;
};

// Entries matching every given criterion, in catalog order. Throws UnknownNameError for unknown ids.
std::vector<Identity> select(const std::vector<Identity>& catalog, const CatalogFilter& filter);

// Reports in input order regardless of `threads`.
std::vector<VerificationReport> verify_all(const std::vector<Identity>& entries, const VerifyOptions& opt,
                                           int threads = 1);

struct VerifySummary {
  int verified = 0;
  int mismatch = 0;
  int unresolved = 0;
  int skipped = 0;
  int corrected = 0;
};
VerifySummary summarize(const std::vector<VerificationReport>& reports);

// Approximate catalog entries whose lhs equals `lhs`, with their residual at `digits`.
struct NearRelation {
  std::string id;
  ClosedForm form;
  BigReal residual;
};
std::vector<NearRelation> near_relations(const std::vector<LhsTerm>& lhs, int digits);

}  // namespace eulersums
