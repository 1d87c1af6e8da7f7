#include "eulersums/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "catalog_data.hpp"
#include "eulersums/errors.hpp"
#include "eulersums/relations.hpp"

namespace eulersums {

namespace {

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split_fields(std::string_view record) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto bar = record.find('|', start);
    out.push_back(trim(record.substr(start, bar == std::string_view::npos ? bar : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

bool is_comment_or_blank(std::string_view line) {
  const std::string t = trim(line);
  return t.empty() || t[0] == '#';
}

bool mixes_slopes(const SumDescriptor& d) {
  bool unit = false;
  bool odd = false;
  for (const auto& f : d.denominator) (f.scale == 1 ? unit : odd) = true;
  return unit && odd;
}

BigReal from_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return BigReal(std::string_view(buf), digits);
}

// Decimal digits of the largest integer in the primitive integer form of (1, rhs).
int rhs_height(const ClosedForm& rhs) {
  Integer den = 1;
  for (const auto& [m, c] : rhs.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  Integer top = den;
  for (const auto& [m, c] : rhs.terms()) {
    Integer v = abs(c.get_num()) * (den / c.get_den());
    if (v > top) top = v;
  }
  return static_cast<int>(mpz_sizeinbase(top.get_mpz_t(), 10));
}

std::string norm_bound_text(const RelationResult& r) {
  return r.norm_bound.is_zero() ? "" : ", norm > " + r.norm_bound.sci(3);
}

// Accepts a candidate only if it reproduces the lhs at the report digits and differs from the catalog rhs.
bool accept(const ClosedForm& form, const Identity& id, const BigReal& lhs, int digits, const BigReal& tol,
            Correction& out, const std::string& tier) {
  if (form == id.rhs) return false;
  BigReal r = abs(lhs - evaluate(form, digits));
  if (r > tol) return false;
  out.form = form;
  out.resolved = true;
  out.tier = tier;
  out.residual = r;
  return true;
}

// True when `m` is a lone residual atom equal to one of the lhs sums.
bool restates_lhs(const Monomial& m, const Identity& id) {
  if (m.atoms().size() != 1) return false;
  const auto& [atom, e] = *m.atoms().begin();
  if (e != 1 || !atom.is_residual()) return false;
  return std::any_of(id.lhs.begin(), id.lhs.end(), [&](const LhsTerm& t) { return to_string(t.sum) == atom.descriptor; });
}

Correction correct(const Identity& id, const BigReal& lhs, int digits, const BigReal& tol) {
  Correction out;
  std::vector<std::string> notes;
  std::vector<Monomial> support;
  for (const auto& [m, c] : id.rhs.terms()) support.push_back(m);
  const Integer cap = kCorrectionMaxCoeff;
  const int h = std::min(6, rhs_height(id.rhs));

  // Tier 0: the defect is a rational multiple of one rhs monomial.
  {
    const int dc = digits + 15;
    const BigReal diff = eval_lhs(id.lhs, dc).value - evaluate(id.rhs, dc);
    for (const auto& m : support) {
      const RelationResult r = pslq({diff, monomial_value(m, dc)}, cap, dc);
      if (!r.coefficients || (*r.coefficients)[0] == 0) continue;
      const auto& c = *r.coefficients;
      Rational q(-c[1], c[0]);
      q.canonicalize();
      ClosedForm form = id.rhs;
      form.add(m, q);
      if (accept(form, id, lhs, digits, tol, out, "single-term")) return out;
    }
    // An approximate entry claims only its tolerance, so its coefficient is recovered to that accuracy.
    if (id.approximate()) {
      for (const auto& m : support) {
        const BigReal mv = monomial_value(m, dc);
        if (mv.is_zero()) continue;
        const Rational q = simplest_rational(to_rational((diff - tol) / mv), to_rational((diff + tol) / mv));
        if (q.get_den() > cap || abs(q.get_num()) > cap) continue;
        ClosedForm form = id.rhs;
        form.add(m, q);
        if (accept(form, id, lhs, digits, tol, out, "single-term")) return out;
      }
    }
    notes.push_back("single-term: no rational multiple of one rhs monomial closes the gap");
  }

  // Fits `value - fixed` over `basis`; the candidate is fixed plus the fit.
  auto run = [&](const ClosedForm& fixed, const std::vector<Monomial>& basis, const std::string& tier) {
    const int n = static_cast<int>(basis.size()) + 1;
    const int dc = std::max(digits + 15, n * (h + 1) + 25);
    const BigReal value = eval_lhs(id.lhs, dc).value - evaluate(fixed, dc);
    const Discovery d = discover_value(value, basis, dc, cap);
    if (d.form && accept(fixed + *d.form, id, lhs, digits, tol, out, tier)) return true;
    notes.push_back(tier + " (" + std::to_string(basis.size()) + " monomials, " + std::to_string(dc) +
                    " digits): " + (d.form ? "relation fails the recheck" : d.relation.status) +
                    norm_bound_text(d.relation));
    return false;
  };
  auto extend = [](std::vector<Monomial> base, const std::vector<Monomial>& more) {
    for (const auto& m : more) {
      if (std::find(base.begin(), base.end(), m) == base.end()) base.push_back(m);
    }
    return base;
  };
  const bool lower = id.mixed_denominator() || id.mixed_weight();
  constexpr std::size_t kMaxBasis = 40;

  // Tier 1: refit every coefficient of the printed support.
  if (!support.empty() && run(ClosedForm(), support, "support")) return out;

  // Tier 2: residual and sum-constant terms keep their printed coefficients; the rest is refit over the
  // graded zeta / polylog basis.
  ClosedForm fixed;
  std::vector<Monomial> plain;
  for (const auto& [m, c] : id.rhs.terms()) {
    if (m.residual_count() > 0)
      fixed.add(m, c);
    else
      plain.push_back(m);
  }
  const std::vector<Monomial> graded = extend(plain, basis_monomials(id.weight, false, lower));
  if (graded.size() <= kMaxBasis && run(fixed, graded, "graded")) return out;

  // Tier 3: every coefficient free, residual constants included.
  // A residual that is itself one of the lhs sums would make the fit a tautology.
  std::vector<Monomial> with_residuals;
  for (const auto& m : basis_monomials(id.weight, true, lower)) {
    if (!restates_lhs(m, id)) with_residuals.push_back(m);
  }
  const std::vector<Monomial> full = extend(support, with_residuals);
  if (full.size() <= kMaxBasis) {
    if (run(ClosedForm(), full, "graded-residuals")) return out;
  } else {
    notes.push_back("graded-residuals: basis of " + std::to_string(full.size()) + " monomials exceeds the limit of " +
                    std::to_string(kMaxBasis));
  }

  out.resolved = false;
  for (std::size_t i = 0; i < notes.size(); ++i) out.diagnostics += (i ? "; " : "") + notes[i];
  return out;
}

}  // namespace

bool Identity::mixed_denominator() const {
  return std::any_of(lhs.begin(), lhs.end(), [](const LhsTerm& t) { return mixes_slopes(t.sum); });
}

int catalog_order(const SumDescriptor& d) { return d.weight() - (mixes_slopes(d) ? 1 : 0); }

Identity parse_identity(std::string_view record) {
  const auto f = split_fields(record);
  if (f.size() < 5 || f.size() > 6) throw ParseError("expected 5 or 6 '|'-separated fields", 0);
  Identity id;
  id.id = f[0];
  if (id.id.empty() || id.id[0] == '#') throw ParseError("empty identity id", 0);
  try {
    std::size_t used = 0;
    id.weight = std::stoi(f[1], &used);
    if (used != f[1].size() || id.weight < 0) throw std::invalid_argument("weight");
  } catch (const std::exception&) {
    throw ParseError("bad weight '" + f[1] + "' in " + id.id, 0);
  }
  id.lhs = parse_lhs(f[2]);
  id.rhs = parse_closedform(f[3]);
  id.source = f[4];
  if (id.weight == 0) {
    for (const auto& t : id.lhs) id.weight = std::max(id.weight, catalog_order(t.sum));
  }
  if (f.size() == 6) {
    std::istringstream attrs(f[5]);
    std::string tok;
    while (attrs >> tok) {
      if (tok.rfind("family=", 0) == 0) {
        id.family = tok.substr(7);
      } else if (tok.rfind("tol=", 0) == 0) {
        try {
          id.tolerance = std::stod(tok.substr(4));
        } catch (const std::exception&) {
          throw ParseError("bad tolerance '" + tok + "' in " + id.id, 0);
        }
      } else {
        id.flags.insert(tok);
      }
    }
  }
  return id;
}

std::string format_identity(const Identity& id) {
  std::string attrs;
  if (!id.family.empty()) attrs += "family=" + id.family;
  for (const auto& f : id.flags) attrs += (attrs.empty() ? "" : " ") + f;
  if (id.tolerance) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", *id.tolerance);
    attrs += std::string(attrs.empty() ? "" : " ") + "tol=" + buf;
  }
  return id.id + " | " + std::to_string(id.weight) + " | " + to_string(id.lhs) + " | " + serialize(id.rhs) + " | " +
         id.source + " | " + attrs;
}

std::vector<Identity> parse_catalog_text(std::string_view text) {
  std::vector<Identity> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = text.substr(start, nl - start);
    if (!is_comment_or_blank(line)) out.push_back(parse_identity(line));
    start = nl + 1;
  }
  return out;
}

std::vector<Identity> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog_text(buf.str());
}

const std::vector<Identity>& builtin_catalog() {
  static const std::vector<Identity> catalog = [] {
    std::vector<Identity> c = parse_catalog_text(detail::catalog_records());
    for (const auto& r : detail::help_function_records()) c.push_back(parse_identity(r));
    std::set<std::string> seen;
    for (const auto& e : c) {
      if (!seen.insert(e.id).second) throw std::logic_error("duplicate catalog id " + e.id);
    }
    return c;
  }();
  return catalog;
}

const Identity* find_identity(const std::vector<Identity>& catalog, const std::string& id) {
  for (const auto& e : catalog) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const std::vector<CoverageEntry>& coverage_table() { return detail::coverage(); }

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified:
      return "VERIFIED";
    case Status::Mismatch:
      return "MISMATCH";
    case Status::Unresolved:
      return "UNRESOLVED";
    case Status::Skipped:
      return "SKIPPED";
  }
  return "SKIPPED";
}

double effective_tolerance(const Identity& id, const VerifyOptions& opt) {
  if (opt.tolerance) return *opt.tolerance;
  if (id.tolerance) return *id.tolerance;
  return std::pow(10.0, -(opt.digits - 5));
}

VerificationReport verify(const Identity& id, const VerifyOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = id.id;
  rep.source = id.source;
  rep.digits = opt.digits;
  rep.tolerance = effective_tolerance(id, opt);
  if (!(rep.tolerance >= std::pow(10.0, -(opt.digits + 10)))) {
    throw std::invalid_argument("tolerance below 10^-(digits+10) cannot be certified at this precision");
  }
  const BigReal tol = from_double(rep.tolerance, opt.digits);
  auto finish = [&] {
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  };
  try {
    const SumValue lhs = eval_lhs(id.lhs, opt.digits);
    rep.lhs_value = lhs.value;
    rep.error_bound = lhs.error_bound;
    rep.rhs_value = evaluate(id.rhs, opt.digits);
    rep.residual = abs(rep.lhs_value - rep.rhs_value);
    rep.evaluated = true;
    if (rep.error_bound > tol) {
      rep.status = Status::Unresolved;
      rep.diagnostics = "lhs error bound " + rep.error_bound.sci(3) + " exceeds the tolerance";
      return finish();
    }
    rep.status = rep.residual <= tol ? Status::Verified : Status::Mismatch;
    if (rep.status == Status::Mismatch && opt.correct) {
      rep.correction = correct(id, rep.lhs_value, opt.digits, tol);
    }
  } catch (const std::exception& e) {
    rep.status = Status::Unresolved;
    rep.diagnostics = e.what();
  }
  return finish();
}

std::vector<Identity> select(const std::vector<Identity>& catalog, const CatalogFilter& filter) {
  for (const auto& id : filter.ids) {
    if (!find_identity(catalog, id)) throw UnknownNameError("unknown identity id '" + id + "'");
  }
  std::vector<Identity> out;
  for (const auto& e : catalog) {
    if (!filter.ids.empty() && std::find(filter.ids.begin(), filter.ids.end(), e.id) == filter.ids.end()) continue;
    if (filter.family && e.family != *filter.family) continue;
    if (filter.weight && e.weight != *filter.weight) continue;
    out.push_back(e);
  }
  return out;
}

std::vector<VerificationReport> verify_all(const std::vector<Identity>& entries, const VerifyOptions& opt,
                                           int threads) {
  std::vector<VerificationReport> out(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) out[i] = verify(entries[i], opt);
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(entries.size())));
  if (n == 1) {
    worker();
    return out;
  }
  std::vector<std::jthread> pool;
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  pool.clear();
  return out;
}

VerifySummary summarize(const std::vector<VerificationReport>& reports) {
  VerifySummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Verified:
        ++s.verified;
        break;
      case Status::Mismatch:
        ++s.mismatch;
        if (r.correction && r.correction->resolved) ++s.corrected;
        break;
      case Status::Unresolved:
        ++s.unresolved;
        break;
      case Status::Skipped:
        ++s.skipped;
        break;
    }
  }
  return s;
}

std::vector<NearRelation> near_relations(const std::vector<LhsTerm>& lhs, int digits) {
  std::vector<NearRelation> out;
  const std::string key = to_string(lhs);
  for (const auto& e : builtin_catalog()) {
    if (!e.approximate() || to_string(e.lhs) != key) continue;
    const SumValue v = eval_lhs(lhs, digits);
    out.push_back({e.id, e.rhs, abs(v.value - evaluate(e.rhs, digits))});
  }
  return out;
}

}  // namespace eulersums
