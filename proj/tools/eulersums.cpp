#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eulersums/catalog.hpp"
#include "eulersums/closedform.hpp"
#include "eulersums/constants.hpp"
#include "eulersums/errors.hpp"
#include "eulersums/finite.hpp"
#include "eulersums/relations.hpp"
#include "eulersums/report.hpp"
#include "eulersums/sums.hpp"
#include "json.hpp"

using namespace eulersums;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kDivergent = 3, kUnresolved = 4 };

struct Config {
  int digits = 30;
  std::optional<double> tol;
  std::string format = "text";
  int threads = 1;
  bool timing = false;
  std::string cache;
  long kmax = EvalLimits{}.k_max;
  int jmax = EvalLimits{}.j_max;
  bool json() const { return format == "json"; }
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_const(const Config& cfg, const std::string& name) {
  const BigReal v = constant_value(constant_from_name(name), cfg.digits);
  if (cfg.json()) {
    print_json(Json{{"command", "const"}, {"name", name}, {"digits", cfg.digits}, {"value", v.fixed(cfg.digits)}});
  } else {
    std::cout << name << " = " << v.fixed(cfg.digits) << "  (" << cfg.digits << " digits)\n";
  }
  return kOk;
}

int cmd_sum(const Config& cfg, const std::string& text, std::optional<long> direct_k) {
  const SumDescriptor d = parse_sum(text);
  Json j{{"command", "sum"}, {"sum", to_string(d)}, {"digits", cfg.digits}};
  if (direct_k) {
    if (*direct_k < 1) throw std::invalid_argument("--direct-k must be at least 1");
    const BigReal v = eval_direct(d, *direct_k, cfg.digits);
    j["value"] = v.fixed(cfg.digits);
    j["error_bound"] = nullptr;
    j["K"] = *direct_k;
    j["J"] = nullptr;
    j["converged"] = false;
  } else {
    const SumValue v = eval_accelerated(d, cfg.digits);
    j["value"] = v.value.fixed(cfg.digits);
    j["error_bound"] = v.error_bound.sci(3);
    j["K"] = v.K_used;
    j["J"] = v.J_used;
    j["converged"] = v.converged;
  }
  if (cfg.json()) {
    print_json(j);
  } else {
    std::cout << j["sum"].get<std::string>() << "\n  value       " << j["value"].get<std::string>() << "\n";
    if (direct_k) {
      std::cout << "  partial sum over k = 1.." << *direct_k << ", no tail\n";
    } else {
      std::cout << "  error bound " << j["error_bound"].get<std::string>() << "\n  K " << j["K"].get<long>()
                << ", J " << j["J"].get<int>() << (j["converged"].get<bool>() ? "" : ", not converged") << "\n";
    }
  }
  return kOk;
}

std::vector<Identity> catalog_with(const std::vector<std::string>& files) {
  std::vector<Identity> all = builtin_catalog();
  std::set<std::string> ids;
  for (const auto& e : all) ids.insert(e.id);
  for (const auto& f : files) {
    for (auto& e : load_catalog_file(f)) {
      if (!ids.insert(e.id).second) throw UnknownNameError("duplicate identity id '" + e.id + "' in " + f);
      all.push_back(std::move(e));
    }
  }
  return all;
}

int cmd_verify(const Config& cfg, const CatalogFilter& filter, bool all, bool correct,
               const std::vector<std::string>& files) {
  if (!all && filter.ids.empty() && !filter.family && !filter.weight) {
    throw std::invalid_argument("verify needs --id, --family, --weight or --all");
  }
  const auto entries = select(catalog_with(files), filter);
  if (entries.empty()) throw std::invalid_argument("the filters select no catalog entry");
  VerifyOptions opt;
  opt.digits = cfg.digits;
  opt.tolerance = cfg.tol;
  opt.correct = correct;
  const auto reports = verify_all(entries, opt, cfg.threads);
  if (cfg.json()) {
    std::cout << format_json(reports, cfg.timing);
  } else {
    std::cout << format_text(reports, cfg.timing) << format_summary(summarize(reports));
  }
  return exit_code(reports);
}

std::string coefficients_text(const std::vector<Integer>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].get_str();
  return s + "]";
}

int cmd_discover(const Config& cfg, const std::string& text, std::optional<int> weight, bool residuals, bool lower,
                 long max_coeff) {
  const auto lhs = parse_lhs(text);
  int w = 0;
  for (const auto& t : lhs) w = std::max(w, catalog_order(t.sum));
  if (weight) w = *weight;
  const Discovery d = discover(lhs, w, residuals, lower, cfg.digits, Integer(max_coeff));
  const auto near = d.form ? std::vector<NearRelation>{} : near_relations(lhs, cfg.digits);
  Json j{{"command", "discover"}, {"sum", to_string(lhs)}, {"weight", w}, {"digits", cfg.digits},
         {"max_coeff", max_coeff}, {"basis_size", d.basis.size()}, {"status", d.relation.status}};
  if (d.form) {
    j["form"] = serialize(*d.form);
    j["residual"] = d.relation.residual.sci(3);
    j["confidence_digits"] = d.relation.confidence_digits;
    j["coefficients"] = coefficients_text(*d.relation.coefficients);
  } else {
    j["form"] = nullptr;
    j["norm_bound"] = d.relation.norm_bound.sci(3);
    Json arr = Json::array();
    for (const auto& n : near) arr.push_back(Json{{"id", n.id}, {"form", serialize(n.form)}, {"residual", n.residual.sci(3)}});
    j["near_relations"] = arr;
  }
  if (cfg.json()) {
    print_json(j);
  } else if (d.form) {
    std::cout << serialize(*d.form) << "\n  residual " << j["residual"].get<std::string>() << ", confidence "
              << d.relation.confidence_digits << " digits, relation " << j["coefficients"].get<std::string>()
              << "\n";
  } else {
    std::cout << "no relation over " << d.basis.size() << " weight-" << w << " monomials with coefficients up to "
              << max_coeff << " (" << d.relation.status << ", norm > " << j["norm_bound"].get<std::string>()
              << ")\n";
    for (const auto& n : near) {
      std::cout << "  best known near-relation " << n.id << ": " << serialize(n.form) << "  residual "
                << n.residual.sci(3) << "\n";
    }
  }
  return d.form ? kOk : kMismatch;
}

int cmd_finite(const Config& cfg, const std::vector<std::string>& ids, long max_k) {
  std::vector<const FiniteIdentity*> chosen;
  for (const auto& id : ids) {
    const FiniteIdentity* f = find_finite(id);
    if (!f) throw UnknownNameError("unknown finite identity '" + id + "'");
    chosen.push_back(f);
  }
  if (ids.empty()) {
    for (const auto& f : finite_identities()) chosen.push_back(&f);
  }
  Json arr = Json::array();
  bool ok = true;
  for (const auto* f : chosen) {
    const FiniteResult r = check_finite(*f, max_k);
    ok = ok && r.holds();
    Json j{{"id", r.id}, {"source", f->source}, {"statement", f->statement}, {"checked", r.checked},
           {"holds", r.holds()}};
    j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json();
    if (cfg.json()) {
      arr.push_back(j);
    } else if (r.holds()) {
      std::cout << r.id << "  holds for k = 1.." << r.checked << "  [" << f->source << "]\n";
    } else {
      std::cout << r.id << "  FAILS at k = " << *r.first_failure << "  [" << f->source << "]\n";
    }
  }
  if (cfg.json()) print_json(arr);
  return ok ? kOk : kMismatch;
}

int cmd_list(const Config& cfg, const CatalogFilter& filter, const std::vector<std::string>& files) {
  const auto entries = select(catalog_with(files), filter);
  if (cfg.json()) {
    Json arr = Json::array();
    for (const auto& e : entries) {
      Json flags = Json::array();
      for (const auto& f : e.flags) flags.push_back(f);
      arr.push_back(Json{{"id", e.id}, {"weight", e.weight}, {"lhs", to_string(e.lhs)}, {"rhs", serialize(e.rhs)},
                         {"source", e.source}, {"family", e.family}, {"flags", flags}});
    }
    print_json(arr);
  } else {
    for (const auto& e : entries) std::cout << format_identity(e) << "\n";
  }
  return kOk;
}

int cmd_coverage(const Config& cfg) {
  Json arr = Json::array();
  for (const auto& c : coverage_table()) {
    if (cfg.json()) {
      arr.push_back(Json{{"number", c.number}, {"kind", c.kind}, {"note", c.note}});
    } else {
      std::cout << "(" << c.number << ")  " << c.kind << "  " << c.note << "\n";
    }
  }
  if (cfg.json()) print_json(arr);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision evaluation, verification and discovery of linear and nonlinear Euler sums."};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--digits", cfg.digits, "Decimal digits of the result")->check(CLI::Range(10, 1000));
  app.add_option("--tol", cfg.tol, "Verification tolerance; overrides per-entry tolerances");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", cfg.threads, "Worker threads for verify")->check(CLI::Range(1, 256));
  app.add_flag("--timing", cfg.timing, "Include per-entry timing in reports");
  app.add_option("--cache", cfg.cache, "Constant cache file (default: $EULERSUMS_CACHE)");
  app.add_option("--kmax-cap", cfg.kmax, "Largest partial-sum cut K")->check(CLI::Range(64L, 1L << 26));
  app.add_option("--jmax-cap", cfg.jmax, "Largest tail expansion order J")->check(CLI::Range(20, 5000));

  std::string name;
  auto* c_const = app.add_subcommand("const", "Print a basis constant");
  c_const->add_option("name", name, "z2..z12, ln2, li1..li12, gamma, R1..R4")->required();

  std::string text;
  std::optional<long> direct_k;
  auto* c_sum = app.add_subcommand("sum", "Evaluate a sum written in the sum DSL");
  c_sum->add_option("sum", text, "e.g. \"sum( h(1)^2 / k^3 )\"")->required();
  c_sum->add_option("--direct-k", direct_k, "Partial sum over k = 1..K only");

  CatalogFilter filter;
  std::optional<std::string> family;
  std::optional<int> weight;
  bool all = false;
  bool no_correct = false;
  std::vector<std::string> files;
  auto* c_verify = app.add_subcommand("verify", "Verify catalog identities");
  c_verify->add_option("--id", filter.ids, "Identity id (repeatable)");
  c_verify->add_option("--family", family, "Family tag: 1..8, linear, helper, ternary, biquadratic");
  c_verify->add_option("--weight", weight, "Order of the identities");
  c_verify->add_flag("--all", all, "Every catalog entry");
  c_verify->add_flag("--no-correct", no_correct, "Skip the correction search on mismatch");
  c_verify->add_option("--catalog", files, "Additional catalog file (repeatable)");

  std::optional<int> d_weight;
  bool residuals = false;
  bool lower = false;
  long max_coeff = kDiscoveryMaxCoeff;
  auto* c_discover = app.add_subcommand("discover", "Search a closed form with PSLQ");
  c_discover->add_option("sum", text, "Sum or rational combination of sums")->required();
  c_discover->add_option("--weight", d_weight, "Basis weight (default: the order of the sum)");
  c_discover->add_flag("--residuals", residuals, "Include the residual constants R1..R4");
  c_discover->add_flag("--lower-weights", lower, "Include every lower weight");
  c_discover->add_option("--max-coeff", max_coeff, "Largest admissible relation coefficient")
      ->check(CLI::Range(1L, 1000000000L));

  std::vector<std::string> finite_ids;
  long max_k = 0;
  auto* c_finite = app.add_subcommand("finite", "Check finite harmonic identities in exact rationals");
  c_finite->add_option("--id", finite_ids, "Identity id (repeatable)");
  c_finite->add_option("--max-k", max_k, "Largest k checked (default: per identity)")->check(CLI::Range(1L, 100000L));

  auto* c_list = app.add_subcommand("list", "Print catalog records");
  c_list->add_option("--id", filter.ids, "Identity id (repeatable)");
  c_list->add_option("--family", family, "Family tag");
  c_list->add_option("--weight", weight, "Order of the identities");
  c_list->add_option("--catalog", files, "Additional catalog file (repeatable)");

  auto* c_coverage = app.add_subcommand("coverage", "Disposition of every numbered display");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  filter.family = family;
  filter.weight = weight;
  if (cfg.cache.empty()) cfg.cache = default_cache_path();

  int code = kOk;
  try {
    set_eval_limits({cfg.kmax, cfg.jmax});
    if (!cfg.cache.empty()) load_constant_cache(cfg.cache);
    if (c_const->parsed()) code = cmd_const(cfg, name);
    if (c_sum->parsed()) code = cmd_sum(cfg, text, direct_k);
    if (c_verify->parsed()) code = cmd_verify(cfg, filter, all, !no_correct, files);
    if (c_discover->parsed()) code = cmd_discover(cfg, text, d_weight, residuals, lower, max_coeff);
    if (c_finite->parsed()) code = cmd_finite(cfg, finite_ids, max_k);
    if (c_list->parsed()) code = cmd_list(cfg, filter, files);
    if (c_coverage->parsed()) code = cmd_coverage(cfg);
    if (!cfg.cache.empty()) save_constant_cache(cfg.cache);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownNameError& e) {
    std::cerr << "unknown name: " << e.what() << "\n";
    return kUsage;
  } catch (const DivergenceError& e) {
    std::cerr << "divergent: " << e.what() << "\n";
    return kDivergent;
  } catch (const PrecisionError& e) {
    std::cerr << "unresolved: " << e.what() << "\n";
    return kUnresolved;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnresolved;
  }
  return code;
}
