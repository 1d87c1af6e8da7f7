#include "eulersums/constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "eulersums/errors.hpp"
#include "eulersums/numerics.hpp"
#include "eulersums/sums.hpp"

namespace eulersums {

namespace {

int kind_rank(ConstKind k) {
  switch (k) {
    case ConstKind::Zeta: return 0;
    case ConstKind::LiHalf: return 1;
    case ConstKind::Ln2: return 2;
    case ConstKind::Gamma: return 3;
    case ConstKind::Residual: return 4;
  }
  return 5;
}

struct NamedResidual {
  const char* name;
  const char* body;
  int weight;
};

constexpr NamedResidual kNamedResiduals[] = {
    {"R1", "h(1) / k^3", 4},
    {"R2", "h(1) / k^5", 6},
    {"R3", "H(1)*h(1) / k^5", 7},
    {"R4", "H(2)*h(1) / k^4", 7},
};

int g_digit_cap = 1000;

}  // namespace

ConstantId ConstantId::zeta(int n) {
  ConstantId c;
  c.kind = ConstKind::Zeta;
  c.index = n;
  c.weight = n;
  return c;
}

ConstantId ConstantId::li_half(int n) {
  ConstantId c;
  c.kind = ConstKind::LiHalf;
  c.index = n;
  c.weight = n;
  return c;
}

ConstantId ConstantId::ln2() {
  ConstantId c;
  c.kind = ConstKind::Ln2;
  c.weight = 1;
  return c;
}

ConstantId ConstantId::gamma() {
  ConstantId c;
  c.kind = ConstKind::Gamma;
  c.weight = 1;
  return c;
}

ConstantId ConstantId::residual(const std::string& name) {
  for (const auto& r : kNamedResiduals) {
    if (name == r.name) {
      ConstantId c;
      c.kind = ConstKind::Residual;
      c.index = name[1] - '0';
      c.name = r.name;
      c.descriptor = std::string("sum( ") + r.body + " )";
      c.weight = r.weight;
      return c;
    }
  }
  throw UnknownNameError("unknown residual constant: " + name);
}

ConstantId ConstantId::sum_constant(const std::string& body, int weight) {
  for (const auto& r : kNamedResiduals)
    if (body == r.body) return residual(r.name);
  ConstantId c;
  c.kind = ConstKind::Residual;
  c.index = 100;
  c.name = "S[" + body + "]";
  c.descriptor = "sum( " + body + " )";
  c.weight = weight;
  return c;
}

std::string ConstantId::symbol() const {
  switch (kind) {
    case ConstKind::Zeta: return "z" + std::to_string(index);
    case ConstKind::LiHalf: return "li" + std::to_string(index);
    case ConstKind::Ln2: return "ln2";
    case ConstKind::Gamma: return "gamma";
    case ConstKind::Residual: return name;
  }
  return "?";
}

bool operator==(const ConstantId& a, const ConstantId& b) {
  return a.kind == b.kind && a.index == b.index && a.name == b.name;
}

bool print_before(const ConstantId& a, const ConstantId& b) {
  return std::make_tuple(a.weight, kind_rank(a.kind), a.index, a.name) <
         std::make_tuple(b.weight, kind_rank(b.kind), b.index, b.name);
}

Monomial::Monomial(const ConstantId& id, int exponent) { multiply(id, exponent); }

void Monomial::multiply(const ConstantId& id, int exponent) {
  if (exponent <= 0) return;
  atoms_[id] += exponent;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (const auto& [id, e] : o.atoms_) r.multiply(id, e);
  return r;
}

int Monomial::weight() const {
  int w = 0;
  for (const auto& [id, e] : atoms_) w += id.weight * e;
  return w;
}

int Monomial::residual_count() const {
  int n = 0;
  for (const auto& [id, e] : atoms_)
    if (id.is_residual()) n += e;
  return n;
}

std::string Monomial::str() const {
  if (atoms_.empty()) return "1";
  std::string s;
  for (const auto& [id, e] : atoms_) {
    if (!s.empty()) s += '*';
    s += id.symbol();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa > wb;
  const int ra = a.residual_count(), rb = b.residual_count();
  if (ra != rb) return ra < rb;
  // Heaviest atom first, multiplicities expanded.
  auto expand = [](const Monomial& m) {
    std::vector<const ConstantId*> v;
    for (const auto& [id, e] : m.atoms())
      for (int i = 0; i < e; ++i) v.push_back(&id);
    std::reverse(v.begin(), v.end());
    return v;
  };
  const auto ea = expand(a), eb = expand(b);
  for (std::size_t i = 0; i < std::min(ea.size(), eb.size()); ++i) {
    const ConstantId& x = *ea[i];
    const ConstantId& y = *eb[i];
    if (x == y) continue;
    if (x.weight != y.weight) return x.weight > y.weight;
    if (kind_rank(x.kind) != kind_rank(y.kind)) return kind_rank(x.kind) < kind_rank(y.kind);
    if (x.index != y.index) return x.index < y.index;
    return x.name < y.name;
  }
  return ea.size() < eb.size();
}

namespace {

BigReal zeta_raw(int s, int prec) {
  // Alternating eta series with Chebyshev-type acceleration (Borwein).
  const int n = static_cast<int>(std::ceil(1.31 * prec)) + 10;
  const int w = prec + 10;
  std::vector<BigReal> d;
  d.reserve(n + 1);
  BigReal t(1, w);
  d.push_back(t);
  for (int i = 0; i < n; ++i) {
    t *= 4L * (n + i);
    t *= static_cast<long>(n - i);
    t /= static_cast<long>((2 * i + 1)) * (2 * i + 2);
    d.push_back(d.back() + t);
  }
  BigReal acc(w);
  for (int k = 0; k < n; ++k) {
    BigReal term = (d[k] - d[n]) / ipow(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(s), w);
    if (k % 2 == 0) acc += term;
    else acc -= term;
  }
  BigReal eta = -acc / d[n];
  BigReal factor = BigReal(1, w) - BigReal(1, w) / ipow(2, static_cast<unsigned long>(s - 1), w);
  return (eta / factor).rounded(prec);
}

BigReal li_half_raw(int n, int prec) {
  const int w = prec + 5;
  const long terms = static_cast<long>(std::ceil((prec + 5) * 3.3219280948873623)) + 10;
  BigReal acc(w);
  BigReal half_pow(1, w);
  for (long k = 1; k <= terms; ++k) {
    half_pow /= 2;
    acc += half_pow / ipow(static_cast<unsigned long>(k), static_cast<unsigned long>(n), w);
  }
  return acc.rounded(prec);
}

BigReal gamma_raw(int prec) {
  const int w = prec + 10;
  const long K = 10000;
  BigReal h(w);
  for (long i = K; i >= 1; --i) h += BigReal(1, w) / BigReal(i, w);
  BigReal k_real(K, w);
  BigReal g = h - log(k_real) - BigReal(1, w) / (2 * k_real);
  const BigReal threshold = BigReal::pow10(-(prec + 5), w);
  BigReal k2 = k_real * k_real;
  BigReal k_pow = k2;  // K^(2j)
  for (int j = 1;; ++j) {
    BigReal term = BigReal(bernoulli(2 * j), w) / (k_pow * (2L * j));
    g += term;
    if (abs(term) < threshold) break;
    k_pow *= k2;
  }
  return g.rounded(prec);
}

struct Slot {
  std::once_flag once;
  BigReal value;
};

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::string, int>, std::shared_ptr<Slot>>& memo() {
  static std::map<std::pair<std::string, int>, std::shared_ptr<Slot>> m;
  return m;
}

std::mutex& disk_mutex() {
  static std::mutex m;
  return m;
}

// symbol -> (digits -> decimal text)
std::map<std::string, std::map<int, std::string>>& disk_entries() {
  static std::map<std::string, std::map<int, std::string>> m;
  return m;
}

bool cacheable_on_disk(const ConstantId& id) { return id.kind != ConstKind::Residual || id.index <= 4; }

BigReal compute_constant(const ConstantId& id, int bucket) {
  const int prec = bucket + kGuardDigits;
  if (cacheable_on_disk(id)) {
    std::lock_guard<std::mutex> lock(disk_mutex());
    auto it = disk_entries().find(id.symbol());
    if (it != disk_entries().end()) {
      auto e = it->second.lower_bound(bucket);
      if (e != it->second.end()) return BigReal(e->second, prec);
    }
  }
  BigReal v(prec);
  switch (id.kind) {
    case ConstKind::Zeta: v = zeta_raw(id.index, prec); break;
    case ConstKind::LiHalf: v = id.index == 1 ? BigReal::ln2(prec) : li_half_raw(id.index, prec); break;
    case ConstKind::Ln2: v = BigReal::ln2(prec); break;
    case ConstKind::Gamma: v = gamma_raw(prec); break;
    case ConstKind::Residual: v = sum_constant_value(id.descriptor, bucket).rounded(prec); break;
  }
  if (cacheable_on_disk(id)) {
    std::lock_guard<std::mutex> lock(disk_mutex());
    disk_entries()[id.symbol()][bucket] = v.sci(prec);
  }
  return v;
}

}  // namespace

BigReal constant_value(const ConstantId& id, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  if (digits > g_digit_cap) throw PrecisionError("requested digits exceed the configured cap");
  if (id.kind == ConstKind::Zeta && (id.index < 2 || id.index > 12))
    throw UnknownNameError("zeta index out of range: " + std::to_string(id.index));
  if (id.kind == ConstKind::LiHalf && (id.index < 1 || id.index > 12))
    throw UnknownNameError("Li_n(1/2) index out of range: " + std::to_string(id.index));
  const int bucket = std::max(10, (digits + 9) / 10 * 10);
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto& s = memo()[{id.symbol(), bucket}];
    if (!s) s = std::make_shared<Slot>();
    slot = s;
  }
  std::call_once(slot->once, [&] { slot->value = compute_constant(id, bucket); });
  return slot->value.rounded(digits + kGuardDigits);
}

BigReal monomial_value(const Monomial& m, int digits) {
  BigReal v(1, digits + kGuardDigits);
  for (const auto& [id, e] : m.atoms()) v *= pow(constant_value(id, digits), static_cast<long>(e));
  return v;
}

ConstantId constant_from_name(const std::string& name) {
  auto number = [&](std::size_t from, int lo, int hi) {
    if (from >= name.size()) throw UnknownNameError("unknown constant: " + name);
    for (std::size_t i = from; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) throw UnknownNameError("unknown constant: " + name);
    int n = std::stoi(name.substr(from));
    if (n < lo || n > hi) throw UnknownNameError("unknown constant: " + name);
    return n;
  };
  if (name == "ln2") return ConstantId::ln2();
  if (name == "gamma") return ConstantId::gamma();
  if (name.rfind("li", 0) == 0) return ConstantId::li_half(number(2, 1, 12));
  if (name.rfind("z", 0) == 0) return ConstantId::zeta(number(1, 2, 12));
  if (name.rfind("R", 0) == 0) return ConstantId::residual(name);
  throw UnknownNameError("unknown constant: " + name);
}

std::vector<Monomial> basis_monomials(int weight, bool include_residuals, bool include_lower_weights) {
  if (weight < 1 || weight > 9) throw std::invalid_argument("basis weight must be in 1..9");
  std::vector<ConstantId> atoms;
  atoms.push_back(ConstantId::ln2());
  for (int n = 2; n <= weight; ++n) atoms.push_back(ConstantId::zeta(n));
  for (int n = 4; n <= weight; ++n) atoms.push_back(ConstantId::li_half(n));
  if (include_residuals)
    for (const auto& r : kNamedResiduals)
      if (r.weight <= weight) atoms.push_back(ConstantId::residual(r.name));

  std::vector<Monomial> out;
  std::function<void(std::size_t, int, Monomial, int, int)> rec = [&](std::size_t from, int remaining, Monomial m,
                                                                       int even_zetas, int residuals) {
    if (remaining == 0) {
      out.push_back(m);
      return;
    }
    for (std::size_t i = from; i < atoms.size(); ++i) {
      const ConstantId& a = atoms[i];
      if (a.weight > remaining) continue;
      const int ev = even_zetas + (a.is_even_zeta() ? 1 : 0);
      const int rs = residuals + (a.is_residual() ? 1 : 0);
      if (ev > 1 || rs > 1) continue;
      Monomial next = m;
      next.multiply(a);
      rec(i, remaining - a.weight, next, ev, rs);
    }
  };
  for (int w = include_lower_weights ? 0 : weight; w <= weight; ++w) rec(0, w, Monomial(), 0, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void set_digit_cap(int cap) { g_digit_cap = cap; }
int digit_cap() { return g_digit_cap; }

std::string default_cache_path() {
  const char* env = std::getenv("EULERSUMS_CACHE");
  return env ? std::string(env) : std::string();
}

void load_constant_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  std::lock_guard<std::mutex> lock(disk_mutex());
  bool header_ok = false;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) {
      if (line.find("eulersums-constant-cache v1") != std::string::npos) header_ok = true;
      continue;
    }
    if (!header_ok) return;
    std::istringstream ls(line);
    std::string name, value;
    int digits = 0;
    if (ls >> name >> digits >> value) disk_entries()[name][digits] = value;
  }
}

void save_constant_cache(const std::string& path) {
  std::lock_guard<std::mutex> lock(disk_mutex());
  std::ofstream out(path);
  out << "# eulersums-constant-cache v1\n";
  for (const auto& [name, by_digits] : disk_entries())
    for (const auto& [digits, value] : by_digits) out << name << ' ' << digits << ' ' << value << '\n';
}

}  // namespace eulersums
