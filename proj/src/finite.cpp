#include "eulersums/finite.hpp"

#include "eulersums/harmonic.hpp"

namespace eulersums {

namespace {

using Sides = std::pair<std::vector<Rational>, std::vector<Rational>>;

// Values X^(n)_k for k = 0..K, with X_0 = 0.
class Table {
 public:
  Table(Family f, int n, long K) : v_(static_cast<std::size_t>(K) + 1, Rational(0)) {
    const auto t = harmonic_exact_table({f, n, 1, 0}, K);
    for (long k = 1; k <= K; ++k) v_[k] = t[k - 1];
  }
  const Rational& operator[](long k) const { return v_[k]; }

 private:
  std::vector<Rational> v_;
};

Table H(int n, long K) { return Table(Family::H, n, K); }
Table h(int n, long K) { return Table(Family::h, n, K); }

// 1 / base^e
Rational inv_pow(long base, int e) {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return Rational(Integer(1), d);
}

// c[k] = sum_{i<=k} f(i) for k = 0..K.
std::vector<Rational> cumulative(long K, const std::function<Rational(long)>& f) {
  std::vector<Rational> c(static_cast<std::size_t>(K) + 1, Rational(0));
  for (long i = 1; i <= K; ++i) c[i] = c[i - 1] + f(i);
  return c;
}

Sides build(long K, const std::function<Rational(long)>& lhs, const std::function<Rational(long)>& rhs) {
  Sides s;
  s.first.reserve(K);
  s.second.reserve(K);
  for (long k = 1; k <= K; ++k) {
    s.first.push_back(lhs(k));
    s.second.push_back(rhs(k));
  }
  return s;
}

std::vector<FiniteIdentity> make_identities() {
  std::vector<FiniteIdentity> v;

  v.push_back({"IV.50", "IV (50)", "h_k = 1/2 H_k + sum_{i<=k} 1/(i+k)", 500, {}, [](long K) {
                 const auto h1 = h(1, K);
                 const auto H1 = H(1, K);
                 return build(
                     K, [&](long k) -> Rational { return h1[k]; },
                     [&](long k) -> Rational {
                       Rational s = 0;
                       for (long i = 1; i <= k; ++i) s += Rational(1, i + k);
                       return Rational(1, 2) * H1[k] + s;
                     });
               }});

  v.push_back({"IV.50-telescoped", "IV (50)", "h_k = H_{2k} - 1/2 H_k", 10000, {}, [](long K) {
                 const auto h1 = h(1, K);
                 const auto H1 = H(1, 2 * K);
                 return build(
                     K, [&](long k) -> Rational { return h1[k]; },
                     [&](long k) -> Rational { return H1[2 * k] - Rational(1, 2) * H1[k]; });
               }});

  v.push_back({"IV.57", "IV (57)",
               "sum_{k<=i} H2_k/(k(i+k)) = 2H_i/i + H_i/i^2 + 2H3_i/i - 4h_i/i + 3/2 H_i H2_i/i - H2_i h_i/i"
               " + 2/i sum_{k<=i} h_k/k^2 - 3/i sum_{k<=i} H_k/k^2",
               200,
               {},
               [](long K) {
                 const auto H1 = H(1, K), H2 = H(2, K), H3 = H(3, K), h1 = h(1, K);
                 const auto a = cumulative(K, [&](long k) -> Rational { return h1[k] * inv_pow(k, 2); });
                 const auto b = cumulative(K, [&](long k) -> Rational { return H1[k] * inv_pow(k, 2); });
                 return build(
                     K,
                     [&](long i) -> Rational {
                       Rational s = 0;
                       for (long k = 1; k <= i; ++k) s += H2[k] / Rational(k * (i + k));
                       return s;
                     },
                     [&](long i) -> Rational {
                       const Rational q(1, i);
                       return 2 * H1[i] * q + H1[i] * inv_pow(i, 2) + 2 * H3[i] * q - 4 * h1[i] * q +
                              Rational(3, 2) * H1[i] * H2[i] * q - H2[i] * h1[i] * q + 2 * q * a[i] - 3 * q * b[i];
                     });
               }});

  v.push_back({"IV.118", "IV (118)", "sum_{i<=k} h3_i/(2i-1) = h_k h3_k + h4_k - sum_{i<=k} h_i/(2i-1)^3", 300, {},
               [](long K) {
                 const auto h1 = h(1, K), h3 = h(3, K), h4 = h(4, K);
                 const auto l = cumulative(K, [&](long i) -> Rational { return h3[i] * inv_pow(2 * i - 1, 1); });
                 const auto r = cumulative(K, [&](long i) -> Rational { return h1[i] * inv_pow(2 * i - 1, 3); });
                 return build(
                     K, [&](long k) -> Rational { return l[k]; },
                     [&](long k) -> Rational { return h1[k] * h3[k] + h4[k] - r[k]; });
               }});

  v.push_back({"IV.122", "IV (122)", "sum_{i<=k} h2_i/(2i-1)^4 = h2_k h4_k + h6_k - sum_{i<=k} h4_i/(2i-1)^2", 300,
               {}, [](long K) {
                 const auto h2 = h(2, K), h4 = h(4, K), h6 = h(6, K);
                 const auto l = cumulative(K, [&](long i) -> Rational { return h2[i] * inv_pow(2 * i - 1, 4); });
                 const auto r = cumulative(K, [&](long i) -> Rational { return h4[i] * inv_pow(2 * i - 1, 2); });
                 return build(
                     K, [&](long k) -> Rational { return l[k]; },
                     [&](long k) -> Rational { return h2[k] * h4[k] + h6[k] - r[k]; });
               }});

  v.push_back({"IV.125", "IV (125)", "sum_{i<=k} h_i/(2i-1)^5 = h_k h5_k + h6_k - sum_{i<=k} h5_i/(2i-1)", 300, {},
               [](long K) {
                 const auto h1 = h(1, K), h5 = h(5, K), h6 = h(6, K);
                 const auto l = cumulative(K, [&](long i) -> Rational { return h1[i] * inv_pow(2 * i - 1, 5); });
                 const auto r = cumulative(K, [&](long i) -> Rational { return h5[i] * inv_pow(2 * i - 1, 1); });
                 return build(
                     K, [&](long k) -> Rational { return l[k]; },
                     [&](long k) -> Rational { return h1[k] * h5[k] + h6[k] - r[k]; });
               }});

  v.push_back({"IV.125-second", "IV (125)",
               "sum_{i<=k} h_i/(2i-1)^5 = h_k h5_k + h6_k - 1/2 sum_{i<=k} h5_i/(i(2i-1)) - 1/2 H_k h5_k"
               " + 1/2 sum_{i<=k} H_i/(2i-1)^5 - 1/2 sum_{i<=k} 1/(i(2i-1)^5)",
               300,
               {},
               [](long K) {
                 const auto H1 = H(1, K), h1 = h(1, K), h5 = h(5, K), h6 = h(6, K);
                 const auto l = cumulative(K, [&](long i) -> Rational { return h1[i] * inv_pow(2 * i - 1, 5); });
                 const auto a = cumulative(
                     K, [&](long i) -> Rational { return h5[i] * inv_pow(i, 1) * inv_pow(2 * i - 1, 1); });
                 const auto b = cumulative(K, [&](long i) -> Rational { return H1[i] * inv_pow(2 * i - 1, 5); });
                 const auto c =
                     cumulative(K, [&](long i) -> Rational { return inv_pow(i, 1) * inv_pow(2 * i - 1, 5); });
                 const Rational half(1, 2);
                 return build(
                     K, [&](long k) -> Rational { return l[k]; },
                     [&](long k) -> Rational {
                       return h1[k] * h5[k] + h6[k] - half * a[k] - half * H1[k] * h5[k] + half * b[k] - half * c[k];
                     });
               }});

  v.push_back({"IV.129", "IV (129)", "sum_{i<=k} h4_i/i^2 = H2_k h4_k - sum_{i<=k} H2_{i-1}/(2i-1)^4", 300, {},
               [](long K) {
                 const auto H2 = H(2, K), h4 = h(4, K);
                 const auto l = cumulative(K, [&](long i) -> Rational { return h4[i] * inv_pow(i, 2); });
                 const auto r = cumulative(K, [&](long i) -> Rational { return H2[i - 1] * inv_pow(2 * i - 1, 4); });
                 return build(
                     K, [&](long k) -> Rational { return l[k]; },
                     [&](long k) -> Rational { return H2[k] * h4[k] - r[k]; });
               }});

  v.push_back({"IV.132", "IV (132)", "sum_{i<=k} h_i/i^3 = H3_k h_k - sum_{i<=k} H3_{i-1}/(2i-1)", 300, {},
               [](long K) {
                 const auto H3 = H(3, K), h1 = h(1, K);
                 const auto l = cumulative(K, [&](long i) -> Rational { return h1[i] * inv_pow(i, 3); });
                 const auto r = cumulative(K, [&](long i) -> Rational { return H3[i - 1] * inv_pow(2 * i - 1, 1); });
                 return build(
                     K, [&](long k) -> Rational { return l[k]; },
                     [&](long k) -> Rational { return H3[k] * h1[k] - r[k]; });
               }});

  // Printed with the right-hand side of (129); the second reading swaps the orders to match the lhs.
  v.push_back({"IV.135", "IV (135)", "sum_{i<=k} h2_i/i^4 = H2_k h4_k - sum_{i<=k} H2_{i-1}/(2i-1)^4", 300,
               {"reading"}, [](long K) {
                 const auto H2 = H(2, K), h2 = h(2, K), h4 = h(4, K);
                 const auto l = cumulative(K, [&](long i) -> Rational { return h2[i] * inv_pow(i, 4); });
                 const auto r = cumulative(K, [&](long i) -> Rational { return H2[i - 1] * inv_pow(2 * i - 1, 4); });
                 return build(
                     K, [&](long k) -> Rational { return l[k]; },
                     [&](long k) -> Rational { return H2[k] * h4[k] - r[k]; });
               }});

  v.push_back({"IV.135b", "IV (135)", "sum_{i<=k} h2_i/i^4 = H4_k h2_k - sum_{i<=k} H4_{i-1}/(2i-1)^2", 300,
               {"reading"}, [](long K) {
                 const auto H4 = H(4, K), h2 = h(2, K);
                 const auto l = cumulative(K, [&](long i) -> Rational { return h2[i] * inv_pow(i, 4); });
                 const auto r = cumulative(K, [&](long i) -> Rational { return H4[i - 1] * inv_pow(2 * i - 1, 2); });
                 return build(
                     K, [&](long k) -> Rational { return l[k]; },
                     [&](long k) -> Rational { return H4[k] * h2[k] - r[k]; });
               }});

  v.push_back({"IV.138", "IV (138)", "H5_k h_k = sum_{i<=k} h_i/i^5 + sum_{i<=k} H5_{i-1}/(2i-1)", 300, {},
               [](long K) {
                 const auto H5 = H(5, K), h1 = h(1, K);
                 const auto a = cumulative(K, [&](long i) -> Rational { return h1[i] * inv_pow(i, 5); });
                 const auto b = cumulative(K, [&](long i) -> Rational { return H5[i - 1] * inv_pow(2 * i - 1, 1); });
                 return build(
                     K, [&](long k) -> Rational { return H5[k] * h1[k]; },
                     [&](long k) -> Rational { return a[k] + b[k]; });
               }});

  v.push_back({"IV.142", "IV (142)", "sum_{i<=k} h_i/(i+k) = sum_{i<=k} h_i/i - 1/2 H_k h_k", 200, {}, [](long K) {
                 const auto H1 = H(1, K), h1 = h(1, K);
                 const auto a = cumulative(K, [&](long i) -> Rational { return h1[i] * inv_pow(i, 1); });
                 return build(
                     K,
                     [&](long k) -> Rational {
                       Rational s = 0;
                       for (long i = 1; i <= k; ++i) s += h1[i] / Rational(i + k);
                       return s;
                     },
                     [&](long k) -> Rational { return a[k] - Rational(1, 2) * H1[k] * h1[k]; });
               }});

  v.push_back({"IV.152", "IV (152)",
               "sum_{i<=k} h3_i/(i+k) = 1/2 H_k h3_k + h2_k^2 - h_k h3_k - sum_{i<=k} H_{i-1}/(2i-1)^3", 200, {},
               [](long K) {
                 const auto H1 = H(1, K), h1 = h(1, K), h2 = h(2, K), h3 = h(3, K);
                 const auto a = cumulative(K, [&](long i) -> Rational { return H1[i - 1] * inv_pow(2 * i - 1, 3); });
                 return build(
                     K,
                     [&](long k) -> Rational {
                       Rational s = 0;
                       for (long i = 1; i <= k; ++i) s += h3[i] / Rational(i + k);
                       return s;
                     },
                     [&](long k) -> Rational {
                       return Rational(1, 2) * H1[k] * h3[k] + h2[k] * h2[k] - h1[k] * h3[k] - a[k];
                     });
               }});
  return v;
}

}  // namespace

const std::vector<FiniteIdentity>& finite_identities() {
  static const std::vector<FiniteIdentity> all = make_identities();
  return all;
}

const FiniteIdentity* find_finite(const std::string& id) {
  for (const auto& f : finite_identities()) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

FiniteResult check_finite(const FiniteIdentity& id, long max_k) {
  const long K = max_k > 0 ? max_k : id.default_max_k;
  FiniteResult r;
  r.id = id.id;
  const auto [lhs, rhs] = id.sides(K);
  for (long k = 1; k <= K; ++k) {
    r.checked = k;
    if (lhs[k - 1] != rhs[k - 1]) {
      r.first_failure = k;
      break;
    }
  }
  return r;
}

}  // namespace eulersums
