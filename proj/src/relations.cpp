#include "eulersums/relations.hpp"

#include <algorithm>
#include <cmath>

#include "eulersums/errors.hpp"

namespace eulersums {

namespace {

Integer nearest(const BigReal& x) { return x.round_to_integer(); }

BigReal to_real(const Integer& z, int w) { return BigReal(z, w); }

// |c|_inf and the normalized (primitive, first nonzero positive) vector.
std::vector<Integer> normalize_relation(std::vector<Integer> c) {
  Integer g = 0;
  for (const auto& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) return c;
  for (auto& v : c) v /= g;
  for (const auto& v : c) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& u : c) u = -u;
    break;
  }
  return c;
}

Integer max_abs(const std::vector<Integer>& c) {
  Integer m = 0;
  for (const auto& v : c) m = std::max<Integer>(m, abs(v));
  return m;
}

}  // namespace

RelationResult pslq(const std::vector<BigReal>& values, const Integer& max_coeff, int digits) {
  const int n = static_cast<int>(values.size());
  if (n < 2) throw std::invalid_argument("pslq needs at least two values");
  if (digits < 10) throw std::invalid_argument("pslq needs at least 10 digits");
  for (const auto& v : values)
    if (v.digits() < digits) throw PrecisionError("pslq input carries fewer digits than requested");
  const int w = digits + kGuardDigits;
  RelationResult out;
  out.residual = BigReal(w);
  out.norm_bound = BigReal(w);

  auto finish = [&](std::vector<Integer> c) {
    c = normalize_relation(std::move(c));
    BigReal r(w);
    for (int i = 0; i < n; ++i) r.add_product(to_real(c[i], w), values[i].rounded(w));
    r = abs(r);
    const Integer height = max_abs(c);
    out.residual = r;
    out.confidence_digits = r.is_zero() ? digits : static_cast<int>(std::min<long>(digits, -r.log10_abs() - 1));
    const BigReal allowed = BigReal::pow10(-(digits - 10), w) * to_real(height, w);
    const double height_digits = std::log10(std::max(1.0, height.get_d()));
    if (r > allowed || n * height_digits > digits - 10) {
      out.status = "low-confidence";
      return out;
    }
    out.coefficients = std::move(c);
    out.status = "found";
    return out;
  };

  for (int i = 0; i < n; ++i) {
    if (values[i].is_zero()) {
      std::vector<Integer> c(n, 0);
      c[i] = 1;
      return finish(c);
    }
  }

  std::vector<BigReal> x;
  for (const auto& v : values) x.push_back(v.rounded(w));
  // s_k = sqrt(sum_{j>=k} x_j^2), normalized so that s_0 = 1.
  std::vector<BigReal> s(n, BigReal(w));
  {
    BigReal acc(w);
    for (int k = n - 1; k >= 0; --k) {
      acc.add_product(x[k], x[k]);
      s[k] = sqrt(acc);
    }
  }
  const BigReal t0 = s[0];
  std::vector<BigReal> y;
  for (int k = 0; k < n; ++k) {
    y.push_back(x[k] / t0);
    s[k] /= t0;
  }
  std::vector<std::vector<Integer>> A(n, std::vector<Integer>(n, 0)), B(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i) A[i][i] = B[i][i] = 1;
  std::vector<std::vector<BigReal>> H(n, std::vector<BigReal>(n - 1, BigReal(w)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n - 1; ++j) {
      if (i < j) continue;
      if (i == j) {
        H[i][j] = s[j + 1] / s[j];
      } else {
        H[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
      }
    }
  }

  auto reduce_entry = [&](int i, int j) {
    if (H[j][j].is_zero()) return;
    const Integer t = nearest(H[i][j] / H[j][j]);
    if (t == 0) return;
    const BigReal tr = to_real(t, w);
    y[j] += tr * y[i];
    for (int k = 0; k <= j; ++k) H[i][k] -= tr * H[j][k];
    for (int k = 0; k < n; ++k) {
      A[i][k] -= t * A[j][k];
      B[k][j] += t * B[k][i];
    }
  };
  for (int i = 1; i < n; ++i)
    for (int j = i - 1; j >= 0; --j) reduce_entry(i, j);

  const BigReal gamma = sqrt(BigReal(4, w) / BigReal(3, w));
  const BigReal floor = BigReal::pow10(-(w - 5), w);
  const BigReal detect = BigReal::pow10(-(digits - 10), w);
  const BigReal bound = to_real(max_coeff, w);
  const int max_iterations = 2000 * n * n;

  for (int iter = 1;; ++iter) {
    out.iterations = iter;
    // Exchange the row with the largest gamma^i |H_ii|.
    int m = 0;
    {
      BigReal best(w);
      BigReal gp = gamma;
      for (int i = 0; i < n - 1; ++i) {
        BigReal v = gp * abs(H[i][i]);
        if (i == 0 || v > best) {
          best = v;
          m = i;
        }
        gp *= gamma;
      }
    }
    std::swap(y[m], y[m + 1]);
    std::swap(A[m], A[m + 1]);
    for (int k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);
    std::swap(H[m], H[m + 1]);
    if (m <= n - 3) {
      const BigReal r = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
      if (r.is_zero()) {
        out.status = "precision-exhausted";
        return out;
      }
      const BigReal c1 = H[m][m] / r, c2 = H[m][m + 1] / r;
      for (int i = m; i < n; ++i) {
        const BigReal h3 = H[i][m], h4 = H[i][m + 1];
        H[i][m] = c1 * h3 + c2 * h4;
        H[i][m + 1] = c1 * h4 - c2 * h3;
      }
    }
    for (int i = m + 1; i < n; ++i)
      for (int j = std::min(i - 1, m + 1); j >= 0; --j) reduce_entry(i, j);

    // A column of B whose y entry vanishes is a candidate relation.
    for (int i = 0; i < n; ++i) {
      std::vector<Integer> col(n);
      for (int k = 0; k < n; ++k) col[k] = B[k][i];
      const Integer h = max_abs(col);
      if (abs(y[i]) <= detect * to_real(h, w)) {
        if (h > max_coeff) continue;
        return finish(col);
      }
    }

    BigReal largest(w);
    for (int i = 0; i < n - 1; ++i)
      if (abs(H[i][i]) > largest) largest = abs(H[i][i]);
    if (largest < floor) {
      out.status = "precision-exhausted";
      return out;
    }
    out.norm_bound = BigReal(1, w) / largest;
    if (out.norm_bound > bound) {
      out.status = "norm-bound";
      return out;
    }
    Integer biggest = 0;
    for (const auto& row : A) biggest = std::max(biggest, max_abs(row));
    if (biggest.get_d() > std::pow(10.0, std::min(300, w - 5))) {
      out.status = "precision-exhausted";
      return out;
    }
    if (iter >= max_iterations) {
      out.status = "iteration-limit";
      return out;
    }
  }
}

Discovery discover_value(const BigReal& value, const std::vector<Monomial>& basis, int digits,
                         const Integer& max_coeff) {
  Discovery d;
  d.basis = basis;
  std::vector<BigReal> xs{value};
  for (const auto& m : basis) xs.push_back(monomial_value(m, digits));
  d.relation = pslq(xs, max_coeff, digits);
  if (!d.relation.coefficients) return d;
  const auto& c = *d.relation.coefficients;
  if (c[0] == 0) {
    d.relation.status = "basis-dependency";
    d.relation.coefficients.reset();
    return d;
  }
  // c0 v + sum c_i m_i = 0 with c0 > 0
  const Integer c0 = c[0] < 0 ? Integer(-c[0]) : c[0];
  const int sign = c[0] < 0 ? -1 : 1;
  std::vector<Integer> norm = c;
  if (sign < 0)
    for (auto& v : norm) v = -v;
  d.relation.coefficients = norm;
  ClosedForm cf;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (norm[i + 1] == 0) continue;
    Rational q(-norm[i + 1], c0);
    q.canonicalize();
    cf.add(basis[i], q);
  }
  d.form = cf;
  return d;
}

Discovery discover(const std::vector<LhsTerm>& lhs, int weight, bool include_residuals, bool include_lower_weights,
                   int digits, const Integer& max_coeff) {
  const SumValue v = eval_lhs(lhs, digits);
  return discover_value(v.value, basis_monomials(weight, include_residuals, include_lower_weights), digits, max_coeff);
}

Rational simplest_rational(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_rational(hi, lo);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return Rational(-simplest_rational(-hi, -lo));
  Integer a;
  mpz_fdiv_q(a.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(a) == lo) return lo;
  if (Rational(a + 1) <= hi) return Rational(a + 1);
  // lo and hi share the integer part a; recurse on the reciprocals of the fractional parts.
  const Rational inner = simplest_rational(Rational(1) / (hi - a), Rational(1) / (lo - a));
  Rational out = Rational(a) + Rational(1) / inner;
  out.canonicalize();
  return out;
}

}  // namespace eulersums
