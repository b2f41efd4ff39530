#include "cglab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cglab/errors.hpp"

namespace cglab {

namespace {

// Gaussian elimination over exact rationals. Returns a particular solution of
// rows * x = rhs when the (possibly overdetermined) system is consistent.
std::optional<std::vector<BigRat>> solve_consistent(std::vector<std::vector<BigRat>> m, int ncols) {
  const int nrows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < ncols && r < nrows; ++col) {
    int sel = -1;
    for (int i = r; i < nrows; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(sel)]);
    BigRat pv = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
    for (auto& x : m[static_cast<std::size_t>(r)]) x /= pv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r) continue;
      BigRat f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j <= ncols; ++j) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      }
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (int i = r; i < nrows; ++i) {
    if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(ncols)] != 0) return std::nullopt;
  }
  std::vector<BigRat> x(static_cast<std::size_t>(ncols), BigRat(0));
  for (int i = 0; i < r; ++i) {
    int col = pivot_col[static_cast<std::size_t>(i)];
    BigRat v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(ncols)];
    for (int j = col + 1; j < ncols; ++j) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0 && x[static_cast<std::size_t>(j)] != 0) {
        v -= m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
      }
    }
    x[static_cast<std::size_t>(col)] = v;
  }
  return x;
}

}  // namespace

RecurrenceReport find_recurrence(std::span<const BigInt> coeffs, int max_order) {
  const int N = static_cast<int>(coeffs.size());
  if (max_order < 1) throw RangeError("max_order must be >= 1");
  if (N < 3 * max_order) {
    throw InsufficientData("find_recurrence needs at least 3*max_order coefficients (" +
                           std::to_string(3 * max_order) + "), got " + std::to_string(N));
  }
  for (int d = 1; d <= max_order; ++d) {
    int s_hi = std::min(2 * d, N - 2 * d);
    for (int s = d; s <= s_hi; ++s) {
      // Rows n = s..N-1 of a(n) = sum_i c_i a(n-i), solved exactly; a
      // consistent system verifies every supplied coefficient beyond the
      // window by construction.
      std::vector<std::vector<BigRat>> m;
      m.reserve(static_cast<std::size_t>(N - s));
      for (int n = s; n < N; ++n) {
        std::vector<BigRat> row;
        row.reserve(static_cast<std::size_t>(d) + 1);
        for (int i = 1; i <= d; ++i) row.emplace_back(coeffs[static_cast<std::size_t>(n - i)]);
        row.emplace_back(coeffs[static_cast<std::size_t>(n)]);
        m.push_back(std::move(row));
      }
      auto sol = solve_consistent(std::move(m), d);
      if (!sol) continue;
      RecurrenceReport rep;
      rep.found = true;
      rep.order = d;
      rep.coeffs = std::move(*sol);
      rep.window_lo = s;
      rep.window_hi = std::min(s + 2 * d - 1, N - 1);
      rep.verified_through = N - 1;
      return rep;
    }
  }
  RecurrenceReport rep;
  rep.found = false;
  rep.order = max_order;  // reports "none of order <= max_order"
  rep.verified_through = N - 1;
  return rep;
}

namespace {

double to_double(const BigInt& x) { return x.convert_to<double>(); }

}  // namespace

GrowthRateEstimate growth_rate(std::span<const BigInt> coeffs) {
  const int N = static_cast<int>(coeffs.size());
  int last_pos = -1;
  for (int i = 0; i < N; ++i) {
    if (coeffs[static_cast<std::size_t>(i)] < 0) throw RangeError("growth_rate: negative coefficient");
    if (coeffs[static_cast<std::size_t>(i)] > 0) last_pos = i;
  }
  if (N < 6 || last_pos < 3) throw InsufficientData("growth_rate needs a positive tail");

  GrowthRateEstimate est;
  // Exact route: detect a recurrence, then the dominant root of its
  // characteristic polynomial x^d - c_1 x^(d-1) - ... - c_d.
  int d_max = std::min(8, N / 3);
  RecurrenceReport rec;
  if (d_max >= 1) {
    rec = find_recurrence(coeffs, d_max);
  }
  if (rec.found) {
    const int d = rec.order;
    // Power iteration on the companion matrix for the dominant root.
    std::vector<double> c(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] =
          boost::multiprecision::numerator(rec.coeffs[static_cast<std::size_t>(i)]).convert_to<double>() /
          boost::multiprecision::denominator(rec.coeffs[static_cast<std::size_t>(i)]).convert_to<double>();
    }
    std::vector<double> v(static_cast<std::size_t>(d), 1.0);
    double lambda = 1.0;
    for (int it = 0; it < 400; ++it) {
      std::vector<double> w(static_cast<std::size_t>(d), 0.0);
      for (int i = 0; i < d; ++i) w[0] += c[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
      for (int i = 1; i < d; ++i) w[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i - 1)];
      double norm = 0.0;
      for (double x : w) norm = std::max(norm, std::fabs(x));
      if (norm == 0.0) break;
      for (double& x : w) x /= norm;
      lambda = norm;
      v = std::move(w);
    }
    est.value = lambda;
    // Integer dominant roots are certified exactly against the recurrence.
    BigInt rounded(static_cast<long long>(std::llround(lambda)));
    if (rounded >= 1) {
      BigRat val = 0;
      // Evaluate x^d - sum c_i x^(d-i) at x = rounded via Horner.
      std::vector<BigRat> poly(static_cast<std::size_t>(d) + 1);
      poly[0] = 1;
      for (int i = 1; i <= d; ++i) poly[static_cast<std::size_t>(i)] = -rec.coeffs[static_cast<std::size_t>(i - 1)];
      for (int i = 0; i <= d; ++i) val = val * BigRat(rounded) + poly[static_cast<std::size_t>(i)];
      if (val == 0 && std::fabs(lambda - rounded.convert_to<double>()) < 1e-6) {
        est.exact = true;
        est.exact_value = rounded;
        est.value = rounded.convert_to<double>();
      }
    }
    return est;
  }
  // Estimate route: Aitken-accelerated ratios of the positive tail.
  std::vector<double> ratios;
  for (int i = std::max(1, last_pos - 8); i <= last_pos; ++i) {
    if (coeffs[static_cast<std::size_t>(i - 1)] > 0 && coeffs[static_cast<std::size_t>(i)] > 0) {
      ratios.push_back(to_double(coeffs[static_cast<std::size_t>(i)]) /
                       to_double(coeffs[static_cast<std::size_t>(i - 1)]));
    }
  }
  if (ratios.size() < 3) throw InsufficientData("growth_rate: not enough positive ratios");
  double r = ratios.back();
  std::size_t k = ratios.size();
  double d2 = ratios[k - 1] - 2 * ratios[k - 2] + ratios[k - 3];
  if (std::fabs(d2) > 1e-12) {
    double aitken = ratios[k - 1] - (ratios[k - 1] - ratios[k - 2]) * (ratios[k - 1] - ratios[k - 2]) / d2;
    if (std::isfinite(aitken) && aitken > 0) r = aitken;
  }
  est.value = r;
  return est;
}

BandCheckReport band_check(std::span<const BigInt> cumulative, double e_h, int lo, int hi) {
  const int N = static_cast<int>(cumulative.size());
  if (lo < 0 || hi >= N || lo > hi) {
    throw RangeError("band_check: range [" + std::to_string(lo) + "," + std::to_string(hi) +
                     "] outside table of size " + std::to_string(N));
  }
  if (!(e_h > 0)) throw RangeError("band_check: e_h must be positive");
  BandCheckReport rep;
  rep.lo = lo;
  rep.hi = hi;
  for (int n = lo; n <= hi; ++n) {
    double r = to_double(cumulative[static_cast<std::size_t>(n)]) * n / std::pow(e_h, n);
    rep.r.push_back(r);
  }
  rep.min = *std::min_element(rep.r.begin(), rep.r.end());
  rep.max = *std::max_element(rep.r.begin(), rep.r.end());
  rep.ratio = rep.min > 0 ? rep.max / rep.min : std::numeric_limits<double>::infinity();
  return rep;
}

AsymptoticFit exponent_fit(std::span<const BigInt> coeffs, double lambda, int lo, int hi) {
  const int N = static_cast<int>(coeffs.size());
  if (!(lambda > 1)) throw RangeError("exponent_fit: lambda must exceed 1");
  if (lo < 1 || hi >= N || hi - lo + 1 < 8) {
    throw InsufficientData("exponent_fit needs at least 8 coefficients in range");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int m = hi - lo + 1;
  std::vector<double> xs, ys;
  for (int n = lo; n <= hi; ++n) {
    if (coeffs[static_cast<std::size_t>(n)] <= 0) {
      throw RangeError("exponent_fit: coefficients in range must be positive");
    }
    double x = std::log(static_cast<double>(n));
    // log(b_n / lambda^n) without forming lambda^n.
    double y = std::log(to_double(coeffs[static_cast<std::size_t>(n)])) - n * std::log(lambda);
    xs.push_back(x);
    ys.push_back(y);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = m * sxx - sx * sx;
  double slope = (m * sxy - sx * sy) / denom;
  double intercept = (sy - slope * sx) / m;
  double rss = 0;
  for (int i = 0; i < m; ++i) {
    double e = ys[static_cast<std::size_t>(i)] - (slope * xs[static_cast<std::size_t>(i)] + intercept);
    rss += e * e;
  }
  AsymptoticFit fit;
  fit.lambda = lambda;
  fit.p_hat = slope;
  fit.residual = std::sqrt(rss / m);
  fit.lo = lo;
  fit.hi = hi;
  return fit;
}

}  // namespace cglab
