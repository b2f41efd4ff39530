#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cglab/bigint.hpp"

namespace cglab {

// Constant-coefficient linear recurrence detection over exact rationals.
// found=true means a(n) = sum_i coeffs[i-1] * a(n-i) holds exactly for every
// n in [window_lo, N-1]; the window start may skip a transient of at most
// `order` extra terms (rational functions with numerator degree up to the
// denominator degree produce exactly such transients).
struct RecurrenceReport {
  bool found = false;
  int order = 0;
  std::vector<BigRat> coeffs;
  int window_lo = 0;
  int window_hi = 0;
  int verified_through = 0;
};

RecurrenceReport find_recurrence(std::span<const BigInt> coeffs, int max_order);

struct GrowthRateEstimate {
  double value = 0.0;
  bool exact = false;
  BigInt exact_value;  // meaningful when exact
};

// Exponential growth rate e^h: exact dominant characteristic root when a
// recurrence is found and the dominant root is an integer, otherwise a
// ratio-extrapolation estimate.
GrowthRateEstimate growth_rate(std::span<const BigInt> coeffs);

struct BandCheckReport {
  std::vector<double> r;  // r_n = phi(n) * n / e_h^n for n in [lo, hi]
  double min = 0.0;
  double max = 0.0;
  double ratio = 0.0;
  int lo = 0;
  int hi = 0;
};

BandCheckReport band_check(std::span<const BigInt> cumulative, double e_h, int lo, int hi);

struct AsymptoticFit {
  double lambda = 0.0;
  double p_hat = 0.0;
  double residual = 0.0;  // RMS of log-space fit residuals
  int lo = 0;
  int hi = 0;
};

// Least-squares fit of log(b_n / lambda^n) against log n over [lo, hi].
AsymptoticFit exponent_fit(std::span<const BigInt> coeffs, double lambda, int lo, int hi);

}  // namespace cglab
