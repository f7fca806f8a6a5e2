#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pathent/entropy.hpp"

namespace pathent::dea {

// Raw signal. Analysis operations require at least 64 samples.
struct TimeSeries {
  std::vector<double> xi;

  std::size_t size() const { return xi.size(); }
};

inline constexpr std::size_t kMinSeriesLength = 64;

// Positions x^{(s)}(t) = Σ_{i=s}^{s+t-1} xi_i of the diffusion trajectories
// generated by overlapping windows of length t.
struct DiffusionEnsemble {
  int t = 1;
  std::vector<double> positions;
};

// Least-squares line S = intercept + delta·ln t.
struct ScalingFit {
  double delta = 0.0;
  double intercept = 0.0;
  std::pair<int, int> t_range{0, 0};
  double residual_rms = 0.0;
  int n_points = 0;
};

// Least-squares quadratic S = b0 + delta0·tau + eta_ns·tau^2, tau = ln t.
// Meaningful while eta_ns·ln t < 1 - delta0 (ballistic bound) on the range.
struct NonstationaryFit {
  double b0 = 0.0;
  double delta0 = 0.0;
  double eta_ns = 0.0;
  double residual_rms = 0.0;
};

struct VarianceScaling {
  double hurst = 0.0;
  double residual_rms = 0.0;
};

enum class IndicatorKind { shannon, tsallis, mathai, mathai_extensive };

// Entropy indicator applied to the estimated pdf at each window length.
// mathai_extensive works on the histogram probabilities and therefore carries
// the -ln(bin width) offset; with the bin width held fixed across t the
// offset is constant and the slope is unaffected. alpha == 1 falls back to
// the Shannon limit for every kind.
struct Indicator {
  IndicatorKind kind = IndicatorKind::shannon;
  double alpha = 1.0;

  static Indicator shannon() { return {IndicatorKind::shannon, 1.0}; }
  static Indicator tsallis(double a) { return {IndicatorKind::tsallis, a}; }
  static Indicator mathai(double a) { return {IndicatorKind::mathai, a}; }
  static Indicator mathai_extensive(double a) {
    return {IndicatorKind::mathai_extensive, a};
  }
};

// Bin width selection for the position histograms; the width is derived from
// the ensemble at the largest t of the grid and then held fixed.
struct BinRule {
  enum class Mode { std_factor, iqr_factor, fixed_width };
  Mode mode = Mode::std_factor;
  double value = 0.25;

  static BinRule std_factor(double f = 0.25) { return {Mode::std_factor, f}; }
  // Robust alternative for heavy-tailed signals: f times the normalized IQR.
  static BinRule iqr_factor(double f = 0.25) { return {Mode::iqr_factor, f}; }
  static BinRule fixed_width(double w) { return {Mode::fixed_width, w}; }

  double width_for(std::vector<double> positions) const;
};

struct CurvePoint {
  int t = 0;
  double entropy = 0.0;
  bool valid = true;  // false when the pdf at t was degenerate
};

using EntropyCurve = std::vector<CurvePoint>;

DiffusionEnsemble build_ensemble(const TimeSeries& series, int t);

// Histogram density over [min, max] padded by one bin on each side,
// normalized to unit mass. Identical positions produce a single-bin pdf
// marked degenerate.
entropy::SampledPdf estimate_pdf(const std::vector<double>& positions,
                                 double bin_width);

EntropyCurve entropy_curve(const TimeSeries& series, const Indicator& ind,
                           const std::vector<int>& t_grid,
                           const BinRule& rule = BinRule());

ScalingFit fit_delta(const EntropyCurve& curve, int t_min, int t_max);

NonstationaryFit fit_nonstationary(const EntropyCurve& curve);

VarianceScaling variance_scaling(const TimeSeries& series,
                                 const std::vector<int>& t_grid);

// The regression behind variance_scaling: least squares of ln(variance)
// against ln t, H = slope/2.
VarianceScaling variance_fit(const std::vector<int>& t_grid,
                             const std::vector<double>& variances);

// Levy-walk relation delta = 1/(3 - 2H), defined for H < 1.5.
double levy_walk_delta(double hurst);

enum class SignalClass { fbm, levy_walk, other };

SignalClass classify(double hurst, double delta, double tol);

// ~`points` geometrically spaced integer window lengths in [lo, hi].
std::vector<int> geometric_t_grid(int lo, int hi, int points = 25);

// Default analysis grid, [10, n/10].
std::vector<int> default_t_grid(std::size_t n, int points = 25);

// Deterministic synthetic signals. gaussian: iid normal with variance 2D;
// stable: iid symmetric alpha-stable draws (Chambers-Mallows-Stuck), index
// in (1, 2).
TimeSeries generate_gaussian(double diffusion, std::size_t n, std::uint64_t seed);
TimeSeries generate_stable(double index, std::size_t n, std::uint64_t seed);

}  // namespace pathent::dea
