#include "pathent/dea.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "pathent/errors.hpp"

namespace pathent::dea {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sample_mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v) {
  const double m = sample_mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double w = pos - static_cast<double>(lo);
  return (1.0 - w) * sorted[lo] + w * sorted[hi];
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
};

LineFit least_squares_line(const std::vector<double>& x,
                           const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = sample_mean(x);
  const double my = sample_mean(y);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  return fit;
}

// Uniform, normal and exponential draws from a fixed 64-bit generator; the
// transforms are written out so streams are bit-stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() {
    // 53-bit mantissa in (0, 1].
    return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  double exponential() { return -std::log(uniform01()); }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

void check_series(const TimeSeries& series) {
  if (series.size() < kMinSeriesLength)
    throw DataError("dea: series must have at least 64 samples");
}

double apply_indicator(const Indicator& ind, const entropy::SampledPdf& pdf) {
  const bool alpha_is_one = std::abs(ind.alpha - 1.0) < 1e-12;
  switch (ind.kind) {
    case IndicatorKind::shannon:
      return entropy::continuous_entropy(entropy::ContinuousKind::shannon, 1.0,
                                         pdf);
    case IndicatorKind::tsallis:
      if (alpha_is_one)
        return entropy::continuous_entropy(entropy::ContinuousKind::shannon,
                                           1.0, pdf);
      return entropy::continuous_entropy(entropy::ContinuousKind::tsallis,
                                         ind.alpha, pdf);
    case IndicatorKind::mathai:
      if (alpha_is_one)
        return entropy::continuous_entropy(entropy::ContinuousKind::shannon,
                                           1.0, pdf);
      return entropy::continuous_entropy(entropy::ContinuousKind::mathai,
                                         ind.alpha, pdf);
    case IndicatorKind::mathai_extensive: {
      // Discrete extensive measure of the bin probabilities p_i = f_i·dx;
      // the -ln(dx) offset lives inside it.
      double s = 0.0;
      if (alpha_is_one) {
        for (double f : pdf.f) {
          const double p = f * pdf.dx;
          if (p > 0.0) s -= p * std::log(p);
        }
        return s;
      }
      for (double f : pdf.f) {
        const double p = f * pdf.dx;
        if (p > 0.0) s += std::pow(p, 2.0 - ind.alpha);
      }
      return std::log(s) / (ind.alpha - 1.0);
    }
  }
  throw ParameterError("entropy_curve: unknown indicator");
}

}  // namespace

double BinRule::width_for(std::vector<double> positions) const {
  switch (mode) {
    case Mode::fixed_width:
      if (!(value > 0.0)) throw ParameterError("bin rule: width must be positive");
      return value;
    case Mode::std_factor: {
      const double sd = std::sqrt(sample_variance(positions));
      // Zero spread means a degenerate ensemble; any width works, the
      // histogram flags it downstream.
      return sd > 0.0 ? value * sd : 1.0;
    }
    case Mode::iqr_factor: {
      std::sort(positions.begin(), positions.end());
      const double iqr =
          quantile_sorted(positions, 0.75) - quantile_sorted(positions, 0.25);
      // 1.349 normalizes the IQR to a Gaussian standard deviation.
      return iqr > 0.0 ? value * iqr / 1.349 : 1.0;
    }
  }
  throw ParameterError("bin rule: unknown mode");
}

DiffusionEnsemble build_ensemble(const TimeSeries& series, int t) {
  const std::size_t n = series.size();
  if (n < 4) throw DataError("build_ensemble: series too short");
  // Keep at least 3N/4 overlapping windows, i.e. t <= N/4 + 1.
  if (t < 1 || static_cast<double>(t) > static_cast<double>(n) / 4.0 + 1.0)
    throw ParameterError("build_ensemble: t out of range for this series");

  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + series.xi[i];

  DiffusionEnsemble ens;
  ens.t = t;
  ens.positions.resize(n - static_cast<std::size_t>(t) + 1);
  for (std::size_t s = 0; s < ens.positions.size(); ++s)
    ens.positions[s] = prefix[s + static_cast<std::size_t>(t)] - prefix[s];
  return ens;
}

entropy::SampledPdf estimate_pdf(const std::vector<double>& positions,
                                 double bin_width) {
  if (!(bin_width > 0.0))
    throw ParameterError("estimate_pdf: bin width must be positive");
  if (positions.size() < 32)
    throw DataError("estimate_pdf: needs at least 32 positions");

  const auto [lo_it, hi_it] = std::minmax_element(positions.begin(), positions.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  entropy::SampledPdf pdf;
  pdf.dx = bin_width;
  if (lo == hi) {
    pdf.x0 = lo - 0.5 * bin_width;
    pdf.f = {1.0 / bin_width};
    pdf.degenerate = true;
    return pdf;
  }

  pdf.x0 = lo - bin_width;
  const std::size_t nbins =
      static_cast<std::size_t>(std::ceil((hi - pdf.x0) / bin_width)) + 1;
  std::vector<std::size_t> counts(nbins, 0);
  for (double x : positions) {
    auto i = static_cast<std::size_t>((x - pdf.x0) / bin_width);
    if (i >= nbins) i = nbins - 1;
    ++counts[i];
  }
  const double norm =
      1.0 / (static_cast<double>(positions.size()) * bin_width);
  pdf.f.resize(nbins);
  for (std::size_t i = 0; i < nbins; ++i)
    pdf.f[i] = static_cast<double>(counts[i]) * norm;
  return pdf;
}

EntropyCurve entropy_curve(const TimeSeries& series, const Indicator& ind,
                           const std::vector<int>& t_grid,
                           const BinRule& rule) {
  check_series(series);
  if (t_grid.empty()) throw ParameterError("entropy_curve: empty t grid");
  if (!std::is_sorted(t_grid.begin(), t_grid.end()))
    throw ParameterError("entropy_curve: t grid must be ascending");

  const double width =
      rule.width_for(build_ensemble(series, t_grid.back()).positions);

  EntropyCurve curve;
  curve.reserve(t_grid.size());
  for (int t : t_grid) {
    const auto pdf = estimate_pdf(build_ensemble(series, t).positions, width);
    CurvePoint pt;
    pt.t = t;
    if (pdf.degenerate) {
      pt.entropy = std::numeric_limits<double>::quiet_NaN();
      pt.valid = false;
    } else {
      pt.entropy = apply_indicator(ind, pdf);
    }
    curve.push_back(pt);
  }
  return curve;
}

ScalingFit fit_delta(const EntropyCurve& curve, int t_min, int t_max) {
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& pt : curve) {
    if (!pt.valid || pt.t < t_min || pt.t > t_max) continue;
    x.push_back(std::log(static_cast<double>(pt.t)));
    y.push_back(pt.entropy);
  }
  if (x.size() < 8)
    throw DataError("fit_delta: needs at least 8 curve points in range");

  const LineFit lf = least_squares_line(x, y);
  ScalingFit fit;
  fit.delta = lf.slope;
  fit.intercept = lf.intercept;
  fit.t_range = {t_min, t_max};
  fit.residual_rms = lf.residual_rms;
  fit.n_points = static_cast<int>(x.size());
  return fit;
}

NonstationaryFit fit_nonstationary(const EntropyCurve& curve) {
  std::vector<double> tau;
  std::vector<double> y;
  for (const auto& pt : curve) {
    if (!pt.valid) continue;
    tau.push_back(std::log(static_cast<double>(pt.t)));
    y.push_back(pt.entropy);
  }
  const std::size_t n = tau.size();
  if (n < 10)
    throw DataError("fit_nonstationary: needs at least 10 curve points");

  // Normal equations for [1, tau, tau^2].
  double s[5] = {static_cast<double>(n), 0, 0, 0, 0};
  double r[3] = {0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    const double t1 = tau[i];
    const double t2 = t1 * t1;
    s[1] += t1;
    s[2] += t2;
    s[3] += t2 * t1;
    s[4] += t2 * t2;
    r[0] += y[i];
    r[1] += y[i] * t1;
    r[2] += y[i] * t2;
  }
  double m[3][4] = {{s[0], s[1], s[2], r[0]},
                    {s[1], s[2], s[3], r[1]},
                    {s[2], s[3], s[4], r[2]}};
  // Gaussian elimination with partial pivoting.
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int row = col + 1; row < 3; ++row)
      if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
    std::swap(m[col], m[piv]);
    if (m[col][col] == 0.0)
      throw DataError("fit_nonstationary: singular normal equations");
    for (int row = 0; row < 3; ++row) {
      if (row == col) continue;
      const double f = m[row][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
    }
  }
  NonstationaryFit fit;
  fit.b0 = m[0][3] / m[0][0];
  fit.delta0 = m[1][3] / m[1][1];
  fit.eta_ns = m[2][3] / m[2][2];
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pred = fit.b0 + fit.delta0 * tau[i] + fit.eta_ns * tau[i] * tau[i];
    ss += (y[i] - pred) * (y[i] - pred);
  }
  fit.residual_rms = std::sqrt(ss / static_cast<double>(n));
  return fit;
}

VarianceScaling variance_scaling(const TimeSeries& series,
                                 const std::vector<int>& t_grid) {
  check_series(series);
  std::vector<double> variances;
  variances.reserve(t_grid.size());
  for (int t : t_grid)
    variances.push_back(sample_variance(build_ensemble(series, t).positions));
  return variance_fit(t_grid, variances);
}

VarianceScaling variance_fit(const std::vector<int>& t_grid,
                             const std::vector<double>& variances) {
  if (t_grid.empty() || t_grid.size() != variances.size())
    throw ParameterError("variance_fit: inconsistent inputs");
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(variances[i] > 0.0))
      throw DataError("variance_fit: zero variance at some t");
    x.push_back(std::log(static_cast<double>(t_grid[i])));
    y.push_back(std::log(variances[i]));
  }
  const LineFit lf = least_squares_line(x, y);
  return {lf.slope / 2.0, lf.residual_rms};
}

double levy_walk_delta(double hurst) {
  if (!(hurst < 1.5))
    throw DomainError("levy_walk_delta: pole at H = 1.5, requires H < 1.5");
  return 1.0 / (3.0 - 2.0 * hurst);
}

SignalClass classify(double hurst, double delta, double tol) {
  if (!std::isfinite(hurst) || !std::isfinite(delta))
    throw ParameterError("classify: estimates must be finite");
  if (std::abs(hurst - delta) <= tol) return SignalClass::fbm;
  if (hurst < 1.5 && std::abs(delta - levy_walk_delta(hurst)) <= tol)
    return SignalClass::levy_walk;
  return SignalClass::other;
}

std::vector<int> geometric_t_grid(int lo, int hi, int points) {
  if (lo < 1 || hi <= lo || points < 2)
    throw ParameterError("t grid: requires 1 <= lo < hi and >= 2 points");
  std::vector<int> grid;
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(points - 1);
    const int t = static_cast<int>(
        std::lround(lo * std::pow(static_cast<double>(hi) / lo, f)));
    if (grid.empty() || t > grid.back()) grid.push_back(t);
  }
  return grid;
}

std::vector<int> default_t_grid(std::size_t n, int points) {
  return geometric_t_grid(10, std::max(11, static_cast<int>(n / 10)), points);
}

TimeSeries generate_gaussian(double diffusion, std::size_t n,
                             std::uint64_t seed) {
  if (!(diffusion > 0.0))
    throw ParameterError("generate: diffusion constant must be positive");
  if (n < kMinSeriesLength)
    throw ParameterError("generate: n must be at least 64");
  Rng rng(seed);
  const double sigma = std::sqrt(2.0 * diffusion);
  TimeSeries s;
  s.xi.resize(n);
  for (auto& v : s.xi) v = sigma * rng.normal();
  return s;
}

TimeSeries generate_stable(double index, std::size_t n, std::uint64_t seed) {
  if (!(index > 1.0) || !(index < 2.0))
    throw ParameterError("generate: stable index must lie in (1, 2)");
  if (n < kMinSeriesLength)
    throw ParameterError("generate: n must be at least 64");
  Rng rng(seed);
  TimeSeries s;
  s.xi.resize(n);
  for (auto& v : s.xi) {
    // Chambers-Mallows-Stuck for the symmetric case.
    const double u = kPi * (rng.uniform01() - 0.5);
    const double w = rng.exponential();
    v = std::sin(index * u) / std::pow(std::cos(u), 1.0 / index) *
        std::pow(std::cos(u - index * u) / w, (1.0 - index) / index);
  }
  return s;
}

}  // namespace pathent::dea
