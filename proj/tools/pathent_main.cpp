// pathent: entropy measures, diffusion entropy analysis, pathway integral
// images and fractional kinetics curves, emitted as CSV/JSON.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathent/dea.hpp"
#include "pathent/entropy.hpp"
#include "pathent/errors.hpp"
#include "pathent/kinetics.hpp"
#include "pathent/pathway_operator.hpp"
#include "pathent/special_functions.hpp"

using json = nlohmann::ordered_json;
namespace entropy = pathent::entropy;
namespace dea = pathent::dea;
namespace pathway = pathent::pathway;
namespace kinetics = pathent::kinetics;
namespace sf = pathent::sf;

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw pathent::DataError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pathent::DataError("cannot open input file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Numbers separated by commas and/or whitespace; empty lines and a single
// leading header line are tolerated.
std::vector<double> read_numbers(const std::string& path) {
  std::vector<double> values;
  const auto lines = read_lines(path);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    bool header_candidate = ln == 0 && values.empty();
    std::string cell;
    std::istringstream row(lines[ln]);
    bool bad = false;
    std::vector<double> row_values;
    while (std::getline(row, cell, ',') && !bad) {
      std::istringstream inner(cell);
      std::string tok;
      while (inner >> tok) {
        try {
          std::size_t used = 0;
          const double v = std::stod(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
          row_values.push_back(v);
        } catch (const std::exception&) {
          if (header_candidate) {
            bad = true;  // skip a non-numeric header row
            break;
          }
          throw pathent::DataError(path + ":" + std::to_string(ln + 1) +
                                   ": cannot parse '" + tok + "'");
        }
      }
    }
    if (!bad)
      values.insert(values.end(), row_values.begin(), row_values.end());
  }
  if (values.empty()) throw pathent::DataError(path + ": no numeric data");
  return values;
}

// Rows "x,f" on a uniform grid of bin centers.
entropy::SampledPdf read_pdf(const std::string& path) {
  const auto values = read_numbers(path);
  if (values.size() < 6 || values.size() % 2 != 0)
    throw pathent::DataError(path + ": expected x,f rows");
  std::vector<double> xs, fs;
  for (std::size_t i = 0; i < values.size(); i += 2) {
    xs.push_back(values[i]);
    fs.push_back(values[i + 1]);
  }
  const double dx = xs[1] - xs[0];
  if (!(dx > 0.0)) throw pathent::DataError(path + ": grid must be ascending");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (std::abs(xs[i] - xs[i - 1] - dx) > 1e-9 * std::max(1.0, std::abs(dx)))
      throw pathent::DataError(path + ":" + std::to_string(i + 1) +
                               ": grid spacing is not uniform");
  }
  entropy::SampledPdf pdf;
  pdf.dx = dx;
  pdf.x0 = xs[0] - dx / 2.0;
  pdf.f = fs;
  return pdf;
}

std::vector<double> parse_alpha_list(const std::string& text) {
  std::vector<double> alphas;
  std::istringstream row(text);
  std::string cell;
  while (std::getline(row, cell, ',')) alphas.push_back(std::stod(cell));
  if (alphas.empty()) throw pathent::ParameterError("empty alpha list");
  return alphas;
}

// ---------------------------------------------------------------- entropy --

int cmd_entropy(const std::string& input, bool is_pdf, const std::string& kind,
                const std::string& alpha_text, const std::string& out_path) {
  const auto alphas = parse_alpha_list(alpha_text);

  if (is_pdf) {
    static const std::map<std::string, entropy::ContinuousKind> kinds = {
        {"shannon", entropy::ContinuousKind::shannon},
        {"tsallis", entropy::ContinuousKind::tsallis},
        {"mathai", entropy::ContinuousKind::mathai}};
    const auto it = kinds.find(kind);
    if (it == kinds.end())
      throw pathent::ParameterError("unknown continuous entropy kind: " + kind);
    const auto pdf = read_pdf(input);
    Output out(out_path);
    out.stream() << "kind,alpha,value\n";
    for (double a : alphas)
      out.stream() << kind << ',' << fmt(a) << ','
                   << fmt(entropy::continuous_entropy(it->second, a, pdf))
                   << '\n';
    return 0;
  }

  static const std::map<std::string, entropy::DiscreteKind> kinds = {
      {"shannon", entropy::DiscreteKind::shannon},
      {"renyi", entropy::DiscreteKind::renyi},
      {"havrda-charvat", entropy::DiscreteKind::havrda_charvat},
      {"tsallis", entropy::DiscreteKind::tsallis},
      {"mathai", entropy::DiscreteKind::mathai},
      {"mathai-extensive", entropy::DiscreteKind::mathai_extensive}};
  const auto it = kinds.find(kind);
  if (it == kinds.end())
    throw pathent::ParameterError("unknown entropy kind: " + kind);
  const auto P = entropy::DiscreteDistribution::from(read_numbers(input));
  Output out(out_path);
  out.stream() << "kind,alpha,value\n";
  for (double a : alphas)
    out.stream() << kind << ',' << fmt(a) << ','
                 << fmt(entropy::discrete_entropy(it->second, a, P)) << '\n';
  return 0;
}

// -------------------------------------------------------------------- dea --

struct DeaConfig {
  std::string input;
  std::string generate;  // "", "gaussian", "stable"
  std::size_t n = 65536;
  std::uint64_t seed = 0;
  double diffusion = 0.5;
  double stable_index = 1.5;
  std::string indicator = "shannon";
  double alpha = 1.0;
  int t_min = 10;
  int t_max = 300;
  int t_points = 25;
  std::string bin_mode = "std";  // std | iqr | width
  double bin_value = 0.25;
  double classify_tol = 0.05;
};

json dea_config_json(const DeaConfig& c) {
  return json{{"input", c.input},
              {"generate", c.generate},
              {"n", c.n},
              {"seed", c.seed},
              {"diffusion", c.diffusion},
              {"stable_index", c.stable_index},
              {"indicator", c.indicator},
              {"alpha", c.alpha},
              {"t_min", c.t_min},
              {"t_max", c.t_max},
              {"t_points", c.t_points},
              {"bin_mode", c.bin_mode},
              {"bin_value", c.bin_value},
              {"classify_tol", c.classify_tol}};
}

DeaConfig dea_config_from_json(const json& j) {
  DeaConfig c;
  c.input = j.at("input").get<std::string>();
  c.generate = j.at("generate").get<std::string>();
  c.n = j.at("n").get<std::size_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.diffusion = j.at("diffusion").get<double>();
  c.stable_index = j.at("stable_index").get<double>();
  c.indicator = j.at("indicator").get<std::string>();
  c.alpha = j.at("alpha").get<double>();
  c.t_min = j.at("t_min").get<int>();
  c.t_max = j.at("t_max").get<int>();
  c.t_points = j.at("t_points").get<int>();
  c.bin_mode = j.at("bin_mode").get<std::string>();
  c.bin_value = j.at("bin_value").get<double>();
  c.classify_tol = j.at("classify_tol").get<double>();
  return c;
}

dea::Indicator make_indicator(const std::string& name, double alpha) {
  if (name == "shannon") return dea::Indicator::shannon();
  if (name == "tsallis") return dea::Indicator::tsallis(alpha);
  if (name == "mathai") return dea::Indicator::mathai(alpha);
  if (name == "mathai-extensive") return dea::Indicator::mathai_extensive(alpha);
  throw pathent::ParameterError("unknown indicator: " + name);
}

dea::BinRule make_bin_rule(const std::string& mode, double value) {
  if (mode == "std") return dea::BinRule::std_factor(value);
  if (mode == "iqr") return dea::BinRule::iqr_factor(value);
  if (mode == "width") return dea::BinRule::fixed_width(value);
  throw pathent::ParameterError("unknown bin rule: " + mode);
}

int cmd_dea_figure1(const std::string& family, const std::string& out_path) {
  entropy::ContinuousKind kind;
  if (family == "tsallis")
    kind = entropy::ContinuousKind::tsallis;
  else if (family == "mathai")
    kind = entropy::ContinuousKind::mathai;
  else
    throw pathent::ParameterError("figure1 family must be tsallis or mathai");

  Output out(out_path);
  out.stream() << "t,alpha_0.8,alpha_1.0,alpha_1.2\n";
  for (int i = 0; i <= 100; ++i) {
    const double t = std::pow(10.0, 2.0 * i / 100.0);  // 1 .. 100
    out.stream() << fmt(t);
    for (double a : {0.8, 1.0, 1.2})
      out.stream() << ',' << fmt(entropy::gaussian_entropy_closed(kind, a, t));
    out.stream() << '\n';
  }
  return 0;
}

int cmd_dea(const DeaConfig& cfg, const std::string& curve_path,
            const std::string& summary_path) {
  dea::TimeSeries series;
  if (!cfg.input.empty()) {
    series.xi = read_numbers(cfg.input);
  } else if (cfg.generate == "gaussian") {
    series = dea::generate_gaussian(cfg.diffusion, cfg.n, cfg.seed);
  } else if (cfg.generate == "stable") {
    series = dea::generate_stable(cfg.stable_index, cfg.n, cfg.seed);
  } else {
    throw pathent::ParameterError("dea: provide --input or --generate");
  }

  const auto ts = dea::geometric_t_grid(cfg.t_min, cfg.t_max, cfg.t_points);
  const auto indicator = make_indicator(cfg.indicator, cfg.alpha);
  const auto rule = make_bin_rule(cfg.bin_mode, cfg.bin_value);

  const auto curve = dea::entropy_curve(series, indicator, ts, rule);
  {
    Output out(curve_path);
    out.stream() << "t,entropy,valid\n";
    for (const auto& pt : curve)
      out.stream() << pt.t << ',' << fmt(pt.entropy) << ','
                   << (pt.valid ? 1 : 0) << '\n';
  }

  const auto fit = dea::fit_delta(curve, cfg.t_min, cfg.t_max);
  const auto ns = dea::fit_nonstationary(curve);
  const auto var = dea::variance_scaling(series, ts);
  const auto cls = dea::classify(var.hurst, fit.delta, cfg.classify_tol);
  const char* cls_name = cls == dea::SignalClass::fbm         ? "FBM"
                         : cls == dea::SignalClass::levy_walk ? "LevyWalk"
                                                              : "Other";

  json summary{
      {"config", dea_config_json(cfg)},
      {"scaling_fit",
       {{"delta", fit.delta},
        {"intercept", fit.intercept},
        {"t_min", fit.t_range.first},
        {"t_max", fit.t_range.second},
        {"residual_rms", fit.residual_rms},
        {"n_points", fit.n_points}}},
      {"nonstationary_fit",
       {{"b0", ns.b0},
        {"delta0", ns.delta0},
        {"eta_ns", ns.eta_ns},
        {"residual_rms", ns.residual_rms}}},
      {"variance_scaling",
       {{"hurst", var.hurst}, {"residual_rms", var.residual_rms}}},
      {"classification", cls_name},
  };
  if (var.hurst < 1.5)
    summary["levy_walk_delta_of_hurst"] = dea::levy_walk_delta(var.hurst);
  Output out(summary_path);
  out.stream() << summary.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------- pathway --

pathway::TrigKind trig_kind(const std::string& name) {
  if (name == "cos") return pathway::TrigKind::cos;
  if (name == "cosh") return pathway::TrigKind::cosh;
  if (name == "sin") return pathway::TrigKind::sin;
  if (name == "sinh") return pathway::TrigKind::sinh;
  throw pathent::ParameterError("unknown trig kind: " + name);
}

int cmd_pathway_eval(const std::string& form, double eta, double alpha,
                     double a, double rho, double p, double b, double c,
                     double x, bool laplace, const std::string& out_path) {
  Output out(out_path);
  out.stream() << "form,x,value\n";
  double value = 0.0;
  if (form == "power") {
    value = laplace ? pathway::laplace_limit_power(a, eta, rho, x)
                    : pathway::pathway_power({eta, alpha, a}, rho, x);
  } else if (form == "bessel") {
    const sf::BesselParams bp{p, b, c};
    value = laplace
                ? pathway::laplace_limit_bessel(a, eta, rho, bp, x)
                : pathway::pathway_bessel({eta, alpha, a}, rho, bp, x).value;
  } else if (form == "rl-cos") {
    value = pathway::rl_cos(eta, x);
  } else {
    const auto kind = trig_kind(form);
    value = laplace
                ? pathway::laplace_limit_trig(kind, a, eta, rho, c, x)
                : pathway::pathway_trig(kind, {eta, alpha, a}, rho, c, x).value;
  }
  out.stream() << form << ',' << fmt(x) << ',' << fmt(value) << '\n';
  return 0;
}

struct VerifyStats {
  double max_abs = 0.0;
  double max_rel = 0.0;
  int cases = 0;

  void add(double closed, double numeric) {
    const double abs_err = std::abs(closed - numeric);
    max_abs = std::max(max_abs, abs_err);
    max_rel = std::max(max_rel, abs_err / std::max(1.0, std::abs(closed)));
    ++cases;
  }
};

void verify_power(VerifyStats& stats) {
  for (double eta : {0.5, 1.0, 2.0})
    for (double rho : {0.5, 1.0, 2.5})
      for (double alpha : {-0.5, 0.0, 0.7}) {
        const pathway::PathwayParams params{eta, alpha, 1.0};
        const double closed = pathway::pathway_power(params, rho, 1.3);
        const double numeric = pathway::pathway_integral_numeric(
            [rho](double t) { return std::pow(t, rho - 1.0); }, params, 1.3,
            1e-10);
        stats.add(closed, numeric);
      }
}

void verify_trig(VerifyStats& stats) {
  for (double eta : {1.0, 2.0})
    for (double alpha : {0.0, 0.3, 0.7})
      for (double rho : {1.0, 1.5})
        for (double c : {1.0, 2.0})
          for (double x : {0.5, 1.0, 2.0})
            for (auto kind : {pathway::TrigKind::cos, pathway::TrigKind::cosh,
                              pathway::TrigKind::sin, pathway::TrigKind::sinh}) {
              const pathway::PathwayParams params{eta, alpha, 1.0};
              const double closed =
                  pathway::pathway_trig(kind, params, rho, c, x).value;
              const double numeric = pathway::pathway_integral_numeric(
                  [&](double t) {
                    const double trig =
                        kind == pathway::TrigKind::cos    ? std::cos(c * t)
                        : kind == pathway::TrigKind::cosh ? std::cosh(c * t)
                        : kind == pathway::TrigKind::sin  ? std::sin(c * t)
                                                          : std::sinh(c * t);
                    return std::pow(t, rho - 1.0) * trig;
                  },
                  params, x, 1e-10);
              stats.add(closed, numeric);
            }
}

void verify_bessel(VerifyStats& stats) {
  for (double eta : {1.5, 2.0})
    for (double alpha : {0.0, 0.5})
      for (double rho : {1.2, 1.5})
        for (double p : {-0.5, 0.5})
          for (double b : {1.0, 2.0})
            for (double c : {0.5, 1.0})
              for (double x : {0.5, 1.0}) {
                const pathway::PathwayParams params{eta, alpha, 1.0};
                const sf::BesselParams bp{p, b, c};
                const double closed =
                    pathway::pathway_bessel(params, rho, bp, x).value;
                const double numeric = pathway::pathway_integral_numeric(
                    [&](double t) {
                      return std::pow(t, rho - 1.0) * sf::bessel_w(bp, t);
                    },
                    params, x, 1e-10);
                stats.add(closed, numeric);
              }
}

int cmd_pathway_verify(const std::string& which, double tol) {
  VerifyStats stats;
  if (which == "power" || which == "all") verify_power(stats);
  if (which == "trig" || which == "all") verify_trig(stats);
  if (which == "bessel" || which == "all") verify_bessel(stats);
  if (stats.cases == 0)
    throw pathent::ParameterError("verify target must be power|trig|bessel|all");
  const bool pass = stats.max_abs <= tol || stats.max_rel <= tol;
  std::cout << "cases: " << stats.cases
            << "\nmax abs discrepancy: " << fmt(stats.max_abs)
            << "\nmax rel discrepancy: " << fmt(stats.max_rel) << "\n"
            << (pass ? "PASS" : "FAIL") << " (tol " << fmt(tol) << ")\n";
  return pass ? 0 : 1;
}

// --------------------------------------------------------------- kinetics --

int cmd_kinetics(const std::string& law, const kinetics::KineticsParams& params,
                 double t0, double t1, int tn, const std::string& out_path) {
  if (law == "mixture-check") {
    double worst = 0.0;
    for (double t : {0.25, 0.5, 1.0, 2.0})
      for (double mu : {1.0, 2.0})
        for (double nu : {0.5, 1.0})
          for (double alpha : {1.5, 2.0}) {
            // omega pinned at 3 through b: keeps the alternating series well
            // inside its round-off envelope over the effective rate range.
            const double b = std::pow(3.0, -nu) / (alpha - 1.0);
            const kinetics::KineticsParams p{1.0, 1.0, nu, mu, b, alpha};
            const double mixed = kinetics::mixture_integral(p, t, 1e-9);
            const double closed = kinetics::unconditional_density(p, t);
            worst = std::max(worst, std::abs(mixed - closed));
          }
    const bool pass = worst <= 1e-6;
    std::cout << "max deviation: " << fmt(worst) << "\n"
              << (pass ? "PASS" : "FAIL") << " (tol 1e-06)\n";
    return pass ? 0 : 1;
  }

  if (!(t0 >= 0.0) || !(t1 > t0) || tn < 2)
    throw pathent::ParameterError("kinetics: requires 0 <= t0 < t1, tn >= 2");
  Output out(out_path);
  out.stream() << "t,N\n";
  for (int i = 0; i < tn; ++i) {
    const double t = t0 + (t1 - t0) * i / (tn - 1);
    double value = 0.0;
    if (law == "exp") {
      value = kinetics::exponential_decay(params.n0, params.c, t);
    } else if (law == "ml") {
      value = kinetics::ml_decay(params.n0, params.c, params.nu, t);
    } else if (law == "pathway") {
      value = (t == 0.0) ? NAN : kinetics::unconditional_density(params, t);
    } else {
      throw pathent::ParameterError("unknown kinetics law: " + law);
    }
    out.stream() << fmt(t) << ',' << fmt(value) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized entropies, diffusion entropy analysis, pathway "
               "fractional integrals and fractional kinetics"};
  app.require_subcommand(1);

  // entropy
  std::string ent_input, ent_kind = "shannon", ent_alpha = "1", ent_out = "-";
  bool ent_pdf = false;
  auto* ent =
      app.add_subcommand("entropy", "entropy of a distribution or pdf file");
  ent->add_option("--input", ent_input,
                  "probability vector file, or x,f rows with --pdf")
      ->required();
  ent->add_flag("--pdf", ent_pdf, "input holds a sampled density (x,f rows)");
  ent->add_option("--kind", ent_kind,
                  "shannon|renyi|havrda-charvat|tsallis|mathai|mathai-extensive");
  ent->add_option("--alpha", ent_alpha, "order, or comma list to sweep");
  ent->add_option("--out", ent_out, "output CSV path ('-' = stdout)");

  // generate
  std::string gen_kind, gen_out = "-";
  std::size_t gen_n = 65536;
  std::uint64_t gen_seed = 0;
  double gen_d = 0.5, gen_index = 1.5;
  auto* gen = app.add_subcommand("generate", "emit a synthetic series as CSV");
  gen->add_option("kind", gen_kind, "gaussian|stable")->required();
  gen->add_option("--n", gen_n, "series length");
  auto* gen_seed_opt =
      gen->add_option("--seed", gen_seed, "generator seed (required)");
  gen->add_option("--d", gen_d, "diffusion constant (gaussian)");
  gen->add_option("--index", gen_index, "stability index in (1,2) (stable)");
  gen->add_option("--out", gen_out, "output CSV path");

  // dea
  DeaConfig dcfg;
  std::string dea_curve = "-", dea_summary = "-", dea_figure1, dea_config_path;
  bool dea_dump_config = false;
  auto* dea_cmd = app.add_subcommand("dea", "diffusion entropy analysis");
  dea_cmd->add_option("--input", dcfg.input, "series CSV (one value per line)");
  dea_cmd->add_option("--generate", dcfg.generate, "gaussian|stable");
  dea_cmd->add_option("--n", dcfg.n, "generated series length");
  auto* dea_seed_opt = dea_cmd->add_option(
      "--seed", dcfg.seed, "generator seed (required with --generate)");
  dea_cmd->add_option("--d", dcfg.diffusion, "diffusion constant (gaussian)");
  dea_cmd->add_option("--index", dcfg.stable_index, "stability index (stable)");
  dea_cmd->add_option("--indicator", dcfg.indicator,
                      "shannon|tsallis|mathai|mathai-extensive");
  dea_cmd->add_option("--alpha", dcfg.alpha, "indicator order");
  dea_cmd->add_option("--tmin", dcfg.t_min, "smallest window length");
  dea_cmd->add_option("--tmax", dcfg.t_max, "largest window length");
  dea_cmd->add_option("--tpoints", dcfg.t_points, "grid size");
  dea_cmd->add_option("--bin-mode", dcfg.bin_mode, "std|iqr|width");
  dea_cmd->add_option("--bin-value", dcfg.bin_value, "factor (std/iqr) or width");
  dea_cmd->add_option("--classify-tol", dcfg.classify_tol,
                      "tolerance for the H/delta classification");
  dea_cmd->add_option("--curve-out", dea_curve, "entropy curve CSV path");
  dea_cmd->add_option("--summary-out", dea_summary, "fit summary JSON path");
  dea_cmd->add_option("--figure1", dea_figure1,
                      "emit closed-form curves for tsallis|mathai instead");
  dea_cmd->add_option("--config", dea_config_path,
                      "load the full run configuration from JSON");
  dea_cmd->add_flag("--dump-config", dea_dump_config,
                    "print the canonical config JSON and exit");

  // pathway
  auto* pw = app.add_subcommand("pathway", "pathway integral images");
  pw->require_subcommand(1);
  std::string pw_form, pw_out = "-";
  double pw_eta = 1.0, pw_alpha = 0.0, pw_a = 1.0, pw_rho = 1.0;
  double pw_p = 0.0, pw_b = 1.0, pw_c = 1.0, pw_x = 1.0;
  bool pw_laplace = false;
  auto* pw_eval = pw->add_subcommand("eval", "closed-form image values");
  pw_eval->add_option("form", pw_form, "power|bessel|cos|cosh|sin|sinh|rl-cos")
      ->required();
  pw_eval->add_option("--eta", pw_eta);
  pw_eval->add_option("--alpha", pw_alpha);
  pw_eval->add_option("--a", pw_a);
  pw_eval->add_option("--rho", pw_rho);
  pw_eval->add_option("--p", pw_p);
  pw_eval->add_option("--b", pw_b);
  pw_eval->add_option("--c", pw_c);
  pw_eval->add_option("--x", pw_x);
  pw_eval->add_flag("--laplace", pw_laplace, "alpha -> 1 limiting form");
  pw_eval->add_option("--out", pw_out);

  std::string pw_verify_which = "all";
  double pw_tol = 1e-7;
  auto* pw_verify =
      pw->add_subcommand("verify", "closed form vs quadrature over the grids");
  pw_verify->add_option("which", pw_verify_which, "power|trig|bessel|all");
  pw_verify->add_option("--tol", pw_tol, "gate on the max discrepancy");

  // kinetics
  std::string kin_law, kin_out = "-";
  kinetics::KineticsParams kin_params;
  double kin_t0 = 0.0, kin_t1 = 10.0;
  int kin_tn = 101;
  auto* kin = app.add_subcommand("kinetics", "relaxation curves as CSV");
  kin->add_option("law", kin_law, "exp|ml|pathway|mixture-check")->required();
  kin->add_option("--n0", kin_params.n0, "initial amount");
  kin->add_option("--c", kin_params.c, "rate");
  kin->add_option("--nu", kin_params.nu, "fractional order in (0,1]");
  kin->add_option("--mu", kin_params.mu, "gamma shape");
  kin->add_option("--b", kin_params.b, "pathway scale");
  kin->add_option("--alpha", kin_params.alpha_k, "pathway parameter > 1");
  kin->add_option("--t0", kin_t0, "grid start");
  kin->add_option("--t1", kin_t1, "grid end");
  kin->add_option("--tn", kin_tn, "grid size");
  kin->add_option("--out", kin_out, "output CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ent)
      return cmd_entropy(ent_input, ent_pdf, ent_kind, ent_alpha, ent_out);
    if (*gen) {
      if (gen_seed_opt->count() == 0)
        throw pathent::ParameterError("generate: --seed is required");
      dea::TimeSeries series;
      if (gen_kind == "gaussian")
        series = dea::generate_gaussian(gen_d, gen_n, gen_seed);
      else if (gen_kind == "stable")
        series = dea::generate_stable(gen_index, gen_n, gen_seed);
      else
        throw pathent::ParameterError("unknown generator kind: " + gen_kind);
      Output out(gen_out);
      out.stream() << "xi\n";
      for (double v : series.xi) out.stream() << fmt(v) << '\n';
      return 0;
    }
    if (*dea_cmd) {
      if (!dea_figure1.empty()) return cmd_dea_figure1(dea_figure1, dea_curve);
      DeaConfig cfg = dcfg;
      if (!dea_config_path.empty()) {
        std::ifstream in(dea_config_path);
        if (!in)
          throw pathent::DataError("cannot open config: " + dea_config_path);
        cfg = dea_config_from_json(json::parse(in));
      } else if (!cfg.generate.empty() && dea_seed_opt->count() == 0) {
        throw pathent::ParameterError("dea: --seed is required with --generate");
      }
      if (dea_dump_config) {
        std::cout << dea_config_json(cfg).dump(2) << '\n';
        return 0;
      }
      return cmd_dea(cfg, dea_curve, dea_summary);
    }
    if (*pw_eval)
      return cmd_pathway_eval(pw_form, pw_eta, pw_alpha, pw_a, pw_rho, pw_p,
                              pw_b, pw_c, pw_x, pw_laplace, pw_out);
    if (*pw_verify) return cmd_pathway_verify(pw_verify_which, pw_tol);
    if (*kin)
      return cmd_kinetics(kin_law, kin_params, kin_t0, kin_t1, kin_tn, kin_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
