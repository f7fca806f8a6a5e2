#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pathent/dea.hpp"
#include "pathent/entropy.hpp"
#include "pathent/errors.hpp"
#include "pathent/kinetics.hpp"
#include "pathent/pathway_operator.hpp"
#include "pathent/special_functions.hpp"

namespace py = pybind11;
using namespace pathent;

PYBIND11_MODULE(_pathent, m) {
  m.doc() = "generalized entropies, diffusion entropy analysis, pathway "
            "fractional integrals and fractional kinetics";

  // special functions
  py::class_<sf::GammaFactor>(m, "GammaFactor")
      .def(py::init<double, double>(), py::arg("offset"), py::arg("step"))
      .def_readwrite("offset", &sf::GammaFactor::offset)
      .def_readwrite("step", &sf::GammaFactor::step);
  py::class_<sf::WrightSeriesSpec>(m, "WrightSeriesSpec")
      .def(py::init([](const std::vector<std::pair<double, double>>& upper,
                       const std::vector<std::pair<double, double>>& lower) {
             sf::WrightSeriesSpec spec;
             for (auto [a, s] : upper) spec.upper.push_back({a, s});
             for (auto [b, s] : lower) spec.lower.push_back({b, s});
             spec.validate();
             return spec;
           }),
           py::arg("upper"), py::arg("lower"))
      .def("delta", &sf::WrightSeriesSpec::delta);
  py::class_<sf::BesselParams>(m, "BesselParams")
      .def(py::init<double, double, double>(), py::arg("p"), py::arg("b"),
           py::arg("c"))
      .def_readwrite("p", &sf::BesselParams::p)
      .def_readwrite("b", &sf::BesselParams::b)
      .def_readwrite("c", &sf::BesselParams::c)
      .def("kappa", &sf::BesselParams::kappa);

  m.def("log_gamma", &sf::log_gamma, py::arg("x"));
  m.def("wright_eval", &sf::wright_eval, py::arg("spec"), py::arg("z"),
        py::arg("tol") = 1e-12);
  m.def("mittag_leffler", &sf::mittag_leffler, py::arg("alpha"),
        py::arg("beta"), py::arg("z"), py::arg("tol") = 1e-12);
  m.def("prabhakar", &sf::prabhakar, py::arg("gamma_p"), py::arg("nu"),
        py::arg("mu"), py::arg("z"), py::arg("tol") = 1e-12);
  m.def("bessel_w", &sf::bessel_w, py::arg("params"), py::arg("z"),
        py::arg("tol") = 1e-12);

  // entropy
  py::enum_<entropy::DiscreteKind>(m, "DiscreteKind")
      .value("shannon", entropy::DiscreteKind::shannon)
      .value("renyi", entropy::DiscreteKind::renyi)
      .value("havrda_charvat", entropy::DiscreteKind::havrda_charvat)
      .value("tsallis", entropy::DiscreteKind::tsallis)
      .value("mathai", entropy::DiscreteKind::mathai)
      .value("mathai_extensive", entropy::DiscreteKind::mathai_extensive);
  py::enum_<entropy::ContinuousKind>(m, "ContinuousKind")
      .value("shannon", entropy::ContinuousKind::shannon)
      .value("tsallis", entropy::ContinuousKind::tsallis)
      .value("mathai", entropy::ContinuousKind::mathai);
  py::class_<entropy::DiscreteDistribution>(m, "DiscreteDistribution")
      .def(py::init(&entropy::DiscreteDistribution::from), py::arg("p"))
      .def_readonly("p", &entropy::DiscreteDistribution::p);
  py::class_<entropy::SampledPdf>(m, "SampledPdf")
      .def(py::init([](double x0, double dx, std::vector<double> f) {
             return entropy::SampledPdf{x0, dx, std::move(f), false};
           }),
           py::arg("x0"), py::arg("dx"), py::arg("f"))
      .def_readwrite("x0", &entropy::SampledPdf::x0)
      .def_readwrite("dx", &entropy::SampledPdf::dx)
      .def_readwrite("f", &entropy::SampledPdf::f)
      .def_readonly("degenerate", &entropy::SampledPdf::degenerate)
      .def("mass", &entropy::SampledPdf::mass)
      .def("center", &entropy::SampledPdf::center);
  py::class_<entropy::PathwayDensity>(m, "PathwayDensity")
      .def_readonly("rho", &entropy::PathwayDensity::rho)
      .def_readonly("a", &entropy::PathwayDensity::a)
      .def_readonly("alpha_pw", &entropy::PathwayDensity::alpha_pw)
      .def_readonly("delta_exp", &entropy::PathwayDensity::delta_exp)
      .def_readonly("c1", &entropy::PathwayDensity::c1)
      .def("support_upper", &entropy::PathwayDensity::support_upper)
      .def("__call__", &entropy::PathwayDensity::operator());

  m.def("discrete_entropy", &entropy::discrete_entropy, py::arg("kind"),
        py::arg("alpha"), py::arg("P"));
  m.def("continuous_entropy", &entropy::continuous_entropy, py::arg("kind"),
        py::arg("alpha"), py::arg("pdf"));
  m.def("gaussian_entropy_closed", &entropy::gaussian_entropy_closed,
        py::arg("kind"), py::arg("alpha"), py::arg("t"));
  m.def("mathai_expansion", &entropy::mathai_expansion, py::arg("pdf"),
        py::arg("epsilon"));
  m.def("pathway_density_make", &entropy::pathway_density_make, py::arg("rho"),
        py::arg("a"), py::arg("alpha_pw"), py::arg("delta_exp"));
  m.def("pathway_kernel", &entropy::pathway_kernel, py::arg("rho"),
        py::arg("a"), py::arg("alpha_pw"), py::arg("delta_exp"), py::arg("x"));
  m.def("pathway_kernel_norm", &entropy::pathway_kernel_norm, py::arg("rho"),
        py::arg("a"), py::arg("alpha_pw"), py::arg("delta_exp"),
        py::arg("tol") = 1e-10);

  // dea
  py::class_<dea::TimeSeries>(m, "TimeSeries")
      .def(py::init([](std::vector<double> xi) {
             return dea::TimeSeries{std::move(xi)};
           }),
           py::arg("xi"))
      .def_readonly("xi", &dea::TimeSeries::xi)
      .def("__len__", &dea::TimeSeries::size);
  py::class_<dea::DiffusionEnsemble>(m, "DiffusionEnsemble")
      .def_readonly("t", &dea::DiffusionEnsemble::t)
      .def_readonly("positions", &dea::DiffusionEnsemble::positions);
  py::class_<dea::ScalingFit>(m, "ScalingFit")
      .def_readonly("delta", &dea::ScalingFit::delta)
      .def_readonly("intercept", &dea::ScalingFit::intercept)
      .def_readonly("t_range", &dea::ScalingFit::t_range)
      .def_readonly("residual_rms", &dea::ScalingFit::residual_rms)
      .def_readonly("n_points", &dea::ScalingFit::n_points);
  py::class_<dea::NonstationaryFit>(m, "NonstationaryFit")
      .def_readonly("b0", &dea::NonstationaryFit::b0)
      .def_readonly("delta0", &dea::NonstationaryFit::delta0)
      .def_readonly("eta_ns", &dea::NonstationaryFit::eta_ns)
      .def_readonly("residual_rms", &dea::NonstationaryFit::residual_rms);
  py::class_<dea::VarianceScaling>(m, "VarianceScaling")
      .def_readonly("hurst", &dea::VarianceScaling::hurst)
      .def_readonly("residual_rms", &dea::VarianceScaling::residual_rms);
  py::class_<dea::Indicator>(m, "Indicator")
      .def_static("shannon", &dea::Indicator::shannon)
      .def_static("tsallis", &dea::Indicator::tsallis, py::arg("alpha"))
      .def_static("mathai", &dea::Indicator::mathai, py::arg("alpha"))
      .def_static("mathai_extensive", &dea::Indicator::mathai_extensive,
                  py::arg("alpha"));
  py::class_<dea::BinRule>(m, "BinRule")
      .def(py::init<>())
      .def_static("std_factor", &dea::BinRule::std_factor, py::arg("f") = 0.25)
      .def_static("iqr_factor", &dea::BinRule::iqr_factor, py::arg("f") = 0.25)
      .def_static("fixed_width", &dea::BinRule::fixed_width, py::arg("w"));
  py::class_<dea::CurvePoint>(m, "CurvePoint")
      .def_readonly("t", &dea::CurvePoint::t)
      .def_readonly("entropy", &dea::CurvePoint::entropy)
      .def_readonly("valid", &dea::CurvePoint::valid);
  py::enum_<dea::SignalClass>(m, "SignalClass")
      .value("fbm", dea::SignalClass::fbm)
      .value("levy_walk", dea::SignalClass::levy_walk)
      .value("other", dea::SignalClass::other);

  m.def("build_ensemble", &dea::build_ensemble, py::arg("series"), py::arg("t"));
  m.def("estimate_pdf", &dea::estimate_pdf, py::arg("positions"),
        py::arg("bin_width"));
  m.def("entropy_curve", &dea::entropy_curve, py::arg("series"),
        py::arg("indicator"), py::arg("t_grid"),
        py::arg("rule") = dea::BinRule());
  m.def("fit_delta", &dea::fit_delta, py::arg("curve"), py::arg("t_min"),
        py::arg("t_max"));
  m.def("fit_nonstationary", &dea::fit_nonstationary, py::arg("curve"));
  m.def("variance_scaling", &dea::variance_scaling, py::arg("series"),
        py::arg("t_grid"));
  m.def("variance_fit", &dea::variance_fit, py::arg("t_grid"),
        py::arg("variances"));
  m.def("levy_walk_delta", &dea::levy_walk_delta, py::arg("hurst"));
  m.def("classify", &dea::classify, py::arg("hurst"), py::arg("delta"),
        py::arg("tol"));
  m.def("geometric_t_grid", &dea::geometric_t_grid, py::arg("lo"),
        py::arg("hi"), py::arg("points") = 25);
  m.def("default_t_grid", &dea::default_t_grid, py::arg("n"),
        py::arg("points") = 25);
  m.def("generate_gaussian", &dea::generate_gaussian, py::arg("diffusion"),
        py::arg("n"), py::arg("seed"));
  m.def("generate_stable", &dea::generate_stable, py::arg("index"),
        py::arg("n"), py::arg("seed"));

  // pathway operator
  py::class_<pathway::PathwayParams>(m, "PathwayParams")
      .def(py::init<double, double, double>(), py::arg("eta"),
           py::arg("alpha_pw"), py::arg("a"))
      .def_readwrite("eta", &pathway::PathwayParams::eta)
      .def_readwrite("alpha_pw", &pathway::PathwayParams::alpha_pw)
      .def_readwrite("a", &pathway::PathwayParams::a)
      .def("z_exp", &pathway::PathwayParams::z_exp)
      .def("upper_limit", &pathway::PathwayParams::upper_limit);
  py::enum_<pathway::ImageForm>(m, "ImageForm")
      .value("closed_wright", pathway::ImageForm::closed_wright)
      .value("quadrature", pathway::ImageForm::quadrature)
      .value("laplace_limit", pathway::ImageForm::laplace_limit);
  py::class_<pathway::OperatorImage>(m, "OperatorImage")
      .def_readonly("value", &pathway::OperatorImage::value)
      .def_readonly("form", &pathway::OperatorImage::form);
  py::enum_<pathway::KernelVariant>(m, "KernelVariant")
      .value("corrected", pathway::KernelVariant::corrected)
      .value("printed", pathway::KernelVariant::printed);
  py::enum_<pathway::TrigKind>(m, "TrigKind")
      .value("cos", pathway::TrigKind::cos)
      .value("cosh", pathway::TrigKind::cosh)
      .value("sin", pathway::TrigKind::sin)
      .value("sinh", pathway::TrigKind::sinh);

  m.def("pathway_integral_numeric", &pathway::pathway_integral_numeric,
        py::arg("f"), py::arg("params"), py::arg("x"), py::arg("tol") = 1e-9,
        py::arg("variant") = pathway::KernelVariant::corrected);
  m.def("pathway_power", &pathway::pathway_power, py::arg("params"),
        py::arg("rho"), py::arg("x"));
  m.def("pathway_bessel", &pathway::pathway_bessel, py::arg("params"),
        py::arg("rho"), py::arg("bp"), py::arg("x"), py::arg("tol") = 1e-12);
  m.def("pathway_trig", &pathway::pathway_trig, py::arg("kind"),
        py::arg("params"), py::arg("rho"), py::arg("c"), py::arg("x"),
        py::arg("tol") = 1e-12);
  m.def("laplace_limit_power", &pathway::laplace_limit_power, py::arg("a"),
        py::arg("eta"), py::arg("rho"), py::arg("x"));
  m.def("laplace_limit_bessel", &pathway::laplace_limit_bessel, py::arg("a"),
        py::arg("eta"), py::arg("rho"), py::arg("bp"), py::arg("x"),
        py::arg("tol") = 1e-12);
  m.def("laplace_limit_trig", &pathway::laplace_limit_trig, py::arg("kind"),
        py::arg("a"), py::arg("eta"), py::arg("rho"), py::arg("c"),
        py::arg("x"), py::arg("tol") = 1e-12);
  m.def("rl_cos", &pathway::rl_cos, py::arg("eta"), py::arg("x"));

  // kinetics
  py::class_<kinetics::KineticsParams>(m, "KineticsParams")
      .def(py::init([](double n0, double c, double nu, double mu, double b,
                       double alpha_k) {
             kinetics::KineticsParams p{n0, c, nu, mu, b, alpha_k};
             p.validate();
             return p;
           }),
           py::arg("n0") = 1.0, py::arg("c") = 1.0, py::arg("nu") = 1.0,
           py::arg("mu") = 1.0, py::arg("b") = 1.0, py::arg("alpha_k") = 2.0)
      .def_readwrite("n0", &kinetics::KineticsParams::n0)
      .def_readwrite("c", &kinetics::KineticsParams::c)
      .def_readwrite("nu", &kinetics::KineticsParams::nu)
      .def_readwrite("mu", &kinetics::KineticsParams::mu)
      .def_readwrite("b", &kinetics::KineticsParams::b)
      .def_readwrite("alpha_k", &kinetics::KineticsParams::alpha_k)
      .def("gamma_k", &kinetics::KineticsParams::gamma_k)
      .def("omega", &kinetics::KineticsParams::omega);

  m.def("exponential_decay", &kinetics::exponential_decay, py::arg("n0"),
        py::arg("c"), py::arg("t"));
  m.def("ml_decay", &kinetics::ml_decay, py::arg("n0"), py::arg("c"),
        py::arg("nu"), py::arg("t"));
  m.def("conditional_density", &kinetics::conditional_density,
        py::arg("params"), py::arg("c_rate"), py::arg("t"));
  m.def("conditional_density_literal", &kinetics::conditional_density_literal,
        py::arg("params"), py::arg("c_rate"), py::arg("t"));
  m.def("gamma_rate_density", &kinetics::gamma_rate_density, py::arg("omega"),
        py::arg("mu"), py::arg("c_rate"));
  m.def("unconditional_density", &kinetics::unconditional_density,
        py::arg("params"), py::arg("t"));
  m.def("mixture_integral", &kinetics::mixture_integral, py::arg("params"),
        py::arg("t"), py::arg("tol") = 1e-8);

  py::register_exception<pathent::ParameterError>(m, "PathentParameterError",
                                                  PyExc_ValueError);
  py::register_exception<pathent::DataError>(m, "PathentDataError",
                                             PyExc_ValueError);
  py::register_exception<pathent::DomainError>(m, "PathentDomainError",
                                               PyExc_ValueError);
  py::register_exception<pathent::NumericError>(m, "PathentNumericError",
                                                PyExc_ArithmeticError);
}
