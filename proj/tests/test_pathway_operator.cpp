#include "pathent/pathway_operator.hpp"

#include <cmath>

#include "doctest.h"
#include "pathent/errors.hpp"
#include "pathent/quadrature.hpp"
#include "pathent/special_functions.hpp"

using namespace pathent;
using pathway::KernelVariant;
using pathway::PathwayParams;
using pathway::TrigKind;

namespace {

constexpr double kPi = 3.14159265358979323846;

double numeric_power(const PathwayParams& params, double rho, double x) {
  return pathway::pathway_integral_numeric(
      [rho](double t) { return std::pow(t, rho - 1.0); }, params, x, 1e-10);
}

}  // namespace

TEST_CASE("numeric operator: constant integrand by hand") {
  // x^eta ∫_0^x (1 - t/x) dt = x^{eta+1}/2 at eta=1, alpha=0, a=1.
  const PathwayParams params{1.0, 0.0, 1.0};
  const double got = pathway::pathway_integral_numeric(
      [](double) { return 1.0; }, params, 2.0, 1e-11);
  CHECK(got == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("power image: lemma values and quadrature duality on a grid") {
  CHECK(pathway::pathway_power({1.0, 0.0, 1.0}, 1.0, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK(pathway::pathway_power({1.0, 0.0, 1.0}, 2.0, 1.0) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-13));

  for (double eta : {0.5, 1.0, 2.0}) {
    for (double rho : {0.5, 1.0, 2.5}) {
      for (double alpha : {-0.5, 0.0, 0.7}) {
        const PathwayParams params{eta, alpha, 1.0};
        const double closed = pathway::pathway_power(params, rho, 1.3);
        const double numeric = numeric_power(params, rho, 1.3);
        CHECK(std::abs(closed - numeric) <=
              1e-7 * std::max(1.0, std::abs(closed)));
      }
    }
  }
}

TEST_CASE("power image approaches the Laplace limit as alpha -> 1-") {
  const double rho = 1.5, a = 0.8, eta = 2.0, x = 1.2;
  const double limit = pathway::laplace_limit_power(a, eta, rho, x);
  CHECK(limit > 0.0);
  const double near = pathway::pathway_power({eta, 1.0 - 1e-4, a}, rho, x);
  CHECK(std::abs(near - limit) <= 1e-3 * std::abs(limit));
  CHECK(pathway::laplace_limit_power(1.0, 2.0, 1.0, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("bessel image: c = 0 collapses to the scaled power image") {
  const PathwayParams params{1.5, 0.3, 1.0};
  const sf::BesselParams bp{0.5, 1.0, 0.0};
  const double got = pathway::pathway_bessel(params, 1.0, bp, 0.9).value;
  const double expected = pathway::pathway_power(params, 1.0 + bp.p, 0.9) *
                          std::pow(2.0, -bp.p) / std::tgamma(bp.kappa());
  CHECK(got == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("bessel image matches quadrature") {
  const PathwayParams params{2.0, 0.5, 1.0};
  const sf::BesselParams bp{0.5, 1.0, 1.0};
  const double rho = 1.5, x = 1.0;
  const double closed = pathway::pathway_bessel(params, rho, bp, x).value;
  const double numeric = pathway::pathway_integral_numeric(
      [&](double t) {
        return std::pow(t, rho - 1.0) * sf::bessel_w(bp, t);
      },
      params, x, 1e-10);
  CHECK(std::abs(closed - numeric) <= 1e-7);
}

TEST_CASE("trig images: c = 0 cosine is exactly the power image") {
  const PathwayParams params{1.0, 0.3, 2.0};
  const double rho = 1.7, x = 0.8;
  CHECK(pathway::pathway_trig(TrigKind::cos, params, rho, 0.0, x).value ==
        doctest::Approx(pathway::pathway_power(params, rho, x))
            .epsilon(1e-12));
}

TEST_CASE("trig images match quadrature on the documented grid") {
  for (double eta : {1.0, 2.0}) {
    for (double alpha : {0.0, 0.3, 0.7}) {
      for (double rho : {1.0, 1.5}) {
        for (double c : {1.0, 2.0}) {
          for (double x : {0.5, 1.0, 2.0}) {
            const PathwayParams params{eta, alpha, 1.0};
            for (auto kind : {TrigKind::cos, TrigKind::cosh, TrigKind::sin,
                              TrigKind::sinh}) {
              const double closed =
                  pathway::pathway_trig(kind, params, rho, c, x).value;
              auto f = [&](double t) {
                const double trig = kind == TrigKind::cos   ? std::cos(c * t)
                                    : kind == TrigKind::cosh ? std::cosh(c * t)
                                    : kind == TrigKind::sin  ? std::sin(c * t)
                                                             : std::sinh(c * t);
                return std::pow(t, rho - 1.0) * trig;
              };
              const double numeric =
                  pathway::pathway_integral_numeric(f, params, x, 1e-10);
              CHECK(std::abs(closed - numeric) <=
                    1e-7 * std::max(1.0, std::abs(closed)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("sinh image is odd in c and linear for small c") {
  const PathwayParams params{1.0, 0.2, 1.0};
  const double rho = 1.2, x = 1.5;
  const double c = 1e-3;
  const double image =
      pathway::pathway_trig(TrigKind::sinh, params, rho, c, x).value;
  const double linear = c * pathway::pathway_power(params, rho + 1.0, x);
  CHECK(std::abs(image - linear) <= 1e-5 * std::abs(image));
  const double mirrored =
      pathway::pathway_trig(TrigKind::sin, params, rho, -c, x).value;
  CHECK(mirrored ==
        doctest::Approx(-pathway::pathway_trig(TrigKind::sin, params, rho, c, x)
                             .value));
}

TEST_CASE("theorem-to-corollary consistency through the bessel reductions") {
  const PathwayParams params{1.5, 0.4, 1.0};
  const double rho = 1.2, c = 1.3, x = 0.9;
  for (double b : {1.0, 2.0}) {
    const double cos_via_bessel =
        std::sqrt(kPi) * std::pow(2.0, -b / 2.0) *
        pathway::pathway_bessel(params, rho + b / 2.0, {-b / 2.0, b, c * c}, x)
            .value;
    CHECK(std::abs(pathway::pathway_trig(TrigKind::cos, params, rho, c, x).value -
                   cos_via_bessel) <= 1e-9);
    const double sin_via_bessel =
        c * std::sqrt(kPi) * std::pow(2.0, -b / 2.0) *
        pathway::pathway_bessel(params, rho + b / 2.0,
                                {1.0 - b / 2.0, b, c * c}, x)
            .value;
    CHECK(std::abs(pathway::pathway_trig(TrigKind::sin, params, rho, c, x).value -
                   sin_via_bessel) <= 1e-9);
  }
}

TEST_CASE("laplace limits: trig and bessel continuity at alpha = 1 - 1e-4") {
  const double a = 1.0, eta = 2.0, rho = 1.5, c = 1.0, x = 1.0;
  const PathwayParams near{eta, 1.0 - 1e-4, a};
  for (auto kind :
       {TrigKind::cos, TrigKind::cosh, TrigKind::sin, TrigKind::sinh}) {
    const double limit = pathway::laplace_limit_trig(kind, a, eta, rho, c, x);
    const double image = pathway::pathway_trig(kind, near, rho, c, x).value;
    CHECK(std::abs(image - limit) <= 1e-3 * std::abs(limit));
  }
  const sf::BesselParams bp{0.5, 1.0, 1.0};
  const double limit = pathway::laplace_limit_bessel(a, eta, rho, bp, x);
  const double image = pathway::pathway_bessel(near, rho, bp, x).value;
  CHECK(std::abs(image - limit) <= 1e-3 * std::abs(limit));
}

TEST_CASE("laplace limit series respects its convergence disc") {
  // cos form needs |c|x < a*eta.
  CHECK_NOTHROW(pathway::laplace_limit_trig(TrigKind::cos, 1.0, 2.0, 1.0, 1.0, 1.0));
  CHECK_THROWS_AS(
      pathway::laplace_limit_trig(TrigKind::cos, 1.0, 1.0, 1.0, 3.0, 1.0),
      DomainError);
}

TEST_CASE("riemann-liouville ladder: rl_cos") {
  CHECK(pathway::rl_cos(1.0, kPi / 2.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pathway::rl_cos(1.0, 1.0) ==
        doctest::Approx(std::sin(1.0)).epsilon(1e-12));
  CHECK(pathway::rl_cos(2.0, 1.0) ==
        doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-12));
  for (int i = 0; i <= 50; ++i) {
    const double x = 5.0 * i / 50.0;
    CHECK(std::abs(pathway::rl_cos(1.0, x) - std::sin(x)) <= 1e-10);
  }
}

TEST_CASE("rl_cos against direct riemann-liouville quadrature") {
  // eta = 1 is the plain antiderivative: quadrature of cos over [0, pi/2]
  // is 1 and matches the closed image.
  const double quarter = quad::integrate([](double t) { return std::cos(t); },
                                         0.0, kPi / 2.0, 1e-12);
  CHECK(quarter == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(pathway::rl_cos(1.0, kPi / 2.0) ==
        doctest::Approx(quarter).epsilon(1e-11));

  // Substituting u = x - t puts the eta < 1 singularity at the left
  // endpoint, where quadrature nodes carry full precision.
  for (double eta : {0.5, 1.0, 2.0}) {
    for (double x : {0.5, 1.5, 3.0}) {
      const double direct =
          quad::integrate(
              [&](double u) {
                return std::pow(u, eta - 1.0) * std::cos(x - u);
              },
              0.0, x, 1e-11) /
          std::tgamma(eta);
      CHECK(std::abs(pathway::rl_cos(eta, x) - direct) <= 1e-8);
    }
  }
}

TEST_CASE("special-case ladder: cosine image at alpha=0 vs rl_cos") {
  // Shifting eta by -1 at alpha = 0, a = 1 turns the operator into
  // Gamma(eta)·I^eta.
  for (double eta : {1.5, 2.5}) {
    for (double x : {0.5, 1.0, 2.0}) {
      const PathwayParams shifted{eta - 1.0, 0.0, 1.0};
      const double via_pathway =
          pathway::pathway_trig(TrigKind::cos, shifted, 1.0, 1.0, x).value;
      const double via_ml = std::tgamma(eta) * pathway::rl_cos(eta, x);
      CHECK(std::abs(via_pathway - via_ml) <= 1e-9);
    }
  }
}

TEST_CASE("printed kernel variant reproduces the printed (inconsistent) image") {
  const PathwayParams params{1.5, 0.25, 1.0};
  const double rho = 2.0, x = 1.1;
  const double z = params.z_exp();
  const double a1a = params.a * (1.0 - params.alpha_pw);
  // Direct integration of the printed kernel gives
  // x^{eta+rho-1} Gamma(rho)Gamma(z)/([a(1-alpha)]^rho Gamma(z+rho)).
  const double printed_closed =
      std::exp(std::lgamma(rho) + std::lgamma(z) - std::lgamma(z + rho) +
               (params.eta + rho - 1.0) * std::log(x) - rho * std::log(a1a));
  const double printed_numeric = pathway::pathway_integral_numeric(
      [&](double t) { return std::pow(t, rho - 1.0); }, params, x, 1e-10,
      KernelVariant::printed);
  CHECK(printed_numeric == doctest::Approx(printed_closed).epsilon(1e-8));
  // And it does not match the lemma's image, unlike the corrected kernel.
  const double lemma = pathway::pathway_power(params, rho, x);
  CHECK(std::abs(printed_numeric - lemma) > 1e-2);
  CHECK(std::abs(numeric_power(params, rho, x) - lemma) <= 1e-8);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(pathway::pathway_power({0.0, 0.0, 1.0}, 1.0, 1.0),
                  ParameterError);
  CHECK_THROWS_AS(pathway::pathway_power({1.0, 1.5, 1.0}, 1.0, 1.0),
                  ParameterError);
  CHECK_THROWS_AS(pathway::pathway_power({1.0, 0.0, 1.0}, -1.0, 1.0),
                  ParameterError);
  CHECK_THROWS_AS(pathway::pathway_bessel({1.0, 0.0, 1.0}, 0.25,
                                          {-0.5, 1.0, 1.0}, 1.0),
                  ParameterError);
  CHECK_THROWS_AS(pathway::rl_cos(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(pathway::rl_cos(1.0, 8.0), DomainError);
}
