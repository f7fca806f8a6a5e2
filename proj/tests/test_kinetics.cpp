#include "pathent/kinetics.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pathent/errors.hpp"
#include "pathent/quadrature.hpp"

using namespace pathent;
using kinetics::KineticsParams;

TEST_CASE("exponential decay") {
  CHECK(kinetics::exponential_decay(1.0, 1.0, 0.0) == doctest::Approx(1.0));
  CHECK(kinetics::exponential_decay(1.0, 1.0, 1.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  const double half_life = std::log(2.0) / 0.7;
  CHECK(kinetics::exponential_decay(1.0, 0.7, half_life) ==
        doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("mittag-leffler relaxation") {
  for (int i = 0; i <= 20; ++i) {
    const double t = 0.5 * i;
    CHECK(std::abs(kinetics::ml_decay(1.0, 1.0, 1.0, t) -
                   kinetics::exponential_decay(1.0, 1.0, t)) <= 1e-10);
  }
  CHECK(kinetics::ml_decay(2.5, 1.0, 0.5, 0.0) == doctest::Approx(2.5));
  const double ref =
      static_cast<double>(oracle::mittag_leffler(0.5L, 1.0L, -1.0L));
  CHECK(kinetics::ml_decay(1.0, 1.0, 0.5, 1.0) ==
        doctest::Approx(ref).epsilon(1e-12));
  CHECK_THROWS_AS(kinetics::ml_decay(1.0, 1.0, 1.5, 1.0), ParameterError);
}

TEST_CASE("ml relaxation is nonincreasing and nonnegative") {
  for (double nu : {0.3, 0.5, 0.75, 1.0}) {
    double prev = 1.0;
    for (int i = 1; i <= 100; ++i) {
      const double t = 0.1 * i;
      const double v = kinetics::ml_decay(1.0, 1.0, nu, t);
      CHECK(v >= 0.0);
      CHECK(v <= prev + 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("kinetics parameter relations") {
  const KineticsParams p{1.0, 1.0, 0.5, 2.0, 1.5, 1.8};
  CHECK(p.gamma_k() + 1.0 == doctest::Approx(1.0 / (p.alpha_k - 1.0)));
  CHECK(std::pow(p.omega(), -p.nu) ==
        doctest::Approx(p.b * (p.alpha_k - 1.0)).epsilon(1e-13));
  CHECK_THROWS_AS((KineticsParams{1.0, 1.0, 0.5, 2.0, 1.5, 0.9}).validate(),
                  ParameterError);
}

TEST_CASE("conditional density reductions") {
  // mu = 1, alpha = 2 gives gamma+1 = 1: back to the two-parameter law.
  const KineticsParams p{1.0, 1.0, 0.7, 1.0, 1.0, 2.0};
  for (double t : {0.3, 1.0, 2.5}) {
    CHECK(kinetics::conditional_density(p, 1.0, t) ==
          doctest::Approx(kinetics::ml_decay(1.0, 1.0, 0.7, t))
              .epsilon(1e-12));
  }
  // t -> 0+ with mu > 1 vanishes through the t^{mu-1} factor.
  const KineticsParams p2{1.0, 1.0, 0.7, 2.0, 1.0, 2.0};
  CHECK(kinetics::conditional_density(p2, 1.0, 1e-12) ==
        doctest::Approx(0.0).epsilon(1e-10));
  // nu = 1, mu = 1 against the oracle series.
  const KineticsParams p3{1.0, 1.0, 1.0, 1.0, 1.0, 1.5};
  const double g1 = p3.gamma_k() + 1.0;
  const double ref = static_cast<double>(
      oracle::prabhakar(static_cast<long double>(g1), 1.0L, 1.0L, -0.8L));
  CHECK(kinetics::conditional_density(p3, 0.8, 1.0) ==
        doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("gamma rate density") {
  CHECK(kinetics::gamma_rate_density(1.0, 1.0, 2.0) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-13));
  const double mass = quad::integrate(
      [](double u) {
        const double c = u / (1.0 - u);
        return kinetics::gamma_rate_density(1.5, 2.0, c) /
               ((1.0 - u) * (1.0 - u));
      },
      1e-14, 1.0, 1e-10);
  CHECK(std::abs(mass - 1.0) <= 1e-8);
  // Mode at (mu-1)/omega for mu > 1.
  const double mode = 1.0 / 1.5;
  const double at_mode = kinetics::gamma_rate_density(1.5, 2.0, mode);
  CHECK(at_mode > kinetics::gamma_rate_density(1.5, 2.0, mode * 0.9));
  CHECK(at_mode > kinetics::gamma_rate_density(1.5, 2.0, mode * 1.1));
}

TEST_CASE("unconditional density values and limits") {
  const KineticsParams tsallis_case{1.0, 1.0, 1.0, 1.0, 1.0, 2.0};
  CHECK(kinetics::unconditional_density(tsallis_case, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK(kinetics::unconditional_density(tsallis_case, 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-9));

  // alpha -> 1+ approaches the stretched exponential.
  for (double t : {0.5, 1.0, 2.0}) {
    for (double nu : {0.5, 1.0}) {
      const KineticsParams near{1.0, 1.0, nu, 1.0, 1.0, 1.0 + 1e-4};
      const double got = kinetics::unconditional_density(near, t);
      const double stretched = std::exp(-std::pow(t, nu));
      CHECK(std::abs(got - stretched) <= 1e-3 * std::max(1.0, stretched));
    }
  }
}

TEST_CASE("mixture identity: conditional averaged over the gamma rate") {
  // b is chosen per combination to place omega = 3, which keeps the
  // alternating Prabhakar series well inside its round-off envelope across
  // the effective c-range; the identity itself holds for every b.
  for (double t : {0.25, 0.5, 1.0, 2.0}) {
    for (double mu : {1.0, 2.0}) {
      for (double nu : {0.5, 1.0}) {
        for (double alpha : {1.5, 2.0}) {
          const double b = std::pow(3.0, -nu) / (alpha - 1.0);
          const KineticsParams p{1.0, 1.0, nu, mu, b, alpha};
          const double mixed = kinetics::mixture_integral(p, t, 1e-9);
          const double closed = kinetics::unconditional_density(p, t);
          CHECK(std::abs(mixed - closed) <= 1e-6);
        }
      }
    }
  }
}

TEST_CASE("the literal (nu,nu) conditional form breaks the mixture identity") {
  const double mu = 2.0, nu = 0.5, alpha = 1.5;
  const double b = std::pow(3.0, -nu) / (alpha - 1.0);
  const KineticsParams p{1.0, 1.0, nu, mu, b, alpha};
  const double t = 1.0;
  const double omega = p.omega();
  const double c_cap = 30.0 / t;
  const double literal_mix = quad::integrate(
      [&](double u) {
        const double c = u / (1.0 - u);
        if (c <= 0.0 || c >= c_cap) return 0.0;
        return kinetics::conditional_density_literal(p, c, t) *
               kinetics::gamma_rate_density(omega, mu, c) /
               ((1.0 - u) * (1.0 - u));
      },
      0.0, 1.0, 1e-9);
  const double closed = kinetics::unconditional_density(p, t);
  CHECK(std::abs(literal_mix - closed) > 1e-3);
}

TEST_CASE("power-law tail of the unconditional density") {
  struct Case {
    KineticsParams p;
    double exponent;
  };
  const std::vector<Case> cases = {
      {{1.0, 1.0, 1.0, 1.0, 1.0, 1.5}, 1.0 - 1.0 - 1.0 / 0.5},
      {{1.0, 1.0, 1.0, 1.5, 2.0, 2.0}, 1.5 - 1.0 - 1.0}};
  for (const auto& cs : cases) {
    std::vector<double> lt, ln_n;
    for (int i = 0; i <= 20; ++i) {
      const double t = 100.0 * std::pow(10.0, i / 20.0);
      lt.push_back(std::log(t));
      ln_n.push_back(std::log(kinetics::unconditional_density(cs.p, t)));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(lt.size());
    for (std::size_t i = 0; i < lt.size(); ++i) {
      sx += lt[i];
      sy += ln_n[i];
      sxx += lt[i] * lt[i];
      sxy += lt[i] * ln_n[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(std::abs(slope - cs.exponent) <= 0.02 * std::abs(cs.exponent));
  }
}
