// test_dissipation.cpp — Bose factors, Lindblad rates, decay rates, populations

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hopfield/dissipation.hpp"

using namespace hopfield;

namespace {

SystemParams fig3_scenario(double wb, double g) {
    SystemParams p;
    p.omega_b = wb;
    p.g = g;
    p.gamma_L = 0.05;
    p.gamma_R = 0.05;
    p.T_L = 5.0;
    p.T_R = 0.5;
    return p;
}

SystemParams fig2_scenario(double g) {
    SystemParams p;
    p.omega_b = 0.97;
    p.g = g;
    p.gamma_L = 1.0;
    p.gamma_R = 0.0;
    return p;
}

double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const int n = int(xs.size());
    double mx = 0, my = 0;
    for (int i = 0; i < n; ++i) {
        mx += std::log(xs[i]);
        my += std::log(ys[i]);
    }
    mx /= n;
    my /= n;
    double num = 0, den = 0;
    for (int i = 0; i < n; ++i) {
        num += (std::log(xs[i]) - mx) * (std::log(ys[i]) - my);
        den += (std::log(xs[i]) - mx) * (std::log(xs[i]) - mx);
    }
    return num / den;
}

} // namespace

TEST_CASE("bose_einstein basics") {
    CHECK(bose_einstein(1.0, 0.0) == 0.0);
    CHECK(bose_einstein(1.0, 5.0) == doctest::Approx(4.5166555661269945).epsilon(1e-14));
    CHECK_THROWS_AS(bose_einstein(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(bose_einstein(-1.0, 1.0), DomainError);
    // overflow policy: exactly zero far below double underflow
    CHECK(bose_einstein(1.0, 1.0 / 701.0) == 0.0);
}

TEST_CASE("bose_einstein keeps relative accuracy in the Rayleigh-Jeans regime") {
    // series oracle: T/omega - 1/2 + omega/(12 T)
    const double omega = 1e-8, T = 0.5;
    const double series = T / omega - 0.5 + omega / (12.0 * T);
    CHECK(std::abs(bose_einstein(omega, T) - series) <= 1e-9 * series);
}

TEST_CASE("rates vanish with the couplings and at T = 0") {
    SystemParams closed = fig3_scenario(1.0, 0.1);
    closed.gamma_L = closed.gamma_R = 0.0;
    const RateSet r0 = gme_rates(closed);
    CHECK(r0.alpha1 == 0.0);
    CHECK(r0.alpha2 == 0.0);
    CHECK(r0.beta1 == 0.0);
    CHECK(r0.beta2 == 0.0);

    SystemParams cold = fig3_scenario(1.0, 0.1);
    cold.T_L = cold.T_R = 0.0;
    const RateSet rc = gme_rates(cold);
    CHECK(rc.alpha2 == 0.0);
    CHECK(rc.beta2 == 0.0);
    CHECK(rc.alpha1 > 0.0);
    CHECK(rc.beta1 > 0.0);
}

TEST_CASE("rates match an independent trigonometric evaluation") {
    // Independent path: the closed-form weights (omega_c/omega_x) cos^2,
    // (omega_x/omega_b) sin^2, ... instead of the f-coefficient route.
    const SystemParams p = fig3_scenario(1.0, 0.1);
    const PolaritonSpectrum s = polariton_frequencies(p);
    const double c2 = std::cos(s.theta) * std::cos(s.theta);
    const double s2 = std::sin(s.theta) * std::sin(s.theta);
    const double nLx = bose_einstein(s.omega_x, p.T_L);
    const double nRx = bose_einstein(s.omega_x, p.T_R);
    const double nLy = bose_einstein(s.omega_y, p.T_L);
    const double nRy = bose_einstein(s.omega_y, p.T_R);

    const double a1 = p.gamma_L * (p.omega_c / s.omega_x) * c2 * (nLx + 1) +
                      p.gamma_R * (s.omega_x / p.omega_b) * s2 * (nRx + 1);
    const double a2 = p.gamma_L * (p.omega_c / s.omega_x) * c2 * nLx +
                      p.gamma_R * (s.omega_x / p.omega_b) * s2 * nRx;
    const double b1 = p.gamma_L * (p.omega_c / s.omega_y) * s2 * (nLy + 1) +
                      p.gamma_R * (s.omega_y / p.omega_b) * c2 * (nRy + 1);
    const double b2 = p.gamma_L * (p.omega_c / s.omega_y) * s2 * nLy +
                      p.gamma_R * (s.omega_y / p.omega_b) * c2 * nRy;

    const RateSet r = gme_rates(p);
    CHECK(r.alpha1 == doctest::Approx(a1).epsilon(1e-13));
    CHECK(r.alpha2 == doctest::Approx(a2).epsilon(1e-13));
    CHECK(r.beta1 == doctest::Approx(b1).epsilon(1e-13));
    CHECK(r.beta2 == doctest::Approx(b2).epsilon(1e-13));
}

TEST_CASE("detailed-balance ordering of the rates") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        SystemParams p = fig3_scenario(0.2 + 1.0 * u(rng), 0.01 + 2.0 * u(rng));
        p.T_L = 0.05 + 5.0 * u(rng);
        p.T_R = 0.05 + 5.0 * u(rng);
        const RateSet r = gme_rates(p);
        CHECK(r.alpha1 > r.alpha2);
        CHECK(r.beta1 > r.beta2);
        CHECK(r.alpha2 >= 0.0);
        CHECK(r.beta2 >= 0.0);
    }
}

TEST_CASE("decay rates are temperature independent and equal the rate gaps") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const SystemParams base = fig3_scenario(0.97, 0.4);
    const DecayRates ref = decay_rates(base);
    for (int i = 0; i < 100; ++i) {
        SystemParams p = base;
        p.T_L = 10.0 * u(rng);
        p.T_R = 10.0 * u(rng);
        const DecayRates d = decay_rates(p);
        CHECK(std::abs(d.gamma_x - ref.gamma_x) <= 1e-14);
        CHECK(std::abs(d.gamma_y - ref.gamma_y) <= 1e-14);
        const RateSet r = gme_rates(p);
        CHECK(r.alpha1 - r.alpha2 == doctest::Approx(d.gamma_x).epsilon(1e-12));
        CHECK(r.beta1 - r.beta2 == doctest::Approx(d.gamma_y).epsilon(1e-12));
    }
}

TEST_CASE("uncoupled limit: photon channel decays, matter channel is isolated") {
    const DecayRates d = decay_rates(fig2_scenario(1e-8));
    CHECK(std::abs(d.gamma_x - 1.0) < 1e-6);
    CHECK(d.gamma_y < 1e-6);
}

TEST_CASE("quadratic growth of the lower-polariton decay rate") {
    // The quadratic window at omega_b = 0.97 omega_c closes near
    // g* = (omega_c^2-omega_b^2)/(4 sqrt(omega_b omega_c)) ~ 0.015, so the
    // clean slope-2 law lives below ~1e-3.
    std::vector<double> gs, Gy;
    for (int i = 0; i < 30; ++i) {
        const double g = 1e-4 * std::pow(10.0, double(i) / 29.0);
        gs.push_back(g);
        Gy.push_back(decay_rates(fig2_scenario(g)).gamma_y);
    }
    CHECK(lsq_slope(gs, Gy) == doctest::Approx(2.0).epsilon(0.01));

    const double weak = purcell_weak_asymptote(fig2_scenario(1e-3));
    CHECK(std::abs(decay_rates(fig2_scenario(1e-3)).gamma_y - weak) <= 0.02 * weak);
}

TEST_CASE("purcell asymptote values and domains") {
    CHECK(purcell_weak_asymptote(fig2_scenario(1e-3)) ==
          doctest::Approx(0.001145209730847083).epsilon(1e-14));
    CHECK(purcell_dsc_asymptote(fig2_scenario(10.0)) ==
          doctest::Approx(0.047744810684269952).epsilon(1e-14));
    SystemParams res = fig2_scenario(0.5);
    res.omega_b = 1.0;
    CHECK_THROWS_AS(purcell_weak_asymptote(res), DomainError);
}

TEST_CASE("decay rates overlap both asymptotes in their windows") {
    const DecayRates d10 = decay_rates(fig2_scenario(10.0));
    const double dsc = purcell_dsc_asymptote(fig2_scenario(10.0));
    CHECK(std::abs(d10.gamma_x - dsc) <= 0.05 * dsc);
    CHECK(std::abs(d10.gamma_y - dsc) <= 0.05 * dsc);
}

TEST_CASE("deep-strong slowdown: Gamma * g drifts < 2% per decade") {
    const double a = decay_rates(fig2_scenario(50)).gamma_x * 50;
    const double b = decay_rates(fig2_scenario(500)).gamma_x * 500;
    CHECK(std::abs(b - a) <= 0.02 * a);
    const double ay = decay_rates(fig2_scenario(50)).gamma_y * 50;
    const double by = decay_rates(fig2_scenario(500)).gamma_y * 500;
    CHECK(std::abs(by - ay) <= 0.02 * ay);
}

TEST_CASE("populations: vacuum start, Gibbs steady state, detailed balance") {
    const SystemParams p = fig3_scenario(1.0, 0.1);
    const PolaritonPopulations at0 = polariton_populations(p, 0.0);
    CHECK(at0.upper == 0.0);
    CHECK(at0.lower == 0.0);

    SystemParams equil = p;
    equil.T_L = equil.T_R = 2.0;
    const PolaritonSpectrum s = polariton_frequencies(equil);
    const PolaritonPopulations ss = steady_populations(equil);
    CHECK(std::abs(ss.upper - bose_einstein(s.omega_x, 2.0)) <= 1e-12);
    CHECK(std::abs(ss.lower - bose_einstein(s.omega_y, 2.0)) <= 1e-12);

    // single bath: each polariton thermalizes to the left temperature
    SystemParams single = p;
    single.gamma_R = 0.0;
    const PolaritonPopulations one = steady_populations(single);
    CHECK(std::abs(one.upper - bose_einstein(s.omega_x, p.T_L)) <= 1e-12);
    CHECK(std::abs(one.lower - bose_einstein(s.omega_y, p.T_L)) <= 1e-12);
}

TEST_CASE("population relaxation exponents are 2 Gamma") {
    const SystemParams p = fig3_scenario(1.0, 0.25);
    const RateSet r = gme_rates(p);
    const DecayRates d = decay_rates(p);
    const double t = 3.7;
    const PolaritonPopulations n = polariton_populations(p, t);
    const double expect_up =
        r.alpha2 / d.gamma_x * (1.0 - std::exp(-2.0 * d.gamma_x * t));
    const double expect_low =
        r.beta2 / d.gamma_y * (1.0 - std::exp(-2.0 * d.gamma_y * t));
    CHECK(n.upper == doctest::Approx(expect_up).epsilon(1e-12));
    CHECK(n.lower == doctest::Approx(expect_low).epsilon(1e-12));
}

TEST_CASE("populations require a relaxation channel") {
    SystemParams closed = fig3_scenario(1.0, 0.1);
    closed.gamma_L = closed.gamma_R = 0.0;
    CHECK_THROWS_AS(polariton_populations(closed, 1.0), DegenerateError);
    CHECK_THROWS_AS(steady_populations(closed), DegenerateError);
    CHECK_THROWS_AS(polariton_populations(fig3_scenario(1.0, 0.1), -1.0), DomainError);
}

TEST_CASE("ohmic spectral density rescales the bath couplings") {
    SystemParams p = fig2_scenario(0.5);
    p.spectral_density = SpectralDensity::Ohmic;
    const PolaritonSpectrum s = polariton_frequencies(p);
    const DecayRates flat = decay_rates(fig2_scenario(0.5));
    const DecayRates ohmic = decay_rates(p);
    CHECK(ohmic.gamma_x ==
          doctest::Approx(flat.gamma_x * s.omega_x / p.omega_c).epsilon(1e-12));
    CHECK(ohmic.gamma_y ==
          doctest::Approx(flat.gamma_y * s.omega_y / p.omega_c).epsilon(1e-12));
}
