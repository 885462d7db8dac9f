// test_transport.cpp — heat currents, Landauer lines, thermodynamic audits

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hopfield/polariton.hpp"
#include "hopfield/transport.hpp"

using namespace hopfield;

namespace {

SystemParams fig3(double wb, double g) {
    SystemParams p;
    p.omega_b = wb;
    p.g = g;
    p.gamma_L = 0.05;
    p.gamma_R = 0.05;
    p.T_L = 5.0;
    p.T_R = 0.5;
    return p;
}

SystemParams random_draw(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    SystemParams p;
    p.omega_b = 0.2 + 1.05 * u(rng);
    p.g = std::pow(10.0, -3.0 + 4.7 * u(rng));  // up to ~50
    p.gamma_L = std::pow(10.0, -3.0 + 2.0 * u(rng));
    p.gamma_R = std::pow(10.0, -3.0 + 2.0 * u(rng));
    p.T_L = std::pow(10.0, std::log10(0.05) + u(rng) * (1.0 - std::log10(0.05)));
    p.T_R = std::pow(10.0, std::log10(0.05) + u(rng) * (1.0 - std::log10(0.05)));
    return p;
}

// Independent route: dissipator form at the steady populations.
double j_left_dissipator_route(const SystemParams& p) {
    const PolaritonSpectrum s = polariton_frequencies(p);
    const BogoliubovCoefficients f = bogoliubov_coefficients(p, s);
    const BathSpec left = p.left_bath();
    const PolaritonPopulations n = steady_populations(p);
    return 2.0 * s.omega_x * bath_coupling(left, s.omega_x, p.omega_c) * f.lx_weight() *
               (bose_einstein(s.omega_x, p.T_L) - n.upper) +
           2.0 * s.omega_y * bath_coupling(left, s.omega_y, p.omega_c) * f.ly_weight() *
               (bose_einstein(s.omega_y, p.T_L) - n.lower);
}

} // namespace

TEST_CASE("equilibrium and single-bath currents vanish") {
    SystemParams p = fig3(1.0, 0.3);
    p.T_L = p.T_R = 1.7;
    CHECK(heat_current_gme(p).j_left == 0.0);

    SystemParams cut = fig3(0.2, 0.3);
    cut.gamma_R = 0.0;
    CHECK(heat_current_gme(cut).j_left == 0.0);
    cut.gamma_R = 0.05;
    cut.gamma_L = 0.0;
    CHECK(heat_current_gme(cut).j_left == 0.0);
}

TEST_CASE("off-resonant current rises, peaks, then decays as 1/g") {
    std::vector<double> gs, js;
    for (int i = 0; i < 120; ++i) {
        const double g = 1e-3 * std::pow(1e5, double(i) / 119.0);
        gs.push_back(g);
        js.push_back(heat_current_gme(fig3(0.2, g)).j_left);
    }
    const auto imax = std::distance(js.begin(), std::max_element(js.begin(), js.end()));
    CHECK(imax > 0);
    CHECK(imax < int(js.size()) - 1);
    for (int i = 1; i <= imax; ++i) CHECK(js[i] > js[i - 1]);
    for (size_t i = imax + 1; i < js.size(); ++i) CHECK(js[i] < js[i - 1]);

    // strictly decreasing on [5, 100]
    double prev = heat_current_gme(fig3(0.2, 5.0)).j_left;
    for (int i = 1; i < 50; ++i) {
        const double g = 5.0 * std::pow(20.0, double(i) / 49.0);
        const double j = heat_current_gme(fig3(0.2, g)).j_left;
        CHECK(j < prev);
        prev = j;
    }
}

TEST_CASE("transmission-line and dissipator routes agree to 1e-12") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const SystemParams p = random_draw(rng);
        const TransportReport rep = heat_current_gme(p);
        const double scale = std::max(std::abs(rep.j_left), p.omega_c * p.omega_c);
        CHECK(std::abs(rep.j_left - j_left_dissipator_route(p)) <= 1e-12 * scale);

        const auto lines = transmission_lines(p);
        double recon = 0.0;
        for (const auto& line : lines)
            recon += line.weight * line.frequency *
                     (bose_einstein(line.frequency, p.T_L) -
                      bose_einstein(line.frequency, p.T_R));
        CHECK(std::abs(rep.j_left - recon) <= 1e-12 * scale);
        CHECK(lines[0].weight >= 0.0);
        CHECK(lines[1].weight >= 0.0);
    }
}

TEST_CASE("first law, second law and flow direction across random draws") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 1000; ++i) {
        const SystemParams p = random_draw(rng);
        const TransportReport rep = heat_current_gme(p);
        const double scale = std::max(std::abs(rep.j_left), p.omega_c * p.omega_c);
        CHECK(std::abs(rep.j_left + rep.j_right) <= 1e-12 * scale);
        REQUIRE(rep.entropy_production.has_value());
        CHECK(*rep.entropy_production >= -1e-14);
        if (rep.j_left != 0.0)
            CHECK(std::signbit(rep.j_left) == std::signbit(p.T_L - p.T_R));
    }
}

TEST_CASE("time-dependent current: absorption origin, steady-state limit") {
    const SystemParams p = fig3(0.2, 0.4);
    const PolaritonSpectrum s = polariton_frequencies(p);
    const BogoliubovCoefficients f = bogoliubov_coefficients(p, s);
    const double expected0 =
        2.0 * s.omega_x * p.gamma_L * f.lx_weight() * bose_einstein(s.omega_x, p.T_L) +
        2.0 * s.omega_y * p.gamma_L * f.ly_weight() * bose_einstein(s.omega_y, p.T_L);
    CHECK(heat_current_time_dependent(p, 0.0) ==
          doctest::Approx(expected0).epsilon(1e-13));

    // the slowest transient decays as e^{-2 Gamma_min t}: at t = 14/Gamma_min
    // the residual sits comfortably under 1e-10 (at exactly 10/Gamma_min the
    // prefactor leaves a few 1e-10)
    const DecayRates d = decay_rates(p);
    const double t_long = 14.0 / std::min(d.gamma_x, d.gamma_y);
    const double j_ss = heat_current_gme(p).j_left;
    CHECK(std::abs(heat_current_time_dependent(p, t_long) - j_ss) <= 1e-10);

    SystemParams equil = p;
    equil.T_L = equil.T_R = 0.8;
    const DecayRates de = decay_rates(equil);
    CHECK(std::abs(heat_current_time_dependent(equil,
                                               14.0 / std::min(de.gamma_x, de.gamma_y))) <=
          1e-10);
}

TEST_CASE("resonant small-g plateau matches the LME strong-coupling plateau") {
    const double j3 = heat_current_gme(fig3(1.0, 1e-3)).j_left;
    const double j2 = heat_current_gme(fig3(1.0, 1e-2)).j_left;
    CHECK(std::abs(j2 - j3) <= 0.01 * std::abs(j3));
    const SystemParams p = fig3(1.0, 1.0);
    const double plateau =
        2.0 * p.omega_c * p.gamma_L * p.gamma_R / (p.gamma_L + p.gamma_R) *
        (bose_einstein(p.omega_c, p.T_L) - bose_einstein(p.omega_b, p.T_R));
    CHECK(std::abs(j3 - plateau) <= 0.02 * plateau);
    CHECK(std::abs(j2 - plateau) <= 0.02 * plateau);
}

TEST_CASE("resonant weak-coupling transmission weights approach gamma/2") {
    SystemParams p = fig3(1.0, 1e-6);
    const auto lines = transmission_lines(p);
    CHECK(std::abs(lines[0].weight - p.gamma_L / 2) <= 1e-10);
    CHECK(std::abs(lines[1].weight - p.gamma_L / 2) <= 1e-10);
}

TEST_CASE("LME current: zeros, plateau and validity flag") {
    SystemParams p = fig3(1.0, 0.3);
    p.T_L = p.T_R = 2.0;
    CHECK(heat_current_lme(p).value == 0.0);

    const SystemParams off = fig3(0.2, 1e3);
    const double plateau = 2.0 * off.omega_c * off.gamma_L * off.gamma_R /
                           (off.gamma_L + off.gamma_R) *
                           (bose_einstein(off.omega_c, off.T_L) -
                            bose_einstein(off.omega_b, off.T_R));
    CHECK(heat_current_lme(off).value == doctest::Approx(plateau).epsilon(1e-5));

    CHECK(heat_current_lme(fig3(1.0, 0.3)).validity_warning);
    CHECK_FALSE(heat_current_lme(fig3(1.0, 0.01)).validity_warning);
}

TEST_CASE("second-law audit: predicate triples and violation sign") {
    // (omega_c, omega_b, T_L, T_R) -> predicate omega_b/T_R < omega_c/T_L
    SystemParams a = fig3(1.0, 0.3);
    a.omega_c = 5.0;
    a.omega_b = 1.0;
    a.T_L = 5.0;
    a.T_R = 0.5;
    CHECK_FALSE(second_law_audit(a).lme_violation_predicate);
    a.T_L = 10.0;
    CHECK_FALSE(second_law_audit(a).lme_violation_predicate);
    SystemParams b = a;
    b.omega_b = 0.2;
    b.T_L = 5.0;
    const SecondLawAudit audit = second_law_audit(b);
    CHECK(audit.lme_violation_predicate);
    CHECK(audit.lme_current < 0.0);  // cold-to-hot flow under the predicate
    CHECK(audit.entropy_production_gme >= -1e-14);

    SystemParams eq = fig3(1.0, 0.3);
    eq.T_L = eq.T_R = 1.0;
    CHECK(second_law_audit(eq).entropy_production_gme == 0.0);

    SystemParams zero = fig3(1.0, 0.3);
    zero.T_R = 0.0;
    CHECK_THROWS_AS(second_law_audit(zero), DomainError);
}

TEST_CASE("entropy flagged not-applicable at zero temperature") {
    SystemParams p = fig3(0.2, 0.3);
    p.T_L = 0.0;
    p.T_R = 0.0;
    const TransportReport rep = heat_current_gme(p);
    CHECK_FALSE(rep.entropy_production.has_value());
    CHECK(rep.j_left == 0.0);
}

TEST_CASE("GME validity warning fires only in the near-degenerate weak regime") {
    CHECK(heat_current_gme(fig3(1.0, 0.01)).gme_validity_warning);
    CHECK_FALSE(heat_current_gme(fig3(1.0, 0.3)).gme_validity_warning);
    CHECK_FALSE(heat_current_gme(fig3(0.2, 0.01)).gme_validity_warning);
}
