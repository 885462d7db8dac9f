// verify.cpp — Analytic-vs-oracle comparison harness

#include "hopfield/oracle/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "hopfield/oracle/moments_ode.hpp"
#include "hopfield/polariton.hpp"
#include "hopfield/transport.hpp"
#include "hopfield/virtual_photons.hpp"

namespace hopfield::oracle {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

RateSet inject(const RateSet& r, const RateInjection& inj) {
    return {r.alpha1 * inj.alpha1, r.alpha2 * inj.alpha2, r.beta1 * inj.beta1,
            r.beta2 * inj.beta2};
}

CheckResult make_check(std::string name, double deviation, double tolerance,
                       std::string note = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.deviation = deviation;
    c.tolerance = tolerance;
    c.passed = deviation <= tolerance;
    c.note = std::move(note);
    return c;
}

// Lowest analytic levels of the two-oscillator ladder.
std::vector<double> analytic_levels(const PolaritonSpectrum& spec, int count) {
    std::vector<double> levels;
    for (int m = 0; m <= count; ++m)
        for (int n = 0; n <= count + 4; ++n) levels.push_back(eigenenergy(spec, m, n));
    std::sort(levels.begin(), levels.end());
    levels.resize(count);
    return levels;
}

} // namespace

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "units: hbar = k_B = 1; energies in units of omega_c\n";
    os << "scenario.omega_c: " << fmt(scenario.omega_c) << "\n";
    os << "scenario.omega_b: " << fmt(scenario.omega_b) << "\n";
    os << "scenario.g: " << fmt(scenario.g) << "\n";
    os << "scenario.gamma_L: " << fmt(scenario.gamma_L) << "\n";
    os << "scenario.gamma_R: " << fmt(scenario.gamma_R) << "\n";
    os << "scenario.T_L: " << fmt(scenario.T_L) << "\n";
    os << "scenario.T_R: " << fmt(scenario.T_R) << "\n";
    os << "scenario.spectral_density: "
       << (scenario.spectral_density == SpectralDensity::Flat ? "flat" : "ohmic") << "\n";
    for (const auto& c : checks) {
        os << "check." << c.name << ".status: " << (c.passed ? "PASS" : "FAIL") << "\n";
        os << "check." << c.name << ".deviation: " << fmt(c.deviation) << "\n";
        os << "check." << c.name << ".tolerance: " << fmt(c.tolerance) << "\n";
        if (!c.note.empty()) os << "check." << c.name << ".note: " << c.note << "\n";
    }
    os << "result: " << (all_passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

VerificationReport verify_all(const SystemParams& p, const VerifyOptions& opt) {
    p.validate();
    opt.ed.validate();
    opt.liouville.validate();

    VerificationReport report;
    report.scenario = p;
    auto& checks = report.checks;

    const PolaritonSpectrum spec = polariton_frequencies(p);

    // --- exact diagonalization, bare basis --------------------------------
    {
        const std::vector<double> ed = ed_spectrum(p, opt.ed, opt.spectrum_levels);
        const std::vector<double> ladder = analytic_levels(spec, opt.spectrum_levels);
        double dev = 0.0;
        for (int i = 0; i < opt.spectrum_levels; ++i)
            dev = std::max(dev, std::abs((ed[i] - ed[0]) - (ladder[i] - ladder[0])));
        checks.push_back(make_check("ed-spectrum", dev, 1e-8 * p.omega_c,
                                    "level differences, " +
                                        std::to_string(opt.spectrum_levels) + " levels"));
    }
    {
        const double ed = ed_ground_state_photons(p, opt.ed);
        const double exact = virtual_photons_ground(p);
        const double dev = std::abs(ed - exact);
        const double tol = opt.ed.convergence_tol * std::max(std::abs(exact), 1e-12);
        checks.push_back(make_check("ed-ground-photons", dev, tol,
                                    "ed " + fmt(ed) + " vs analytic " + fmt(exact)));
    }

    // --- Liouvillian, polariton basis (reduced temperatures) --------------
    SystemParams p_liouv = p;
    p_liouv.T_L = opt.liouville_T_L;
    p_liouv.T_R = opt.liouville_T_R;
    const RateSet liouv_clean = gme_rates(p_liouv);
    const RateSet liouv_rates = inject(liouv_clean, opt.rate_injection);
    {
        const SparseMatrixC L = build_liouvillian(p_liouv, opt.liouville, liouv_rates);
        double scale = 1.0;
        for (int k = 0; k < L.outerSize(); ++k)
            for (SparseMatrixC::InnerIterator it(L, k); it; ++it)
                scale = std::max(scale, std::abs(it.value()));
        checks.push_back(make_check("liouvillian-trace",
                                    trace_preservation_defect(L) / scale, 1e-12,
                                    "identity is a left null vector"));
    }
    {
        const LiouvillianSteadyState ss = steady_state(p_liouv, opt.liouville, liouv_rates);
        const PolaritonPopulations target = steady_populations(liouv_clean);
        const double dev = std::max(std::abs(ss.n_upper - target.upper),
                                    std::abs(ss.n_lower - target.lower));
        // Cutoff stability: the truncated generator factorizes per mode, so the
        // n_max+10 value is the truncated single-mode stationary mean.
        double conv_dev = 0.0;
        if (liouv_rates.alpha1 > 0.0)
            conv_dev = std::max(conv_dev,
                                std::abs(truncated_thermal_mean(
                                             liouv_rates.alpha2 / liouv_rates.alpha1,
                                             opt.liouville.n_max + 10) -
                                         ss.n_upper));
        if (liouv_rates.beta1 > 0.0)
            conv_dev = std::max(conv_dev,
                                std::abs(truncated_thermal_mean(
                                             liouv_rates.beta2 / liouv_rates.beta1,
                                             opt.liouville.n_max + 10) -
                                         ss.n_lower));
        checks.push_back(make_check("liouvillian-populations", dev, 1e-8,
                                    "null-space solve vs closed-form steady state"));
        checks.push_back(make_check("liouvillian-cutoff", conv_dev, 1e-9,
                                    "n_max -> n_max+10 stability"));
        checks.push_back(make_check("liouvillian-positivity", -ss.min_eigenvalue, 1e-10,
                                    "smallest eigenvalue of the steady state"));
    }
    {
        SystemParams p_gibbs = p;
        p_gibbs.T_L = opt.gibbs_T;
        p_gibbs.T_R = opt.gibbs_T;
        const RateSet gibbs_rates = inject(gme_rates(p_gibbs), opt.rate_injection);
        const LiouvillianSteadyState ss = steady_state(p_gibbs, opt.liouville, gibbs_rates);
        const double dev =
            std::max(std::abs(ss.n_upper - bose_einstein(spec.omega_x, opt.gibbs_T)),
                     std::abs(ss.n_lower - bose_einstein(spec.omega_y, opt.gibbs_T)));
        checks.push_back(make_check("liouvillian-gibbs", dev, 1e-8,
                                    "equal-temperature steady state is thermal"));
    }
    {
        // Spectral structure on a small truncation: exactly one zero eigenvalue.
        LiouvillianTruncation small;
        small.n_max = 3;
        const SparseMatrixC L = build_liouvillian(p_liouv, small, liouv_rates);
        const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Eigen::MatrixXcd(L), false);
        int zero_count = 0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            if (std::abs(es.eigenvalues()[i]) < 1e-10) ++zero_count;
        checks.push_back(make_check("liouvillian-spectrum",
                                    std::abs(double(zero_count - 1)), 0.0,
                                    "zero-eigenvalue count " + std::to_string(zero_count)));
    }

    // --- moment equations of motion ----------------------------------------
    {
        const RateSet clean = gme_rates(p);
        const RateSet driven = inject(clean, opt.rate_injection);
        const DecayRates decay = decay_rates(p);
        double gmin = 0.0;
        for (double gposs : {decay.gamma_x, decay.gamma_y})
            if (gposs > 0.0) gmin = (gmin == 0.0) ? gposs : std::min(gmin, gposs);
        const double horizon = gmin > 0.0 ? 10.0 / gmin : 1.0 / p.omega_c;
        std::vector<double> times;
        for (int i = 0; i < 50; ++i) times.push_back(horizon * i / 49.0);
        const auto traj = integrate_moments(driven, times);
        double dev = 0.0;
        for (size_t i = 0; i < times.size(); ++i) {
            const double gx = clean.alpha1 - clean.alpha2;
            const double gy = clean.beta1 - clean.beta2;
            const double nx =
                gx > 0.0 ? clean.alpha2 / gx * (-std::expm1(-2.0 * gx * times[i])) : 0.0;
            const double ny =
                gy > 0.0 ? clean.beta2 / gy * (-std::expm1(-2.0 * gy * times[i])) : 0.0;
            dev = std::max({dev, std::abs(traj[i][0] - nx), std::abs(traj[i][1] - ny)});
        }
        checks.push_back(make_check("ode-moments", dev, 1e-8,
                                    "adaptive integration vs closed form, 50 times"));
    }

    // --- transport two-path identities --------------------------------------
    {
        const TransportReport rep = heat_current_gme(p);
        const double j_scale = std::max(std::abs(rep.j_left), p.omega_c * p.omega_c);

        const BogoliubovCoefficients f = bogoliubov_coefficients(p, spec);
        const BathSpec left = p.left_bath();
        const RateSet driven = inject(gme_rates(p), opt.rate_injection);
        const PolaritonPopulations n_ss = steady_populations(driven);
        const double j_a6 =
            2.0 * spec.omega_x * bath_coupling(left, spec.omega_x, p.omega_c) *
                f.lx_weight() * (bose_einstein(spec.omega_x, p.T_L) - n_ss.upper) +
            2.0 * spec.omega_y * bath_coupling(left, spec.omega_y, p.omega_c) *
                f.ly_weight() * (bose_einstein(spec.omega_y, p.T_L) - n_ss.lower);
        checks.push_back(make_check("heat-two-path",
                                    std::abs(rep.j_left - j_a6) / j_scale, 1e-12,
                                    "transmission form vs dissipator form"));

        const auto lines = transmission_lines(p);
        double j_landauer = 0.0;
        for (const auto& line : lines)
            j_landauer += line.weight * line.frequency *
                          (bose_einstein(line.frequency, p.T_L) -
                           bose_einstein(line.frequency, p.T_R));
        checks.push_back(make_check("landauer-reconstruction",
                                    std::abs(rep.j_left - j_landauer) / j_scale, 1e-12));

        const BathSpec right = p.right_bath();
        const double j_right =
            2.0 * spec.omega_x * bath_coupling(right, spec.omega_x, p.omega_c) *
                f.rx_weight() * (bose_einstein(spec.omega_x, p.T_R) - n_ss.upper) +
            2.0 * spec.omega_y * bath_coupling(right, spec.omega_y, p.omega_c) *
                f.ry_weight() * (bose_einstein(spec.omega_y, p.T_R) - n_ss.lower);
        checks.push_back(make_check("first-law", std::abs(rep.j_left + j_right) / j_scale,
                                    1e-12, "J_L + J_R at steady state"));
    }

    return report;
}

} // namespace hopfield::oracle
