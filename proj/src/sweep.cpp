// sweep.cpp — Sweep execution, CSV assembly, single-point reports

#include "hopfield/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "hopfield/dissipation.hpp"
#include "hopfield/polariton.hpp"
#include "hopfield/transport.hpp"
#include "hopfield/virtual_photons.hpp"

namespace hopfield {

namespace {

constexpr const char* kVersionLine = "hopfield-junction 1.0.0";

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* output_name(SweepOutput o) {
    switch (o) {
        case SweepOutput::Spectrum: return "spectrum";
        case SweepOutput::Decay:    return "decay";
        case SweepOutput::Heat:     return "heat";
        case SweepOutput::Lme:      return "lme";
        case SweepOutput::Virtual:  return "virtual";
        case SweepOutput::Entropy:  return "entropy";
    }
    return "?";
}

// Canonical emission order of the output groups.
constexpr SweepOutput kOutputOrder[] = {SweepOutput::Spectrum, SweepOutput::Decay,
                                        SweepOutput::Heat, SweepOutput::Lme,
                                        SweepOutput::Virtual, SweepOutput::Entropy};

} // namespace

void SweepConfig::validate() const {
    try {
        scenario.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (g_points < 2) throw ConfigError("g_points must be >= 2");
    if (!(g_max > g_min)) throw ConfigError("g_max must exceed g_min");
    if (g_scale == GScale::Log && !(g_min > 0.0))
        throw ConfigError("g_min must be > 0 for the log scale");
    if (g_min < 0.0) throw ConfigError("g_min must be >= 0");
    if (threads < 1) throw ConfigError("threads must be >= 1");
    if (outputs.empty()) throw ConfigError("at least one output column group required");
}

std::vector<double> sweep_grid(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<double> grid(cfg.g_points);
    const double wc = cfg.scenario.omega_c;
    if (cfg.g_scale == GScale::Log) {
        const double ratio = cfg.g_max / cfg.g_min;
        for (int i = 0; i < cfg.g_points; ++i)
            grid[i] = wc * cfg.g_min * std::pow(ratio, double(i) / (cfg.g_points - 1));
    } else {
        for (int i = 0; i < cfg.g_points; ++i)
            grid[i] = wc * (cfg.g_min +
                            (cfg.g_max - cfg.g_min) * double(i) / (cfg.g_points - 1));
    }
    return grid;
}

std::vector<std::string> sweep_columns(const SweepConfig& cfg) {
    std::vector<std::string> cols;
    for (SweepOutput o : kOutputOrder) {
        if (!cfg.outputs.count(o)) continue;
        switch (o) {
            case SweepOutput::Spectrum:
                cols.insert(cols.end(), {"omega_x", "omega_y", "theta"});
                break;
            case SweepOutput::Decay:
                cols.insert(cols.end(),
                            {"Gamma_x", "Gamma_y", "weak_asymptote", "dsc_asymptote"});
                break;
            case SweepOutput::Heat:
                cols.push_back("J_gme");
                break;
            case SweepOutput::Lme:
                cols.push_back("J_lme");
                break;
            case SweepOutput::Virtual:
                cols.insert(cols.end(), {"n_virtual_exact", "weak", "intermediate", "dsc"});
                break;
            case SweepOutput::Entropy:
                cols.push_back("Pi_ss");
                break;
        }
    }
    return cols;
}

namespace {

std::string sweep_row(const SweepConfig& cfg, double g) {
    SystemParams p = cfg.scenario;
    p.g = g;
    std::string row = fmt(g / p.omega_c);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (SweepOutput o : kOutputOrder) {
        if (!cfg.outputs.count(o)) continue;
        switch (o) {
            case SweepOutput::Spectrum: {
                const PolaritonSpectrum s = polariton_frequencies(p);
                row += "," + fmt(s.omega_x) + "," + fmt(s.omega_y) + "," + fmt(s.theta);
                break;
            }
            case SweepOutput::Decay: {
                const DecayRates d = decay_rates(p);
                const double weak =
                    p.omega_c == p.omega_b ? nan : purcell_weak_asymptote(p);
                const double dsc = g > 0.0 ? purcell_dsc_asymptote(p) : nan;
                row += "," + fmt(d.gamma_x) + "," + fmt(d.gamma_y) + "," + fmt(weak) +
                       "," + fmt(dsc);
                break;
            }
            case SweepOutput::Heat:
                row += "," + fmt(heat_current_gme(p).j_left);
                break;
            case SweepOutput::Lme:
                row += "," + fmt(heat_current_lme(p).value);
                break;
            case SweepOutput::Virtual: {
                // Approximation columns are the resonant closed forms in
                // x = g/omega_c, drawn as overlay references at any detuning.
                const double x = g / p.omega_c;
                row += "," + fmt(virtual_photons_ground(p)) + "," + fmt(0.25 * x * x) +
                       "," + fmt(x / 6.0 + x * x / 11.0 - 0.05) + "," +
                       fmt(0.5 * x - 0.5);
                break;
            }
            case SweepOutput::Entropy: {
                const auto rep = heat_current_gme(p);
                row += "," + fmt(rep.entropy_production ? *rep.entropy_production : nan);
                break;
            }
        }
    }
    return row;
}

} // namespace

std::string run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const std::vector<double> grid = sweep_grid(cfg);
    std::vector<std::string> rows(grid.size());

    const int workers = std::min<int>(cfg.threads, int(grid.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < grid.size(); ++i) rows[i] = sweep_row(cfg, grid[i]);
    } else {
        std::atomic<size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto work = [&] {
            for (size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
                if (failed.load(std::memory_order_relaxed)) return;
                try {
                    rows[i] = sweep_row(cfg, grid[i]);
                } catch (...) {
                    const std::scoped_lock lock(error_mutex);
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (failed) std::rethrow_exception(error);
    }

    std::ostringstream os;
    os << "# hopfield-junction sweep\n";
    os << "# units: hbar = k_B = 1; energies and temperatures in units of omega_c;"
          " currents in omega_c^2\n";
    os << "# omega_c = " << fmt(cfg.scenario.omega_c) << "\n";
    os << "# omega_b = " << fmt(cfg.scenario.omega_b) << "\n";
    os << "# gamma_L = " << fmt(cfg.scenario.gamma_L) << "\n";
    os << "# gamma_R = " << fmt(cfg.scenario.gamma_R) << "\n";
    os << "# T_L = " << fmt(cfg.scenario.T_L) << "\n";
    os << "# T_R = " << fmt(cfg.scenario.T_R) << "\n";
    os << "# spectral_density = "
       << (cfg.scenario.spectral_density == SpectralDensity::Flat ? "flat" : "ohmic")
       << "\n";
    os << "# g_min = " << fmt(cfg.g_min) << "\n";
    os << "# g_max = " << fmt(cfg.g_max) << "\n";
    os << "# g_points = " << cfg.g_points << "\n";
    os << "# g_scale = " << (cfg.g_scale == GScale::Log ? "log" : "linear") << "\n";
    os << "# outputs =";
    for (SweepOutput o : kOutputOrder)
        if (cfg.outputs.count(o)) os << " " << output_name(o);
    os << "\n";
    if (cfg.outputs.count(SweepOutput::Virtual))
        os << "# note: weak/intermediate/dsc columns are the resonant closed forms in"
              " g/omega_c (overlay references)\n";
    if (cfg.provenance_line) os << "# generated_by: " << kVersionLine << "\n";

    os << "g_over_wc";
    for (const auto& c : sweep_columns(cfg)) os << "," << c;
    os << "\n";
    for (const auto& r : rows) os << r << "\n";
    return os.str();
}

std::string point_report(const SystemParams& p) {
    p.validate();
    const PolaritonSpectrum spec = polariton_frequencies(p);
    const BogoliubovCoefficients f = bogoliubov_coefficients(p, spec);
    const RateSet rates = gme_rates(p);
    const DecayRates decay = decay_rates(p);
    const TransportReport rep = heat_current_gme(p);
    const VirtualPhotonReport virt = virtual_photon_report(p);
    const auto lines = transmission_lines(p);

    std::ostringstream os;
    os << "units: hbar = k_B = 1; energies in units of omega_c\n";
    os << "omega_c: " << fmt(p.omega_c) << "\n";
    os << "omega_b: " << fmt(p.omega_b) << "\n";
    os << "g: " << fmt(p.g) << "\n";
    os << "gamma_L: " << fmt(p.gamma_L) << "\n";
    os << "gamma_R: " << fmt(p.gamma_R) << "\n";
    os << "T_L: " << fmt(p.T_L) << "\n";
    os << "T_R: " << fmt(p.T_R) << "\n";
    os << "spectral_density: "
       << (p.spectral_density == SpectralDensity::Flat ? "flat" : "ohmic") << "\n";
    os << "omega_x: " << fmt(spec.omega_x) << "\n";
    os << "omega_y: " << fmt(spec.omega_y) << "\n";
    os << "theta: " << fmt(spec.theta) << "\n";
    const double fs[8] = {f.f1, f.f2, f.f3, f.f4, f.f5, f.f6, f.f7, f.f8};
    for (int i = 0; i < 8; ++i) os << "f" << i + 1 << ": " << fmt(fs[i]) << "\n";
    os << "alpha1: " << fmt(rates.alpha1) << "\n";
    os << "alpha2: " << fmt(rates.alpha2) << "\n";
    os << "beta1: " << fmt(rates.beta1) << "\n";
    os << "beta2: " << fmt(rates.beta2) << "\n";
    os << "Gamma_x: " << fmt(decay.gamma_x) << "\n";
    os << "Gamma_y: " << fmt(decay.gamma_y) << "\n";
    os << "J_gme: " << fmt(rep.j_left) << "\n";
    os << "J_gme_upper: " << fmt(rep.per_polariton[0]) << "\n";
    os << "J_gme_lower: " << fmt(rep.per_polariton[1]) << "\n";
    os << "J_lme: " << fmt(rep.lme.value) << "\n";
    os << "Pi_ss: "
       << (rep.entropy_production ? fmt(*rep.entropy_production) : "n/a") << "\n";
    os << "transmission_weight_x: " << fmt(lines[0].weight) << "\n";
    os << "transmission_weight_y: " << fmt(lines[1].weight) << "\n";
    os << "n_virtual_exact: " << fmt(virt.exact) << "\n";
    os << "n_virtual_thermal: " << fmt(virt.thermal) << "\n";
    os << "regime: "
       << (virt.regime_label == Regime::Weak
               ? "weak"
               : virt.regime_label == Regime::USC ? "ultrastrong" : "deep-strong")
       << "\n";
    os << "gme_validity_warning: " << (rep.gme_validity_warning ? "yes" : "no") << "\n";
    os << "lme_validity_warning: " << (rep.lme.validity_warning ? "yes" : "no") << "\n";
    return os.str();
}

} // namespace hopfield
