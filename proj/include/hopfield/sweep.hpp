// sweep.hpp — Parameter sweeps over the coupling and CSV emission

#pragma once

#include <set>
#include <string>
#include <vector>

#include "hopfield/oracle/verify.hpp"
#include "hopfield/system_params.hpp"

namespace hopfield {

enum class GScale { Log, Linear };

enum class SweepOutput { Spectrum, Decay, Heat, Lme, Virtual, Entropy };

struct SweepConfig {
    SystemParams scenario;      // scenario.g is the sweep variable (ignored here)
    double g_min{1e-3};         // in units of omega_c
    double g_max{1e2};
    int g_points{201};
    GScale g_scale{GScale::Log};
    std::set<SweepOutput> outputs{SweepOutput::Heat};
    int threads{1};
    bool provenance_line{true};
    oracle::VerifyOptions verify;

    void validate() const;  // ConfigError on violations
};

// The g values (absolute, not normalized) visited by the sweep.
std::vector<double> sweep_grid(const SweepConfig& cfg);

// Column names after the leading g_over_wc, in emission order.
std::vector<std::string> sweep_columns(const SweepConfig& cfg);

// Complete CSV document: '#'-prefixed configuration header, column-name row,
// one data row per grid point. Rows are computed by a bounded worker pool and
// emitted in grid order; identical configs produce byte-identical output.
std::string run_sweep(const SweepConfig& cfg);

// Single-point full report as "key: value" lines.
std::string point_report(const SystemParams& p);

} // namespace hopfield
