// verify.hpp — Analytic-vs-brute-force verification harness

#pragma once

#include <string>
#include <vector>

#include "hopfield/oracle/fock_space.hpp"
#include "hopfield/oracle/liouvillian.hpp"
#include "hopfield/system_params.hpp"

namespace hopfield::oracle {

// Multiplies individual rates fed to the oracle machinery (Liouvillian build,
// ODE right-hand side, steady populations in the two-path transport check)
// while every analytic reference stays clean. Used by fault-injection tests;
// all 1.0 in normal operation.
struct RateInjection {
    double alpha1{1.0};
    double alpha2{1.0};
    double beta1{1.0};
    double beta2{1.0};

    bool active() const {
        return alpha1 != 1.0 || alpha2 != 1.0 || beta1 != 1.0 || beta2 != 1.0;
    }
};

struct VerifyOptions {
    FockTruncation ed{};
    LiouvillianTruncation liouville{};
    int spectrum_levels{10};

    // The Liouvillian legs run at reduced temperatures so the truncated Fock
    // tail sits far below the comparison tolerance; the analytic and ED legs
    // use the scenario's own temperatures.
    double liouville_T_L{0.25};
    double liouville_T_R{0.125};
    double gibbs_T{0.25};

    RateInjection rate_injection{};
};

struct CheckResult {
    std::string name;
    bool passed{false};
    double deviation{0.0};
    double tolerance{0.0};
    std::string note;
};

struct VerificationReport {
    SystemParams scenario;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    // "key: value" lines consumed by the CLI.
    std::string to_text() const;
};

// Runs every analytic-vs-oracle comparison: ED spectrum and ground-state
// photons (bare basis), Liouvillian steady state, Gibbs thermalization,
// spectral structure of the generator, moment-ODE trajectories, and the
// two-path transport identities. Mismatches are reported, never thrown;
// ConvergenceError/ResourceError from the oracles do propagate.
VerificationReport verify_all(const SystemParams& p, const VerifyOptions& opt = {});

} // namespace hopfield::oracle
