// moments_ode.hpp — Adaptive Runge-Kutta integration of the polariton moment equations

#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "hopfield/dissipation.hpp"
#include "hopfield/system_params.hpp"

namespace hopfield::oracle {

struct OdeOptions {
    double rel_tol{1e-10};
    double abs_tol{1e-13};
};

using MomentState = std::array<double, 2>;
using MomentRhs = std::function<MomentState(double, const MomentState&)>;

// Dormand-Prince 5(4) with standard step-size control. Returns the solution at
// every requested time (t_grid must be nondecreasing, starting at t >= 0).
// Throws StepSizeError if the controller underflows the step.
std::vector<MomentState> integrate_adaptive(const MomentRhs& rhs, MomentState y0,
                                            std::span<const double> t_grid,
                                            const OdeOptions& opt = {});

// d<A^dag A>/dt = -2 Gamma n + 2 pump for both polaritons, from the vacuum.
std::vector<MomentState> integrate_moments(const SystemParams& p,
                                           std::span<const double> t_grid,
                                           const OdeOptions& opt = {});

// Same trajectory driven by an explicit rate set (fault-injection seam).
std::vector<MomentState> integrate_moments(const RateSet& rates,
                                           std::span<const double> t_grid,
                                           const OdeOptions& opt = {});

} // namespace hopfield::oracle
