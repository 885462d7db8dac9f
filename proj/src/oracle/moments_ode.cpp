// moments_ode.cpp — Dormand-Prince 5(4) integration of the moment equations

#include "hopfield/oracle/moments_ode.hpp"

#include <algorithm>
#include <cmath>

namespace hopfield::oracle {

namespace {

MomentState axpy(const MomentState& y, double h, const MomentState& k) {
    return {y[0] + h * k[0], y[1] + h * k[1]};
}

struct StepResult {
    MomentState y;
    MomentState k_last;  // FSAL stage
    double error_norm;
};

// One Dormand-Prince 5(4) step from (t, y) with stage k1 = f(t, y) supplied.
StepResult dopri_step(const MomentRhs& f, double t, const MomentState& y, double h,
                      const MomentState& k1, const OdeOptions& opt) {
    const MomentState k2 = f(t + h / 5.0, axpy(y, h / 5.0, k1));
    const MomentState k3 = f(t + 3.0 * h / 10.0,
                             {y[0] + h * (3.0 / 40.0 * k1[0] + 9.0 / 40.0 * k2[0]),
                              y[1] + h * (3.0 / 40.0 * k1[1] + 9.0 / 40.0 * k2[1])});
    const MomentState k4 = f(
        t + 4.0 * h / 5.0,
        {y[0] + h * (44.0 / 45.0 * k1[0] - 56.0 / 15.0 * k2[0] + 32.0 / 9.0 * k3[0]),
         y[1] + h * (44.0 / 45.0 * k1[1] - 56.0 / 15.0 * k2[1] + 32.0 / 9.0 * k3[1])});
    const MomentState k5 =
        f(t + 8.0 * h / 9.0,
          {y[0] + h * (19372.0 / 6561.0 * k1[0] - 25360.0 / 2187.0 * k2[0] +
                       64448.0 / 6561.0 * k3[0] - 212.0 / 729.0 * k4[0]),
           y[1] + h * (19372.0 / 6561.0 * k1[1] - 25360.0 / 2187.0 * k2[1] +
                       64448.0 / 6561.0 * k3[1] - 212.0 / 729.0 * k4[1])});
    const MomentState k6 =
        f(t + h, {y[0] + h * (9017.0 / 3168.0 * k1[0] - 355.0 / 33.0 * k2[0] +
                              46732.0 / 5247.0 * k3[0] + 49.0 / 176.0 * k4[0] -
                              5103.0 / 18656.0 * k5[0]),
                  y[1] + h * (9017.0 / 3168.0 * k1[1] - 355.0 / 33.0 * k2[1] +
                              46732.0 / 5247.0 * k3[1] + 49.0 / 176.0 * k4[1] -
                              5103.0 / 18656.0 * k5[1])});
    MomentState y5;
    for (int i = 0; i < 2; ++i)
        y5[i] = y[i] + h * (35.0 / 384.0 * k1[i] + 500.0 / 1113.0 * k3[i] +
                            125.0 / 192.0 * k4[i] - 2187.0 / 6784.0 * k5[i] +
                            11.0 / 84.0 * k6[i]);
    const MomentState k7 = f(t + h, y5);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double e = h * (71.0 / 57600.0 * k1[i] - 71.0 / 16695.0 * k3[i] +
                              71.0 / 1920.0 * k4[i] - 17253.0 / 339200.0 * k5[i] +
                              22.0 / 525.0 * k6[i] - 1.0 / 40.0 * k7[i]);
        const double sc =
            opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
        err = std::max(err, std::abs(e) / sc);
    }
    return {y5, k7, err};
}

} // namespace

std::vector<MomentState> integrate_adaptive(const MomentRhs& rhs, MomentState y0,
                                            std::span<const double> t_grid,
                                            const OdeOptions& opt) {
    std::vector<MomentState> out;
    out.reserve(t_grid.size());
    if (t_grid.empty()) return out;
    if (t_grid.front() < 0.0)
        throw DomainError("integrate_adaptive: times must be >= 0");
    for (size_t i = 1; i < t_grid.size(); ++i)
        if (t_grid[i] < t_grid[i - 1])
            throw DomainError("integrate_adaptive: time grid must be nondecreasing");

    double t = 0.0;
    MomentState y = y0;
    MomentState k1 = rhs(t, y);
    double h = 0.0;  // chosen at the first advancing target

    for (const double target : t_grid) {
        while (t < target) {
            if (h <= 0.0) h = (target - t) * 1e-3;
            h = std::min(h, target - t);
            const StepResult step = dopri_step(rhs, t, y, h, k1, opt);
            if (step.error_norm <= 1.0) {
                t += h;
                y = step.y;
                k1 = step.k_last;  // FSAL
                const double grow =
                    step.error_norm == 0.0
                        ? 5.0
                        : std::min(5.0, 0.9 * std::pow(step.error_norm, -0.2));
                h *= std::max(1.0, grow);
            } else {
                h *= std::max(0.2, 0.9 * std::pow(step.error_norm, -0.2));
            }
            if (h < 1e-14 * std::max(1.0, std::abs(t)))
                throw StepSizeError("integrate_adaptive: step size underflow");
        }
        out.push_back(y);
    }
    return out;
}

std::vector<MomentState> integrate_moments(const RateSet& rates,
                                           std::span<const double> t_grid,
                                           const OdeOptions& opt) {
    const double gx = rates.alpha1 - rates.alpha2;
    const double gy = rates.beta1 - rates.beta2;
    const MomentRhs rhs = [=](double, const MomentState& y) -> MomentState {
        return {-2.0 * gx * y[0] + 2.0 * rates.alpha2,
                -2.0 * gy * y[1] + 2.0 * rates.beta2};
    };
    return integrate_adaptive(rhs, {0.0, 0.0}, t_grid, opt);
}

std::vector<MomentState> integrate_moments(const SystemParams& p,
                                           std::span<const double> t_grid,
                                           const OdeOptions& opt) {
    return integrate_moments(gme_rates(p), t_grid, opt);
}

} // namespace hopfield::oracle
