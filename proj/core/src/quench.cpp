#include "annealbench/quench.hpp"

#include <cmath>

#include "annealbench/parallel.hpp"

namespace annealbench {

std::string to_string(QuenchKind k) {
    return k == QuenchKind::switch_on ? "switch_on" : "switch_off";
}

std::string to_string(DQPKind k) { return k == DQPKind::G ? "G" : "X"; }

void QuenchSpec::validate() const {
    if (kind == QuenchKind::switch_on) {
        if (!(h_f > 0.0 && h_f <= 1.0))
            throw structural_error("switch_on requires 0 < h_f <= 1");
    } else {
        if (!(h_f >= 0.0 && h_f < 1.0))
            throw structural_error("switch_off requires 0 <= h_f < 1");
    }
    if (!(dt > 0.0)) throw structural_error("quench dt must be positive");
    if (!(tau >= 10.0 * dt)) throw structural_error("quench requires tau >= 10 dt");
}

double g_observable(const SpinInstance& instance, const StateVector& psi_t) {
    if (!instance.solution) throw structural_error("g_observable needs a recorded solution");
    const int sol = instance.solution_index();
    double acc = 0.0;
    for (int i = 0; i < instance.n_spins; ++i) {
        const double m_i = (sol & (1 << i)) ? 1.0 : -1.0;
        acc += m_i * expectation_sigma_z(psi_t, i);
    }
    return acc / instance.n_spins;
}

double x_observable(const StateVector& psi_t) {
    const int dim = static_cast<int>(psi_t.size());
    int n_spins = 0;
    while ((1 << n_spins) < dim) ++n_spins;
    double acc = 0.0;
    for (int i = 0; i < n_spins; ++i) acc += expectation_sigma_x(psi_t, i);
    return acc / n_spins;
}

double dqp(const SpinInstance& instance, const QuenchSpec& spec, const KrylovOptions& options,
           TransverseSign sign) {
    spec.validate();
    const DiagonalProblem diagonal = build_problem_diagonal(instance);
    StateVector psi = spec.kind == QuenchKind::switch_on
                          ? basis_state(instance.n_spins, instance.solution_index())
                          : uniform_superposition(instance.n_spins);
    const auto observe = [&](const StateVector& state) {
        return spec.kind == QuenchKind::switch_on ? g_observable(instance, state)
                                                  : x_observable(state);
    };
    // trapezoid over integrator outputs at spacing <= dt, t=0 included
    double t = 0.0;
    double prev = observe(psi);
    double integral = 0.0;
    while (t < spec.tau - 1e-12) {
        const double step = std::min(spec.dt, spec.tau - t);
        krylov_step(instance, diagonal, spec.h_f, step, psi, options, sign);
        t += step;
        const double cur = observe(psi);
        integral += 0.5 * step * (prev + cur);
        prev = cur;
    }
    return integral / spec.tau;
}

DQPCurve dqp_curve(const SpinInstance& instance, QuenchKind kind,
                   const std::vector<double>& h_f_grid, double tau, double dt, int n_threads) {
    for (std::size_t i = 1; i < h_f_grid.size(); ++i)
        if (h_f_grid[i] <= h_f_grid[i - 1])
            throw structural_error("h_f grid must be strictly increasing");
    DQPCurve curve;
    curve.kind = dqp_kind_of(kind);
    curve.h_f_grid = h_f_grid;
    curve.values.resize(h_f_grid.size());
    curve.instance_seed = instance.seed;
    parallel_for(h_f_grid.size(), n_threads, [&](std::size_t i) {
        QuenchSpec spec;
        spec.kind = kind;
        spec.h_f = h_f_grid[i];
        spec.tau = tau;
        spec.dt = dt;
        curve.values[i] = dqp(instance, spec);
    });
    return curve;
}

std::vector<double> quench_grid_regression(QuenchKind kind) {
    std::vector<double> grid(20);
    for (int n = 0; n < 20; ++n) {
        const int idx = kind == QuenchKind::switch_on ? n + 1 : n;  // skip the stationary anchor
        grid[n] = static_cast<double>(idx) / 20.0;
    }
    return grid;
}

std::vector<double> quench_grid_nn(QuenchKind kind) {
    std::vector<double> grid(128);
    for (int k = 0; k < 128; ++k) {
        const int idx = kind == QuenchKind::switch_on ? k + 1 : k;
        grid[k] = static_cast<double>(idx) / 128.0;
    }
    return grid;
}

}  // namespace annealbench
