#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "annealbench/propagator.hpp"
#include "annealbench/spin_core.hpp"

namespace annealbench {

enum class QuenchKind { switch_on, switch_off };
enum class DQPKind { G, X };

inline DQPKind dqp_kind_of(QuenchKind k) {
    return k == QuenchKind::switch_on ? DQPKind::G : DQPKind::X;
}
std::string to_string(QuenchKind k);
std::string to_string(DQPKind k);

// One sudden quench: the field jumps to h_f and the observable is
// time-averaged over [0, tau]. Times in units of 1/J.
struct QuenchSpec {
    QuenchKind kind = QuenchKind::switch_off;
    double h_f = 0.5;
    double tau = 20.0;
    double dt = 0.02;

    void validate() const;  // switch_on: 0 < h_f <= 1; switch_off: 0 <= h_f < 1; tau >= 10 dt
};

struct DQPCurve {
    DQPKind kind = DQPKind::X;
    std::vector<double> h_f_grid;  // strictly increasing
    std::vector<double> values;
    std::uint64_t instance_seed = 0;
};

// Solution-weighted mean z-magnetization: (1/N) sum_i m_i <sigma^z_i>, with
// m_i = +-1 read off the recorded solution. Equals 1 on the solution state.
double g_observable(const SpinInstance& instance, const StateVector& psi_t);

// Mean x-magnetization (1/N) sum_i <sigma^x_i>; equals 1 on the uniform
// superposition.
double x_observable(const StateVector& psi_t);

// Time-averaged observable after the quench: (1/tau) int_0^tau O(t) dt by
// the trapezoidal rule over every integrator step. switch_on starts from the
// recorded solution, switch_off from the uniform superposition.
double dqp(const SpinInstance& instance, const QuenchSpec& spec, const KrylovOptions& options = {},
           TransverseSign sign = TransverseSign::minus_j);

// dqp per grid point; grid must respect the kind's h_f domain. Grid points
// are independent; n_threads > 1 fans them out.
DQPCurve dqp_curve(const SpinInstance& instance, QuenchKind kind,
                   const std::vector<double>& h_f_grid, double tau = 20.0, double dt = 0.02,
                   int n_threads = 1);

// Named h_f grid presets.
// regression: 20 equidistant points covering the kind's valid endpoint
//   (switch_on: 1/20..1; switch_off: 0..19/20), the non-anchor points of the
//   21-point grid h_f^n = n/20.
// nn: 128 equidistant points (switch_off: k/128 on [0,1); switch_on:
//   (k+1)/128 on (0,1]).
std::vector<double> quench_grid_regression(QuenchKind kind);
std::vector<double> quench_grid_nn(QuenchKind kind);

}  // namespace annealbench
