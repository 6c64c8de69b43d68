#pragma once

<string>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "annealbench/quench.hpp"
#include "annealbench/spectrum.hpp"
#include "annealbench/spin_core.hpp"

namespace annealbench {

enum class ProtocolKind { linear, quadratic, full_gap };

// Monotone schedule h(t) on [0, T], h(0)=1, h(T)=0, stored as time-stamped
// field samples with linear interpolation in between.
struct Protocol {
    ProtocolKind kind = ProtocolKind::linear;
    double param = 0.0;  // h_c for quadratic, alpha for full_gap, unused for linear
    std::vector<double> times;
    std::vector<double> fields;

    double total_time() const { return times.back(); }
    double field_at(double t) const;
    std::string label() const;
    void validate() const;
};

// h(t) = 1 - t/T on K+1 equidistant samples.
Protocol linear_protocol(double total_time, int n_intervals = 1024);

// Two quadratic pieces joined at t_c = (1-h_c) T with vanishing ramp speed
// and h(t_c) = h_c; endpoints 1 and 0.
Protocol quadratic_protocol(double total_time, double h_c, int n_intervals = 1024);

// Descending walk over the profile grid; the interval leaving each grid
// point dwells for a time proportional to the unrescaled gap (E_1-E_0) at
// that point raised to -alpha, normalized so the dwells sum to T. alpha = 0
// reproduces the linear protocol.
Protocol full_gap_protocol(const GapProfile& profile, double alpha, double total_time,
                           bool rescale_by_bandwidth = false);

struct AnnealResult {
    std::vector<double> trace_times;
    std::vector<double> trace_fidelity;  // F(t) = |<psi_h(t)|psi(t)>| at trace samples
    double final_fidelity = 0.0;
    double total_time = 0.0;
    std::string protocol_label;
    std::uint64_t instance_seed = 0;
};

struct AnnealOptions {
    double dt = 0.005;   // integrator step, midpoint-field exponential per step
    int trace_samples = 64;
    KrylovOptions krylov;
};

// Integrates the time-dependent Schroedinger equation along the protocol,
// starting from the ground state of H[1]; per step the constant-H propagator
// is evaluated at the midpoint field h(t + dt/2).
AnnealResult anneal_evolve(const SpinInstance& instance, const Protocol& protocol,
                           const AnnealOptions& options = {});

enum class HcSource { constant, true_gap, from_g, from_x };
std::string to_string(HcSource s);

struct CriticalFieldEstimate {
    HcSource source = HcSource::constant;
    double value = 0.5;  // in (0, 1)
};

// Largest-h point where the linearly interpolated DQP curve equals 1/2.
// Throws estimate_unavailable when the curve never crosses.
CriticalFieldEstimate critical_field_estimate(const DQPCurve& curve, HcSource source);
CriticalFieldEstimate critical_field_estimate(const CriticalField& critical);
CriticalFieldEstimate critical_field_estimate_constant();

// Mean final fidelity over an instance ensemble for each T in T_list.
// protocol_factory builds the (possibly instance-specific) protocol.
using ProtocolFactory = std::function<Protocol(const SpinInstance&, double total_time)>;
std::vector<double> ensemble_mean_final_fidelity(const std::vector<SpinInstance>& instances,
                                                 const ProtocolFactory& protocol_factory,
                                                 const std::vector<double>& t_list,
                                                 const AnnealOptions& options = {},
                                                 int n_threads = 1);

// Interpolated time at which mean fidelity first reaches the target.
double fidelity_crossing_time(const std::vector<double>& t_list,
                              const std::vector<double>& mean_fidelity, double target);

struct ScalingFit {
    std::vector<int> n_values;
    std::vector<double> t_star;
    double slope = 0.0;      // a in T* ~ a N
    double intercept = 0.0;
};

// Per-N crossing times T*(N) plus a least-squares line through the pairs
// with 5 <= N <= 10.
ScalingFit fidelity_scaling(const std::vector<int>& n_values,
                            const std::vector<std::vector<double>>& mean_fidelity_per_n,
                            const std::vector<double>& t_list, double target_fidelity);

}  // namespace annealbench
