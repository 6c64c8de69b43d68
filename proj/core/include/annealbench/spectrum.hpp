#pragma once

#include <Eigen/Dense>
#include <vector>

#include "annealbench/spin_core.hpp"

namespace annealbench {

// Gap and bandwidth of H[h] on a field grid. gap is the rescaled
// Delta(h) = (E_1 - E_0) / W(h), dimensionless; bandwidth W, e0, e1 carry
// units of J.
struct GapProfile {
    std::vector<double> h_grid;  // strictly increasing, within [0, 1]
    std::vector<double> gap;
    std::vector<double> bandwidth;
    std::vector<double> e0;
    std::vector<double> e1;

    std::size_t size() const { return h_grid.size(); }
};

struct CriticalField {
    double h_c_delta = 0.0;  // sub-grid argmin of Delta(h), refined to 1e-4
    double min_gap = 0.0;    // Delta at h_c_delta
};

// 128 equidistant points on [0,1] inclusive; shared by the spectrum and the
// network input grids.
std::vector<double> default_h_grid(int n_points = 128);

// All 2^N eigenvalues of the real-symmetric H[h], ascending. N <= 12.
Eigen::VectorXd full_spectrum(const SpinInstance& instance, double h,
                              TransverseSign sign = TransverseSign::minus_j);

// Per grid point: Delta, W, E_0, E_1 from the full spectrum. Grid points are
// independent; n_threads > 1 fans them out.
GapProfile gap_profile(const SpinInstance& instance, const std::vector<double>& h_grid,
                       TransverseSign sign = TransverseSign::minus_j, int n_threads = 1);

// Grid argmin of Delta (ties toward smaller h), refined by golden-section
// search over the two adjacent grid cells, recomputing Delta, to 1e-4 in h.
CriticalField critical_field(const SpinInstance& instance, const GapProfile& profile,
                             TransverseSign sign = TransverseSign::minus_j);

// Ground state of H[h]: dense solve for small dimensions, Lanczos with full
// reorthogonalization above. `guess` (optional) warm-starts the Lanczos.
struct GroundState {
    double energy = 0.0;
    StateVector vector;
};
GroundState ground_state(const SpinInstance& instance, const DiagonalProblem& diagonal, double h,
                         const StateVector* guess = nullptr,
                         TransverseSign sign = TransverseSign::minus_j);

}  // namespace annealbench
