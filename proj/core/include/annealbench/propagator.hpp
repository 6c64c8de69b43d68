#pragma once

#include <Eigen/Dense>

#include "annealbench/spin_core.hpp"

namespace annealbench {

// One Lanczos-subspace step of exp(-i H[h] dt) applied to psi, matrix-free.
// The subspace is grown until the a-posteriori error estimate drops below
// tol (local error per step), up to m_max vectors. Throws numerical_error on
// non-finite amplitudes or failure to converge.
struct KrylovOptions {
    int m_max = 40;      // subspace cap; typical steps converge near 10-15
    double tol = 1e-12;  // local error per step
};

void krylov_step(const SpinInstance& instance, const DiagonalProblem& diagonal, double h,
                 double dt, StateVector& psi, const KrylovOptions& options = {},
                 TransverseSign sign = TransverseSign::minus_j);

// Time-independent evolution psi(t) = exp(-i H[h] t) psi0 via repeated
// Krylov steps of size <= dt.
StateVector evolve(const SpinInstance& instance, double h, const StateVector& psi0, double t,
                   double dt = 0.02, const KrylovOptions& options = {},
                   TransverseSign sign = TransverseSign::minus_j);

// Exact propagator from one dense eigendecomposition of H[h]; N <= 12.
// Independent route used as the oracle for the Krylov path and as the
// small-system fallback.
class DensePropagator {
  public:
    DensePropagator(const SpinInstance& instance, double h,
                    TransverseSign sign = TransverseSign::minus_j);

    // exp(-i H t) psi for any t, no step-size error.
    StateVector evolve(const StateVector& psi, double t) const;

    const Eigen::VectorXd& eigenvalues() const { return evals_; }
    const Eigen::MatrixXd& eigenvectors() const { return evecs_; }

  private:
    Eigen::VectorXd evals_;
    Eigen::MatrixXd evecs_;
};

}  // namespace annealbench
