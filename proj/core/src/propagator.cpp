#include "annealbench/propagator.hpp"

#include <cmath>
#include <complex>

namespace annealbench {

namespace {

constexpr std::complex<double> kMinusI{0.0, -1.0};

// exp(-i dt T) e1 for the real-symmetric tridiagonal T built from the
// Lanczos coefficients alpha[0..k-1], beta[0..k-2].
Eigen::VectorXcd tridiag_exp_e1(const std::vector<double>& alpha, const std::vector<double>& beta,
                                int k, double dt) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
    const Eigen::VectorXd& lambda = solver.eigenvalues();
    const Eigen::MatrixXd& q = solver.eigenvectors();
    Eigen::VectorXcd phase(k);
    for (int i = 0; i < k; ++i) phase[i] = std::exp(kMinusI * lambda[i] * dt);
    return q * (phase.array() * q.row(0).transpose().cast<std::complex<double>>().array()).matrix();
}

}  // namespace

void krylov_step(const SpinInstance& instance, const DiagonalProblem& diagonal, double h,
                 double dt, StateVector& psi, const KrylovOptions& options, TransverseSign sign) {
    const int dim = instance.dim();
    if (psi.size() != dim) throw structural_error("state dimension does not match 2^N");
    const double nrm0 = psi.norm();
    if (!(nrm0 > 0.0) || !std::isfinite(nrm0))
        throw numerical_error("non-finite or zero state entering krylov_step");
    if (dt <= 0.0) throw numerical_error("step size underflow in krylov_step");

    const int m_cap = std::min(options.m_max, dim);
    std::vector<StateVector> basis;
    basis.reserve(m_cap);
    std::vector<double> alpha, beta;
    basis.push_back(psi / nrm0);
    StateVector w(dim);
    Eigen::VectorXcd u;
    int k = 1;
    for (int j = 0; j < m_cap; ++j) {
        w.setZero();
        accumulate_hamiltonian(instance, diagonal, h, basis[j], w, {1.0, 0.0}, sign);
        const double a = std::real(basis[j].dot(w));
        alpha.push_back(a);
        w -= a * basis[j];
        if (j > 0) w -= beta[j - 1] * basis[j - 1];
        // one local reorthogonalization pass keeps the short recurrence clean
        if (j > 0) {
            w -= basis[j].dot(w) * basis[j];
            w -= basis[j - 1].dot(w) * basis[j - 1];
        }
        const double b = w.norm();
        k = j + 1;
        if (b < 1e-14) {
            // happy breakdown: Krylov space is invariant, the step is exact
            u = tridiag_exp_e1(alpha, beta, k, dt);
            break;
        }
        if (j >= 2 || j == m_cap - 1) {
            u = tridiag_exp_e1(alpha, beta, k, dt);
            // Saad's a-posteriori estimate: next-basis leakage of exp(T)e1
            const double err = b * std::abs(u[k - 1]) * std::abs(dt);
            if (err <= options.tol || j == m_cap - 1) {
                if (err > options.tol)
                    throw numerical_error("krylov_step did not reach tolerance within m_max=" +
                                          std::to_string(options.m_max));
                break;
            }
        }
        beta.push_back(b);
        basis.push_back(w / b);
    }
    psi.setZero();
    for (int i = 0; i < k; ++i) psi += (nrm0 * u[i]) * basis[i];
    if (!psi.allFinite()) throw numerical_error("non-finite amplitudes after krylov_step");
}

StateVector evolve(const SpinInstance& instance, double h, const StateVector& psi0, double t,
                   double dt, const KrylovOptions& options, TransverseSign sign) {
    const DiagonalProblem diagonal = build_problem_diagonal(instance);
    StateVector psi = psi0;
    if (t == 0.0) return psi;
    if (t < 0.0) throw structural_error("evolve requires t >= 0");
    const int n_full = static_cast<int>(std::floor(t / dt + 1e-12));
    for (int k = 0; k < n_full; ++k) krylov_step(instance, diagonal, h, dt, psi, options, sign);
    const double rem = t - n_full * dt;
    if (rem > 1e-12) krylov_step(instance, diagonal, h, rem, psi, options, sign);
    return psi;
}

DensePropagator::DensePropagator(const SpinInstance& instance, double h, TransverseSign sign) {
    if (instance.n_spins > 12) throw structural_error("DensePropagator supports N <= 12");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(materialize_hamiltonian(instance, h, sign));
    if (solver.info() != Eigen::Success)
        throw numerical_error("dense eigendecomposition failed in DensePropagator");
    evals_ = solver.eigenvalues();
    evecs_ = solver.eigenvectors();
}

StateVector DensePropagator::evolve(const StateVector& psi, double t) const {
    if (psi.size() != evals_.size()) throw structural_error("state dimension mismatch");
    Eigen::VectorXcd modal = evecs_.transpose().cast<std::complex<double>>() * psi;
    for (int i = 0; i < modal.size(); ++i) modal[i] *= std::exp(kMinusI * evals_[i] * t);
    return evecs_.cast<std::complex<double>>() * modal;
}

}  // namespace annealbench
