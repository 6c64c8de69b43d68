#include "annealbench/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "annealbench/parallel.hpp"
#include "annealbench/rng.hpp"

namespace annealbench {

std::vector<double> default_h_grid(int n_points) {
    std::vector<double> grid(n_points);
    for (int i = 0; i < n_points; ++i) grid[i] = static_cast<double>(i) / (n_points - 1);
    return grid;
}

Eigen::VectorXd full_spectrum(const SpinInstance& instance, double h, TransverseSign sign) {
    if (instance.n_spins > 12)
        throw structural_error("full_spectrum supports N <= 12");
    const Eigen::MatrixXd m = materialize_hamiltonian(instance, h, sign);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numerical_error("eigensolver failed to converge at h=" + std::to_string(h));
    return solver.eigenvalues();
}

namespace {

struct GapPoint {
    double gap, bandwidth, e0, e1;
};

GapPoint gap_at(const SpinInstance& instance, double h, TransverseSign sign) {
    const Eigen::VectorXd evals = full_spectrum(instance, h, sign);
    const int top = static_cast<int>(evals.size()) - 1;
    GapPoint p;
    p.e0 = evals[0];
    p.e1 = evals[1];
    p.bandwidth = evals[top] - evals[0];
    if (!(p.bandwidth > 0.0))
        throw numerical_error("zero bandwidth at h=" + std::to_string(h));
    p.gap = (p.e1 - p.e0) / p.bandwidth;
    return p;
}

}  // namespace

GapProfile gap_profile(const SpinInstance& instance, const std::vector<double>& h_grid,
                       TransverseSign sign, int n_threads) {
    for (std::size_t i = 0; i < h_grid.size(); ++i) {
        if (h_grid[i] < 0.0 || h_grid[i] > 1.0)
            throw structural_error("h grid must lie within [0, 1]");
        if (i > 0 && h_grid[i] <= h_grid[i - 1])
            throw structural_error("h grid must be strictly increasing");
    }
    GapProfile profile;
    profile.h_grid = h_grid;
    profile.gap.resize(h_grid.size());
    profile.bandwidth.resize(h_grid.size());
    profile.e0.resize(h_grid.size());
    profile.e1.resize(h_grid.size());
    parallel_for(h_grid.size(), n_threads, [&](std::size_t i) {
        const GapPoint p = gap_at(instance, h_grid[i], sign);
        profile.gap[i] = p.gap;
        profile.bandwidth[i] = p.bandwidth;
        profile.e0[i] = p.e0;
        profile.e1[i] = p.e1;
    });
    return profile;
}

CriticalField critical_field(const SpinInstance& instance, const GapProfile& profile,
                             TransverseSign sign) {
    if (profile.size() == 0) throw structural_error("empty gap profile");
    std::size_t argmin = 0;
    for (std::size_t i = 1; i < profile.size(); ++i)
        if (profile.gap[i] < profile.gap[argmin]) argmin = i;  // ties toward smaller h

    double lo = profile.h_grid[argmin > 0 ? argmin - 1 : 0];
    double hi = profile.h_grid[argmin + 1 < profile.size() ? argmin + 1 : profile.size() - 1];
    if (!(hi > lo)) return {profile.h_grid[argmin], profile.gap[argmin]};

    // golden-section to |hi-lo| <= 1e-4
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = gap_at(instance, c, sign).gap;
    double fd = gap_at(instance, d, sign).gap;
    while (b - a > 1e-4) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = gap_at(instance, c, sign).gap;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = gap_at(instance, d, sign).gap;
        }
    }
    const double h_best = 0.5 * (a + b);
    CriticalField result;
    result.h_c_delta = h_best;
    result.min_gap = gap_at(instance, h_best, sign).gap;
    // grid minimum may still win if the refinement bracket was flat
    if (profile.gap[argmin] < result.min_gap) {
        result.h_c_delta = profile.h_grid[argmin];
        result.min_gap = profile.gap[argmin];
    }
    return result;
}

namespace {

// Lanczos with full reorthogonalization for the minimal eigenpair.
// Converges from any start vector with nonzero ground-state overlap; the
// caller mixes in a deterministic random component to guarantee that.
bool lanczos_ground_state(const SpinInstance& instance, const DiagonalProblem& diagonal, double h,
                          TransverseSign sign, const StateVector& start, int max_iter, double tol,
                          GroundState& out) {
    const int dim = instance.dim();
    const int m_max = std::min(max_iter, dim);
    std::vector<StateVector> basis;
    basis.reserve(m_max);
    std::vector<double> alpha, beta;
    StateVector v = start / start.norm();
    basis.push_back(v);
    StateVector w(dim);
    for (int j = 0; j < m_max; ++j) {
        w.setZero();
        accumulate_hamiltonian(instance, diagonal, h, basis[j], w, {1.0, 0.0}, sign);
        double a = std::real(basis[j].dot(w));
        alpha.push_back(a);
        w -= a * basis[j];
        if (j > 0) w -= beta[j - 1] * basis[j - 1];
        // full reorthogonalization, one classical Gram-Schmidt pass
        for (const auto& q : basis) w -= q.dot(w) * q;
        const double b = w.norm();

        // check the current Ritz pair every few iterations
        if ((j >= 8 && j % 4 == 0) || b < 1e-14 || j == m_max - 1) {
            const int k = j + 1;
            Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
            for (int i = 0; i < k; ++i) {
                t(i, i) = alpha[i];
                if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
            const Eigen::VectorXd y = solver.eigenvectors().col(0);
            // residual norm for tridiagonal Ritz pair: |beta_k * y_k|
            const double residual = b * std::abs(y[k - 1]);
            if (residual <= tol || b < 1e-14) {
                out.energy = solver.eigenvalues()[0];
                out.vector = StateVector::Zero(dim);
                for (int i = 0; i < k; ++i) out.vector += y[i] * basis[i];
                out.vector.normalize();
                return true;
            }
        }
        if (b < 1e-14) break;  // exhausted invariant subspace without meeting tol
        beta.push_back(b);
        basis.push_back(w / b);
    }
    return false;
}

}  // namespace

GroundState ground_state(const SpinInstance& instance, const DiagonalProblem& diagonal, double h,
                         const StateVector* guess, TransverseSign sign) {
    const int dim = instance.dim();
    if (dim <= 512) {
        const Eigen::MatrixXd m = materialize_hamiltonian(instance, h, sign);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
        if (solver.info() != Eigen::Success)
            throw numerical_error("dense ground-state solve failed at h=" + std::to_string(h));
        GroundState gs;
        gs.energy = solver.eigenvalues()[0];
        gs.vector = solver.eigenvectors().col(0).cast<std::complex<double>>();
        return gs;
    }
    // Lanczos, warm-started by the guess; a seeded random admixture keeps the
    // start vector from being exactly orthogonal to the ground state.
    Rng rng(derive_seed(instance.seed, 0x6c616e637aULL));
    StateVector start(dim);
    for (int b = 0; b < dim; ++b) start[b] = std::complex<double>(rng.next_normal(), 0.0);
    start.normalize();
    if (guess && guess->size() == dim) {
        const double gn = guess->norm();
        if (gn > 0.0) start = (*guess) / gn + 1e-3 * start;
    }
    // tolerance relative to the spectral scale
    const double scale =
        (1.0 - h) * diagonal.maxCoeff() + h * instance.n_spins * instance.coupling;
    GroundState gs;
    for (int attempt = 0; attempt < 3; ++attempt) {
        if (lanczos_ground_state(instance, diagonal, h, sign, start, 300, 1e-11 * std::max(scale, 1.0), gs))
            return gs;
        for (int b = 0; b < dim; ++b) start[b] = std::complex<double>(rng.next_normal(), 0.0);
        start.normalize();
    }
    throw numerical_error("Lanczos ground-state solve did not converge at h=" + std::to_string(h));
}

}  // namespace annealbench
