#include "annealbench/spin_core.hpp"

#include <bit>
#include <cmath>

namespace annealbench {

namespace {

int clause_mask(const std::array<int, 3>& c) {
    return (1 << c[0]) | (1 << c[1]) | (1 << c[2]);
}

}  // namespace

int SpinInstance::solution_index() const {
    if (!solution) throw structural_error("instance has no recorded solution");
    return bitstring_to_index(*solution);
}

void SpinInstance::validate() const {
    if (n_spins < 1 || n_spins > 24)
        throw structural_error("n_spins out of range [1, 24]: " + std::to_string(n_spins));
    if (!(coupling > 0.0)) throw structural_error("coupling must be positive");
    for (const auto& c : clauses) {
        for (int idx : c)
            if (idx < 0 || idx >= n_spins)
                throw structural_error("clause index out of range: " + std::to_string(idx));
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
            throw structural_error("clause indices must be pairwise distinct");
    }
    if (solution) {
        if (static_cast<int>(solution->size()) != n_spins)
            throw structural_error("solution length does not match n_spins");
        const int sol = bitstring_to_index(*solution);
        int satisfying = 0;
        for (int b = 0; b < dim(); ++b) {
            bool ok = true;
            for (const auto& c : clauses) {
                if (std::popcount(static_cast<unsigned>(b & clause_mask(c))) != 2) {
                    ok = false;
                    break;
                }
            }
            if (ok && ++satisfying > 1) break;
        }
        bool sol_ok = true;
        for (const auto& c : clauses)
            if (std::popcount(static_cast<unsigned>(sol & clause_mask(c))) != 2) sol_ok = false;
        if (!sol_ok || satisfying != 1)
            throw structural_error("recorded solution is not the unique satisfying assignment");
    }
}

DiagonalProblem build_problem_diagonal(const SpinInstance& instance) {
    // Cheap structural checks only; full validate() (which proves solution
    // uniqueness by enumeration) is for construction/loading time.
    if (instance.n_spins < 1 || instance.n_spins > 24)
        throw structural_error("n_spins out of range [1, 24]");
    for (const auto& c : instance.clauses)
        for (int idx : c)
            if (idx < 0 || idx >= instance.n_spins)
                throw structural_error("clause index out of range: " + std::to_string(idx));
    const int dim = instance.dim();
    DiagonalProblem energies = DiagonalProblem::Zero(dim);
    for (const auto& c : instance.clauses) {
        const int mask = clause_mask(c);
        for (int b = 0; b < dim; ++b) {
            // s_i + s_j + s_k = 2*(up count) - 3
            const int ups = std::popcount(static_cast<unsigned>(b & mask));
            const int excess = 2 * ups - 4;  // (s_i+s_j+s_k-1)
            energies[b] += static_cast<double>(excess * excess);
        }
    }
    energies *= instance.coupling;
    return energies;
}

void accumulate_hamiltonian(const SpinInstance& instance, const DiagonalProblem& diagonal,
                            double h, const StateVector& x, StateVector& y,
                            std::complex<double> scale, TransverseSign sign) {
    const int dim = instance.dim();
    if (x.size() != dim || y.size() != dim || diagonal.size() != dim)
        throw structural_error("state dimension does not match 2^N");
    const std::complex<double> diag_scale = scale * (1.0 - h);
    for (int b = 0; b < dim; ++b) y[b] += diag_scale * diagonal[b] * x[b];
    const std::complex<double> flip = scale * h * transverse_sign_factor(sign) * instance.coupling;
    if (flip != std::complex<double>(0.0, 0.0)) {
        for (int site = 0; site < instance.n_spins; ++site) {
            const int mask = 1 << site;
            for (int b = 0; b < dim; ++b) {
                if (b & mask) continue;
                const int p = b | mask;
                const std::complex<double> xb = x[b];
                y[b] += flip * x[p];
                y[p] += flip * xb;
            }
        }
    }
}

StateVector apply_hamiltonian(const SpinInstance& instance, double h, const StateVector& psi,
                              TransverseSign sign) {
    const DiagonalProblem diagonal = build_problem_diagonal(instance);
    StateVector out = StateVector::Zero(instance.dim());
    accumulate_hamiltonian(instance, diagonal, h, psi, out, {1.0, 0.0}, sign);
    return out;
}

Eigen::MatrixXd materialize_hamiltonian(const SpinInstance& instance, double h,
                                        TransverseSign sign) {
    const int dim = instance.dim();
    const DiagonalProblem diagonal = build_problem_diagonal(instance);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int b = 0; b < dim; ++b) m(b, b) = (1.0 - h) * diagonal[b];
    const double flip = h * transverse_sign_factor(sign) * instance.coupling;
    for (int site = 0; site < instance.n_spins; ++site) {
        const int mask = 1 << site;
        for (int b = 0; b < dim; ++b) {
            if (b & mask) continue;
            m(b, b | mask) += flip;
            m(b | mask, b) += flip;
        }
    }
    return m;
}

double expectation_sigma_z(const StateVector& psi, int site) {
    const int mask = 1 << site;
    if (mask >= psi.size()) throw structural_error("site index out of range");
    double acc = 0.0;
    for (int b = 0; b < psi.size(); ++b) {
        const double p = std::norm(psi[b]);
        acc += (b & mask) ? p : -p;
    }
    return acc;
}

double expectation_sigma_x(const StateVector& psi, int site) {
    const int mask = 1 << site;
    if (mask >= psi.size()) throw structural_error("site index out of range");
    double acc = 0.0;
    for (int b = 0; b < psi.size(); ++b) {
        if (b & mask) continue;
        acc += std::real(std::conj(psi[b]) * psi[b | mask]);
    }
    return 2.0 * acc;
}

StateVector basis_state(int n_spins, int basis_index) {
    StateVector psi = StateVector::Zero(1 << n_spins);
    psi[basis_index] = 1.0;
    return psi;
}

StateVector uniform_superposition(int n_spins) {
    const int dim = 1 << n_spins;
    return StateVector::Constant(dim, std::complex<double>(1.0 / std::sqrt(double(dim)), 0.0));
}

int bitstring_to_index(const std::string& bits) {
    int index = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            index |= 1 << i;
        else if (bits[i] != '0')
            throw structural_error("bitstring must contain only 0/1");
    }
    return index;
}

std::string index_to_bitstring(int index, int n_spins) {
    std::string bits(n_spins, '0');
    for (int i = 0; i < n_spins; ++i)
        if (index & (1 << i)) bits[i] = '1';
    return bits;
}

}  // namespace annealbench
