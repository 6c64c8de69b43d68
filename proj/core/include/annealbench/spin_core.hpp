#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "annealbench/errors.hpp"

namespace annealbench {

using StateVector = Eigen::VectorXcd;

// Diagonal of the problem Hamiltonian in the computational basis, units of J.
using DiagonalProblem = Eigen::VectorXd;

// One EC3 problem: N spins, M clause triples, coupling J, and (when known)
// the unique satisfying assignment.
//
// Basis convention: bit i of a basis index encodes spin i; bit 1 means spin
// up (s_i = +1). The solution bitstring uses the same order: character i is
// spin i. A clause (i,j,k) is satisfied iff exactly two of the three spins
// are up.
struct SpinInstance {
    int n_spins = 0;
    double coupling = 1.0;                      // J > 0
    std::uint64_t seed = 0;                     // generation seed (0 for hand-built)
    std::vector<std::array<int, 3>> clauses;    // M triples, indices in [0, N)
    std::optional<std::string> solution;        // length-N bitstring

    int dim() const { return 1 << n_spins; }

    // Basis index of the recorded solution.
    int solution_index() const;

    // Throws structural_error on bad clause indices, non-positive coupling,
    // or a recorded solution that is not the unique satisfying assignment.
    // N >= 1 is accepted so that clause-free driver-only systems can be
    // built; the generator enforces N >= 3.
    void validate() const;
};

// Sign convention of the transverse term. minus_j makes the h=1 ground state
// the uniform superposition with <sigma^x> = +1; plus_j is the
// gauge-equivalent opposite sign, kept for cross-checks.
enum class TransverseSign { minus_j, plus_j };

inline double transverse_sign_factor(TransverseSign s) {
    return s == TransverseSign::minus_j ? -1.0 : +1.0;
}

// Diagonal of H_p: entry for basis state b is J * sum_clauses (s_i+s_j+s_k-1)^2.
DiagonalProblem build_problem_diagonal(const SpinInstance& instance);

// y += scale * H[h] x, matrix-free (diagonal pass plus one bit-flip sweep per
// spin). `diagonal` must come from build_problem_diagonal for the instance.
void accumulate_hamiltonian(const SpinInstance& instance, const DiagonalProblem& diagonal,
                            double h, const StateVector& x, StateVector& y,
                            std::complex<double> scale = {1.0, 0.0},
                            TransverseSign sign = TransverseSign::minus_j);

// H[h] psi = (1-h) H_p psi + h H_q psi (unnormalized result).
StateVector apply_hamiltonian(const SpinInstance& instance, double h, const StateVector& psi,
                              TransverseSign sign = TransverseSign::minus_j);

// Dense 2^N x 2^N real-symmetric H[h]; only for eigensolves, N <= 12.
Eigen::MatrixXd materialize_hamiltonian(const SpinInstance& instance, double h,
                                        TransverseSign sign = TransverseSign::minus_j);

// <sigma^z_site> = sum_b |psi_b|^2 s_site(b), in [-1, 1].
double expectation_sigma_z(const StateVector& psi, int site);

// <sigma^x_site> = 2 Re sum_{b: bit site = 0} conj(psi_b) psi_{b^site}.
double expectation_sigma_x(const StateVector& psi, int site);

// Basis state |b>.
StateVector basis_state(int n_spins, int basis_index);

// Uniform superposition 2^{-N/2} (1,...,1): ground state of H_q under the
// minus_j convention, hence of H[1].
StateVector uniform_superposition(int n_spins);

// Bitstring <-> basis index, character i = spin i.
int bitstring_to_index(const std::string& bits);
std::string index_to_bitstring(int index, int n_spins);

}  // namespace annealbench
