#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "annealbench/spin_core.hpp"

namespace annealbench {

struct GeneratorConfig {
    int n_spins = 7;
    int n_clauses = 7;  // M; the hard regime is M ~ N
    std::uint64_t seed = 0;
    int max_attempts = 100000;
    double coupling = 1.0;

    void validate() const;
};

struct SatisfactionReport {
    int count = 0;                        // number of satisfying assignments
    std::optional<std::string> solution;  // present when count == 1
};

// True iff exactly two of the three referenced bits are 1.
bool clause_satisfied(const std::array<int, 3>& triple, int assignment_bits);
bool clause_satisfied(const std::array<int, 3>& triple, const std::string& assignment);

// Exhaustive count of satisfying assignments; n_spins <= 24.
SatisfactionReport count_satisfying(const std::vector<std::array<int, 3>>& clauses, int n_spins);

// Statistics of one generation run.
struct GenerationStats {
    int attempts = 0;  // clause sets drawn, including the accepted one
};

// Draws whole clause sets (triples with pairwise-distinct indices, duplicates
// across the set allowed) until one has a unique satisfying assignment.
// Deterministic in config.seed. Throws generation_error when max_attempts is
// exhausted.
SpinInstance generate_usa_instance(const GeneratorConfig& config, GenerationStats* stats = nullptr);

}  // namespace annealbench
