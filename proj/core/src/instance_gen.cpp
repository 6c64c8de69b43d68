#include "annealbench/instance_gen.hpp"

#include <bit>

#include "annealbench/rng.hpp"

namespace annealbench {

void GeneratorConfig::validate() const {
    if (n_spins < 3) throw structural_error("generator requires n_spins >= 3");
    if (n_spins > 24) throw structural_error("generator requires n_spins <= 24");
    if (n_clauses < 1) throw structural_error("generator requires n_clauses >= 1");
    if (max_attempts < 1) throw structural_error("generator requires max_attempts >= 1");
    if (!(coupling > 0.0)) throw structural_error("coupling must be positive");
}

bool clause_satisfied(const std::array<int, 3>& triple, int assignment_bits) {
    const int mask = (1 << triple[0]) | (1 << triple[1]) | (1 << triple[2]);
    return std::popcount(static_cast<unsigned>(assignment_bits & mask)) == 2;
}

bool clause_satisfied(const std::array<int, 3>& triple, const std::string& assignment) {
    return clause_satisfied(triple, bitstring_to_index(assignment));
}

namespace {

// Counts satisfying assignments, stopping once the count exceeds cap.
int count_capped(const std::vector<std::array<int, 3>>& clauses, int n_spins, int cap,
                 int* last_found) {
    std::vector<int> masks;
    masks.reserve(clauses.size());
    for (const auto& c : clauses) masks.push_back((1 << c[0]) | (1 << c[1]) | (1 << c[2]));
    int count = 0;
    const int dim = 1 << n_spins;
    for (int b = 0; b < dim; ++b) {
        bool ok = true;
        for (int mask : masks) {
            if (std::popcount(static_cast<unsigned>(b & mask)) != 2) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (last_found) *last_found = b;
        if (++count > cap) return count;
    }
    return count;
}

}  // namespace

SatisfactionReport count_satisfying(const std::vector<std::array<int, 3>>& clauses, int n_spins) {
    if (n_spins < 1 || n_spins > 24)
        throw structural_error("count_satisfying requires 1 <= n_spins <= 24");
    for (const auto& c : clauses)
        for (int idx : c)
            if (idx < 0 || idx >= n_spins) throw structural_error("clause index out of range");
    SatisfactionReport report;
    int last = -1;
    report.count = count_capped(clauses, n_spins, 1 << n_spins, &last);
    if (report.count == 1) report.solution = index_to_bitstring(last, n_spins);
    return report;
}

SpinInstance generate_usa_instance(const GeneratorConfig& config, GenerationStats* stats) {
    config.validate();
    Rng rng(config.seed);
    std::vector<std::array<int, 3>> clauses(config.n_clauses);
    for (int attempt = 1; attempt <= config.max_attempts; ++attempt) {
        for (auto& c : clauses) {
            // three indices without replacement within the triple
            c[0] = static_cast<int>(rng.next_below(config.n_spins));
            do {
                c[1] = static_cast<int>(rng.next_below(config.n_spins));
            } while (c[1] == c[0]);
            do {
                c[2] = static_cast<int>(rng.next_below(config.n_spins));
            } while (c[2] == c[0] || c[2] == c[1]);
        }
        int last = -1;
        if (count_capped(clauses, config.n_spins, 1, &last) == 1) {
            SpinInstance instance;
            instance.n_spins = config.n_spins;
            instance.coupling = config.coupling;
            instance.seed = config.seed;
            instance.clauses = clauses;
            instance.solution = index_to_bitstring(last, config.n_spins);
            if (stats) stats->attempts = attempt;
            return instance;
        }
    }
    throw generation_error("no unique-satisfying-assignment instance within " +
                               std::to_string(config.max_attempts) + " attempts (seed " +
                               std::to_string(config.seed) + ")",
                           config.max_attempts);
}

}  // namespace annealbench
