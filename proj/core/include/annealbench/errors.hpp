#pragma once

#include <stdexcept>
#include <string>

namespace annealbench {

// Invalid structure: bad clause indices, dimension mismatches, malformed files.
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// Instance generation could not produce a unique-satisfying-assignment
// instance within the attempt budget.
struct generation_error : std::runtime_error {
    generation_error(const std::string& what, long attempts_used)
        : std::runtime_error(what), attempts(attempts_used) {}
    long attempts;
};

// Numerical failure: eigensolver non-convergence, divergent training loss,
// non-finite amplitudes, singular protocol.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// A requested estimate does not exist (e.g. DQP curve never crosses 1/2).
struct estimate_unavailable : std::runtime_error {
    explicit estimate_unavailable(const std::string& what) : std::runtime_error(what) {}
};

// Missing or unreadable input/output files.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace annealbench
