#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iswp {

// Bad input: malformed files, contract violations, out-of-range parameters.
// The CLI maps this to exit status 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A guard refusal: the requested enumeration or table would exceed the node
// budget, or a size guard (isomorphism order, minimal-set k, ...) was hit.
// The CLI maps this to exit status 3. Guards refuse; they never truncate.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed. Reaching this is a defect, never a user error.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Tunable guards threaded through every potentially explosive call.
struct Limits {
    // Candidate-state budget for enumerations (tuples, masks, DP states,
    // gadget search nodes). Default 10^9.
    std::uint64_t node_budget = 1000000000ULL;
    // Brute-force isomorphism/automorphism order guard.
    int iso_max_n = 10;
    // Minimal-set enumeration guard (2^C(k,2) * k! growth).
    int minimal_max_k = 5;
    // Monotonicity/uniformity check guard.
    int monotone_max_k = 4;
};

inline void check_budget(std::uint64_t projected, const Limits& lim, const std::string& what) {
    if (projected > lim.node_budget) {
        throw budget_error(what + ": projected " + std::to_string(projected) +
                           " candidate states exceed the node budget of " +
                           std::to_string(lim.node_budget) + " (raise --budget to override)");
    }
}

} // namespace iswp
