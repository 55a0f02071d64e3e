#pragma once

#include "sogu/decider.hpp"
#include "sogu/term.hpp"

#include <cstddef>
#include <string>
#include <vector>

// Brute-force ground truth: enumerate every candidate body up to a size
// bound in graded order and keep the ones that unify. Used to
// differential-test the decider and the counting identities.

namespace sogu {

struct OracleResult {
    std::vector<Binding> unifiers;  // graded order (size, then print form)
    std::size_t size_bound = 0;
    bool exhausted = true;  // false iff an internal resource cap interrupted
};

OracleResult brute_force(const Problem& p, std::size_t size_bound);

struct DifferentialReport {
    Verdict verdict;
    OracleResult oracle;
    bool decider_abstained = false;  // Unknown or NotInFragment
    bool disagreement = false;
    std::string detail;
};

// Runs decide and brute_force on the same arity-1 problem and flags
// disagreements: a Unifiable witness small enough for the oracle that the
// oracle did not list, or NotUnifiable when the oracle found a unifier.
DifferentialReport differential_check(const Problem& p, std::size_t size_bound,
                                      std::size_t budget);

}  // namespace sogu
