#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace treedeg {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::size_t checked = 0;   // instances examined
    std::size_t failures = 0;
    std::string detail;        // first failure, or a short summary table
    double seconds = 0.0;
};

// Exhaustive decision-versus-oracle sweep: for each n, every tree with max
// degree n-3 against every connected host with min degree n-3 on n..n+3
// vertices (n..n+1 once n >= 7), then `random_pairs` seeded random in-scope
// pairs split over n in {8, 9}. Checks witness validity, oracle agreement,
// and that every exception lands on a recognized host/tree shape.
SuiteResult check_embedding_equivalence(std::span<const int> exhaustive_ns,
                                        std::size_t random_pairs, std::uint64_t seed,
                                        int jobs = 0);

// The two headline 9-vertex instances against K_{3,3,3}.
SuiteResult check_exception_instances();

// exact_m_family against the combination DP for n in [5,40], m in [1,300].
SuiteResult check_m_family_equivalence();

// Exact values at m=3 for every in-scope tree on 6 and 7 vertices, matched
// against predictions; includes both spellings of the 6-vertex T(p,q) shape.
SuiteResult check_desk_tables(int jobs = 0);

// Full witness campaign over n in [6,9], k in [0,n-5].
SuiteResult check_lower_bound_witnesses(int jobs = 0);

// Long-path, escape-path, induced-P3 and greedy-embedding guarantees.
SuiteResult check_path_lemmas(std::uint64_t seed, int jobs = 0);

// Tree and graph counts by two independent methods plus canonical-form
// invariance under random relabelings.
SuiteResult check_enumeration_oracles(int jobs = 0);

// The seven suites above with their acceptance parameters, in order.
std::vector<SuiteResult> run_acceptance(int jobs = 0);

}  // namespace treedeg
