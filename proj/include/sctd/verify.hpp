#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sctd/estimand.hpp"

namespace sctd {

struct VerifyOptions {
    int draws = 1000;
    std::uint64_t seed = 1;
    int max_weight = 8;
    FormulaTable table = FormulaTable::standard();
};

struct Counterexample {
    int draw_index = 0;
    std::string suite;    // which identity failed
    std::string detail;   // failing field / values
    std::string popspec;  // the offending population, re-runnable
};

struct VerifyResult {
    int draws = 0;
    std::vector<Counterexample> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

// Randomized identity suites over seeded populations: formula-vs-individual
// engine equality, the SACE decomposition, SACE non-negativity, and the
// null-condition iff.
VerifyResult run_identity_suites(const VerifyOptions& options);

}  // namespace sctd
