#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sctd/population.hpp"

namespace sctd {

struct TrialRecord {
    bool x = false, u = false, s = false;
    OutcomeValue y;
    int type_index = 1;  // latent; diagnostics only
};

// n i.i.d. participants: cell ~ pop, x ~ Bernoulli(p_treat), (s, y) evaluated
// from the cell's response. Deterministic given seed (mt19937_64, seeded via
// splitmix64).
std::vector<TrialRecord> sample_trial(const Population& pop, int n,
                                      const Rational& p_treat, std::uint64_t seed);

struct CrudeEstimate {
    std::optional<double> overall;
    std::array<std::optional<double>, 2> per_u;
};

// Difference of survivor outcome means by arm; nullopt when an arm has no
// survivors.
CrudeEstimate crude_estimator(std::span<const TrialRecord> records);

struct SimulationSummary {
    int n = 0, reps = 0;
    std::uint64_t seed = 0;
    std::optional<double> mean_crude;
    double sd_crude = 0.0;
    std::array<std::optional<double>, 2> mean_crude_u;
    int defined_reps = 0;  // reps whose overall crude was defined
    std::optional<Rational> population_crude, population_sace;
};

// reps independent trials; rep r uses sub-seed splitmix64(seed ^ r).
SimulationSummary replicate(const Population& pop, int n, int reps,
                            std::uint64_t seed);

// CSV: x,u,s,y with y empty when undefined; the latent type index is only
// emitted with diagnostics on.
std::string records_csv(std::span<const TrialRecord> records, bool diagnostics = false);

}  // namespace sctd
