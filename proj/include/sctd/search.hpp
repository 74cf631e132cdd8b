#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "sctd/estimand.hpp"

namespace sctd {

enum class SearchGoal {
    null_sace_nonzero_crude,
    effect_modified_sace,
    zero_crude_nonzero_sace,
};

std::optional<SearchGoal> goal_from_name(std::string_view name);
const char* to_string(SearchGoal goal);

class SearchExhausted : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic seeded search for a population witnessing the goal, certified
// by estimands_individual before it is returned.
Population search_example(SearchGoal goal, std::uint64_t seed, int budget = 20000);

}  // namespace sctd
