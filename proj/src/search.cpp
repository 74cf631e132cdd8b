#include "sctd/search.hpp"

#include <random>

namespace sctd {

std::optional<SearchGoal> goal_from_name(std::string_view name)
{
    if (name == "null-sace-nonzero-crude") return SearchGoal::null_sace_nonzero_crude;
    if (name == "effect-modified-sace") return SearchGoal::effect_modified_sace;
    if (name == "zero-crude-nonzero-sace") return SearchGoal::zero_crude_nonzero_sace;
    return std::nullopt;
}

const char* to_string(SearchGoal goal)
{
    switch (goal) {
        case SearchGoal::null_sace_nonzero_crude: return "null-sace-nonzero-crude";
        case SearchGoal::effect_modified_sace: return "effect-modified-sace";
        case SearchGoal::zero_crude_nonzero_sace: return "zero-crude-nonzero-sace";
    }
    return "?";
}

namespace {

bool satisfies(SearchGoal goal, const EstimandReport& r)
{
    switch (goal) {
        case SearchGoal::null_sace_nonzero_crude:
            return r.sace && *r.sace == 0 && r.crude && *r.crude != 0;
        case SearchGoal::effect_modified_sace:
            return r.sace_u[0] && r.sace_u[1] && *r.sace_u[0] != *r.sace_u[1];
        case SearchGoal::zero_crude_nonzero_sace:
            return r.crude && *r.crude == 0 && r.sace && *r.sace > 0;
    }
    return false;
}

std::vector<Population::Entry> random_support(std::mt19937_64& rng, int min_cells,
                                              int max_cells, auto&& admit)
{
    std::uniform_int_distribution<int> n_cells(min_cells, max_cells);
    std::uniform_int_distribution<int> type(1, kTypeCount);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> weight(1, 8);

    const int target = n_cells(rng);
    std::vector<Population::Entry> cells;
    for (int tries = 0; (int)cells.size() < target && tries < 64 * target; ++tries) {
        const Cell cell{type(rng), coin(rng) == 1};
        if (admit(cell)) cells.emplace_back(cell, Rational(weight(rng)));
    }
    return cells;
}

// One survivor-arm balancer keeps the equation for zeroing the crude linear:
// a cell alive only under treatment changes E[Y|S=1,X=1] and nothing else,
// and is never an always-survivor, so the SACE is untouched.
std::optional<Population> balance_crude(const std::vector<Population::Entry>& base,
                                        const EstimandReport& r)
{
    if (!r.crude || !r.e_y_s1_x0 || *r.crude == 0) return std::nullopt;
    const Rational e0 = *r.e_y_s1_x0;
    // Survivor-arm-1 totals of the base population (mass sums to 1).
    const Rational d1 = r.e_s_x1;
    const Rational n1 = *r.e_y_s1_x1 * d1;

    Rational extra;
    int balancer_type;
    if (*r.crude > 0) {
        // Type {a2 only}: survives only treated, outcome 0 there.
        if (e0 == 0) return std::nullopt;
        extra = n1 / e0 - d1;
        balancer_type = canonical_index({.a2 = true});
    } else {
        // Type {a2, b2}: survives only treated, outcome 1 there.
        if (e0 == 1) return std::nullopt;
        extra = (e0 * d1 - n1) / (1 - e0);
        balancer_type = canonical_index({.a2 = true, .b2 = true});
    }
    if (extra <= 0) return std::nullopt;

    auto cells = base;
    cells.emplace_back(Cell{balancer_type, false}, extra);
    return Population::from_cells_normalized(std::move(cells));
}

}  // namespace

Population search_example(SearchGoal goal, std::uint64_t seed, int budget)
{
    std::mt19937_64 rng(seed);
    const Predicate c1 = Predicate::parse(kNullConditionU1);
    const Predicate c0 = Predicate::parse(kNullConditionU0);

    const auto outside_null_conditions = [&](const Cell& cell) {
        const auto view = FactorView::of(susceptibility_from_index(cell.type_index), cell.u);
        return !c1.eval(view) && !c0.eval(view);
    };
    const auto any_cell = [](const Cell&) { return true; };

    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<Population::Entry> cells;
        switch (goal) {
            case SearchGoal::null_sace_nonzero_crude:
                // Excluding the null-condition cells forces SACE = 0 whenever
                // it is defined; the draw only has to produce a nonzero crude.
                cells = random_support(rng, 2, 6, outside_null_conditions);
                break;
            case SearchGoal::effect_modified_sace:
                cells = random_support(rng, 2, 8, any_cell);
                break;
            case SearchGoal::zero_crude_nonzero_sace:
                cells = random_support(rng, 2, 5, any_cell);
                break;
        }
        if (cells.empty()) continue;

        Population pop = Population::from_cells_normalized(std::move(cells));
        EstimandReport report = estimands_individual(pop);
        if (satisfies(goal, report)) return pop;

        if (goal == SearchGoal::zero_crude_nonzero_sace && report.sace &&
            *report.sace > 0) {
            if (auto balanced = balance_crude(pop.cells(), report)) {
                if (satisfies(goal, estimands_individual(*balanced)))
                    return *balanced;
            }
        }
    }
    throw SearchExhausted(std::string("no example found for goal ") + to_string(goal) +
                          " within budget " + std::to_string(budget));
}

}  // namespace sctd
