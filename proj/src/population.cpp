#include "sctd/population.hpp"

#include <algorithm>
#include <map>

namespace sctd {

namespace {

std::vector<Population::Entry> coalesce(std::vector<Population::Entry> cells, Mode mode)
{
    const int max_index = mode == Mode::monotone ? kTypeCount : kGeneralTypeCount;
    std::map<Cell, Rational> merged;
    for (auto& [cell, mass] : cells) {
        if (cell.type_index < 1 || cell.type_index > max_index)
            throw PopulationError("cell index " + std::to_string(cell.type_index) +
                                  " out of range for " + to_string(mode) + " mode");
        if (mass < 0) throw PopulationError("negative cell mass");
        if (mass == 0) continue;
        merged[cell] += mass;
    }
    return {merged.begin(), merged.end()};
}

}  // namespace

Population Population::from_cells(std::vector<Entry> cells, Mode mode)
{
    auto merged = coalesce(std::move(cells), mode);
    Rational total = 0;
    for (const auto& [cell, mass] : merged) total += mass;
    if (total != 1)
        throw PopulationError("total mass is " + to_string(total) + ", expected 1");
    return Population(std::move(merged), mode);
}

Population Population::from_cells_normalized(std::vector<Entry> cells, Mode mode)
{
    auto merged = coalesce(std::move(cells), mode);
    Rational total = 0;
    for (const auto& [cell, mass] : merged) total += mass;
    if (total <= 0) throw PopulationError("total mass must be positive");
    for (auto& [cell, mass] : merged) mass /= total;
    return Population(std::move(merged), mode);
}

Population Population::uniform(Mode mode)
{
    const int max_index = mode == Mode::monotone ? kTypeCount : kGeneralTypeCount;
    std::vector<Entry> cells;
    cells.reserve(2 * max_index);
    const Rational share(1, 2 * max_index);
    for (int t = 1; t <= max_index; ++t)
        for (bool u : {false, true}) cells.emplace_back(Cell{t, u}, share);
    return Population(std::move(cells), mode);
}

ResponseProfile Population::profile(const Cell& cell) const
{
    if (mode_ == Mode::monotone)
        return response_profile(susceptibility_from_index(cell.type_index), cell.u);
    return response_profile_general(general_from_index(cell.type_index), cell.u);
}

FactorView Population::view(const Cell& cell) const
{
    if (mode_ == Mode::monotone)
        return FactorView::of(susceptibility_from_index(cell.type_index), cell.u);
    return FactorView::of(general_from_index(cell.type_index), cell.u);
}

Population make_random_population(std::mt19937_64& rng, int max_weight)
{
    std::uniform_int_distribution<int> weight(0, max_weight);
    for (;;) {
        std::vector<Population::Entry> cells;
        long long total = 0;
        for (int t = 1; t <= kTypeCount; ++t) {
            for (bool u : {false, true}) {
                const int w = weight(rng);
                total += w;
                if (w > 0) cells.emplace_back(Cell{t, u}, Rational(w));
            }
        }
        if (total == 0) continue;  // all-zero draw, try again
        for (auto& [cell, mass] : cells) mass /= total;
        return Population::from_cells(std::move(cells));
    }
}

}  // namespace sctd
