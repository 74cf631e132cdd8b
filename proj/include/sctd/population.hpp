#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sctd/core_model.hpp"
#include "sctd/predicate.hpp"
#include "sctd/rational.hpp"

namespace sctd {

// One latent stratum: a risk status type crossed with a level of U.
struct Cell {
    int type_index = 1;
    bool u = false;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class PopulationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact distribution over (type, U) cells. Treatment X is randomized
// independently of every cell, so it never appears here.
class Population {
public:
    using Entry = std::pair<Cell, Rational>;

    // Validates: indices in range for the mode, masses >= 0, total mass 1.
    // Zero-mass cells are dropped; duplicate cells are merged.
    static Population from_cells(std::vector<Entry> cells, Mode mode = Mode::monotone);

    // Same, but rescales by the total mass (which must be positive).
    static Population from_cells_normalized(std::vector<Entry> cells,
                                            Mode mode = Mode::monotone);

    static Population uniform(Mode mode = Mode::monotone);

    Mode mode() const { return mode_; }
    const std::vector<Entry>& cells() const { return cells_; }

    ResponseProfile profile(const Cell& cell) const;
    FactorView view(const Cell& cell) const;

private:
    Population(std::vector<Entry> cells, Mode mode)
        : cells_(std::move(cells)), mode_(mode)
    {
    }

    std::vector<Entry> cells_;
    Mode mode_ = Mode::monotone;
};

// Integer weights drawn uniformly from 0..max_weight over all 512 monotone
// cells, normalized by their sum (redrawn in the all-zero corner case).
Population make_random_population(std::mt19937_64& rng, int max_weight = 8);

}  // namespace sctd
