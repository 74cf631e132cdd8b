#pragma once

#include <iosfwd>
#include <string>

#include "sctd/population.hpp"

namespace sctd {

// Malformed population file (syntax, unknown directive, out-of-range cell).
// Mass-sum violations surface as PopulationError instead.
class PopSpecError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format:
//   # comment
//   mode monotone            (optional; monotone|general)
//   cell <index> <u> <prob>  (prob: "p/q", integer, or decimal)
// or a product block that expands to the full 512-cell joint:
//   independent
//   u <prob>
//   a1 <prob|u=0> <prob|u=1>
//   ... (a2 a4 a6 b1 b2 b4 b6; omitted factors default to 0)
//   end
// With normalize, any positive total mass is rescaled to 1; otherwise the
// masses must sum to 1 exactly.
Population parse_popspec(std::istream& in, bool normalize = false);
Population parse_popspec_string(const std::string& text, bool normalize = false);
Population load_popspec(const std::string& path, bool normalize = false);

std::string write_popspec(const Population& pop);

}  // namespace sctd
