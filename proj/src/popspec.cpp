#include "sctd/popspec.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace sctd {

namespace {

std::vector<std::string> tokens_of(const std::string& line)
{
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok.front() == '#') break;  // trailing comment
        toks.push_back(tok);
    }
    return toks;
}

Rational parse_prob(const std::string& text, int line_no)
{
    Rational p;
    try {
        p = parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw PopSpecError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (p < 0)
        throw PopSpecError("line " + std::to_string(line_no) + ": negative mass " +
                           text);
    return p;
}

Rational parse_unit_prob(const std::string& text, int line_no)
{
    const Rational p = parse_prob(text, line_no);
    if (p > 1)
        throw PopSpecError("line " + std::to_string(line_no) + ": probability " +
                           text + " outside [0,1]");
    return p;
}

// Joint over the 512 monotone cells from independent per-factor probabilities
// conditional on U.
std::vector<Population::Entry> expand_independent(
    const Rational& pr_u1, const std::map<std::string, std::array<Rational, 2>>& factors)
{
    static constexpr const char* kNames[8] = {"a1", "a2", "a4", "a6",
                                              "b1", "b2", "b4", "b6"};
    std::vector<Population::Entry> cells;
    for (bool u : {false, true}) {
        const Rational u_mass = u ? pr_u1 : 1 - pr_u1;
        if (u_mass == 0) continue;
        for (int t = 1; t <= kTypeCount; ++t) {
            const auto susc = susceptibility_from_index(t);
            const bool bits[8] = {susc.a1, susc.a2, susc.a4, susc.a6,
                                  susc.b1, susc.b2, susc.b4, susc.b6};
            Rational mass = u_mass;
            for (int f = 0; f < 8 && mass != 0; ++f) {
                const auto it = factors.find(kNames[f]);
                const Rational p = it == factors.end() ? Rational(0) : it->second[u];
                mass *= bits[f] ? p : 1 - p;
            }
            if (mass != 0) cells.emplace_back(Cell{t, u}, mass);
        }
    }
    return cells;
}

}  // namespace

Population parse_popspec(std::istream& in, bool normalize)
{
    Mode mode = Mode::monotone;
    bool mode_set = false;
    std::vector<Population::Entry> cells;
    bool in_independent = false;
    bool saw_independent = false;
    std::optional<Rational> pr_u1;
    std::map<std::string, std::array<Rational, 2>> factors;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto toks = tokens_of(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];

        if (in_independent) {
            if (head == "end") {
                in_independent = false;
                continue;
            }
            if (head == "u") {
                if (toks.size() != 2)
                    throw PopSpecError("line " + std::to_string(line_no) +
                                       ": expected 'u <prob>'");
                pr_u1 = parse_unit_prob(toks[1], line_no);
                continue;
            }
            static const std::array<std::string, 8> kFactorNames = {
                "a1", "a2", "a4", "a6", "b1", "b2", "b4", "b6"};
            if (std::find(kFactorNames.begin(), kFactorNames.end(), head) !=
                kFactorNames.end()) {
                if (toks.size() != 3)
                    throw PopSpecError("line " + std::to_string(line_no) +
                                       ": expected '" + head +
                                       " <prob|u=0> <prob|u=1>'");
                factors[head] = {parse_unit_prob(toks[1], line_no),
                                 parse_unit_prob(toks[2], line_no)};
                continue;
            }
            throw PopSpecError("line " + std::to_string(line_no) +
                               ": unknown directive '" + head +
                               "' inside independent block");
        }

        if (head == "mode") {
            if (mode_set || !cells.empty() || saw_independent)
                throw PopSpecError("line " + std::to_string(line_no) +
                                   ": mode must be declared once, before any cells");
            if (toks.size() != 2 || (toks[1] != "monotone" && toks[1] != "general"))
                throw PopSpecError("line " + std::to_string(line_no) +
                                   ": expected 'mode monotone|general'");
            mode = toks[1] == "general" ? Mode::general : Mode::monotone;
            mode_set = true;
        } else if (head == "cell") {
            if (saw_independent)
                throw PopSpecError("line " + std::to_string(line_no) +
                                   ": cell lines cannot be mixed with an "
                                   "independent block");
            if (toks.size() != 4)
                throw PopSpecError("line " + std::to_string(line_no) +
                                   ": expected 'cell <index> <u> <prob>'");
            int index = 0;
            try {
                index = std::stoi(toks[1]);
            } catch (const std::exception&) {
                throw PopSpecError("line " + std::to_string(line_no) +
                                   ": bad cell index '" + toks[1] + "'");
            }
            const int max_index = mode == Mode::monotone ? kTypeCount : kGeneralTypeCount;
            if (index < 1 || index > max_index)
                throw PopSpecError("line " + std::to_string(line_no) + ": cell index " +
                                   toks[1] + " out of range for " + to_string(mode) +
                                   " mode");
            if (toks[2] != "0" && toks[2] != "1")
                throw PopSpecError("line " + std::to_string(line_no) +
                                   ": u must be 0 or 1");
            cells.emplace_back(Cell{index, toks[2] == "1"}, parse_prob(toks[3], line_no));
        } else if (head == "independent") {
            if (!cells.empty())
                throw PopSpecError("line " + std::to_string(line_no) +
                                   ": independent block cannot be mixed with cell "
                                   "lines");
            if (mode == Mode::general)
                throw PopSpecError("line " + std::to_string(line_no) +
                                   ": independent block is monotone-only");
            in_independent = true;
            saw_independent = true;
        } else {
            throw PopSpecError("line " + std::to_string(line_no) +
                               ": unknown directive '" + head + "'");
        }
    }
    if (in_independent) throw PopSpecError("unterminated independent block");

    if (saw_independent) {
        if (!pr_u1) throw PopSpecError("independent block is missing the 'u' line");
        cells = expand_independent(*pr_u1, factors);
    }
    if (cells.empty()) throw PopSpecError("population file declares no mass");

    return normalize ? Population::from_cells_normalized(std::move(cells), mode)
                     : Population::from_cells(std::move(cells), mode);
}

Population parse_popspec_string(const std::string& text, bool normalize)
{
    std::istringstream in(text);
    return parse_popspec(in, normalize);
}

Population load_popspec(const std::string& path, bool normalize)
{
    std::ifstream in(path);
    if (!in) throw PopSpecError("cannot open population file: " + path);
    return parse_popspec(in, normalize);
}

std::string write_popspec(const Population& pop)
{
    std::string out = "mode " + std::string(to_string(pop.mode())) + "\n";
    for (const auto& [cell, mass] : pop.cells()) {
        out += "cell " + std::to_string(cell.type_index) + (cell.u ? " 1 " : " 0 ") +
               to_string(mass) + "\n";
    }
    return out;
}

}  // namespace sctd
