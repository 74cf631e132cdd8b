#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sctd/core_model.hpp"

namespace sctd {

// Literal alphabet: monotone mode admits A1,A2,A4,A6,B1,B2,B4,B6,U; general
// mode admits every A1..A9, B1..B9 and U.
enum class Mode { monotone, general };

const char* to_string(Mode mode);

// The factor bits plus U visible to a predicate at one cell.
struct FactorView {
    std::array<bool, 9> a{};
    std::array<bool, 9> b{};
    bool u = false;

    static FactorView of(const SusceptibilityMonotone& susc, bool u);
    static FactorView of(const SusceptibilityGeneral& susc, bool u);
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Immutable boolean AST over factor literals and U.
// Grammar: expr := term ('|' term)*; term := factor ('&' factor)*;
//          factor := '!' factor | '(' expr ')' | literal;
//          literal := ('A'|'B') digit | 'U'.
class Predicate {
public:
    struct Node;

    static Predicate parse(std::string_view text, Mode mode = Mode::monotone);

    bool eval(const FactorView& cell) const;
    bool eval(const SusceptibilityMonotone& susc, bool u) const;

    bool uses_u() const;
    bool uses_general_literals() const;

    std::string str() const;

    // Structural builders, used by property tests to generate random ASTs.
    static Predicate literal_a(int k);
    static Predicate literal_b(int k);
    static Predicate literal_u();
    static Predicate negation(Predicate operand);
    static Predicate conjunction(Predicate lhs, Predicate rhs);
    static Predicate disjunction(Predicate lhs, Predicate rhs);

private:
    explicit Predicate(std::shared_ptr<const Node> root);
    std::shared_ptr<const Node> root_;
};

// All monotone type indices whose susceptibility satisfies p.
// Requires a U-free monotone-alphabet predicate.
std::vector<int> count_types(const Predicate& p);

}  // namespace sctd
