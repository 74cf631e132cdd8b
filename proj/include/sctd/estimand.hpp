#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sctd/population.hpp"

namespace sctd {

// Every Table-2-style quantity for one population. Conditional quantities
// are nullopt exactly when their conditioning event has zero mass.
struct EstimandReport {
    Rational e_s_x1, e_s_x0, survival_contrast, pr_always_survivor;
    std::optional<Rational> e_y1_as, e_y0_as, sace;
    std::array<std::optional<Rational>, 2> sace_u;  // indexed by u
    std::optional<Rational> e_y_s1_x1, e_y_s1_x0, crude;
    std::array<std::optional<Rational>, 2> crude_u;

    enum class Engine { individual, formula };
    Engine engine = Engine::individual;
};

// Sum of cell masses over cells satisfying p. Exact.
Rational event_prob(const Predicate& p, const Population& pop);

// Pointwise engine: sums response profiles cell by cell.
EstimandReport estimands_individual(const Population& pop);

// The background-factor expressions, one predicate string per probability
// term so they can be diffed against the published table and corrupted in
// harness self-tests.
struct FormulaTable {
    std::string surv_x1_u0 = "(A1|A2) & !U";
    std::string surv_x1_u1 = "(A1|A2|A4|A6) & U";
    std::string surv_x0_u0 = "A1 & !U";
    std::string surv_x0_u1 = "(A1|A4) & U";
    std::string as_y1_u0 = "A1 & (B1|B2) & !U";
    std::string as_y1_u1 = "(A1|A4) & (B1|B2|B4|B6) & U";
    std::string as_y0_u0 = "A1 & B1 & !U";
    std::string as_y0_u1 = "(A1|A4) & (B1|B4) & U";
    std::string survout_x1_u0 = "(A1|A2) & (B1|B2) & !U";
    std::string survout_x1_u1 = "(A1|A2|A4|A6) & (B1|B2|B4|B6) & U";
    std::string survout_x0_u0 = "A1 & B1 & !U";
    std::string survout_x0_u1 = "(A1|A4) & (B1|B4) & U";

    static const FormulaTable& standard();

    // Replaces the named term's predicate; unknown names throw. Used by the
    // verification harness to prove it reports counterexamples.
    void override_term(const std::string& name, const std::string& predicate_text);
};

class UnsupportedModeError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Formula engine over the monotone model; general-mode populations are
// rejected because the table is derived under monotonicity.
EstimandReport estimands_formula(const Population& pop,
                                 const FormulaTable& table = FormulaTable::standard());

struct FieldCheck {
    std::string field;
    bool equal = false;
    std::string individual, formula;
};

struct CrossCheckRecord {
    std::vector<FieldCheck> fields;
    bool all_equal() const;
};

CrossCheckRecord cross_check(const Population& pop,
                             const FormulaTable& table = FormulaTable::standard());

class UndefinedConditionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True iff SACE equals the always-survivor-weighted average of SACE_u,
// skipping u-strata with zero always-survivor mass.
// Throws UndefinedConditionError when Pr(S1=1, S0=1) = 0.
bool sace_decomposition_check(const Population& pop);

inline constexpr const char* kNullConditionU1 = "(A1|A4) & (!B1 & !B4) & (B2|B6) & U";
inline constexpr const char* kNullConditionU0 = "A1 & (!B1 & B2) & !U";

// The reduced crude form replaces the treated-survivor outcome event with its
// control-arm counterpart, so the x-only causes must fire for no treated
// survivor at that level of u; this strengthens the null condition from the
// control-surviving types to the whole treated arm.
inline constexpr const char* kReductionGateU1 =
    "(A1|A2|A4|A6) & (!B1 & !B4) & (B2|B6) & U";
inline constexpr const char* kReductionGateU0 = "(A1|A2) & (!B1 & B2) & !U";

struct NullConditionReport {
    Rational pr_c1, pr_c0;
    std::optional<Rational> sace;
    bool consistent = false;
};

NullConditionReport null_conditions(const Population& pop);

class ReductionNotApplicable : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Verifies the reduced two-term form of the u-level crude contrast; requires
// the matching null condition to hold and both survivor arms to be nonempty.
bool crude_reduction_check(const Population& pop, bool u);

}  // namespace sctd
