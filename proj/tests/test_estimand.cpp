#include <doctest.h>

#include <random>

#include "sctd/estimand.hpp"
#include "sctd/verify.hpp"

using namespace sctd;

namespace {

Population pop_p0()
{
    return Population::from_cells(
        {{Cell{137, false}, Rational(1, 2)}, {Cell{33, true}, Rational(1, 2)}});
}

Population pop_p1()
{
    return Population::from_cells(
        {{Cell{137, false}, Rational(1, 2)}, {Cell{65, false}, Rational(1, 2)}});
}

Population point_mass(int type, bool u)
{
    return Population::from_cells({{Cell{type, u}, Rational(1)}});
}

}  // namespace

TEST_CASE("event_prob sums satisfying cells")
{
    const Population all_u1 = point_mass(1, true);
    CHECK(event_prob(Predicate::parse("U"), all_u1) == 1);

    CHECK(event_prob(Predicate::parse("A1|A4"), Population::uniform()) ==
          Rational(3, 4));

    CHECK(event_prob(Predicate::parse("A1 & !B1 & B2 & !U"), pop_p1()) == 0);
}

TEST_CASE("individual engine on the worked populations")
{
    SUBCASE("P0: both support cells are always-survivors with null effects")
    {
        const auto r = estimands_individual(pop_p0());
        CHECK(r.pr_always_survivor == 1);
        CHECK(r.e_y1_as == Rational(1, 2));
        CHECK(r.sace == Rational(0));
    }
    SUBCASE("P1: null SACE with a negative crude")
    {
        const auto r = estimands_individual(pop_p1());
        CHECK(r.sace == Rational(0));
        CHECK(r.crude == Rational(-1, 2));
        CHECK(r.survival_contrast == Rational(1, 2));
        CHECK(r.e_s_x1 == 1);
        CHECK(r.e_s_x0 == Rational(1, 2));
    }
    SUBCASE("degenerate never-survivor population")
    {
        const auto r = estimands_individual(point_mass(1, false));
        CHECK(r.e_s_x1 == 0);
        CHECK_FALSE(r.sace.has_value());
        CHECK_FALSE(r.crude.has_value());
    }
}

TEST_CASE("formula engine term values on P0 and P1")
{
    const auto r1 = estimands_formula(pop_p1());
    CHECK(r1.e_s_x1 == 1);
    CHECK(r1.e_s_x0 == Rational(1, 2));

    const auto r0 = estimands_formula(pop_p0());
    CHECK(r0.pr_always_survivor == 1);
}

TEST_CASE("formula engine rejects general-mode populations")
{
    const Population general = Population::from_cells(
        {{Cell{1, false}, Rational(1)}}, Mode::general);
    CHECK_THROWS_AS(estimands_formula(general), UnsupportedModeError);
    CHECK_NOTHROW(estimands_individual(general));
}

TEST_CASE("cross-check equality on worked and uniform populations")
{
    CHECK(cross_check(pop_p0()).all_equal());
    CHECK(cross_check(pop_p1()).all_equal());
    CHECK(cross_check(Population::uniform()).all_equal());
}

TEST_CASE("cross-check equality on random populations")
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        const auto pop = make_random_population(rng);
        const auto record = cross_check(pop);
        for (const auto& f : record.fields) {
            INFO(f.field, ": individual=", f.individual, " formula=", f.formula);
            CHECK(f.equal);
        }
    }
}

TEST_CASE("a corrupted formula term is caught by the identity suite")
{
    VerifyOptions options;
    options.draws = 20;
    options.seed = 5;
    options.table.override_term("surv_x1_u0", "(A1|A2|A4) & !U");
    const auto result = run_identity_suites(options);
    CHECK_FALSE(result.ok());
    CHECK(result.counterexamples.front().suite == "engine-equivalence");
}

TEST_CASE("SACE decomposition")
{
    CHECK(sace_decomposition_check(pop_p0()));
    CHECK(sace_decomposition_check(point_mass(33, true)));  // single-stratum weight 1
    CHECK_THROWS_AS(sace_decomposition_check(point_mass(1, false)),
                    UndefinedConditionError);

    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const auto pop = make_random_population(rng);
        if (estimands_individual(pop).pr_always_survivor > 0)
            CHECK(sace_decomposition_check(pop));
    }
}

TEST_CASE("null conditions")
{
    SUBCASE("P1 meets both null conditions")
    {
        const auto rep = null_conditions(pop_p1());
        CHECK(rep.pr_c1 == 0);
        CHECK(rep.pr_c0 == 0);
        CHECK(rep.sace == Rational(0));
        CHECK(rep.consistent);
    }
    SUBCASE("type 133 at u=0 violates C0 and has unit SACE")
    {
        const auto rep = null_conditions(point_mass(133, false));
        CHECK(rep.pr_c0 > 0);
        CHECK(rep.sace == Rational(1));
        CHECK(rep.consistent);
    }
    SUBCASE("vacuous when there are no always-survivors")
    {
        const auto rep = null_conditions(point_mass(1, false));
        CHECK(rep.pr_c1 == 0);
        CHECK(rep.pr_c0 == 0);
        CHECK_FALSE(rep.sace.has_value());
        CHECK(rep.consistent);
    }
}

TEST_CASE("crude reduction identities")
{
    CHECK(crude_reduction_check(pop_p1(), false));
    CHECK(crude_reduction_check(pop_p0(), true));
    CHECK_THROWS_AS(crude_reduction_check(point_mass(133, false), false),
                    ReductionNotApplicable);

    // Randomized: populations built to satisfy the gate condition must match
    // the reduced form exactly whenever both survivor arms are populated.
    std::mt19937_64 rng(11);
    const Predicate c1 = Predicate::parse(kReductionGateU1);
    const Predicate c0 = Predicate::parse(kReductionGateU0);
    std::uniform_int_distribution<int> type(1, kTypeCount);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> weight(1, 8);
    int exercised = 0;
    for (int i = 0; i < 400; ++i) {
        const bool u = coin(rng) == 1;
        const Predicate& gate = u ? c1 : c0;
        std::vector<Population::Entry> cells;
        while (cells.size() < 4) {
            const Cell cell{type(rng), coin(rng) == 1};
            const auto view =
                FactorView::of(susceptibility_from_index(cell.type_index), cell.u);
            if (gate.eval(view)) continue;
            cells.emplace_back(cell, Rational(weight(rng)));
        }
        const auto pop = Population::from_cells_normalized(std::move(cells));
        try {
            const bool matched = crude_reduction_check(pop, u);
            CHECK(matched);
            ++exercised;
        } catch (const ReductionNotApplicable&) {
            // empty survivor arm at this level of u
        }
    }
    CHECK(exercised > 100);
}

TEST_CASE("randomized identity suites are clean")
{
    VerifyOptions options;
    options.draws = 200;
    options.seed = 1;
    const auto result = run_identity_suites(options);
    for (const auto& ce : result.counterexamples) {
        INFO(ce.suite, " draw ", ce.draw_index, ": ", ce.detail, "\n", ce.popspec);
        CHECK(false);
    }
    CHECK(result.ok());
}

TEST_CASE("bounds and conditioning consistency on random populations")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto pop = make_random_population(rng, 3);
        const auto r = estimands_individual(pop);
        CHECK(r.survival_contrast >= 0);
        CHECK(r.survival_contrast <= 1);
        for (const auto& e : {r.e_y1_as, r.e_y0_as, r.e_y_s1_x1, r.e_y_s1_x0}) {
            if (!e) continue;
            CHECK(*e >= 0);
            CHECK(*e <= 1);
        }
        CHECK(r.sace.has_value() == (r.pr_always_survivor > 0));
        CHECK(r.e_y_s1_x1.has_value() == (r.e_s_x1 > 0));
        CHECK(r.e_y_s1_x0.has_value() == (r.e_s_x0 > 0));
    }
}
