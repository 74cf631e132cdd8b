#include <doctest.h>

#include <algorithm>
#include <random>

#include "sctd/predicate.hpp"

using namespace sctd;

namespace {

// Random monotone-alphabet AST of bounded depth.
Predicate random_ast(std::mt19937_64& rng, int depth)
{
    std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 3);
    switch (kind(rng)) {
        case 1: return Predicate::negation(random_ast(rng, depth - 1));
        case 2:
            return Predicate::conjunction(random_ast(rng, depth - 1),
                                          random_ast(rng, depth - 1));
        case 3:
            return Predicate::disjunction(random_ast(rng, depth - 1),
                                          random_ast(rng, depth - 1));
        default: {
            std::uniform_int_distribution<int> which(0, 8);
            const int w = which(rng);
            static constexpr int kFactors[4] = {1, 2, 4, 6};
            if (w == 8) return Predicate::literal_u();
            if (w < 4) return Predicate::literal_a(kFactors[w]);
            return Predicate::literal_b(kFactors[w - 4]);
        }
    }
}

template <typename Fn>
void for_all_cells(Fn&& fn)
{
    for (int t = 1; t <= kTypeCount; ++t)
        for (bool u : {false, true})
            fn(FactorView::of(susceptibility_from_index(t), u));
}

}  // namespace

TEST_CASE("parser basics")
{
    const auto p = Predicate::parse("A1 | A4");
    CHECK(p.eval({.a = {true}, .u = false}));
    CHECK_FALSE(p.eval(FactorView{}));
    CHECK_FALSE(p.uses_u());

    const auto fig3 = Predicate::parse("(A1|A4) & !B1 & !B4 & (B2|B6) & U");
    CHECK(fig3.uses_u());
    SusceptibilityMonotone susc{.a4 = true, .b2 = true};
    CHECK(fig3.eval(susc, true));
    CHECK_FALSE(fig3.eval(susc, false));
    susc.b1 = true;
    CHECK_FALSE(fig3.eval(susc, true));
}

TEST_CASE("parse errors carry a position")
{
    CHECK_THROWS_AS(Predicate::parse(""), ParseError);
    CHECK_THROWS_AS(Predicate::parse("A1 | "), ParseError);
    CHECK_THROWS_AS(Predicate::parse("(A1 & B1"), ParseError);
    CHECK_THROWS_AS(Predicate::parse("A1 & C2"), ParseError);

    // A3 exists only in the general alphabet.
    CHECK_THROWS_AS(Predicate::parse("A3"), ParseError);
    CHECK_NOTHROW(Predicate::parse("A3", Mode::general));

    try {
        Predicate::parse("A1 & @");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("eval reads the cell's bits and u")
{
    const auto u_only = Predicate::parse("U");
    CHECK(u_only.eval(susceptibility_from_index(1), true));
    CHECK_FALSE(u_only.eval(susceptibility_from_index(1), false));

    // Type 137 has a1 and b1 set.
    const auto p = Predicate::parse("A1 & (B1 | !B2)");
    CHECK(p.eval(susceptibility_from_index(137), false));

    // Type 17 carries only a6.
    CHECK_FALSE(Predicate::parse("A1|A4").eval(susceptibility_from_index(17), true));
}

TEST_CASE("count_types reproduces the published counts")
{
    CHECK(count_types(Predicate::parse("A1|A4")).size() == 192);
    CHECK(count_types(Predicate::parse("(A1|A4) & ((B1|B4) | (!B2 & !B6))")).size() ==
          156);
    CHECK(count_types(Predicate::parse("A1 & (B1 | !B2)")).size() == 96);

    CHECK_THROWS_AS(count_types(Predicate::parse("A1 & U")), std::invalid_argument);
}

TEST_CASE("positive-SACE set is the 192/156 difference with 36 members")
{
    const auto big = count_types(Predicate::parse("A1|A4"));
    const auto null_set =
        count_types(Predicate::parse("(A1|A4) & ((B1|B4) | (!B2 & !B6))"));
    const auto pos_set =
        count_types(Predicate::parse("(A1|A4) & !(B1|B4) & (B2|B6)"));
    CHECK(pos_set.size() == 36);

    std::vector<int> joined = null_set;
    joined.insert(joined.end(), pos_set.begin(), pos_set.end());
    std::sort(joined.begin(), joined.end());
    CHECK(joined == big);
}

TEST_CASE("De Morgan and double negation on random ASTs")
{
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_ast(rng, 4);
        const auto q = random_ast(rng, 4);
        const auto lhs = Predicate::negation(Predicate::disjunction(p, q));
        const auto rhs =
            Predicate::conjunction(Predicate::negation(p), Predicate::negation(q));
        const auto double_neg = Predicate::negation(Predicate::negation(p));
        for_all_cells([&](const FactorView& cell) {
            CHECK(lhs.eval(cell) == rhs.eval(cell));
            CHECK(double_neg.eval(cell) == p.eval(cell));
        });
    }
}

TEST_CASE("parse-print round trip preserves semantics")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_ast(rng, 5);
        const auto reparsed = Predicate::parse(p.str());
        for_all_cells([&](const FactorView& cell) {
            CHECK(p.eval(cell) == reparsed.eval(cell));
        });
    }
}
