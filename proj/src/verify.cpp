#include "sctd/verify.hpp"

#include <random>

#include "sctd/popspec.hpp"

namespace sctd {

VerifyResult run_identity_suites(const VerifyOptions& options)
{
    std::mt19937_64 rng(options.seed);
    VerifyResult result;
    result.draws = options.draws;

    for (int i = 0; i < options.draws; ++i) {
        const Population pop = make_random_population(rng, options.max_weight);
        const auto record_failure = [&](const std::string& suite,
                                        const std::string& detail) {
            result.counterexamples.push_back({i, suite, detail, write_popspec(pop)});
        };

        const CrossCheckRecord record = cross_check(pop, options.table);
        for (const auto& field : record.fields) {
            if (!field.equal)
                record_failure("engine-equivalence",
                               field.field + ": individual=" + field.individual +
                                   " formula=" + field.formula);
        }

        const EstimandReport report = estimands_individual(pop);
        if (report.pr_always_survivor > 0 && !sace_decomposition_check(pop))
            record_failure("sace-decomposition",
                           "weighted average of SACE_u differs from SACE");

        if (report.sace && *report.sace < 0)
            record_failure("non-negativity", "SACE = " + to_string(*report.sace));
        for (int u = 0; u < 2; ++u)
            if (report.sace_u[u] && *report.sace_u[u] < 0)
                record_failure("non-negativity", "SACE_u=" + std::to_string(u) + " = " +
                                                     to_string(*report.sace_u[u]));

        const NullConditionReport nulls = null_conditions(pop);
        if (!nulls.consistent)
            record_failure("null-iff", "SACE = " + to_string(nulls.sace) +
                                           ", Pr(C1) = " + to_string(nulls.pr_c1) +
                                           ", Pr(C0) = " + to_string(nulls.pr_c0));
    }
    return result;
}

}  // namespace sctd
