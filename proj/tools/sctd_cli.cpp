// sctd: exact engine for the two-stage sufficient-cause model of truncation
// by death. Subcommands: enumerate, classify, estimate, verify, null-check,
// simulate, search.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sctd/estimand.hpp"
#include "sctd/popspec.hpp"
#include "sctd/search.hpp"
#include "sctd/table_report.hpp"
#include "sctd/trial_sim.hpp"
#include "sctd/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitValidation = 3;
constexpr int kExitSearch = 4;

struct GlobalFlags {
    std::string format = "text";
    std::string mode = "monotone";
    std::uint64_t seed = 1;
    bool normalize = false;

    sctd::Mode parsed_mode() const
    {
        return mode == "general" ? sctd::Mode::general : sctd::Mode::monotone;
    }
    bool csv() const { return format == "csv"; }
};

std::string fmt(const std::optional<sctd::Rational>& r) { return sctd::to_string(r); }
std::string fmt(const sctd::Rational& r) { return sctd::to_string(r); }

int cmd_enumerate(const GlobalFlags& flags, const std::string& filter_text)
{
    using namespace sctd;
    std::optional<Predicate> filter;
    if (!filter_text.empty()) {
        filter = Predicate::parse(filter_text, flags.parsed_mode());
        if (filter->uses_u())
            throw ParseError("enumerate filters range over types, not cells; "
                             "'U' is not allowed",
                             0);
    }

    if (flags.parsed_mode() == Mode::monotone) {
        std::vector<TableS1Row> rows;
        for (auto& row : generate_table_s1())
            if (!filter || filter->eval(row.bits, false)) rows.push_back(row);
        std::cout << (flags.csv() ? render_table_s1_csv(rows)
                                  : render_table_s1_text(rows));
        return kExitOk;
    }

    // General mode: stream matching 18-bit types with their four responses.
    std::cout << "index,a1,a2,a3,a4,a5,a6,a7,a8,a9,b1,b2,b3,b4,b5,b6,b7,b8,b9,"
                 "s_x1_u1,s_x0_u1,s_x1_u0,s_x0_u0,y_x1_u1,y_x0_u1,y_x1_u0,y_x0_u0\n";
    for (int t = 1; t <= kGeneralTypeCount; ++t) {
        const auto susc = general_from_index(t);
        if (filter && !filter->eval(FactorView::of(susc, false))) continue;
        std::string line = std::to_string(t);
        for (bool bit : susc.a) line += bit ? ",1" : ",0";
        for (bool bit : susc.b) line += bit ? ",1" : ",0";
        const std::pair<bool, bool> xu[4] = {
            {true, true}, {false, true}, {true, false}, {false, false}};
        std::string s_cols, y_cols;
        for (const auto& [x, u] : xu) {
            const bool s = survival_general(susc, u, x);
            const auto y = outcome_general(susc, s, u, x);
            s_cols += s ? ",1" : ",0";
            y_cols += y ? (*y ? ",1" : ",0") : ",";
        }
        std::cout << line << s_cols << y_cols << "\n";
    }
    return kExitOk;
}

int cmd_classify(const GlobalFlags& flags)
{
    using namespace sctd;
    const auto checks = verify_table1();
    const bool partitions_ok = verify_table1_partitions();

    bool all_pass = partitions_ok;
    if (flags.csv()) {
        std::cout << "description,expression,expected_count,actual_count,pass\n";
        for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            std::cout << '"' << c.row.description << "\",\"" << c.row.predicate_text
                      << "\"," << c.row.expected_count << ',' << c.actual_count << ','
                      << (c.pass ? "1" : "0") << "\n";
        }
    } else {
        for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.row.description << " ("
                      << c.row.predicate_text << "): expected " << c.row.expected_count
                      << ", actual " << c.actual_count << "\n";
            if (!c.pass) {
                std::cout << "       actual indices:";
                for (int t : c.actual_indices) std::cout << ' ' << t;
                std::cout << "\n";
            }
        }
        std::cout << (partitions_ok ? "[PASS] " : "[FAIL] ")
                  << "partition footnote: 192 = 128 + 32 + 32; null/positive "
                     "complements\n";
    }
    return all_pass ? kExitOk : kExitMismatch;
}

int cmd_estimate(const GlobalFlags& flags, const std::string& path, bool by_u)
{
    using namespace sctd;
    const Population pop = load_popspec(path, flags.normalize);

    if (pop.mode() == Mode::general) {
        const EstimandReport r = estimands_individual(pop);
        std::cout << "# general mode: individual engine only (no closed-form "
                     "expressions)\n";
        std::cout << "E[S|X=1] = " << fmt(r.e_s_x1) << "\n";
        std::cout << "E[S|X=0] = " << fmt(r.e_s_x0) << "\n";
        std::cout << "Pr(S1=1,S0=1) = " << fmt(r.pr_always_survivor) << "\n";
        std::cout << "SACE = " << fmt(r.sace) << "\n";
        std::cout << "crude = " << fmt(r.crude) << "\n";
        if (by_u)
            for (int u = 0; u < 2; ++u)
                std::cout << "SACE_u=" << u << " = " << fmt(r.sace_u[u])
                          << "\ncrude_u=" << u << " = " << fmt(r.crude_u[u]) << "\n";
        return kExitOk;
    }

    const CrossCheckRecord record = cross_check(pop);
    if (flags.csv()) {
        std::cout << "field,individual,formula,equal\n";
        for (const auto& f : record.fields) {
            if (!by_u && f.field.find("_u=") != std::string::npos) continue;
            std::cout << '"' << f.field << "\"," << f.individual << ',' << f.formula
                      << ',' << (f.equal ? "1" : "0") << "\n";
        }
    } else {
        for (const auto& f : record.fields) {
            if (!by_u && f.field.find("_u=") != std::string::npos) continue;
            std::cout << (f.equal ? "[ok]   " : "[DIFF] ") << f.field
                      << ": individual = " << f.individual
                      << ", formula = " << f.formula << "\n";
        }
    }
    return record.all_equal() ? kExitOk : kExitMismatch;
}

int cmd_verify(const GlobalFlags& flags, int draws, int max_weight,
               const std::vector<std::string>& corruptions)
{
    using namespace sctd;
    VerifyOptions options;
    options.draws = draws;
    options.seed = flags.seed;
    options.max_weight = max_weight;
    for (const auto& spec : corruptions) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw PopSpecError("--corrupt-term expects name=predicate");
        options.table.override_term(spec.substr(0, eq), spec.substr(eq + 1));
    }

    const VerifyResult result = run_identity_suites(options);
    std::cout << "draws: " << result.draws << "\n"
              << "counterexamples: " << result.counterexamples.size() << "\n";
    for (const auto& ce : result.counterexamples) {
        std::cout << "[FAIL] draw " << ce.draw_index << " suite " << ce.suite << ": "
                  << ce.detail << "\n";
        std::cout << ce.popspec;
    }
    return result.ok() ? kExitOk : kExitMismatch;
}

int cmd_null_check(const GlobalFlags& flags, const std::string& path)
{
    using namespace sctd;
    const Population pop = load_popspec(path, flags.normalize);
    const NullConditionReport nulls = null_conditions(pop);
    const EstimandReport r = estimands_individual(pop);

    std::cout << "Pr(C1) [" << kNullConditionU1 << "] = " << fmt(nulls.pr_c1) << "\n";
    std::cout << "Pr(C0) [" << kNullConditionU0 << "] = " << fmt(nulls.pr_c0) << "\n";
    std::cout << "SACE = " << fmt(nulls.sace) << "\n";
    for (int u = 1; u >= 0; --u)
        std::cout << "SACE_u=" << u << " = " << fmt(r.sace_u[u]) << "\n";
    std::cout << "crude = " << fmt(r.crude) << "\n";
    for (int u = 1; u >= 0; --u)
        std::cout << "crude_u=" << u << " = " << fmt(r.crude_u[u]) << "\n";
    std::cout << "null-iff consistent: " << (nulls.consistent ? "yes" : "NO") << "\n";
    for (int u = 1; u >= 0; --u) {
        std::cout << "crude reduction (u=" << u << "): ";
        try {
            std::cout << (crude_reduction_check(pop, u == 1) ? "pass" : "FAIL") << "\n";
        } catch (const ReductionNotApplicable& e) {
            std::cout << "not applicable (" << e.what() << ")\n";
        }
    }
    return nulls.consistent ? kExitOk : kExitMismatch;
}

int cmd_simulate(const GlobalFlags& flags, const std::string& path, int n, int reps,
                 const std::string& p_treat_text, const std::string& dump_path,
                 bool diagnostics)
{
    using namespace sctd;
    const Population pop = load_popspec(path, flags.normalize);
    const Rational p_treat = parse_rational(p_treat_text);

    if (!dump_path.empty()) {
        const auto records = sample_trial(pop, n, p_treat, flags.seed);
        std::ofstream out(dump_path);
        out << records_csv(records, diagnostics);
    }

    const SimulationSummary s = replicate(pop, n, reps, flags.seed);
    std::cout << "n = " << s.n << "\nreps = " << s.reps << "\nseed = " << s.seed
              << "\n";
    std::cout << "mean_crude = ";
    if (s.mean_crude)
        std::cout << *s.mean_crude;
    else
        std::cout << "undefined";
    std::cout << "\nsd_crude = " << s.sd_crude << "\n";
    for (int u = 0; u < 2; ++u) {
        std::cout << "mean_crude_u=" << u << " = ";
        if (s.mean_crude_u[u])
            std::cout << *s.mean_crude_u[u];
        else
            std::cout << "undefined";
        std::cout << "\n";
    }
    std::cout << "population_crude = " << fmt(s.population_crude) << "\n";
    std::cout << "population_sace = " << fmt(s.population_sace) << "\n";
    return kExitOk;
}

int cmd_search(const GlobalFlags& flags, const std::string& goal_name, int budget)
{
    using namespace sctd;
    const auto goal = goal_from_name(goal_name);
    if (!goal) throw PopSpecError("unknown search goal: " + goal_name);

    const Population pop = search_example(*goal, flags.seed, budget);
    std::cout << "# goal: " << to_string(*goal) << "\n";
    std::cout << write_popspec(pop);

    const EstimandReport r = estimands_individual(pop);
    std::cout << "# certificate\n";
    std::cout << "# SACE = " << fmt(r.sace) << "\n";
    std::cout << "# crude = " << fmt(r.crude) << "\n";
    for (int u = 0; u < 2; ++u)
        std::cout << "# SACE_u=" << u << " = " << fmt(r.sace_u[u]) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "Exact sufficient-cause engine for truncation by death: risk status "
        "types, principal strata, SACE/crude estimands, and trial simulation"};
    app.require_subcommand(1);
    app.fallthrough();  // allow global flags after the subcommand name

    GlobalFlags flags;
    app.add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    app.add_option("--mode", flags.mode, "Factor alphabet")
        ->check(CLI::IsMember({"monotone", "general"}))
        ->capture_default_str();
    app.add_option("--seed", flags.seed, "Root RNG seed")->capture_default_str();
    app.add_flag("--normalize", flags.normalize,
                 "Rescale population masses to total 1");

    std::string filter_text, pop_path, goal_name, p_treat_text = "1/2", dump_path;
    bool by_u = false, diagnostics = false;
    int draws = 1000, max_weight = 8, n = 1000, reps = 1, budget = 20000;
    std::vector<std::string> corruptions;

    auto* enumerate = app.add_subcommand("enumerate", "Render the risk status types");
    enumerate->add_option("--filter", filter_text, "Predicate over factor literals");

    app.add_subcommand("classify", "Verify the published classification rows");

    auto* estimate =
        app.add_subcommand("estimate", "Compute estimands by both engines");
    estimate->add_option("pop_file", pop_path, "Population file")->required();
    estimate->add_flag("--by-u", by_u, "Include u-level rows");

    auto* verify = app.add_subcommand("verify", "Randomized identity suites");
    verify->add_option("--draws", draws, "Random populations to draw")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--max-weight", max_weight, "Cell weight grid 0..K")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify
        ->add_option("--corrupt-term", corruptions,
                     "name=predicate harness hook replacing a formula term")
        ->group("");  // hidden

    auto* null_check =
        app.add_subcommand("null-check", "Null-SACE conditions and reductions");
    null_check->add_option("pop_file", pop_path, "Population file")->required();

    auto* simulate = app.add_subcommand("simulate", "Finite randomized trials");
    simulate->add_option("pop_file", pop_path, "Population file")->required();
    simulate->add_option("--n", n, "Participants per trial")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--reps", reps, "Independent replications")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--p-treat", p_treat_text, "Allocation probability")
        ->capture_default_str();
    simulate->add_option("--dump-records", dump_path, "Write one trial's records CSV");
    simulate->add_flag("--diagnostics", diagnostics,
                       "Include latent type indices in the records CSV");

    auto* search = app.add_subcommand("search", "Emit a goal-certified population");
    search->add_option("--goal", goal_name, "Search goal")->required();
    search->add_option("--budget", budget, "Attempt budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitInput;
    }

    try {
        if (app.got_subcommand(enumerate)) return cmd_enumerate(flags, filter_text);
        if (app.got_subcommand("classify")) return cmd_classify(flags);
        if (app.got_subcommand(estimate)) return cmd_estimate(flags, pop_path, by_u);
        if (app.got_subcommand(verify))
            return cmd_verify(flags, draws, max_weight, corruptions);
        if (app.got_subcommand(null_check)) return cmd_null_check(flags, pop_path);
        if (app.got_subcommand(simulate))
            return cmd_simulate(flags, pop_path, n, reps, p_treat_text, dump_path,
                                diagnostics);
        if (app.got_subcommand(search)) return cmd_search(flags, goal_name, budget);
    } catch (const sctd::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const sctd::PopSpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const sctd::PopulationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const sctd::SearchExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSearch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
