#include "sctd/estimand.hpp"

#include <stdexcept>

namespace sctd {

Rational event_prob(const Predicate& p, const Population& pop)
{
    Rational total = 0;
    for (const auto& [cell, mass] : pop.cells())
        if (p.eval(pop.view(cell))) total += mass;
    return total;
}

namespace {

std::optional<Rational> ratio(const Rational& num, const Rational& den)
{
    if (den == 0) return std::nullopt;
    return Rational(num / den);
}

std::optional<Rational> diff(const std::optional<Rational>& a,
                             const std::optional<Rational>& b)
{
    if (!a || !b) return std::nullopt;
    return Rational(*a - *b);
}

}  // namespace

EstimandReport estimands_individual(const Population& pop)
{
    Rational surv1 = 0, surv0 = 0;                   // E[S|X=x] before conditioning
    Rational survout1 = 0, survout0 = 0;             // mass with S=1 and Y=1 per arm
    std::array<Rational, 2> surv1_u{}, surv0_u{};    // per-u survivor masses
    std::array<Rational, 2> survout1_u{}, survout0_u{};
    Rational as_mass = 0, as_y1 = 0, as_y0 = 0;
    std::array<Rational, 2> as_mass_u{}, as_y1_u{}, as_y0_u{};

    for (const auto& [cell, mass] : pop.cells()) {
        const ResponseProfile p = pop.profile(cell);
        const int u = cell.u ? 1 : 0;
        if (p.s1) {
            surv1 += mass;
            surv1_u[u] += mass;
            if (*p.y1) {
                survout1 += mass;
                survout1_u[u] += mass;
            }
        }
        if (p.s0) {
            surv0 += mass;
            surv0_u[u] += mass;
            if (*p.y0) {
                survout0 += mass;
                survout0_u[u] += mass;
            }
        }
        if (p.s1 && p.s0) {
            as_mass += mass;
            as_mass_u[u] += mass;
            if (*p.y1) {
                as_y1 += mass;
                as_y1_u[u] += mass;
            }
            if (*p.y0) {
                as_y0 += mass;
                as_y0_u[u] += mass;
            }
        }
    }

    EstimandReport r;
    r.engine = EstimandReport::Engine::individual;
    r.e_s_x1 = surv1;
    r.e_s_x0 = surv0;
    r.survival_contrast = surv1 - surv0;
    r.pr_always_survivor = as_mass;
    r.e_y1_as = ratio(as_y1, as_mass);
    r.e_y0_as = ratio(as_y0, as_mass);
    r.sace = ratio(as_y1 - as_y0, as_mass);
    for (int u = 0; u < 2; ++u)
        r.sace_u[u] = ratio(as_y1_u[u] - as_y0_u[u], as_mass_u[u]);
    r.e_y_s1_x1 = ratio(survout1, surv1);
    r.e_y_s1_x0 = ratio(survout0, surv0);
    r.crude = diff(r.e_y_s1_x1, r.e_y_s1_x0);
    for (int u = 0; u < 2; ++u)
        r.crude_u[u] =
            diff(ratio(survout1_u[u], surv1_u[u]), ratio(survout0_u[u], surv0_u[u]));
    return r;
}

const FormulaTable& FormulaTable::standard()
{
    static const FormulaTable table;
    return table;
}

void FormulaTable::override_term(const std::string& name,
                                 const std::string& predicate_text)
{
    const std::pair<const char*, std::string*> terms[] = {
        {"surv_x1_u0", &surv_x1_u0},       {"surv_x1_u1", &surv_x1_u1},
        {"surv_x0_u0", &surv_x0_u0},       {"surv_x0_u1", &surv_x0_u1},
        {"as_y1_u0", &as_y1_u0},           {"as_y1_u1", &as_y1_u1},
        {"as_y0_u0", &as_y0_u0},           {"as_y0_u1", &as_y0_u1},
        {"survout_x1_u0", &survout_x1_u0}, {"survout_x1_u1", &survout_x1_u1},
        {"survout_x0_u0", &survout_x0_u0}, {"survout_x0_u1", &survout_x0_u1},
    };
    for (auto& [key, slot] : terms) {
        if (name == key) {
            *slot = predicate_text;
            return;
        }
    }
    throw std::invalid_argument("unknown formula term: " + name);
}

EstimandReport estimands_formula(const Population& pop, const FormulaTable& table)
{
    if (pop.mode() != Mode::monotone)
        throw UnsupportedModeError(
            "formula estimands are derived under the monotone model");

    const auto P = [&pop](const std::string& text) {
        return event_prob(Predicate::parse(text), pop);
    };

    const Rational surv_x1_u0 = P(table.surv_x1_u0);
    const Rational surv_x1_u1 = P(table.surv_x1_u1);
    const Rational surv_x0_u0 = P(table.surv_x0_u0);
    const Rational surv_x0_u1 = P(table.surv_x0_u1);
    const Rational as_y1_u0 = P(table.as_y1_u0);
    const Rational as_y1_u1 = P(table.as_y1_u1);
    const Rational as_y0_u0 = P(table.as_y0_u0);
    const Rational as_y0_u1 = P(table.as_y0_u1);
    const Rational survout_x1_u0 = P(table.survout_x1_u0);
    const Rational survout_x1_u1 = P(table.survout_x1_u1);
    const Rational survout_x0_u0 = P(table.survout_x0_u0);
    const Rational survout_x0_u1 = P(table.survout_x0_u1);

    // Under monotonicity the X=0 survivors are the always-survivors.
    const Rational as_mass = surv_x0_u0 + surv_x0_u1;

    EstimandReport r;
    r.engine = EstimandReport::Engine::formula;
    r.e_s_x1 = surv_x1_u0 + surv_x1_u1;
    r.e_s_x0 = surv_x0_u0 + surv_x0_u1;
    r.survival_contrast =
        (surv_x1_u0 - surv_x0_u0) + (surv_x1_u1 - surv_x0_u1);
    r.pr_always_survivor = as_mass;
    r.e_y1_as = ratio(as_y1_u0 + as_y1_u1, as_mass);
    r.e_y0_as = ratio(as_y0_u0 + as_y0_u1, as_mass);
    r.sace = ratio((as_y1_u0 + as_y1_u1) - (as_y0_u0 + as_y0_u1), as_mass);
    r.sace_u[1] = ratio(as_y1_u1 - as_y0_u1, surv_x0_u1);
    r.sace_u[0] = ratio(as_y1_u0 - as_y0_u0, surv_x0_u0);
    r.e_y_s1_x1 = ratio(survout_x1_u0 + survout_x1_u1, r.e_s_x1);
    r.e_y_s1_x0 = ratio(survout_x0_u0 + survout_x0_u1, r.e_s_x0);
    r.crude = diff(r.e_y_s1_x1, r.e_y_s1_x0);
    r.crude_u[1] =
        diff(ratio(survout_x1_u1, surv_x1_u1), ratio(survout_x0_u1, surv_x0_u1));
    r.crude_u[0] =
        diff(ratio(survout_x1_u0, surv_x1_u0), ratio(survout_x0_u0, surv_x0_u0));
    return r;
}

bool CrossCheckRecord::all_equal() const
{
    for (const auto& f : fields)
        if (!f.equal) return false;
    return true;
}

namespace {

void check_field(CrossCheckRecord& rec, const std::string& name, const Rational& a,
                 const Rational& b)
{
    rec.fields.push_back({name, a == b, to_string(a), to_string(b)});
}

void check_field(CrossCheckRecord& rec, const std::string& name,
                 const std::optional<Rational>& a, const std::optional<Rational>& b)
{
    rec.fields.push_back({name, a == b, to_string(a), to_string(b)});
}

}  // namespace

CrossCheckRecord cross_check(const Population& pop, const FormulaTable& table)
{
    const EstimandReport lhs = estimands_individual(pop);
    const EstimandReport rhs = estimands_formula(pop, table);

    CrossCheckRecord rec;
    check_field(rec, "E[S|X=1]", lhs.e_s_x1, rhs.e_s_x1);
    check_field(rec, "E[S|X=0]", lhs.e_s_x0, rhs.e_s_x0);
    check_field(rec, "E[S|X=1]-E[S|X=0]", lhs.survival_contrast, rhs.survival_contrast);
    check_field(rec, "Pr(S1=1,S0=1)", lhs.pr_always_survivor, rhs.pr_always_survivor);
    check_field(rec, "E[Y1|AS]", lhs.e_y1_as, rhs.e_y1_as);
    check_field(rec, "E[Y0|AS]", lhs.e_y0_as, rhs.e_y0_as);
    check_field(rec, "SACE", lhs.sace, rhs.sace);
    check_field(rec, "SACE_u=1", lhs.sace_u[1], rhs.sace_u[1]);
    check_field(rec, "SACE_u=0", lhs.sace_u[0], rhs.sace_u[0]);
    check_field(rec, "E[Y|S=1,X=1]", lhs.e_y_s1_x1, rhs.e_y_s1_x1);
    check_field(rec, "E[Y|S=1,X=0]", lhs.e_y_s1_x0, rhs.e_y_s1_x0);
    check_field(rec, "crude", lhs.crude, rhs.crude);
    check_field(rec, "crude_u=1", lhs.crude_u[1], rhs.crude_u[1]);
    check_field(rec, "crude_u=0", lhs.crude_u[0], rhs.crude_u[0]);
    return rec;
}

bool sace_decomposition_check(const Population& pop)
{
    Rational as_mass = 0;
    std::array<Rational, 2> as_mass_u{}, as_diff_u{};
    for (const auto& [cell, mass] : pop.cells()) {
        const ResponseProfile p = pop.profile(cell);
        if (!(p.s1 && p.s0)) continue;
        const int u = cell.u ? 1 : 0;
        as_mass += mass;
        as_mass_u[u] += mass;
        as_diff_u[u] += mass * Rational(int(*p.y1) - int(*p.y0));
    }
    if (as_mass == 0)
        throw UndefinedConditionError(
            "SACE decomposition requires a nonempty always-survivor stratum");

    const auto report = estimands_individual(pop);
    Rational weighted = 0;
    for (int u = 0; u < 2; ++u) {
        if (as_mass_u[u] == 0) continue;  // empty stratum carries weight 0
        const Rational sace_u = as_diff_u[u] / as_mass_u[u];
        weighted += sace_u * (as_mass_u[u] / as_mass);
    }
    return report.sace.has_value() && *report.sace == weighted;
}

NullConditionReport null_conditions(const Population& pop)
{
    static const Predicate c1 = Predicate::parse(kNullConditionU1);
    static const Predicate c0 = Predicate::parse(kNullConditionU0);

    NullConditionReport rep;
    rep.pr_c1 = event_prob(c1, pop);
    rep.pr_c0 = event_prob(c0, pop);
    rep.sace = estimands_individual(pop).sace;
    if (!rep.sace)
        rep.consistent = true;  // vacuous: no always-survivors at all
    else
        rep.consistent = (*rep.sace == 0) == (rep.pr_c1 == 0 && rep.pr_c0 == 0);
    return rep;
}

bool crude_reduction_check(const Population& pop, bool u)
{
    static const Predicate gate1 = Predicate::parse(kReductionGateU1);
    static const Predicate gate0 = Predicate::parse(kReductionGateU0);
    const Rational gate = event_prob(u ? gate1 : gate0, pop);
    if (gate != 0)
        throw ReductionNotApplicable(std::string("reduction gate for u=") +
                                     (u ? "1" : "0") + " does not hold (Pr = " +
                                     to_string(gate) + ")");

    // Conditioning events for the u-level crude: survivors per arm.
    const char* surv_arm1 = u ? "(A1|A2|A4|A6) & U" : "(A1|A2) & !U";
    const char* surv_arm0 = u ? "(A1|A4) & U" : "A1 & !U";
    const char* reduced_event = u ? "(B1|B4)" : "B1";

    const Rational p_arm1 = event_prob(Predicate::parse(surv_arm1), pop);
    const Rational p_arm0 = event_prob(Predicate::parse(surv_arm0), pop);
    if (p_arm1 == 0 || p_arm0 == 0)
        throw ReductionNotApplicable("a survivor arm is empty at this level of u");

    const auto joint = [&pop](const std::string& a, const std::string& b) {
        return event_prob(Predicate::parse("(" + a + ") & (" + b + ")"), pop);
    };
    const Rational reduced = joint(reduced_event, surv_arm1) / p_arm1 -
                             joint(reduced_event, surv_arm0) / p_arm0;

    const auto crude_u = estimands_individual(pop).crude_u[u ? 1 : 0];
    return crude_u.has_value() && *crude_u == reduced;
}

}  // namespace sctd
