#include "sctd/trial_sim.hpp"

#include "sctd/estimand.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sctd {

namespace {

std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform in [0,1) with fully specified bit usage, so results do not depend
// on the standard library's distribution internals.
double uniform01(std::mt19937_64& rng)
{
    return double(rng() >> 11) * 0x1.0p-53;
}

struct Sampler {
    std::vector<double> cumulative;
    const Population& pop;

    explicit Sampler(const Population& p) : pop(p)
    {
        double acc = 0.0;
        cumulative.reserve(p.cells().size());
        for (const auto& [cell, mass] : p.cells()) {
            acc += to_double(mass);
            cumulative.push_back(acc);
        }
        if (!cumulative.empty()) cumulative.back() = 1.0;
    }

    const Cell& draw(std::mt19937_64& rng) const
    {
        const double r = uniform01(rng);
        const auto it =
            std::upper_bound(cumulative.begin(), cumulative.end(), r);
        const std::size_t i =
            std::min<std::size_t>(it - cumulative.begin(), cumulative.size() - 1);
        return pop.cells()[i].first;
    }
};

struct ArmTally {
    long long survivors = 0;
    long long outcomes = 0;
};

std::optional<double> contrast(const ArmTally& treated, const ArmTally& control)
{
    if (treated.survivors == 0 || control.survivors == 0) return std::nullopt;
    return double(treated.outcomes) / double(treated.survivors) -
           double(control.outcomes) / double(control.survivors);
}

}  // namespace

std::vector<TrialRecord> sample_trial(const Population& pop, int n,
                                      const Rational& p_treat, std::uint64_t seed)
{
    if (n < 1) throw std::domain_error("trial size must be >= 1");
    if (p_treat <= 0 || p_treat >= 1)
        throw std::domain_error("treatment allocation must satisfy 0 < p < 1");

    std::mt19937_64 rng(splitmix64(seed));
    const Sampler sampler(pop);
    const double p = to_double(p_treat);

    std::vector<TrialRecord> records;
    records.reserve(n);
    for (int i = 0; i < n; ++i) {
        const Cell& cell = sampler.draw(rng);
        const bool x = uniform01(rng) < p;
        const ResponseProfile profile = pop.profile(cell);
        TrialRecord rec;
        rec.x = x;
        rec.u = cell.u;
        rec.s = x ? profile.s1 : profile.s0;
        rec.y = x ? profile.y1 : profile.y0;
        rec.type_index = cell.type_index;
        records.push_back(rec);
    }
    return records;
}

CrudeEstimate crude_estimator(std::span<const TrialRecord> records)
{
    ArmTally arm[2];
    ArmTally arm_u[2][2];
    for (const auto& r : records) {
        if (!r.s) continue;
        const int x = r.x ? 1 : 0;
        const int u = r.u ? 1 : 0;
        const int y = *r.y ? 1 : 0;
        arm[x].survivors++;
        arm[x].outcomes += y;
        arm_u[x][u].survivors++;
        arm_u[x][u].outcomes += y;
    }
    CrudeEstimate est;
    est.overall = contrast(arm[1], arm[0]);
    for (int u = 0; u < 2; ++u) est.per_u[u] = contrast(arm_u[1][u], arm_u[0][u]);
    return est;
}

SimulationSummary replicate(const Population& pop, int n, int reps, std::uint64_t seed)
{
    if (reps < 1) throw std::domain_error("replication count must be >= 1");

    std::vector<double> crude;
    std::array<std::vector<double>, 2> crude_u;
    for (int rep = 0; rep < reps; ++rep) {
        const auto records =
            sample_trial(pop, n, Rational(1, 2), splitmix64(seed ^ std::uint64_t(rep)));
        const CrudeEstimate est = crude_estimator(records);
        if (est.overall) crude.push_back(*est.overall);
        for (int u = 0; u < 2; ++u)
            if (est.per_u[u]) crude_u[u].push_back(*est.per_u[u]);
    }

    const auto mean = [](const std::vector<double>& v) -> std::optional<double> {
        if (v.empty()) return std::nullopt;
        double sum = 0.0;
        for (double x : v) sum += x;
        return sum / double(v.size());
    };

    SimulationSummary summary;
    summary.n = n;
    summary.reps = reps;
    summary.seed = seed;
    summary.defined_reps = int(crude.size());
    summary.mean_crude = mean(crude);
    for (int u = 0; u < 2; ++u) summary.mean_crude_u[u] = mean(crude_u[u]);
    if (summary.mean_crude && crude.size() > 1) {
        double ss = 0.0;
        for (double x : crude) ss += (x - *summary.mean_crude) * (x - *summary.mean_crude);
        summary.sd_crude = std::sqrt(ss / double(crude.size() - 1));
    }

    const auto report = estimands_individual(pop);
    summary.population_crude = report.crude;
    summary.population_sace = report.sace;
    return summary;
}

std::string records_csv(std::span<const TrialRecord> records, bool diagnostics)
{
    std::string out = diagnostics ? "x,u,s,y,type_index\n" : "x,u,s,y\n";
    for (const auto& r : records) {
        out += r.x ? '1' : '0';
        out += ',';
        out += r.u ? '1' : '0';
        out += ',';
        out += r.s ? '1' : '0';
        out += ',';
        if (r.y) out += *r.y ? '1' : '0';
        if (diagnostics) {
            out += ',';
            out += std::to_string(r.type_index);
        }
        out += '\n';
    }
    return out;
}

}  // namespace sctd
