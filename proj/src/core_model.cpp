#include "sctd/core_model.hpp"

#include <stdexcept>

namespace sctd {

int canonical_index(const SusceptibilityMonotone& s)
{
    return 1 + 128 * s.a1 + 64 * s.a2 + 32 * s.a4 + 16 * s.a6 + 8 * s.b1 +
           4 * s.b2 + 2 * s.b4 + 1 * s.b6;
}

SusceptibilityMonotone susceptibility_from_index(int index)
{
    if (index < 1 || index > kTypeCount)
        throw std::domain_error("risk status type index out of range 1..256: " +
                                std::to_string(index));
    const int n = index - 1;
    return SusceptibilityMonotone{
        .a1 = (n & 128) != 0,
        .a2 = (n & 64) != 0,
        .a4 = (n & 32) != 0,
        .a6 = (n & 16) != 0,
        .b1 = (n & 8) != 0,
        .b2 = (n & 4) != 0,
        .b4 = (n & 2) != 0,
        .b6 = (n & 1) != 0,
    };
}

RiskStatusType type_from_index(int index)
{
    return RiskStatusType{index, susceptibility_from_index(index)};
}

int general_index(const SusceptibilityGeneral& s)
{
    int n = 0;
    for (int k = 0; k < 9; ++k) n = (n << 1) | (s.a[k] ? 1 : 0);
    for (int k = 0; k < 9; ++k) n = (n << 1) | (s.b[k] ? 1 : 0);
    return n + 1;
}

SusceptibilityGeneral general_from_index(int index)
{
    if (index < 1 || index > kGeneralTypeCount)
        throw std::domain_error("general type index out of range 1..262144: " +
                                std::to_string(index));
    const int n = index - 1;
    SusceptibilityGeneral s;
    for (int k = 0; k < 9; ++k) s.a[k] = (n >> (17 - k)) & 1;
    for (int k = 0; k < 9; ++k) s.b[k] = (n >> (8 - k)) & 1;
    return s;
}

SusceptibilityGeneral lift(const SusceptibilityMonotone& m)
{
    SusceptibilityGeneral g;
    g.a[0] = m.a1;
    g.a[1] = m.a2;
    g.a[3] = m.a4;
    g.a[5] = m.a6;
    g.b[0] = m.b1;
    g.b[1] = m.b2;
    g.b[3] = m.b4;
    g.b[5] = m.b6;
    return g;
}

bool survival_monotone(const SusceptibilityMonotone& s, bool u, bool x)
{
    return s.a1 || (s.a2 && x) || (s.a4 && u) || (s.a6 && u && x);
}

OutcomeValue outcome_monotone(const SusceptibilityMonotone& s, bool alive, bool u,
                              bool x)
{
    if (!alive) return std::nullopt;
    return s.b1 || (s.b2 && x) || (s.b4 && u) || (s.b6 && u && x);
}

namespace {

// Component-cause pattern of sufficient cause k = 1..9 at (u, x).
bool cause_completes(int k, bool u, bool x)
{
    switch (k) {
        case 1: return true;
        case 2: return x;
        case 3: return !x;
        case 4: return u;
        case 5: return !u;
        case 6: return u && x;
        case 7: return u && !x;
        case 8: return !u && x;
        case 9: return !u && !x;
    }
    return false;
}

}  // namespace

bool survival_general(const SusceptibilityGeneral& s, bool u, bool x)
{
    for (int k = 1; k <= 9; ++k)
        if (s.a[k - 1] && cause_completes(k, u, x)) return true;
    return false;
}

OutcomeValue outcome_general(const SusceptibilityGeneral& s, bool alive, bool u,
                             bool x)
{
    if (!alive) return std::nullopt;
    for (int k = 1; k <= 9; ++k)
        if (s.b[k - 1] && cause_completes(k, u, x)) return true;
    return false;
}

ResponseProfile response_profile(const SusceptibilityMonotone& susc, bool u)
{
    const bool s1 = survival_monotone(susc, u, true);
    const bool s0 = survival_monotone(susc, u, false);
    return ResponseProfile{s1, s0, outcome_monotone(susc, s1, u, true),
                           outcome_monotone(susc, s0, u, false)};
}

ResponseProfile response_profile(const RiskStatusType& type, bool u)
{
    return response_profile(type.susceptibility, u);
}

ResponseProfile response_profile_general(const SusceptibilityGeneral& susc, bool u)
{
    const bool s1 = survival_general(susc, u, true);
    const bool s0 = survival_general(susc, u, false);
    return ResponseProfile{s1, s0, outcome_general(susc, s1, u, true),
                           outcome_general(susc, s0, u, false)};
}

PrincipalStratum principal_stratum(const ResponseProfile& p)
{
    if (p.s1 && p.s0) return PrincipalStratum::always_survivor;
    if (p.s1 && !p.s0) return PrincipalStratum::protectable;
    if (!p.s1 && p.s0) return PrincipalStratum::harmed;
    return PrincipalStratum::never_survivor;
}

PrincipalStratum principal_stratum(const SusceptibilityMonotone& susc, bool u)
{
    return principal_stratum(response_profile(susc, u));
}

const char* to_string(PrincipalStratum s)
{
    switch (s) {
        case PrincipalStratum::always_survivor: return "always-survivor";
        case PrincipalStratum::protectable: return "protectable";
        case PrincipalStratum::never_survivor: return "never-survivor";
        case PrincipalStratum::harmed: return "harmed";
    }
    return "?";
}

}  // namespace sctd
