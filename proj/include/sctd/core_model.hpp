#pragma once

#include <array>
#include <optional>

namespace sctd {

// Y is a tri-state: defined 0/1 when the individual survives to assessment,
// undefined (nullopt) otherwise.
using OutcomeValue = std::optional<bool>;

// Susceptibility profile under positive monotonicity: four survival-stage
// background factors (a1, a2, a4, a6) and four outcome-stage factors
// (b1, b2, b4, b6). All 256 combinations are valid.
struct SusceptibilityMonotone {
    bool a1 = false, a2 = false, a4 = false, a6 = false;
    bool b1 = false, b2 = false, b4 = false, b6 = false;

    friend bool operator==(const SusceptibilityMonotone&,
                           const SusceptibilityMonotone&) = default;
};

// Full 18-factor profile: a[k-1] carries susceptibility to survival cause k
// (k = 1..9), b[k-1] the outcome-stage analogue.
struct SusceptibilityGeneral {
    std::array<bool, 9> a{};
    std::array<bool, 9> b{};

    friend bool operator==(const SusceptibilityGeneral&,
                           const SusceptibilityGeneral&) = default;
};

inline constexpr int kTypeCount = 256;
inline constexpr int kGeneralTypeCount = 1 << 18;

// Canonical 1..256 index with bit weights
// a1=128, a2=64, a4=32, a6=16, b1=8, b2=4, b4=2, b6=1.
int canonical_index(const SusceptibilityMonotone& susc);

// Inverse of canonical_index; throws std::domain_error outside 1..256.
SusceptibilityMonotone susceptibility_from_index(int index);

struct RiskStatusType {
    int index = 1;
    SusceptibilityMonotone susceptibility;
};

RiskStatusType type_from_index(int index);

// 1..262144 index for the general model, same big-endian convention over
// a1..a9 then b1..b9.
int general_index(const SusceptibilityGeneral& susc);
SusceptibilityGeneral general_from_index(int index);

// Embed a monotone profile into the general model (all other factors absent).
SusceptibilityGeneral lift(const SusceptibilityMonotone& susc);

// S = a1 v (a2 ^ x) v (a4 ^ u) v (a6 ^ u ^ x)
bool survival_monotone(const SusceptibilityMonotone& susc, bool u, bool x);

// When s = 1: Y = b1 v (b2 ^ x) v (b4 ^ u) v (b6 ^ u ^ x); undefined when s = 0.
OutcomeValue outcome_monotone(const SusceptibilityMonotone& susc, bool s, bool u,
                              bool x);

// Nine-term disjunctions over (x, u) and their complements.
bool survival_general(const SusceptibilityGeneral& susc, bool u, bool x);
OutcomeValue outcome_general(const SusceptibilityGeneral& susc, bool s, bool u,
                             bool x);

struct ResponseProfile {
    bool s1 = false, s0 = false;
    OutcomeValue y1, y0;

    friend bool operator==(const ResponseProfile&, const ResponseProfile&) = default;
};

ResponseProfile response_profile(const SusceptibilityMonotone& susc, bool u);
ResponseProfile response_profile(const RiskStatusType& type, bool u);
ResponseProfile response_profile_general(const SusceptibilityGeneral& susc, bool u);

enum class PrincipalStratum { always_survivor, protectable, never_survivor, harmed };

PrincipalStratum principal_stratum(const ResponseProfile& profile);
PrincipalStratum principal_stratum(const SusceptibilityMonotone& susc, bool u);

const char* to_string(PrincipalStratum stratum);

}  // namespace sctd
