#pragma once

/// Ring-theoretic classification of F[M] for a field F: being Euclidean,
/// a PID, a UFD, an HFD, and a Dedekind domain are equivalent, and all of
/// them are equivalent to the exponent monoid being isomorphic to N0. The
/// report carries six booleans that always agree, plus the condition that
/// settled them.

#include "facta/monoid.hpp"

#include <string>

namespace facta {

struct algebra_report {
    bool euclidean = false;
    bool pid = false;
    bool ufd = false;
    bool hfd = false;
    bool dedekind = false;
    bool iso_N0 = false;
    std::string field;      ///< echoed label; the answer is field-independent
    std::string decided_by; ///< the witnessing condition
    std::string note;       ///< caveats, empty when none apply
};

/// Decide all six properties at once via is_iso_to_N0(M). The p-power
/// monoids are not atomic, so none of the properties can hold for them;
/// they get an all-false report with an explanatory note instead of an
/// error.
algebra_report classify_algebra(const puiseux_monoid& M,
                                const std::string& field_label);

} // namespace facta
