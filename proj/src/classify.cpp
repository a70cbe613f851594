#include "facta/classify.hpp"

namespace facta {

algebra_report classify_algebra(const puiseux_monoid& M,
                                const std::string& field_label) {
    algebra_report r;
    r.field = field_label;
    if (M.kind() == monoid_kind::p_power) {
        r.decided_by = "exponent monoid not isomorphic to N0";
        r.note = "non-atomic exponent monoid";
        return r;
    }
    bool v = M.is_iso_to_N0();
    r.euclidean = r.pid = r.ufd = r.hfd = r.dedekind = r.iso_N0 = v;
    r.decided_by = v ? "exponent monoid isomorphic to N0"
                     : "exponent monoid not isomorphic to N0";
    return r;
}

} // namespace facta
