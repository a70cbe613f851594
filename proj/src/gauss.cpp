#include "facta/errors.hpp"
#include "facta/oracle.hpp"

namespace facta {

verdict gauss_irreducible_over_int(const poly_expr& f, const oracle_config& cfg) {
    if (f.ring().kind() != ring_kind::integers)
        throw domain_error(
            "gauss_irreducible_over_int: coefficients must be integers");
    if (f.is_zero())
        return verdict::zero();
    if (f.is_constant()) {
        mpq_class c = f.leading_coeff();
        if (c == 1 || c == -1)
            return verdict::unit();
        return verdict::inapplicable("constant polynomial expression");
    }
    verdict v = decide_irreducible_in_zm(f, cfg);
    if (v.is_irreducible())
        return verdict::irreducible(certificate_kind::gauss_pipeline);
    return v;
}

} // namespace facta
