#pragma once

/// Independent irreducibility deciders for monoid-ring elements: the grid
/// embedding into a univariate ring, complete factorization there, and a
/// factor-partition enumeration that maps univariate splits back into the
/// exponent monoid. Everything is exact; inputs beyond the configured
/// scale raise oracle_scale_error instead of ever guessing.

#include "facta/poly.hpp"
#include "facta/unipoly.hpp"

namespace facta {

/// Univariate image of a polynomial expression under X^q -> Y^(L*q).
/// Over Z and Q the image is an integer polynomial together with a positive
/// denominator clearing the coefficients (the image of f is num/den); over
/// F_p it is the fp_poly and den stays 1.
struct grid_image {
    Int L;
    coeff_ring ring;
    int_poly num;
    Int den;
    fp_poly fpimg;
};

/// X^q -> Y^(L*q); L must clear every exponent denominator of nonzero f.
grid_image embed(const poly_expr& f, const Int& L);

/// Map a univariate image back onto M. Every exponent i/L carrying a
/// nonzero coefficient must be a member of M.
poly_expr unembed(const grid_image& img, const puiseux_monoid& M);

/// Irreducibility of nonconstant f in F[M] with F = Q or F_p and M
/// finitely generated or a grid: factor the grid image completely, then
/// search every two-block partition of the univariate factor multiset
/// (including all splits of the Y-power multiplicity) for one whose blocks
/// are both nonconstant with all exponents back inside M. Complete because
/// the univariate image ring is a unique factorization domain.
verdict decide_irreducible_in_fm(const poly_expr& f, const oracle_config& cfg = {});

/// Irreducibility of nonconstant f in Z[M], decided as the conjunction
/// "primitive and irreducible in Q[M]", with rational witnesses cleared
/// back to integer factor pairs.
verdict decide_irreducible_in_zm(const poly_expr& f, const oracle_config& cfg = {});

/// Second, fully independent F_p decider used for differential testing:
/// trial-divide the grid image by every monic candidate with support in
/// M \cap [0, deg(f)/2] and coefficients in F_p. Any factor pair has a
/// member of degree at most deg(f)/2, so the half-degree support set is
/// enough for completeness.
verdict brute_force_irreducible_fp(const poly_expr& f, const oracle_config& cfg = {});

/// Irreducibility in Z[M] through the content/primitivity pipeline:
/// nonconstant f is reducible via its content split when imprimitive, and
/// otherwise shares its verdict with the Q[M] decision — "irreducible"
/// carries the gauss_pipeline certificate. Constants: +-1 -> unit,
/// 0 -> zero, anything else -> inapplicable.
verdict gauss_irreducible_over_int(const poly_expr& f, const oracle_config& cfg = {});

} // namespace facta
