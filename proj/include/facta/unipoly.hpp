#pragma once

/// Dense univariate polynomials over Z and F_p with complete, exact
/// factorization routines. These are the ground-truth engines behind the
/// monoid-ring irreducibility oracle: an interpolation (Kronecker) search
/// at small degree, a Hensel-lifting path for larger inputs, exhaustive
/// trial division over F_p at desk scale, and a general F_p factorizer
/// (distinct-degree + equal-degree splitting) used internally.
///
/// Everything here either returns a provably complete factorization or
/// throws oracle_scale_error; no routine ever guesses.

#include "facta/rat.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace facta {

/// Scale limits for the exact oracle. The oracle refuses inputs beyond
/// degree_bound outright. Up to kronecker_cutoff the integer factorizer
/// uses pure interpolation search; between the cutoff and the bound it
/// switches to the Hensel-lifting path.
struct oracle_config {
    long degree_bound = 8;
    long kronecker_cutoff = 8;
    long fp_prime_bound = 13;  // trial-division F_p factorizer: largest p
    long fp_degree_bound = 12; // trial-division F_p factorizer: largest degree
};

/// Integer polynomial, dense: c[i] is the Y^i coefficient. Zero is the
/// empty vector; otherwise c.back() != 0.
struct int_poly {
    std::vector<Int> c;

    static int_poly from_coeffs(std::vector<Int> coeffs); // strips high zeros
    static int_poly zero() { return {}; }
    static int_poly monomial(const Int& coeff, std::size_t e);

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const Int& lead() const;
    Int coeff(std::size_t i) const { return i < c.size() ? c[i] : Int(0); }

    std::string str() const; // human-readable, for diagnostics

    bool operator==(const int_poly& o) const { return c == o.c; }
    bool operator!=(const int_poly& o) const { return c != o.c; }
};

int_poly add(const int_poly& a, const int_poly& b);
int_poly sub(const int_poly& a, const int_poly& b);
int_poly mul(const int_poly& a, const int_poly& b);
int_poly neg(const int_poly& a);
int_poly derivative(const int_poly& a);
Int eval(const int_poly& a, const Int& x);

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
Int content(const int_poly& a);

/// a divided by its signed content: primitive with positive leading
/// coefficient.
int_poly primitive_part(const int_poly& a);

/// Quotient when b divides a exactly over Z; nullopt otherwise. b != 0.
std::optional<int_poly> divide_exact(const int_poly& a, const int_poly& b);

/// Primitive polynomial gcd with positive leading coefficient
/// (primitive-remainder-sequence; content of the inputs is ignored).
int_poly poly_gcd(const int_poly& a, const int_poly& b);

struct int_factor {
    int_poly poly;
    unsigned long multiplicity;
};

/// P = unit_content * prod(poly^multiplicity): unit_content carries the
/// sign and integer content; factors are primitive with positive lead,
/// irreducible over Z, ordered by ascending degree then coefficient order.
struct int_factorization {
    Int unit_content;
    std::vector<int_factor> factors;
};

int_factorization factor_int_univariate(const int_poly& P,
                                        const oracle_config& cfg = {});

/// F_p polynomial, dense residues: c[i] in [0, p). Zero is the empty
/// vector; otherwise c.back() != 0. p must be an odd-or-2 machine prime
/// below 2^31 so products fit in unsigned long long.
struct fp_poly {
    unsigned long p = 2;
    std::vector<unsigned long> c;

    static fp_poly from_coeffs(unsigned long p, std::vector<unsigned long> coeffs);
    static fp_poly zero(unsigned long p) { return {p, {}}; }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    unsigned long lead() const;

    bool operator==(const fp_poly& o) const { return p == o.p && c == o.c; }
    bool operator!=(const fp_poly& o) const { return !(*this == o); }
};

fp_poly add(const fp_poly& a, const fp_poly& b);
fp_poly sub(const fp_poly& a, const fp_poly& b);
fp_poly mul(const fp_poly& a, const fp_poly& b);
fp_poly derivative(const fp_poly& a);
fp_poly monic(const fp_poly& a);

/// (quotient, remainder) with b != 0.
std::pair<fp_poly, fp_poly> divmod(const fp_poly& a, const fp_poly& b);

/// Monic gcd.
fp_poly poly_gcd(const fp_poly& a, const fp_poly& b);

/// base^e mod m, exact exponent arithmetic.
fp_poly powmod(const fp_poly& base, const Int& e, const fp_poly& m);

struct fp_factor {
    fp_poly poly;
    unsigned long multiplicity;
};

/// P = unit * prod(poly^multiplicity) with monic irreducible factors,
/// ordered by ascending degree then coefficient order.
struct fp_factorization {
    unsigned long unit;
    std::vector<fp_factor> factors;
};

/// Exhaustive trial division by every monic polynomial of degree at most
/// deg(P)/2, ascending. Complete by construction; confined to desk scale
/// (cfg.fp_prime_bound, cfg.fp_degree_bound) and refuses anything larger.
fp_factorization factor_fp_univariate(const fp_poly& P,
                                      const oracle_config& cfg = {});

/// General F_p factorizer: squarefree decomposition, distinct-degree
/// splitting, then equal-degree splitting (deterministic attempt sequence).
/// No degree bound; used by the Hensel path and as a differential partner
/// for the trial-division routine.
fp_factorization factor_fp_complete(const fp_poly& P);

} // namespace facta
