#pragma once

/// Polynomial expressions over Z, Q, or a prime field F_p with exponents in
/// a Puiseux monoid, kept in canonical form: nonzero coefficients, strictly
/// descending exponents. Carries the content/primitivity machinery, the
/// Eisenstein criterion, decomposition under the Frobenius map, and the
/// verdict type shared with the irreducibility deciders.

#include "facta/monoid.hpp"
#include "facta/rat.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace facta {

enum class ring_kind { integers, rationals, prime_field };

/// One of Z, Q, F_p. Coefficients of all three are carried as mpq_class;
/// the ring says what values are legal and how arithmetic reduces them
/// (F_p values are canonical residues 0..p-1 with denominator 1).
class coeff_ring {
public:
    static coeff_ring integers() { return coeff_ring(ring_kind::integers, 0); }
    static coeff_ring rationals() { return coeff_ring(ring_kind::rationals, 0); }
    static coeff_ring prime_field(const Int& p);

    ring_kind kind() const { return kind_; }

    /// PrimeField only.
    const Int& prime() const;

    bool is_field() const { return kind_ != ring_kind::integers; }

    /// Bring a raw value into the ring: integers reject denominators,
    /// F_p reduces a/b to the residue a * b^-1 mod p (b must be invertible).
    mpq_class reduce(const mpq_class& c) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;

    /// Multiplicative inverse; fields only, a != 0.
    mpq_class inv(const mpq_class& a) const;

    std::string coeff_str(const mpq_class& c) const;

    /// CLI literal form: "int" | "rat" | "fp:7".
    std::string str() const;

    bool operator==(const coeff_ring& o) const {
        return kind_ == o.kind_ && p_ == o.p_;
    }
    bool operator!=(const coeff_ring& o) const { return !(*this == o); }

private:
    coeff_ring(ring_kind k, Int p) : kind_(k), p_(std::move(p)) {}
    ring_kind kind_;
    Int p_;
};

struct term {
    rat exponent;
    mpq_class coeff;

    bool operator==(const term& o) const {
        return exponent == o.exponent && coeff == o.coeff;
    }
};

class poly_expr {
public:
    /// Canonicalize an arbitrary term list: validates every exponent against
    /// the monoid and every coefficient against the ring, merges duplicate
    /// exponents, drops zeros, sorts descending.
    static poly_expr make(coeff_ring R, puiseux_monoid M, std::vector<term> terms);

    static poly_expr zero(coeff_ring R, puiseux_monoid M);
    static poly_expr constant(coeff_ring R, puiseux_monoid M, const mpq_class& c);
    static poly_expr monomial(coeff_ring R, puiseux_monoid M, const rat& e,
                              const mpq_class& c);

    const coeff_ring& ring() const { return ring_; }
    const puiseux_monoid& monoid() const { return monoid_; }

    /// Canonical form: strictly descending exponents, nonzero coefficients.
    const std::vector<term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
    }

    rat degree() const; // largest exponent; rejects the zero polynomial
    mpq_class leading_coeff() const;

    /// Coefficient of X^0; 0 when no constant term is present.
    mpq_class constant_coeff() const;
    bool has_constant_term() const;

    poly_expr add(const poly_expr& g) const;
    poly_expr sub(const poly_expr& g) const;
    poly_expr mul(const poly_expr& g) const;
    poly_expr neg() const;
    poly_expr scale(const mpq_class& c) const;
    poly_expr pow(unsigned long e) const;

    /// Canonical rendering, e.g. "3X^(5/6)-X^(1/2)+7"; zero renders "0".
    std::string str() const;

    bool operator==(const poly_expr& o) const;
    bool operator!=(const poly_expr& o) const { return !(*this == o); }

private:
    poly_expr(coeff_ring R, puiseux_monoid M, std::vector<term> canonical);

    coeff_ring ring_;
    puiseux_monoid monoid_;
    std::vector<term> terms_;
};

/// gcd of the coefficients, as the canonical nonnegative representative.
/// Defined for nonzero expressions over Z only.
Int content(const poly_expr& f);

/// Over Z: content 1. Over a field: every nonzero expression is primitive.
bool is_primitive(const poly_expr& f);

/// f divided by its content (over Z); f itself over a field.
poly_expr primitive_part(const poly_expr& f);

enum class verdict_kind { irreducible, reducible, unit, zero, inapplicable };
enum class certificate_kind { eisenstein, gauss_pipeline, oracle_exhaustion };

/// Outcome of an irreducibility question, carrying either the certificate
/// that grounds "irreducible" or an explicit factor pair whose product is
/// the input.
class verdict {
public:
    static verdict irreducible(certificate_kind c);
    static verdict irreducible_eisenstein(const Int& p);
    static verdict reducible(poly_expr g, poly_expr h);
    static verdict unit();
    static verdict zero();
    static verdict inapplicable(std::string reason);

    verdict_kind kind() const { return kind_; }
    bool is_irreducible() const { return kind_ == verdict_kind::irreducible; }
    bool is_reducible() const { return kind_ == verdict_kind::reducible; }

    certificate_kind certificate() const;          // irreducible only
    const Int& eisenstein_prime() const;           // eisenstein certificate only
    const std::pair<poly_expr, poly_expr>& witness() const; // reducible only
    const std::string& reason() const { return reason_; }   // inapplicable only

private:
    verdict() = default;
    verdict_kind kind_ = verdict_kind::inapplicable;
    certificate_kind cert_ = certificate_kind::oracle_exhaustion;
    Int prime_;
    std::optional<std::pair<poly_expr, poly_expr>> witness_;
    std::string reason_;
};

/// Result of the Eisenstein test: a prime certificate, or the reason the
/// criterion does not apply. A certificate implies irreducibility in Z[M].
struct eisenstein_outcome {
    bool applicable = false;
    Int prime;
    std::string reason;
};

/// Check conditions at one prime p: p does not divide the leading
/// coefficient, divides every other one, and p^2 does not divide the
/// constant term. Requires f primitive over Z with positive degree and an
/// explicitly present constant term (otherwise: inapplicable).
eisenstein_outcome eisenstein_check(const poly_expr& f, const Int& p);

/// First certifying prime among the primes dividing the constant term,
/// ascending, up to prime_bound.
eisenstein_outcome eisenstein_search(const poly_expr& f, const Int& prime_bound);

/// p-th root under the Frobenius map over F_p: g with g^p = f, which exists
/// iff every exponent of f divided by p stays in the monoid (coefficients
/// are their own p-th roots in a prime field). On failure,
/// blocking_exponent is the first quotient exponent that left the monoid.
struct frobenius_outcome {
    std::optional<poly_expr> root;
    std::optional<rat> blocking_exponent;
};

frobenius_outcome frobenius_root(const poly_expr& f);

} // namespace facta
