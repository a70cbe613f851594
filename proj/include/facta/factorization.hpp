#pragma once

/// Factorizations of monoid elements into atoms: the set Z(x), its length
/// set, the half-factorial / other-half-factorial classification (decided by
/// atom count), and exhaustive bounded checks that serve as independent
/// oracles for those decisions.

#include "facta/monoid.hpp"
#include "facta/rat.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace facta {

/// One way of writing an element as a sum of atoms: atoms ascending with
/// positive multiplicities. The length |z| is the total atom count.
struct factorization {
    std::vector<std::pair<rat, Int>> parts;

    Int length() const;
    rat evaluate() const;

    /// "a1^m1 + a2^m2 + ..." with atoms ascending.
    std::string str() const;

    bool operator==(const factorization& o) const { return parts == o.parts; }
    bool operator!=(const factorization& o) const { return parts != o.parts; }
};

/// Element with two distinct factorizations of the same length — the exact
/// shape that witnesses failure of other-half-factoriality.
struct ohf_witness_t {
    rat element;
    factorization z1;
    factorization z2;
};

/// Complete Z_M(x) for nonzero x in a finitely generated or grid monoid,
/// ordered by ascending lexicographic multiplicity vectors over the atoms.
std::vector<factorization> factorizations(const puiseux_monoid& M, const rat& x);

/// Sorted distinct lengths {|z| : z in Z_M(x)}.
std::vector<Int> length_set(const puiseux_monoid& M, const rat& x);

/// Half-factorial: every element's factorizations share one length.
/// Equivalent to M having a single atom; decided that way.
bool is_hf(const puiseux_monoid& M);

/// Other-half-factorial: equal-length factorizations of an element coincide.
/// Equivalent to M having at most two atoms; decided that way.
bool is_ohf(const puiseux_monoid& M);

/// For a monoid with >= 3 atoms: the canonical equal-length pair built from
/// the three smallest atoms a1 < a2 < a3 — scale by d = d(a1)d(a2)d(a3),
/// take minimal m, n with m(a2'-a1') = n(a3'-a2'), and return
/// (m+n)a2 = m*a1 + n*a3 against (m+n)*a2.
ohf_witness_t ohf_witness(const puiseux_monoid& M);

/// Exhaustive check of the HF property on all members in (0, bound].
bool brute_check_hf(const puiseux_monoid& M, const rat& bound);

/// Exhaustive check of the OHF property on all members in (0, bound].
bool brute_check_ohf(const puiseux_monoid& M, const rat& bound);

/// Smallest member of (0, bound] with two factorization lengths, if any.
std::optional<rat> hf_counterexample(const puiseux_monoid& M, const rat& bound);

/// Smallest member of (0, bound] carrying two distinct equal-length
/// factorizations, if any.
std::optional<rat> ohf_counterexample(const puiseux_monoid& M, const rat& bound);

} // namespace facta
