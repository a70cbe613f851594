#pragma once

/// Puiseux monoids (additive submonoids of the nonnegative rationals) in the
/// three shapes the library computes with: finitely generated, integer grids
/// <1/L>, and the p-power-denominator family. Finitely generated monoids are
/// normalized to numerical semigroups on construction, which turns membership
/// and atom questions into Apery-set lookups.

#include "facta/rat.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace facta {

/// Submonoid of N0 with finite complement, held together with the cached
/// answers every query needs: the Apery set of the least generator, the
/// Frobenius number, and the minimal generating set.
class numerical_semigroup {
public:
    /// Generators must be positive with overall gcd 1 (so the complement in
    /// N0 is finite). Duplicates are tolerated and removed.
    explicit numerical_semigroup(std::vector<Int> generators);

    const std::vector<Int>& minimal_generators() const { return minimal_; }

    /// Entry r is the least member congruent to r mod the least generator.
    const std::vector<Int>& apery_set() const { return apery_; }

    /// Largest integer not in the semigroup; -1 when the semigroup is N0.
    const Int& frobenius_number() const { return frobenius_; }

    Int least_generator() const { return minimal_.front(); }

    /// O(1) membership: n is a member iff n >= apery_set[n mod least].
    bool contains(const Int& n) const;

private:
    std::vector<Int> minimal_;
    std::vector<Int> apery_;
    Int frobenius_;
};

enum class monoid_kind { fin_gen, grid, p_power };

/// Scaling isomorphism between a finitely generated Puiseux monoid and its
/// numerical semigroup: semigroup member = scale * monoid element.
struct normalization_map {
    rat scale;
    rat inverse_scale;
};

class puiseux_monoid {
public:
    /// <q1,...,qk>: all generators positive; sorted ascending, deduplicated.
    static puiseux_monoid fin_gen(std::vector<rat> generators);

    /// <1/L> = (1/L)N0.
    static puiseux_monoid grid(const Int& L);

    /// {q >= 0 : d(q) is a power of p}; p must be prime.
    static puiseux_monoid p_power(const Int& p);

    monoid_kind kind() const { return d_->kind; }

    /// FinGen only: the canonical generator list.
    const std::vector<rat>& generators() const;

    /// Grid only.
    const Int& grid_denominator() const;

    /// PPow only.
    const Int& prime() const;

    bool member(const rat& q) const;

    /// FinGen only: multiplicities over generators() summing to q, when
    /// q is a member. Membership itself is cheaper via member().
    std::optional<std::vector<Int>> member_with_witness(const rat& q) const;

    /// FinGen: generators surviving minimality in the normalized semigroup,
    /// mapped back. Grid(L): {1/L}. PPow: empty (antimatter).
    std::vector<rat> atoms() const;

    /// FinGen and Grid are atomic (finitely generated); PPow is not.
    bool is_atomic() const { return d_->kind != monoid_kind::p_power; }

    /// True iff the monoid is a free monoid on one generator. PPow: false.
    bool is_iso_to_N0() const;

    /// FinGen only: the normalized semigroup and the scaling map.
    const numerical_semigroup& normalized() const;
    const normalization_map& normalization() const;

    /// L with M contained in (1/L)N0: lcm of generator denominators for
    /// FinGen, L for Grid. PPow has no finite grid and is rejected.
    const Int& embedding_lcm() const;

    /// CLI literal form: "gen:1/2,2/3", "grid:6", "ppow:2".
    std::string str() const;

    bool operator==(const puiseux_monoid& o) const;
    bool operator!=(const puiseux_monoid& o) const { return !(*this == o); }

private:
    struct data {
        monoid_kind kind;
        std::vector<rat> gens;
        Int grid_den;
        Int ppow_prime;
        Int lcm_den;
        normalization_map norm;
        std::optional<numerical_semigroup> semigroup;
    };

    explicit puiseux_monoid(std::shared_ptr<const data> d) : d_(std::move(d)) {}

    std::shared_ptr<const data> d_;
};

} // namespace facta
