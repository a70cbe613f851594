#include "facta/monoid.hpp"

#include "facta/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

namespace facta {

namespace {

// Apery sets are stored densely, one entry per residue class; refuse inputs
// whose least generator would make that table absurd for a desk-scale tool.
constexpr unsigned long apery_table_limit = 2'000'000;
constexpr unsigned long witness_table_limit = 20'000'000;

unsigned long to_index(const Int& n, unsigned long limit, const char* what) {
    if (!n.fits_ulong_p() || n.get_ui() > limit)
        throw domain_error(std::string(what) + " too large for exact table (" +
                           n.get_str() + ")");
    return n.get_ui();
}

} // namespace

numerical_semigroup::numerical_semigroup(std::vector<Int> generators) {
    if (generators.empty())
        throw domain_error("numerical_semigroup: no generators");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());
    if (generators.front() <= 0)
        throw domain_error("numerical_semigroup: generators must be positive");
    Int g(0);
    for (const Int& x : generators)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g != 1)
        throw domain_error("numerical_semigroup: generator gcd is " + g.get_str() +
                           ", not 1");

    // Minimal generators: walking the list ascending, a generator is
    // redundant exactly when it is already a sum of the smaller ones kept so
    // far. A reachability table up to the largest generator decides that.
    const unsigned long top =
        to_index(generators.back(), apery_table_limit, "generator");
    std::vector<char> reach(top + 1, 0);
    reach[0] = 1;
    for (const Int& x : generators) {
        unsigned long v = x.get_ui();
        if (reach[v])
            continue; // sum of smaller minimal generators
        minimal_.push_back(x);
        for (unsigned long t = v; t <= top; ++t)
            if (reach[t - v])
                reach[t] = 1;
    }

    // Apery set with respect to the least generator m: shortest-path values
    // over residues mod m, stepping by each generator.
    const unsigned long m =
        to_index(minimal_.front(), apery_table_limit, "least generator");
    if (m == 1) {
        apery_ = {Int(0)};
        frobenius_ = Int(-1);
        return;
    }
    const Int inf(-1);
    std::vector<Int> dist(m, inf);
    dist[0] = 0;
    using node = std::pair<Int, unsigned long>;
    auto cmp = [](const node& a, const node& b) { return a.first > b.first; };
    std::priority_queue<node, std::vector<node>, decltype(cmp)> pq(cmp);
    pq.push({Int(0), 0});
    while (!pq.empty()) {
        auto [d, r] = pq.top();
        pq.pop();
        if (dist[r] != d)
            continue;
        for (const Int& x : minimal_) {
            Int nd = d + x;
            unsigned long nr =
                mpz_fdiv_ui(nd.get_mpz_t(), static_cast<unsigned long>(m));
            if (dist[nr] == inf || nd < dist[nr]) {
                dist[nr] = nd;
                pq.push({nd, nr});
            }
        }
    }
    apery_ = std::move(dist);
    frobenius_ = *std::max_element(apery_.begin(), apery_.end()) -
                 minimal_.front();
}

bool numerical_semigroup::contains(const Int& n) const {
    if (n < 0)
        return false;
    unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), apery_.size());
    return n >= apery_[r];
}

puiseux_monoid puiseux_monoid::fin_gen(std::vector<rat> generators) {
    if (generators.empty())
        throw domain_error("puiseux_monoid: no generators");
    for (const rat& q : generators)
        if (q.is_zero())
            throw domain_error("puiseux_monoid: generators must be positive");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());

    auto d = std::make_shared<data>();
    d->kind = monoid_kind::fin_gen;
    d->gens = std::move(generators);
    d->lcm_den = lcm_of_denominators(d->gens);

    // Clear denominators, then divide by the common gcd: the image
    // <L*q1/g, ..., L*qk/g> is a numerical semigroup isomorphic to M via
    // multiplication by s = L/g.
    std::vector<Int> scaled;
    Int g(0);
    for (const rat& q : d->gens) {
        Int v = q.num() * (d->lcm_den / q.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        scaled.push_back(std::move(v));
    }
    for (Int& v : scaled)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    d->norm.scale = rat(d->lcm_den, g);
    d->norm.inverse_scale = rat(g, d->lcm_den);
    d->semigroup.emplace(std::move(scaled));
    return puiseux_monoid(std::move(d));
}

puiseux_monoid puiseux_monoid::grid(const Int& L) {
    if (L <= 0)
        throw domain_error("puiseux_monoid: grid denominator must be positive");
    auto d = std::make_shared<data>();
    d->kind = monoid_kind::grid;
    d->grid_den = L;
    d->lcm_den = L;
    return puiseux_monoid(std::move(d));
}

puiseux_monoid puiseux_monoid::p_power(const Int& p) {
    if (!is_prime(p))
        throw domain_error("puiseux_monoid: " + p.get_str() + " is not prime");
    auto d = std::make_shared<data>();
    d->kind = monoid_kind::p_power;
    d->ppow_prime = p;
    return puiseux_monoid(std::move(d));
}

const std::vector<rat>& puiseux_monoid::generators() const {
    if (d_->kind != monoid_kind::fin_gen)
        throw domain_error("generators: monoid is not finitely presented");
    return d_->gens;
}

const Int& puiseux_monoid::grid_denominator() const {
    if (d_->kind != monoid_kind::grid)
        throw domain_error("grid_denominator: monoid is not a grid");
    return d_->grid_den;
}

const Int& puiseux_monoid::prime() const {
    if (d_->kind != monoid_kind::p_power)
        throw domain_error("prime: monoid is not a p-power monoid");
    return d_->ppow_prime;
}

bool puiseux_monoid::member(const rat& q) const {
    switch (d_->kind) {
    case monoid_kind::fin_gen: {
        if (q.is_zero())
            return true;
        rat n = d_->norm.scale * q;
        return n.is_integer() && d_->semigroup->contains(n.num());
    }
    case monoid_kind::grid:
        return (rat(d_->grid_den) * q).is_integer();
    case monoid_kind::p_power:
        return is_power_of(q.den(), d_->ppow_prime);
    }
    return false; // unreachable
}

std::optional<std::vector<Int>>
puiseux_monoid::member_with_witness(const rat& q) const {
    if (d_->kind != monoid_kind::fin_gen)
        throw domain_error("member_with_witness: witness requires explicit generators");
    std::vector<Int> counts(d_->gens.size(), Int(0));
    if (q.is_zero())
        return counts;
    if (!member(q))
        return std::nullopt;

    // Reconstruct one representation in the scaled integer picture: a
    // first-reachable table over 0..n remembering which generator stepped in.
    Int target = (d_->norm.scale * q).num();
    unsigned long n = to_index(target, witness_table_limit, "witness target");
    std::vector<unsigned long> step(n + 1, 0);
    std::vector<char> seen(n + 1, 0);
    seen[0] = 1;
    std::vector<unsigned long> strides;
    for (const rat& g : d_->gens)
        strides.push_back(
            to_index((d_->norm.scale * g).num(), witness_table_limit, "generator"));
    for (std::size_t i = 0; i < strides.size(); ++i)
        for (unsigned long t = strides[i]; t <= n; ++t)
            if (!seen[t] && seen[t - strides[i]]) {
                seen[t] = 1;
                step[t] = i;
            }
    if (!seen[n])
        return std::nullopt; // cannot happen when member() holds
    for (unsigned long t = n; t > 0; t -= strides[step[t]])
        counts[step[t]] += 1;
    return counts;
}

std::vector<rat> puiseux_monoid::atoms() const {
    switch (d_->kind) {
    case monoid_kind::fin_gen: {
        std::vector<rat> out;
        for (const Int& m : d_->semigroup->minimal_generators())
            out.push_back(rat(m) * d_->norm.inverse_scale);
        return out;
    }
    case monoid_kind::grid:
        return {rat(Int(1), d_->grid_den)};
    case monoid_kind::p_power:
        return {}; // every 1/p^n = 1/p^(n+1) + ... splits; no atoms exist
    }
    return {};
}

bool puiseux_monoid::is_iso_to_N0() const {
    switch (d_->kind) {
    case monoid_kind::fin_gen:
        return d_->semigroup->minimal_generators().size() == 1 &&
               d_->semigroup->minimal_generators().front() == 1;
    case monoid_kind::grid:
        return true;
    case monoid_kind::p_power:
        return false;
    }
    return false;
}

const numerical_semigroup& puiseux_monoid::normalized() const {
    if (d_->kind != monoid_kind::fin_gen)
        throw domain_error("normalized: monoid is not finitely presented");
    return *d_->semigroup;
}

const normalization_map& puiseux_monoid::normalization() const {
    if (d_->kind != monoid_kind::fin_gen)
        throw domain_error("normalization: monoid is not finitely presented");
    return d_->norm;
}

const Int& puiseux_monoid::embedding_lcm() const {
    if (d_->kind == monoid_kind::p_power)
        throw domain_error("embedding_lcm: p-power monoid lies in no finite grid");
    return d_->lcm_den;
}

std::string puiseux_monoid::str() const {
    switch (d_->kind) {
    case monoid_kind::fin_gen: {
        std::string s = "gen:";
        for (std::size_t i = 0; i < d_->gens.size(); ++i) {
            if (i)
                s += ',';
            s += d_->gens[i].str();
        }
        return s;
    }
    case monoid_kind::grid:
        return "grid:" + d_->grid_den.get_str();
    case monoid_kind::p_power:
        return "ppow:" + d_->ppow_prime.get_str();
    }
    return {};
}

bool puiseux_monoid::operator==(const puiseux_monoid& o) const {
    if (d_->kind != o.d_->kind)
        return false;
    switch (d_->kind) {
    case monoid_kind::fin_gen:
        return d_->gens == o.d_->gens;
    case monoid_kind::grid:
        return d_->grid_den == o.d_->grid_den;
    case monoid_kind::p_power:
        return d_->ppow_prime == o.d_->ppow_prime;
    }
    return false;
}

} // namespace facta
