#include "facta/factorization.hpp"

#include "facta/errors.hpp"

#include <algorithm>

namespace facta {

namespace {

constexpr unsigned long long brute_table_limit = 200'000'000ULL;

// Common setup for everything that works in the scaled integer picture:
// the atoms as machine integers together with the rational that maps a
// scaled value back into the monoid.
struct scaled_view {
    std::vector<unsigned long> atoms; // ascending
    rat back;                         // monoid element = back * scaled value
    rat fwd;                          // scaled value = fwd * monoid element
};

scaled_view make_scaled_view(const puiseux_monoid& M) {
    scaled_view v;
    switch (M.kind()) {
    case monoid_kind::fin_gen: {
        v.fwd = M.normalization().scale;
        v.back = M.normalization().inverse_scale;
        for (const Int& a : M.normalized().minimal_generators()) {
            if (!a.fits_ulong_p())
                throw domain_error("atom too large for exhaustive enumeration");
            v.atoms.push_back(a.get_ui());
        }
        return v;
    }
    case monoid_kind::grid:
        v.fwd = rat(M.grid_denominator());
        v.back = rat(Int(1), M.grid_denominator());
        v.atoms.push_back(1);
        return v;
    case monoid_kind::p_power:
        throw domain_error("factorizations are undefined: the monoid has no atoms");
    }
    throw domain_error("unreachable monoid kind");
}

unsigned long scale_element(const scaled_view& v, const rat& x, const char* what) {
    rat s = v.fwd * x;
    if (!s.is_integer() || !s.num().fits_ulong_p() ||
        s.num().get_ui() > 1'000'000'000UL)
        throw domain_error(std::string(what) + " " + x.str() +
                           " out of range for exhaustive enumeration");
    return s.num().get_ui();
}

void enumerate_rec(const std::vector<unsigned long>& atoms, std::size_t i,
                   unsigned long remaining, std::vector<Int>& counts,
                   const std::vector<rat>& atom_rats,
                   std::vector<factorization>& out) {
    if (i + 1 == atoms.size()) {
        if (remaining % atoms[i] != 0)
            return;
        counts[i] = Int(remaining / atoms[i]);
        factorization z;
        for (std::size_t j = 0; j < counts.size(); ++j)
            if (counts[j] > 0)
                z.parts.emplace_back(atom_rats[j], counts[j]);
        out.push_back(std::move(z));
        counts[i] = 0;
        return;
    }
    for (unsigned long c = 0; c * atoms[i] <= remaining; ++c) {
        counts[i] = Int(c);
        enumerate_rec(atoms, i + 1, remaining - c * atoms[i], counts, atom_rats, out);
    }
    counts[i] = 0;
}

} // namespace

Int factorization::length() const {
    Int l(0);
    for (const auto& [a, m] : parts)
        l += m;
    return l;
}

rat factorization::evaluate() const {
    rat s;
    for (const auto& [a, m] : parts)
        s = s + a * rat(m);
    return s;
}

std::string factorization::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            s += " + ";
        s += parts[i].first.str() + "^" + parts[i].second.get_str();
    }
    return s;
}

std::vector<factorization> factorizations(const puiseux_monoid& M, const rat& x) {
    if (x.is_zero())
        throw domain_error("factorizations: element must be nonzero");
    if (!M.member(x))
        throw domain_error("factorizations: " + x.str() + " is not in the monoid");
    scaled_view v = make_scaled_view(M);
    unsigned long n = scale_element(v, x, "element");
    std::vector<rat> atom_rats = M.atoms();
    std::vector<Int> counts(v.atoms.size(), Int(0));
    std::vector<factorization> out;
    enumerate_rec(v.atoms, 0, n, counts, atom_rats, out);
    return out;
}

std::vector<Int> length_set(const puiseux_monoid& M, const rat& x) {
    std::vector<Int> lengths;
    for (const factorization& z : factorizations(M, x))
        lengths.push_back(z.length());
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    return lengths;
}

bool is_hf(const puiseux_monoid& M) {
    if (!M.is_atomic())
        throw domain_error("is_hf: monoid is not atomic");
    return M.atoms().size() == 1;
}

bool is_ohf(const puiseux_monoid& M) {
    if (!M.is_atomic())
        throw domain_error("is_ohf: monoid is not atomic");
    return M.atoms().size() <= 2;
}

ohf_witness_t ohf_witness(const puiseux_monoid& M) {
    std::vector<rat> atoms = M.atoms();
    if (atoms.size() < 3)
        throw domain_error("ohf_witness: criterion inapplicable with fewer than 3 atoms");
    const rat& a1 = atoms[0];
    const rat& a2 = atoms[1];
    const rat& a3 = atoms[2];

    // Clear all three denominators at once, then balance the two gaps:
    // m(a2' - a1') = n(a3' - a2') with m, n minimal makes
    // m*a1 + n*a3 = (m+n)*a2 an equal-length collision.
    Int d = a1.den() * a2.den() * a3.den();
    Int s1 = (rat(d) * a1).num();
    Int s2 = (rat(d) * a2).num();
    Int s3 = (rat(d) * a3).num();
    Int gap12 = s2 - s1;
    Int gap23 = s3 - s2;
    Int g;
    mpz_gcd(g.get_mpz_t(), gap12.get_mpz_t(), gap23.get_mpz_t());
    Int m = gap23 / g;
    Int n = gap12 / g;

    ohf_witness_t w;
    w.element = a2 * rat(m + n);
    w.z1.parts = {{a1, m}, {a3, n}};
    w.z2.parts = {{a2, m + n}};
    return w;
}

namespace {

// Minimum and maximum factorization lengths for every scaled value up to T;
// 0 marks "not representable" (value 0 itself is skipped).
struct length_range {
    std::vector<unsigned long> min_len, max_len;
};

length_range length_range_table(const std::vector<unsigned long>& atoms,
                                unsigned long T) {
    const unsigned long inf = 0; // sentinel: unreachable
    length_range r;
    r.min_len.assign(T + 1, inf);
    r.max_len.assign(T + 1, inf);
    for (unsigned long t = 1; t <= T; ++t) {
        for (unsigned long a : atoms) {
            if (a > t)
                break;
            bool base = (a == t);
            if (!base && r.min_len[t - a] == inf)
                continue;
            unsigned long lo = base ? 1 : r.min_len[t - a] + 1;
            unsigned long hi = base ? 1 : r.max_len[t - a] + 1;
            if (r.min_len[t] == inf || lo < r.min_len[t])
                r.min_len[t] = lo;
            if (hi > r.max_len[t])
                r.max_len[t] = hi;
        }
    }
    return r;
}

// Number of atom multisets (saturating at 2) summing to each value t with
// exactly l parts, processed atom-major so multisets count once.
std::vector<std::vector<unsigned char>>
multiset_count_table(const std::vector<unsigned long>& atoms, unsigned long T) {
    unsigned long lmax = T / atoms.front();
    unsigned long long cells =
        (static_cast<unsigned long long>(T) + 1) * (lmax + 1);
    if (cells > brute_table_limit)
        throw domain_error("brute check bound too large for exhaustive table");
    std::vector<std::vector<unsigned char>> count(
        T + 1, std::vector<unsigned char>(lmax + 1, 0));
    count[0][0] = 1;
    for (unsigned long a : atoms)
        for (unsigned long t = a; t <= T; ++t)
            for (unsigned long l = 1; l <= lmax; ++l) {
                unsigned int c = count[t][l] + count[t - a][l - 1];
                count[t][l] = static_cast<unsigned char>(c > 2 ? 2 : c);
            }
    return count;
}

} // namespace

std::optional<rat> hf_counterexample(const puiseux_monoid& M, const rat& bound) {
    if (bound.is_zero())
        throw domain_error("brute check: bound must be positive");
    scaled_view v = make_scaled_view(M);
    rat tb = v.fwd * bound;
    Int T_int = tb.num() / tb.den(); // floor
    if (!T_int.fits_ulong_p())
        throw domain_error("brute check bound too large for exhaustive table");
    unsigned long T = T_int.get_ui();
    length_range r = length_range_table(v.atoms, T);
    for (unsigned long t = 1; t <= T; ++t)
        if (r.min_len[t] != 0 && r.min_len[t] != r.max_len[t])
            return v.back * rat(Int(t));
    return std::nullopt;
}

std::optional<rat> ohf_counterexample(const puiseux_monoid& M, const rat& bound) {
    if (bound.is_zero())
        throw domain_error("brute check: bound must be positive");
    scaled_view v = make_scaled_view(M);
    rat tb = v.fwd * bound;
    Int T_int = tb.num() / tb.den();
    if (!T_int.fits_ulong_p())
        throw domain_error("brute check bound too large for exhaustive table");
    unsigned long T = T_int.get_ui();
    if (T == 0)
        return std::nullopt;
    auto count = multiset_count_table(v.atoms, T);
    for (unsigned long t = 1; t <= T; ++t)
        for (unsigned long l = 1; l < count[t].size(); ++l)
            if (count[t][l] >= 2)
                return v.back * rat(Int(t));
    return std::nullopt;
}

bool brute_check_hf(const puiseux_monoid& M, const rat& bound) {
    return !hf_counterexample(M, bound).has_value();
}

bool brute_check_ohf(const puiseux_monoid& M, const rat& bound) {
    return !ohf_counterexample(M, bound).has_value();
}

} // namespace facta
