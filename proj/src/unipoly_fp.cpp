#include "facta/unipoly.hpp"

#include "facta/errors.hpp"

#include <algorithm>
#include <random>

namespace facta {

namespace {

using u64 = unsigned long long;

unsigned long mod_inv(unsigned long a, unsigned long p) {
    // extended Euclid on machine words; p prime, a != 0 mod p
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0)
        t += static_cast<long long>(p);
    return static_cast<unsigned long>(t);
}

void strip(std::vector<unsigned long>& c) {
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

void require_same_field(const fp_poly& a, const fp_poly& b) {
    if (a.p != b.p)
        throw domain_error("fp_poly: mixed characteristics");
}

fp_poly y_poly(unsigned long p) { return fp_poly{p, {0, 1}}; }

} // namespace

fp_poly fp_poly::from_coeffs(unsigned long p, std::vector<unsigned long> coeffs) {
    if (p < 2 || p >= (1UL << 31))
        throw domain_error("fp_poly: characteristic out of machine range");
    for (unsigned long& x : coeffs)
        x %= p;
    strip(coeffs);
    return fp_poly{p, std::move(coeffs)};
}

unsigned long fp_poly::lead() const {
    if (is_zero())
        throw domain_error("fp_poly: zero polynomial has no leading coefficient");
    return c.back();
}

fp_poly add(const fp_poly& a, const fp_poly& b) {
    require_same_field(a, b);
    std::vector<unsigned long> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        u64 s = (i < a.c.size() ? a.c[i] : 0);
        s += (i < b.c.size() ? b.c[i] : 0);
        out[i] = static_cast<unsigned long>(s % a.p);
    }
    strip(out);
    return fp_poly{a.p, std::move(out)};
}

fp_poly sub(const fp_poly& a, const fp_poly& b) {
    require_same_field(a, b);
    std::vector<unsigned long> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        u64 s = (i < a.c.size() ? a.c[i] : 0) + a.p;
        s -= (i < b.c.size() ? b.c[i] : 0);
        out[i] = static_cast<unsigned long>(s % a.p);
    }
    strip(out);
    return fp_poly{a.p, std::move(out)};
}

fp_poly mul(const fp_poly& a, const fp_poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero())
        return fp_poly::zero(a.p);
    std::vector<unsigned long> out(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            u64 s = out[i + j] + static_cast<u64>(a.c[i]) * b.c[j];
            out[i + j] = static_cast<unsigned long>(s % a.p);
        }
    }
    strip(out);
    return fp_poly{a.p, std::move(out)};
}

fp_poly derivative(const fp_poly& a) {
    if (a.c.size() <= 1)
        return fp_poly::zero(a.p);
    std::vector<unsigned long> out(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        out[i - 1] =
            static_cast<unsigned long>((static_cast<u64>(a.c[i]) * (i % a.p)) % a.p);
    strip(out);
    return fp_poly{a.p, std::move(out)};
}

fp_poly monic(const fp_poly& a) {
    if (a.is_zero())
        return a;
    unsigned long inv = mod_inv(a.lead(), a.p);
    std::vector<unsigned long> out(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        out[i] = static_cast<unsigned long>((static_cast<u64>(a.c[i]) * inv) % a.p);
    return fp_poly{a.p, std::move(out)};
}

std::pair<fp_poly, fp_poly> divmod(const fp_poly& a, const fp_poly& b) {
    require_same_field(a, b);
    if (b.is_zero())
        throw domain_error("fp_poly: division by zero");
    if (a.degree() < b.degree())
        return {fp_poly::zero(a.p), a};
    const unsigned long p = a.p;
    unsigned long inv = mod_inv(b.lead(), p);
    std::vector<unsigned long> r = a.c;
    std::vector<unsigned long> q(a.c.size() - b.c.size() + 1, 0);
    for (std::size_t i = r.size(); i-- >= b.c.size();) {
        if (r[i] == 0) {
            if (i == 0)
                break;
            continue;
        }
        unsigned long f = static_cast<unsigned long>((static_cast<u64>(r[i]) * inv) % p);
        q[i - b.c.size() + 1] = f;
        std::size_t off = i - b.c.size() + 1;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            u64 s = r[off + j] + static_cast<u64>(p) * p -
                    static_cast<u64>(f) * b.c[j];
            r[off + j] = static_cast<unsigned long>(s % p);
        }
        if (i == 0)
            break;
    }
    strip(r);
    strip(q);
    return {fp_poly{p, std::move(q)}, fp_poly{p, std::move(r)}};
}

fp_poly poly_gcd(const fp_poly& a, const fp_poly& b) {
    require_same_field(a, b);
    fp_poly x = a, y = b;
    while (!y.is_zero()) {
        fp_poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

fp_poly powmod(const fp_poly& base, const Int& e, const fp_poly& m) {
    if (e < 0)
        throw domain_error("fp_poly: negative exponent");
    fp_poly acc{base.p, {1}};
    fp_poly b = divmod(base, m).second;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0)
        return acc;
    for (std::size_t i = bits; i-- > 0;) {
        acc = divmod(mul(acc, acc), m).second;
        if (mpz_tstbit(e.get_mpz_t(), i))
            acc = divmod(mul(acc, b), m).second;
    }
    return acc;
}

namespace {

bool canonical_less(const fp_poly& a, const fp_poly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i])
            return a.c[i] < b.c[i];
    return false;
}

fp_poly exact_quot(const fp_poly& a, const fp_poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw domain_error("fp_poly: expected exact division");
    return q;
}

// f has zero derivative, so every exponent is a multiple of p; in F_p each
// coefficient is its own p-th root, making the root a coefficient stride.
fp_poly pth_root(const fp_poly& f) {
    std::vector<unsigned long> out;
    for (std::size_t i = 0; i < f.c.size(); i += f.p)
        out.push_back(f.c[i]);
    strip(out);
    return fp_poly{f.p, std::move(out)};
}

void squarefree_parts(const fp_poly& f, unsigned long outer_mult,
                      std::vector<fp_factor>& out) {
    fp_poly d = derivative(f);
    if (d.is_zero()) {
        squarefree_parts(pth_root(f), outer_mult * f.p, out);
        return;
    }
    fp_poly g = poly_gcd(f, d);
    fp_poly w = exact_quot(f, g);
    unsigned long i = 1;
    while (w.degree() > 0) {
        fp_poly y = poly_gcd(w, g);
        fp_poly fac = exact_quot(w, y);
        if (fac.degree() > 0)
            out.push_back({fac, outer_mult * i});
        w = std::move(y);
        g = exact_quot(g, w);
        ++i;
    }
    if (g.degree() > 0)
        squarefree_parts(pth_root(g), outer_mult * f.p, out);
}

// Distinct-degree phase: peel off the product of all irreducible factors of
// each degree d from a monic squarefree input.
std::vector<std::pair<fp_poly, long>> distinct_degree(const fp_poly& S) {
    std::vector<std::pair<fp_poly, long>> out;
    fp_poly W = S;
    fp_poly h = divmod(y_poly(S.p), W).second; // Y^(p^0) = Y mod W
    long d = 0;
    while (2 * (d + 1) <= W.degree()) {
        ++d;
        h = powmod(h, Int(static_cast<unsigned long>(S.p)), W);
        fp_poly G = poly_gcd(sub(h, y_poly(S.p)), W);
        if (G.degree() > 0) {
            out.push_back({G, d});
            W = exact_quot(W, G);
            h = divmod(h, W).second;
        }
    }
    if (W.degree() > 0)
        out.push_back({W, W.degree()});
    return out;
}

// Equal-degree splitting: G is monic squarefree with all irreducible
// factors of degree d. The attempt sequence is a fixed-seed generator, so
// runs are reproducible.
void equal_degree(const fp_poly& G, long d, std::vector<fp_poly>& out) {
    if (G.degree() == d) {
        out.push_back(G);
        return;
    }
    const unsigned long p = G.p;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^
                        (static_cast<u64>(G.degree()) << 16) ^ p);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<unsigned long> uc(static_cast<std::size_t>(
                                          std::max<long>(2 * d, 2)) +
                                      1);
        for (unsigned long& x : uc)
            x = static_cast<unsigned long>(rng() % p);
        fp_poly u = fp_poly::from_coeffs(p, std::move(uc));
        if (u.degree() < 1)
            continue;
        fp_poly v;
        if (p == 2) {
            // trace map: u + u^2 + u^4 + ... + u^(2^(d-1)) mod G
            fp_poly t = divmod(u, G).second;
            fp_poly acc = t;
            for (long i = 1; i < d; ++i) {
                t = divmod(mul(t, t), G).second;
                acc = add(acc, t);
            }
            v = acc;
        } else {
            Int e;
            mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            v = sub(powmod(u, e, G), fp_poly{p, {1}});
        }
        fp_poly g = poly_gcd(v, G);
        if (g.degree() > 0 && g.degree() < G.degree()) {
            equal_degree(g, d, out);
            equal_degree(exact_quot(G, g), d, out);
            return;
        }
    }
    throw domain_error("equal-degree splitting failed to converge");
}

void sort_and_merge(std::vector<fp_factor>& fs) {
    std::sort(fs.begin(), fs.end(), [](const fp_factor& a, const fp_factor& b) {
        return canonical_less(a.poly, b.poly);
    });
    std::vector<fp_factor> merged;
    for (fp_factor& f : fs) {
        if (!merged.empty() && merged.back().poly == f.poly)
            merged.back().multiplicity += f.multiplicity;
        else
            merged.push_back(std::move(f));
    }
    fs = std::move(merged);
}

} // namespace

fp_factorization factor_fp_complete(const fp_poly& P) {
    if (P.is_zero())
        throw domain_error("factor_fp_complete: zero polynomial");
    if (!is_prime(Int(P.p)))
        throw domain_error("factor_fp_complete: modulus " + std::to_string(P.p) +
                           " is not prime");
    fp_factorization out;
    out.unit = P.lead();
    if (P.degree() == 0)
        return out;
    std::vector<fp_factor> parts;
    squarefree_parts(monic(P), 1, parts);
    for (const fp_factor& part : parts)
        for (const auto& [G, d] : distinct_degree(part.poly)) {
            std::vector<fp_poly> irr;
            equal_degree(G, d, irr);
            for (fp_poly& g : irr)
                out.factors.push_back({std::move(g), part.multiplicity});
        }
    sort_and_merge(out.factors);
    return out;
}

fp_factorization factor_fp_univariate(const fp_poly& P, const oracle_config& cfg) {
    if (P.is_zero())
        throw domain_error("factor_fp_univariate: zero polynomial");
    if (!is_prime(Int(P.p)))
        throw domain_error("factor_fp_univariate: modulus " + std::to_string(P.p) +
                           " is not prime");
    if (P.p > static_cast<unsigned long>(cfg.fp_prime_bound))
        throw oracle_scale_error("characteristic " + std::to_string(P.p) +
                                 " exceeds the trial-division bound " +
                                 std::to_string(cfg.fp_prime_bound));
    if (P.degree() > cfg.fp_degree_bound)
        throw oracle_scale_error("degree " + std::to_string(P.degree()) +
                                 " exceeds the trial-division bound " +
                                 std::to_string(cfg.fp_degree_bound));
    const unsigned long p = P.p;
    fp_factorization out;
    out.unit = P.lead();
    fp_poly W = monic(P);
    for (long d = 1; 2 * d <= W.degree(); ++d) {
        // all monic candidates of degree d, ascending in the canonical order
        Int total;
        mpz_ui_pow_ui(total.get_mpz_t(), p, static_cast<unsigned long>(d));
        for (Int n(0); n < total; ++n) {
            std::vector<unsigned long> cc(static_cast<std::size_t>(d) + 1, 0);
            Int rest = n;
            for (long i = 0; i < d; ++i) {
                cc[static_cast<std::size_t>(i)] =
                    mpz_fdiv_ui(rest.get_mpz_t(), p);
                rest /= static_cast<unsigned long>(p);
            }
            cc[static_cast<std::size_t>(d)] = 1;
            fp_poly cand{p, std::move(cc)};
            unsigned long mult = 0;
            while (true) {
                auto [q, r] = divmod(W, cand);
                if (!r.is_zero())
                    break;
                W = std::move(q);
                ++mult;
            }
            if (mult > 0)
                out.factors.push_back({std::move(cand), mult});
            if (2 * d > W.degree())
                break;
        }
    }
    if (W.degree() > 0)
        out.factors.push_back({std::move(W), 1});
    sort_and_merge(out.factors);
    return out;
}

} // namespace facta
