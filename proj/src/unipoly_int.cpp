#include "facta/unipoly.hpp"

#include "facta/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace facta {

int_poly int_poly::from_coeffs(std::vector<Int> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
    return int_poly{std::move(coeffs)};
}

int_poly int_poly::monomial(const Int& coeff, std::size_t e) {
    if (coeff == 0)
        return zero();
    std::vector<Int> c(e + 1, Int(0));
    c[e] = coeff;
    return int_poly{std::move(c)};
}

const Int& int_poly::lead() const {
    if (is_zero())
        throw domain_error("int_poly: zero polynomial has no leading coefficient");
    return c.back();
}

std::string int_poly::str() const {
    if (is_zero())
        return "0";
    std::string s;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0)
            continue;
        Int v = c[i];
        if (!s.empty()) {
            s += (v < 0) ? "-" : "+";
            if (v < 0)
                v = -v;
        }
        if (i == 0 || v != 1 || s.empty() || c[i] < 0) {
            // keep the sign handling simple: emit the magnitude unless it is
            // a redundant 1 in front of Y
            if (i == 0 || abs(c[i]) != 1)
                s += v.get_str();
            else if (s.empty() && c[i] < 0)
                s += "-";
        }
        if (i > 0) {
            s += "Y";
            if (i > 1)
                s += "^" + std::to_string(i);
        }
    }
    return s;
}

int_poly add(const int_poly& a, const int_poly& b) {
    std::vector<Int> out(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        out[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i)
        out[i] += b.c[i];
    return int_poly::from_coeffs(std::move(out));
}

int_poly sub(const int_poly& a, const int_poly& b) {
    std::vector<Int> out(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        out[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i)
        out[i] -= b.c[i];
    return int_poly::from_coeffs(std::move(out));
}

int_poly neg(const int_poly& a) {
    std::vector<Int> out = a.c;
    for (Int& v : out)
        v = -v;
    return int_poly{std::move(out)};
}

int_poly mul(const int_poly& a, const int_poly& b) {
    if (a.is_zero() || b.is_zero())
        return int_poly::zero();
    std::vector<Int> out(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out[i + j] += a.c[i] * b.c[j];
    }
    return int_poly{std::move(out)};
}

int_poly derivative(const int_poly& a) {
    if (a.c.size() <= 1)
        return int_poly::zero();
    std::vector<Int> out(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        out[i - 1] = a.c[i] * static_cast<unsigned long>(i);
    return int_poly::from_coeffs(std::move(out));
}

Int eval(const int_poly& a, const Int& x) {
    Int v(0);
    for (std::size_t i = a.c.size(); i-- > 0;)
        v = v * x + a.c[i];
    return v;
}

Int content(const int_poly& a) {
    Int g(0);
    for (const Int& v : a.c)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

int_poly primitive_part(const int_poly& a) {
    if (a.is_zero())
        return a;
    Int g = content(a);
    if (sgn(a.lead()) < 0)
        g = -g;
    std::vector<Int> out(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), a.c[i].get_mpz_t(), g.get_mpz_t());
    return int_poly{std::move(out)};
}

std::optional<int_poly> divide_exact(const int_poly& a, const int_poly& b) {
    if (b.is_zero())
        throw domain_error("int_poly: division by zero");
    if (a.is_zero())
        return int_poly::zero();
    if (a.degree() < b.degree())
        return std::nullopt;
    std::vector<Int> r = a.c;
    std::vector<Int> q(a.c.size() - b.c.size() + 1, Int(0));
    for (std::size_t i = r.size(); i-- >= b.c.size();) {
        if (r[i] != 0) {
            Int f;
            if (!mpz_divisible_p(r[i].get_mpz_t(), b.lead().get_mpz_t()))
                return std::nullopt;
            mpz_divexact(f.get_mpz_t(), r[i].get_mpz_t(), b.lead().get_mpz_t());
            std::size_t off = i - b.c.size() + 1;
            q[off] = f;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r[off + j] -= f * b.c[j];
        }
        if (i == 0)
            break;
    }
    for (const Int& v : r)
        if (v != 0)
            return std::nullopt;
    return int_poly::from_coeffs(std::move(q));
}

namespace {

// lead(B)^k * A reduced mod B by division steps that never leave Z[Y]
int_poly pseudo_rem(const int_poly& A, const int_poly& B) {
    int_poly R = A;
    const Int& lb = B.lead();
    while (!R.is_zero() && R.degree() >= B.degree()) {
        long shift = R.degree() - B.degree();
        Int top = R.lead();
        std::vector<Int> out(R.c.size(), Int(0));
        for (std::size_t i = 0; i < R.c.size(); ++i)
            out[i] = R.c[i] * lb;
        for (std::size_t j = 0; j < B.c.size(); ++j)
            out[static_cast<std::size_t>(shift) + j] -= top * B.c[j];
        R = int_poly::from_coeffs(std::move(out));
        if (!R.is_zero() && R.degree() >= B.degree() + shift)
            throw domain_error("pseudo-division failed to reduce degree");
    }
    return R;
}

} // namespace

int_poly poly_gcd(const int_poly& a, const int_poly& b) {
    if (a.is_zero())
        return primitive_part(b);
    if (b.is_zero())
        return primitive_part(a);
    int_poly A = primitive_part(a);
    int_poly B = primitive_part(b);
    if (A.degree() < B.degree())
        std::swap(A, B);
    while (!B.is_zero()) {
        int_poly R = primitive_part(pseudo_rem(A, B));
        A = std::move(B);
        B = std::move(R);
    }
    return A;
}

// ---------------------------------------------------------------------------
// Kronecker interpolation search
// ---------------------------------------------------------------------------

namespace {

constexpr long long kronecker_node_budget = 20'000'000;

Int point_at(std::size_t j) {
    // 0, 1, -1, 2, -2, ...
    if (j == 0)
        return Int(0);
    Int v((j + 1) / 2);
    return (j % 2 == 1) ? v : Int(-v);
}

std::vector<Int> signed_divisors(const Int& v) {
    Int a = abs(v);
    std::vector<Int> pos;
    Int d(1);
    long long steps = 0;
    for (; d * d <= a; ++d) {
        if (++steps > 2'000'000)
            throw oracle_scale_error(
                "evaluation value too large for divisor enumeration");
        if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
            pos.push_back(d);
            Int e = a / d;
            if (e != d)
                pos.push_back(e);
        }
    }
    std::vector<Int> out;
    for (const Int& x : pos) {
        out.push_back(x);
        out.push_back(-x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Lagrange interpolation through (pts[j], vals[j]); nullopt unless the
// interpolant has integer coefficients.
std::optional<int_poly> interpolate_int(const std::vector<Int>& pts,
                                        const std::vector<Int>& vals) {
    std::size_t n = pts.size();
    std::vector<mpq_class> acc(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        // basis polynomial prod_{i != j} (Y - x_i) / (x_j - x_i)
        std::vector<mpq_class> basis{1};
        mpq_class denom(1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j)
                continue;
            basis.push_back(0);
            for (std::size_t k = basis.size(); k-- > 1;)
                basis[k] = basis[k - 1] - mpq_class(pts[i]) * basis[k];
            basis[0] = -mpq_class(pts[i]) * basis[0];
            denom *= mpq_class(pts[j]) - mpq_class(pts[i]);
        }
        mpq_class w = mpq_class(vals[j]) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k)
            acc[k] += basis[k] * w;
    }
    std::vector<Int> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        mpq_class v = acc[k];
        v.canonicalize();
        if (v.get_den() != 1)
            return std::nullopt;
        out[k] = v.get_num();
    }
    return int_poly::from_coeffs(std::move(out));
}

struct kronecker_ctx {
    const int_poly* Q;
    std::vector<Int> pts;
    std::vector<std::vector<Int>> divisor_lists;
    std::vector<Int> chosen;
    long long nodes = 0;
    std::optional<std::pair<int_poly, int_poly>> found;
};

void kronecker_dfs(kronecker_ctx& ctx, std::size_t j, std::size_t levels,
                   long target_degree) {
    if (ctx.found)
        return;
    if (++ctx.nodes > kronecker_node_budget)
        throw oracle_scale_error("interpolation search budget exceeded");
    if (j == levels) {
        auto g = interpolate_int(
            std::vector<Int>(ctx.pts.begin(), ctx.pts.begin() + levels),
            ctx.chosen);
        if (!g || g->degree() != target_degree)
            return;
        int_poly cand = *g;
        if (sgn(cand.lead()) < 0)
            cand = neg(cand);
        auto quot = divide_exact(*ctx.Q, cand);
        if (quot)
            ctx.found = {cand, *quot};
        return;
    }
    for (const Int& d : ctx.divisor_lists[j]) {
        bool ok = true;
        for (std::size_t i = 0; i < j && ok; ++i) {
            Int gap = ctx.pts[j] - ctx.pts[i];
            Int diff = d - ctx.chosen[i];
            if (!mpz_divisible_p(diff.get_mpz_t(), gap.get_mpz_t()))
                ok = false;
        }
        if (!ok)
            continue;
        ctx.chosen.push_back(d);
        kronecker_dfs(ctx, j + 1, levels, target_degree);
        ctx.chosen.pop_back();
        if (ctx.found)
            return;
    }
}

// One irreducible factor of a primitive Q with positive lead, Q(0) != 0,
// deg >= 2, or nullopt when Q is irreducible. Searching degrees ascending
// guarantees the first divisor found is itself irreducible.
std::optional<std::pair<int_poly, int_poly>> kronecker_find_factor(const int_poly& Q) {
    long n = Q.degree();
    long half = n / 2;
    std::vector<Int> pts, vals;
    for (long j = 0; j <= half; ++j) {
        pts.push_back(point_at(static_cast<std::size_t>(j)));
        vals.push_back(eval(Q, pts.back()));
        if (vals.back() == 0) {
            // integer root: Y - x splits off immediately
            int_poly lin = int_poly::from_coeffs({-pts.back(), Int(1)});
            return {{lin, *divide_exact(Q, lin)}};
        }
    }
    kronecker_ctx ctx;
    ctx.Q = &Q;
    ctx.pts = pts;
    for (long d = 1; d <= half; ++d) {
        std::size_t levels = static_cast<std::size_t>(d) + 1;
        ctx.divisor_lists.clear();
        for (std::size_t j = 0; j < levels; ++j)
            ctx.divisor_lists.push_back(signed_divisors(vals[j]));
        ctx.chosen.clear();
        kronecker_dfs(ctx, 0, levels, d);
        if (ctx.found)
            return ctx.found;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hensel-lifting path for degrees beyond the interpolation cutoff
// ---------------------------------------------------------------------------

// coefficients reduced into [0, m)
int_poly poly_mod(const int_poly& f, const Int& m) {
    std::vector<Int> out(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i)
        mpz_fdiv_r(out[i].get_mpz_t(), f.c[i].get_mpz_t(), m.get_mpz_t());
    return int_poly::from_coeffs(std::move(out));
}

// coefficients reduced into (-m/2, m/2]
int_poly poly_mod_sym(const int_poly& f, const Int& m) {
    std::vector<Int> out(f.c.size());
    Int half = m / 2;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        mpz_fdiv_r(out[i].get_mpz_t(), f.c[i].get_mpz_t(), m.get_mpz_t());
        if (out[i] > half)
            out[i] -= m;
    }
    return int_poly::from_coeffs(std::move(out));
}

fp_poly to_fp(const int_poly& f, unsigned long p) {
    std::vector<unsigned long> out(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i)
        out[i] = mpz_fdiv_ui(f.c[i].get_mpz_t(), p);
    return fp_poly::from_coeffs(p, std::move(out));
}

// symmetric integer lift: residues above p/2 negated
int_poly from_fp_sym(const fp_poly& f) {
    std::vector<Int> out(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        out[i] = Int(f.c[i]);
        if (f.c[i] > f.p / 2)
            out[i] -= static_cast<unsigned long>(f.p);
    }
    return int_poly::from_coeffs(std::move(out));
}

// Bezout pair for coprime fp polynomials: sg*a + tg*b = 1.
void fp_ext_gcd(const fp_poly& a, const fp_poly& b, fp_poly& sg, fp_poly& tg) {
    fp_poly r0 = a, r1 = b;
    fp_poly s0{a.p, {1}}, s1 = fp_poly::zero(a.p);
    fp_poly t0 = fp_poly::zero(a.p), t1{a.p, {1}};
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        fp_poly s2 = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        fp_poly t2 = sub(t0, mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0)
        throw domain_error("fp_ext_gcd: inputs are not coprime");
    // r0 is a nonzero constant; divide both cofactors by it
    unsigned long c = r0.c[0];
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(a.p), nr = static_cast<long long>(c);
    while (nr != 0) {
        long long qq = r / nr;
        t -= qq * nt;
        std::swap(t, nt);
        r -= qq * nr;
        std::swap(r, nr);
    }
    if (t < 0)
        t += static_cast<long long>(a.p);
    fp_poly cinv{a.p, {static_cast<unsigned long>(t)}};
    sg = mul(s0, cinv);
    tg = mul(t0, cinv);
}

// Linear two-factor Hensel lift: from F = G*H (mod q) to (mod q^K at least),
// maintaining lc(G) = lc(F) exactly and H monic.
struct lifted_pair {
    int_poly G, H;
    Int modulus;
};

lifted_pair hensel_pair(const int_poly& F, const fp_poly& Gbar, const fp_poly& Hbar,
                        const Int& target) {
    const unsigned long q = Gbar.p;
    fp_poly sg = fp_poly::zero(q), tg = fp_poly::zero(q);
    fp_ext_gcd(Gbar, Hbar, sg, tg); // sg*Gbar + tg*Hbar = 1

    int_poly G = from_fp_sym(Gbar);
    G.c.back() = F.lead(); // pin the true leading coefficient from the start
    int_poly H = from_fp_sym(Hbar); // monic: symmetric lift keeps lead 1
    Int m(q);
    while (m < target) {
        // error term: exact by the invariant F = G*H (mod m)
        int_poly diff = sub(F, mul(G, H));
        std::vector<Int> ec(diff.c.size());
        for (std::size_t i = 0; i < diff.c.size(); ++i)
            mpz_divexact(ec[i].get_mpz_t(), diff.c[i].get_mpz_t(), m.get_mpz_t());
        fp_poly ebar = to_fp(int_poly::from_coeffs(std::move(ec)), q);

        // solve Gbar*dH + Hbar*dG = ebar with deg dH < deg Hbar
        auto [w, dH] = divmod(mul(sg, ebar), Hbar);
        fp_poly dG = add(mul(tg, ebar), mul(w, Gbar));
        if (dG.degree() >= Gbar.degree())
            throw domain_error("hensel_pair: correction degree overflow");
        G = add(G, [&] {
            int_poly t = from_fp_sym(dG);
            for (Int& v : t.c)
                v *= m;
            return t;
        }());
        H = add(H, [&] {
            int_poly t = from_fp_sym(dH);
            for (Int& v : t.c)
                v *= m;
            return t;
        }());
        m *= static_cast<unsigned long>(q);
    }
    return {std::move(G), std::move(H), std::move(m)};
}

// Lift every modular factor of F to a monic image mod (at least) target.
// F = lc(F) * prod(fps) (mod q), fps monic and pairwise coprime.
void lift_tree(const int_poly& F, const std::vector<fp_poly>& fps,
               const Int& target, std::vector<int_poly>& out, Int& modulus) {
    const unsigned long q = fps.front().p;
    if (fps.size() == 1) {
        // normalize the node polynomial to its monic image
        Int m(q);
        while (m < target)
            m *= static_cast<unsigned long>(q);
        modulus = m;
        int_poly Fm = poly_mod(F, m);
        Int inv;
        if (!mpz_invert(inv.get_mpz_t(), Fm.lead().get_mpz_t(), m.get_mpz_t()))
            throw domain_error("lift_tree: leading coefficient not invertible");
        std::vector<Int> cc(Fm.c.size());
        for (std::size_t i = 0; i < Fm.c.size(); ++i) {
            cc[i] = Fm.c[i] * inv;
            mpz_fdiv_r(cc[i].get_mpz_t(), cc[i].get_mpz_t(), m.get_mpz_t());
        }
        out.push_back(int_poly::from_coeffs(std::move(cc)));
        return;
    }
    std::size_t half = fps.size() / 2;
    std::vector<fp_poly> A(fps.begin(), fps.begin() + half);
    std::vector<fp_poly> B(fps.begin() + half, fps.end());
    fp_poly Gbar{q, {mpz_fdiv_ui(F.lead().get_mpz_t(), q)}};
    for (const fp_poly& g : A)
        Gbar = mul(Gbar, g);
    fp_poly Hbar{q, {1}};
    for (const fp_poly& h : B)
        Hbar = mul(Hbar, h);
    lifted_pair lp = hensel_pair(F, Gbar, Hbar, target);
    lift_tree(lp.G, A, target, out, modulus);
    lift_tree(lp.H, B, target, out, modulus);
}

bool canonical_less_int(const int_poly& a, const int_poly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i])
            return a.c[i] < b.c[i];
    return false;
}

// Landau-Mignotte-style coefficient bound for lc(S)-scaled divisors of S.
Int factor_coeff_bound(const int_poly& S) {
    Int norm2(0);
    for (const Int& v : S.c)
        norm2 += v * v;
    Int root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    Int bound = root * abs(S.lead());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(S.degree()));
    return bound;
}

constexpr std::size_t recombination_max_factors = 22;

// Complete factorization of a primitive squarefree S, positive lead,
// deg >= 1, via modular factorization, Hensel lifting, and subset
// recombination.
std::vector<int_poly> zassenhaus_squarefree(const int_poly& S) {
    if (S.degree() == 1)
        return {S};

    // pick a prime keeping S squarefree mod q, preferring few modular factors
    static const unsigned long candidates[] = {3,  5,  7,  11, 13, 17, 19,
                                               23, 29, 31, 37, 41, 43, 47,
                                               53, 59, 61, 67, 71, 73, 79,
                                               83, 89, 97, 101};
    std::optional<fp_factorization> best;
    int good_seen = 0;
    for (unsigned long q : candidates) {
        if (mpz_fdiv_ui(S.lead().get_mpz_t(), q) == 0)
            continue;
        fp_poly Sq = to_fp(S, q);
        if (poly_gcd(Sq, derivative(Sq)).degree() != 0)
            continue;
        fp_factorization fq = factor_fp_complete(Sq);
        if (!best || fq.factors.size() < best->factors.size())
            best = std::move(fq);
        if (++good_seen >= 3)
            break;
    }
    if (!best)
        throw oracle_scale_error("no usable prime for modular factorization");
    if (best->factors.size() == 1)
        return {S};
    if (best->factors.size() > recombination_max_factors)
        throw oracle_scale_error("too many modular factors to recombine");

    std::vector<fp_poly> fps;
    for (const fp_factor& f : best->factors)
        fps.push_back(f.poly);

    Int target = 2 * factor_coeff_bound(S) + 1;
    std::vector<int_poly> lifts;
    Int modulus(1);
    lift_tree(S, fps, target, lifts, modulus);

    // subset recombination, smallest subsets first: the first exact divisor
    // found is irreducible
    std::vector<int_poly> out;
    int_poly W = S;
    std::vector<std::size_t> alive(lifts.size());
    for (std::size_t i = 0; i < alive.size(); ++i)
        alive[i] = i;
    std::size_t s = 1;
    while (2 * s <= alive.size()) {
        bool found = false;
        std::vector<std::size_t> comb(s);
        for (std::size_t i = 0; i < s; ++i)
            comb[i] = i;
        while (true) {
            int_poly prod = int_poly::from_coeffs({W.lead()});
            for (std::size_t i : comb)
                prod = poly_mod(mul(prod, lifts[alive[i]]), modulus);
            int_poly cand = primitive_part(poly_mod_sym(prod, modulus));
            auto quot = divide_exact(W, cand);
            if (quot && cand.degree() >= 1) {
                out.push_back(cand);
                W = *quot;
                std::vector<std::size_t> next_alive;
                for (std::size_t i = 0; i < alive.size(); ++i)
                    if (std::find(comb.begin(), comb.end(), i) == comb.end())
                        next_alive.push_back(alive[i]);
                alive = std::move(next_alive);
                found = true;
                break;
            }
            // next combination of indexes into alive
            bool advanced = false;
            for (std::size_t k = s; k-- > 0 && !advanced;) {
                if (comb[k] + (s - k) < alive.size()) {
                    ++comb[k];
                    for (std::size_t j = k + 1; j < s; ++j)
                        comb[j] = comb[j - 1] + 1;
                    advanced = true;
                }
            }
            if (!advanced)
                break;
        }
        if (!found)
            ++s;
    }
    if (W.degree() >= 1)
        out.push_back(primitive_part(W));
    return out;
}

// Musser squarefree decomposition of a primitive P with positive lead:
// P = prod(part^multiplicity), parts squarefree and pairwise coprime.
std::vector<std::pair<int_poly, unsigned long>> squarefree_decompose(const int_poly& P) {
    std::vector<std::pair<int_poly, unsigned long>> parts;
    int_poly g = poly_gcd(P, derivative(P));
    if (g.degree() == 0)
        return {{P, 1}};
    int_poly b = *divide_exact(P, g);
    int_poly d = g;
    unsigned long i = 1;
    while (b.degree() > 0) {
        int_poly nb = poly_gcd(b, d);
        int_poly part = *divide_exact(b, nb);
        if (part.degree() > 0)
            parts.push_back({part, i});
        d = *divide_exact(d, nb);
        b = std::move(nb);
        ++i;
    }
    return parts;
}

} // namespace

int_factorization factor_int_univariate(const int_poly& P, const oracle_config& cfg) {
    if (P.is_zero())
        throw domain_error("factor_int_univariate: zero polynomial");
    if (P.degree() > cfg.degree_bound)
        throw oracle_scale_error("degree " + std::to_string(P.degree()) +
                                 " exceeds the oracle degree bound " +
                                 std::to_string(cfg.degree_bound));
    int_factorization out;
    Int c = content(P);
    out.unit_content = (sgn(P.lead()) < 0) ? Int(-c) : c;
    if (P.degree() == 0)
        return out;

    int_poly W = primitive_part(P);
    // split off the Y^k monomial factor so W(0) != 0
    std::size_t k = 0;
    while (W.c[k] == 0)
        ++k;
    if (k > 0) {
        out.factors.push_back(
            {int_poly::from_coeffs({Int(0), Int(1)}), static_cast<unsigned long>(k)});
        W.c.erase(W.c.begin(), W.c.begin() + static_cast<long>(k));
    }

    std::vector<int_poly> irreducibles;
    while (W.degree() >= 1) {
        if (W.degree() == 1) {
            irreducibles.push_back(W);
            break;
        }
        if (W.degree() <= cfg.kronecker_cutoff) {
            auto split = kronecker_find_factor(W);
            if (!split) {
                irreducibles.push_back(W);
                break;
            }
            irreducibles.push_back(split->first);
            W = split->second;
            // absorb repeated occurrences of the factor right away
            while (true) {
                auto q = divide_exact(W, split->first);
                if (!q)
                    break;
                irreducibles.push_back(split->first);
                W = *q;
            }
        } else {
            for (const auto& [part, mult] : squarefree_decompose(W))
                for (const int_poly& f : zassenhaus_squarefree(part))
                    for (unsigned long j = 0; j < mult; ++j)
                        irreducibles.push_back(f);
            break;
        }
    }

    std::sort(irreducibles.begin(), irreducibles.end(), canonical_less_int);
    for (int_poly& f : irreducibles) {
        if (!out.factors.empty() && out.factors.back().poly == f)
            out.factors.back().multiplicity += 1;
        else
            out.factors.push_back({std::move(f), 1});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const int_factor& a, const int_factor& b) {
                  return canonical_less_int(a.poly, b.poly);
              });
    return out;
}

} // namespace facta
