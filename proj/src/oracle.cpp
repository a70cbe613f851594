#include "facta/oracle.hpp"

#include "facta/errors.hpp"

#include <algorithm>

namespace facta {

namespace {

constexpr unsigned long embed_index_limit = 1'000'000;
constexpr unsigned long partition_limit = 200'000;
constexpr unsigned long brute_candidate_limit = 2'000'000;

std::size_t exponent_index(const rat& e, const Int& L) {
    rat scaled = e * rat(L);
    if (!scaled.is_integer())
        throw domain_error("embed: denominator " + Int(L).get_str() +
                           " does not clear exponent " + e.str());
    const Int& n = scaled.num();
    if (!mpz_fits_ulong_p(n.get_mpz_t()) ||
        mpz_get_ui(n.get_mpz_t()) > embed_index_limit)
        throw oracle_scale_error("embedded exponent " + n.get_str() +
                                 " is beyond desk scale");
    return mpz_get_ui(n.get_mpz_t());
}

} // namespace

grid_image embed(const poly_expr& f, const Int& L) {
    if (L <= 0)
        throw domain_error("embed: grid denominator must be positive");
    if (f.is_zero())
        throw domain_error("embed: zero polynomial expression");
    grid_image img{L, f.ring(), int_poly::zero(), Int(1), fp_poly::zero(2)};
    std::size_t top = exponent_index(f.degree(), L);
    if (f.ring().kind() == ring_kind::prime_field) {
        unsigned long p = mpz_get_ui(f.ring().prime().get_mpz_t());
        std::vector<unsigned long> cs(top + 1, 0);
        for (const term& t : f.terms())
            cs[exponent_index(t.exponent, L)] =
                mpz_get_ui(t.coeff.get_num().get_mpz_t());
        img.fpimg = fp_poly::from_coeffs(p, std::move(cs));
    } else {
        for (const term& t : f.terms())
            mpz_lcm(img.den.get_mpz_t(), img.den.get_mpz_t(),
                    t.coeff.get_den().get_mpz_t());
        std::vector<Int> cs(top + 1, Int(0));
        for (const term& t : f.terms()) {
            mpq_class v = t.coeff * mpq_class(img.den);
            cs[exponent_index(t.exponent, L)] = v.get_num();
        }
        img.num = int_poly::from_coeffs(std::move(cs));
    }
    return img;
}

poly_expr unembed(const grid_image& img, const puiseux_monoid& M) {
    std::vector<term> ts;
    if (img.ring.kind() == ring_kind::prime_field) {
        for (std::size_t i = 0; i < img.fpimg.c.size(); ++i)
            if (img.fpimg.c[i] != 0)
                ts.push_back({rat(Int(i), img.L), mpq_class(img.fpimg.c[i])});
    } else {
        for (std::size_t i = 0; i < img.num.c.size(); ++i)
            if (img.num.c[i] != 0)
                ts.push_back({rat(Int(i), img.L),
                              mpq_class(img.num.c[i]) / mpq_class(img.den)});
    }
    // poly_expr::make re-validates membership of every exponent
    return poly_expr::make(img.ring, M, std::move(ts));
}

namespace {

// One univariate irreducible factor, as an integer lift shared by the Q and
// F_p paths. For F_p the lift carries residues 0..p-1 and block products
// must be re-reduced mod p before any support question is asked, because
// reduction can cancel terms.
struct ufactor {
    int_poly poly;
    unsigned long mult;
};

int_poly lift_fp(const fp_poly& f) {
    std::vector<Int> out(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i)
        out[i] = Int(f.c[i]);
    return int_poly::from_coeffs(std::move(out));
}

int_poly reduce_mod(const int_poly& f, const Int& p) {
    std::vector<Int> out(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i)
        mpz_fdiv_r(out[i].get_mpz_t(), f.c[i].get_mpz_t(), p.get_mpz_t());
    return int_poly::from_coeffs(std::move(out));
}

bool support_in_monoid(const int_poly& f, const Int& L, const puiseux_monoid& M) {
    for (std::size_t i = 0; i < f.c.size(); ++i)
        if (f.c[i] != 0 && !M.member(rat(Int(i), L)))
            return false;
    return true;
}

void require_fm_input(const poly_expr& f, const char* who) {
    if (f.is_zero() || f.is_constant())
        throw domain_error(std::string(who) + ": input must be nonconstant");
    monoid_kind k = f.monoid().kind();
    if (k != monoid_kind::fin_gen && k != monoid_kind::grid)
        throw domain_error(std::string(who) +
                           ": exponent monoid must be finitely generated or a grid");
}

// primitive integer version of a rational-coefficient expression, with
// positive leading coefficient
poly_expr primitive_int_image(const poly_expr& f) {
    Int den(1);
    for (const term& t : f.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    Int g(0);
    for (const term& t : f.terms()) {
        mpq_class v = t.coeff * mpq_class(den);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
    }
    if (sgn(f.leading_coeff()) < 0)
        g = -g;
    std::vector<term> ts;
    for (const term& t : f.terms()) {
        mpq_class v = t.coeff * mpq_class(den) / mpq_class(g);
        ts.push_back({t.exponent, v});
    }
    return poly_expr::make(coeff_ring::integers(), f.monoid(), std::move(ts));
}

// rational reducibility witness (g, h) -> integer witness: f = s*pg * ph
// with pg, ph primitive and s = +-1 because f is primitive (content of a
// product is the product of contents)
std::pair<poly_expr, poly_expr> clear_witness_to_int(const poly_expr& f,
                                                     const poly_expr& g,
                                                     const poly_expr& h) {
    poly_expr pg = primitive_int_image(g);
    poly_expr ph = primitive_int_image(h);
    mpq_class s = f.leading_coeff() /
                  (pg.leading_coeff() * ph.leading_coeff());
    return {pg.scale(s), ph};
}

} // namespace

verdict decide_irreducible_in_fm(const poly_expr& f, const oracle_config& cfg) {
    require_fm_input(f, "decide_irreducible_in_fm");
    if (f.ring().kind() == ring_kind::integers)
        throw domain_error(
            "decide_irreducible_in_fm: coefficients must lie in a field");
    const puiseux_monoid& M = f.monoid();
    const Int& L = M.embedding_lcm();
    grid_image img = embed(f, L);

    const bool modular = f.ring().kind() == ring_kind::prime_field;
    Int p = modular ? f.ring().prime() : Int(0);
    std::vector<ufactor> facs;
    if (modular) {
        fp_factorization F = factor_fp_univariate(img.fpimg, cfg);
        for (const fp_factor& x : F.factors)
            facs.push_back({lift_fp(x.poly), x.multiplicity});
    } else {
        int_factorization F = factor_int_univariate(img.num, cfg);
        for (const int_factor& x : F.factors)
            facs.push_back({x.poly, x.multiplicity});
    }

    unsigned long combos = 1;
    for (const ufactor& x : facs) {
        combos *= x.mult + 1;
        if (combos > partition_limit)
            throw oracle_scale_error("factor partition enumeration too large");
    }

    std::vector<unsigned long> pick(facs.size(), 0);
    for (unsigned long step = 1; step + 1 < combos; ++step) {
        // mixed-radix increment, first factor fastest
        for (std::size_t i = 0; i < pick.size(); ++i) {
            if (++pick[i] <= facs[i].mult)
                break;
            pick[i] = 0;
        }
        long d1 = 0, d2 = 0;
        for (std::size_t i = 0; i < facs.size(); ++i) {
            d1 += static_cast<long>(pick[i]) * facs[i].poly.degree();
            d2 += static_cast<long>(facs[i].mult - pick[i]) * facs[i].poly.degree();
        }
        if (d1 < 1 || d2 < 1)
            continue;
        int_poly b1 = int_poly::from_coeffs({Int(1)});
        int_poly b2 = b1;
        for (std::size_t i = 0; i < facs.size(); ++i) {
            for (unsigned long j = 0; j < pick[i]; ++j)
                b1 = mul(b1, facs[i].poly);
            for (unsigned long j = 0; j < facs[i].mult - pick[i]; ++j)
                b2 = mul(b2, facs[i].poly);
        }
        if (modular) {
            b1 = reduce_mod(b1, p);
            b2 = reduce_mod(b2, p);
        }
        if (!support_in_monoid(b1, L, M) || !support_in_monoid(b2, L, M))
            continue;

        // found a split; normalize blocks and attach the unit to the first
        grid_image i1 = img, i2 = img;
        if (modular) {
            unsigned long pw = mpz_get_ui(p.get_mpz_t());
            std::vector<unsigned long> c1(b1.c.size()), c2(b2.c.size());
            for (std::size_t i = 0; i < b1.c.size(); ++i)
                c1[i] = mpz_get_ui(b1.c[i].get_mpz_t());
            for (std::size_t i = 0; i < b2.c.size(); ++i)
                c2[i] = mpz_get_ui(b2.c[i].get_mpz_t());
            i1.fpimg = fp_poly::from_coeffs(pw, std::move(c1));
            i2.fpimg = fp_poly::from_coeffs(pw, std::move(c2));
            poly_expr g = unembed(i1, M).scale(f.leading_coeff());
            poly_expr h = unembed(i2, M);
            return verdict::reducible(std::move(g), std::move(h));
        }
        i1.num = b1;
        i1.den = Int(1);
        i2.num = b2;
        i2.den = Int(1);
        poly_expr g = unembed(i1, M);
        poly_expr h = unembed(i2, M);
        // blocks are primitive integer polynomials; make them monic and give
        // the first one the original leading coefficient
        mpq_class lg = g.leading_coeff(), lh = h.leading_coeff();
        g = g.scale(f.leading_coeff() / (lg * lh));
        return verdict::reducible(std::move(g), std::move(h));
    }
    return verdict::irreducible(certificate_kind::oracle_exhaustion);
}

verdict decide_irreducible_in_zm(const poly_expr& f, const oracle_config& cfg) {
    require_fm_input(f, "decide_irreducible_in_zm");
    if (f.ring().kind() != ring_kind::integers)
        throw domain_error(
            "decide_irreducible_in_zm: coefficients must be integers");
    if (!is_primitive(f)) {
        poly_expr c = poly_expr::constant(f.ring(), f.monoid(),
                                          mpq_class(content(f)));
        return verdict::reducible(std::move(c), primitive_part(f));
    }
    poly_expr fq = poly_expr::make(coeff_ring::rationals(), f.monoid(), f.terms());
    verdict v = decide_irreducible_in_fm(fq, cfg);
    if (!v.is_reducible())
        return verdict::irreducible(certificate_kind::oracle_exhaustion);
    auto [g, h] = clear_witness_to_int(f, v.witness().first, v.witness().second);
    return verdict::reducible(std::move(g), std::move(h));
}

verdict brute_force_irreducible_fp(const poly_expr& f, const oracle_config&) {
    require_fm_input(f, "brute_force_irreducible_fp");
    if (f.ring().kind() != ring_kind::prime_field)
        throw domain_error(
            "brute_force_irreducible_fp: coefficients must lie in a prime field");
    const puiseux_monoid& M = f.monoid();
    const Int& L = M.embedding_lcm();
    grid_image img = embed(f, L);
    const unsigned long p = img.fpimg.p;
    const long n = img.fpimg.degree();

    // candidate support: members of M up to half the degree (some factor of
    // any split has degree at most deg/2)
    std::vector<std::size_t> support;
    for (long i = 0; 2 * i <= n; ++i)
        if (M.member(rat(Int(i), L)))
            support.push_back(static_cast<std::size_t>(i));

    // candidates: coefficients over the support, monic in the leading
    // nonzero position; count p^|support| before starting
    double rough = 1;
    for (std::size_t i = 0; i < support.size(); ++i) {
        rough *= static_cast<double>(p);
        if (rough > static_cast<double>(brute_candidate_limit))
            throw oracle_scale_error(
                "brute-force divisor enumeration too large");
    }

    std::vector<unsigned long> digits(support.size(), 0);
    const unsigned long total_digits =
        static_cast<unsigned long>(support.size());
    while (true) {
        // advance the base-p counter (first support exponent fastest)
        std::size_t pos = 0;
        while (pos < total_digits && ++digits[pos] == p) {
            digits[pos] = 0;
            ++pos;
        }
        if (pos == total_digits)
            break;
        // assemble the candidate; require it monic and nonconstant
        std::size_t top = 0;
        bool nonconstant = false;
        for (std::size_t i = 0; i < support.size(); ++i)
            if (digits[i] != 0 && support[i] > 0) {
                nonconstant = true;
                top = std::max(top, support[i]);
            }
        if (!nonconstant)
            continue;
        std::vector<unsigned long> cs(top + 1, 0);
        for (std::size_t i = 0; i < support.size(); ++i)
            if (support[i] <= top)
                cs[support[i]] = digits[i];
        if (cs[top] != 1)
            continue;
        fp_poly cand = fp_poly::from_coeffs(p, std::move(cs));
        auto [quot, rem] = divmod(img.fpimg, cand);
        if (!rem.is_zero() || quot.degree() < 1)
            continue;
        bool ok = true;
        for (std::size_t i = 0; i < quot.c.size() && ok; ++i)
            if (quot.c[i] != 0 && !M.member(rat(Int(i), L)))
                ok = false;
        if (!ok)
            continue;
        grid_image i1 = img, i2 = img;
        i1.fpimg = cand;
        i2.fpimg = quot;
        return verdict::reducible(unembed(i1, M), unembed(i2, M));
    }
    return verdict::irreducible(certificate_kind::oracle_exhaustion);
}

} // namespace facta
