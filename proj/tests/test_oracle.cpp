#include "doctest.h"

#include "facta/errors.hpp"
#include "facta/oracle.hpp"

#include <random>

using namespace facta;

namespace {

rat q(long n, long d = 1) { return rat(Int(n), Int(d)); }

poly_expr make(coeff_ring R, puiseux_monoid M,
               std::vector<std::pair<rat, long>> ts) {
    std::vector<term> v;
    for (auto& [e, c] : ts)
        v.push_back({e, mpq_class(c)});
    return poly_expr::make(std::move(R), std::move(M), std::move(v));
}

const coeff_ring Z = coeff_ring::integers();
const coeff_ring Q = coeff_ring::rationals();

// Witness pairs must multiply back to the input exactly.
void check_witness(const poly_expr& f, const verdict& v) {
    REQUIRE(v.is_reducible());
    const auto& [g, h] = v.witness();
    CHECK(g.mul(h) == f);
    CHECK(!g.is_constant() + !h.is_constant() >= 1);
}

} // namespace

TEST_CASE("grid embedding") {
    auto g6 = puiseux_monoid::grid(Int(6));
    auto f = make(Z, g6, {{q(5, 6), 3}, {q(1, 2), -1}, {q(0), 7}});
    auto img = embed(f, Int(6));
    CHECK(img.den == 1);
    REQUIRE(img.num.c.size() == 6);
    CHECK(img.num.c[5] == 3);
    CHECK(img.num.c[3] == -1);
    CHECK(img.num.c[0] == 7);
    CHECK(img.num.c[1] == 0);

    // rational coefficients pick up a clearing denominator
    auto g1 = puiseux_monoid::grid(Int(1));
    std::vector<term> ts{{q(1), mpq_class(1, 2)}, {q(0), mpq_class(1, 3)}};
    auto fr = poly_expr::make(Q, g1, std::move(ts));
    auto ir = embed(fr, Int(1));
    CHECK(ir.den == 6);
    CHECK(ir.num.c == std::vector<Int>{Int(2), Int(3)});

    // prime-field image lands in fpimg
    auto F2 = coeff_ring::prime_field(Int(2));
    auto h = make(F2, puiseux_monoid::fin_gen({q(1, 4), q(1, 2)}),
                  {{q(1, 2), 1}, {q(0), 1}});
    auto ih = embed(h, Int(4));
    CHECK(ih.fpimg.p == 2);
    CHECK(ih.fpimg.c == std::vector<unsigned long>{1, 0, 1});

    // L must clear every exponent denominator
    auto half = make(Z, puiseux_monoid::grid(Int(2)), {{q(1, 2), 1}, {q(0), 1}});
    CHECK_THROWS_AS(embed(half, Int(3)), domain_error);
    CHECK_THROWS_AS(embed(half, Int(0)), domain_error);
    CHECK_THROWS_AS(embed(make(Z, g1, {}), Int(1)), domain_error); // zero

    // embedding is multiplicative (integer coefficients keep den = 1)
    std::mt19937_64 rng(11);
    auto g4 = puiseux_monoid::grid(Int(4));
    for (int it = 0; it < 40; ++it) {
        std::vector<std::pair<rat, long>> ta, tb;
        for (int i = 0; i < 3; ++i) {
            ta.push_back({q(rng() % 7, 4), long(rng() % 11) - 5});
            tb.push_back({q(rng() % 7, 4), long(rng() % 11) - 5});
        }
        auto a = make(Z, g4, ta), b = make(Z, g4, tb);
        if (a.is_zero() || b.is_zero())
            continue;
        auto prod = embed(a.mul(b), Int(4));
        CHECK(prod.num == mul(embed(a, Int(4)).num, embed(b, Int(4)).num));
    }
}

TEST_CASE("unembed round-trips and validates membership") {
    auto g6 = puiseux_monoid::grid(Int(6));
    auto f = make(Z, g6, {{q(5, 6), 3}, {q(1, 2), -1}, {q(0), 7}});
    CHECK(unembed(embed(f, Int(6)), g6) == f);

    auto F3 = coeff_ring::prime_field(Int(3));
    auto m = puiseux_monoid::fin_gen({q(1, 2), q(2, 3)});
    auto h = make(F3, m, {{q(7, 6), 2}, {q(1, 2), 1}, {q(0), 2}});
    CHECK(unembed(embed(h, Int(6)), m) == h);

    // an image exponent outside the target monoid is rejected
    auto g1 = puiseux_monoid::grid(Int(1));
    auto x = make(Z, g1, {{q(1), 1}});
    grid_image img = embed(x, Int(2)); // Y^2, so exponent 2/2 = 1
    CHECK_THROWS_AS(unembed(img, puiseux_monoid::fin_gen({q(2), q(3)})),
                    domain_error);
}

TEST_CASE("irreducibility in F[M]: decided examples") {
    auto m23 = puiseux_monoid::fin_gen({q(2), q(3)});
    auto g1 = puiseux_monoid::grid(Int(1));

    // X^2 on <2,3>: the only univariate split Y·Y needs exponent 1
    CHECK(decide_irreducible_in_fm(make(Q, m23, {{q(2), 1}})).is_irreducible());
    // X^2-1 on <2,3>: (Y-1)(Y+1) needs exponent 1 in both blocks
    CHECK(decide_irreducible_in_fm(make(Q, m23, {{q(2), 1}, {q(0), -1}}))
              .is_irreducible());
    CHECK(decide_irreducible_in_fm(make(Q, g1, {{q(1), 1}, {q(0), -1}}))
              .is_irreducible());

    // X^2 on a grid splits as X·X (Y-power multiplicity)
    auto x2 = make(Q, g1, {{q(2), 1}});
    auto v = decide_irreducible_in_fm(x2);
    check_witness(x2, v);

    // truncated Frobenius kernel: X^(1/2)+1 = (X^(1/4)+1)^2 over F_2
    auto F2 = coeff_ring::prime_field(Int(2));
    auto m4 = puiseux_monoid::fin_gen({q(1, 4), q(1, 2)});
    auto fro = make(F2, m4, {{q(1, 2), 1}, {q(0), 1}});
    auto vf = decide_irreducible_in_fm(fro);
    REQUIRE(vf.is_reducible());
    auto root = make(F2, m4, {{q(1, 4), 1}, {q(0), 1}});
    CHECK(vf.witness().first == root);
    CHECK(vf.witness().second == root);

    // non-monic prime-field split keeps the unit on the first block
    auto F3 = coeff_ring::prime_field(Int(3));
    auto f3 = make(F3, g1, {{q(2), 2}, {q(0), -2}});
    auto v3 = decide_irreducible_in_fm(f3);
    check_witness(f3, v3);

    // only fields, only finitely generated or grid monoids
    CHECK_THROWS_AS(decide_irreducible_in_fm(make(Z, g1, {{q(1), 1}, {q(0), 1}})),
                    domain_error);
    auto pp = puiseux_monoid::p_power(Int(2));
    CHECK_THROWS_AS(
        decide_irreducible_in_fm(make(F2, pp, {{q(1, 2), 1}, {q(0), 1}})),
        domain_error);
    // constants are outside the question
    CHECK_THROWS_AS(decide_irreducible_in_fm(make(Q, g1, {{q(0), 5}})),
                    domain_error);
}

TEST_CASE("irreducibility in Z[M]: decided examples") {
    auto g6 = puiseux_monoid::grid(Int(6));
    auto g1 = puiseux_monoid::grid(Int(1));

    CHECK(decide_irreducible_in_zm(make(Z, g6, {{q(5, 6), 1}, {q(0), 2}}))
              .is_irreducible());

    // imprimitive input splits off its content
    auto f = make(Z, g1, {{q(1), 2}, {q(0), 2}});
    auto v = decide_irreducible_in_zm(f);
    REQUIRE(v.is_reducible());
    CHECK(v.witness().first == make(Z, g1, {{q(0), 2}}));
    CHECK(v.witness().second == make(Z, g1, {{q(1), 1}, {q(0), 1}}));

    auto cube = make(Z, g1, {{q(3), 1}, {q(0), -1}});
    auto vc = decide_irreducible_in_zm(cube);
    REQUIRE(vc.is_reducible());
    CHECK(vc.witness().first.str() == "X-1");
    CHECK(vc.witness().second.str() == "X^2+X+1");
    check_witness(cube, vc);

    // an Eisenstein-certified instance agrees with the oracle
    auto g4 = puiseux_monoid::grid(Int(4));
    auto eis = make(Z, g4, {{q(7, 4), 1}, {q(1, 2), 6}, {q(0), 10}});
    CHECK(eisenstein_check(eis, Int(2)).applicable);
    CHECK(decide_irreducible_in_zm(eis).is_irreducible());

    CHECK_THROWS_AS(decide_irreducible_in_zm(make(Z, g1, {{q(0), 6}})),
                    domain_error);
    CHECK_THROWS_AS(
        decide_irreducible_in_zm(make(Q, g1, {{q(1), 1}, {q(0), 1}})),
        domain_error);
}

TEST_CASE("scale limits and the wider-bound escape hatch") {
    auto g1 = puiseux_monoid::grid(Int(1));
    std::vector<std::pair<rat, long>> big{{q(9), 1}, {q(1), 1}, {q(0), 1}};
    CHECK_THROWS_AS(decide_irreducible_in_zm(make(Z, g1, big)),
                    oracle_scale_error);

    oracle_config wide;
    wide.degree_bound = 16;
    auto a = make(Z, g1, {{q(4), 1}, {q(1), 1}, {q(0), 1}});
    auto b = make(Z, g1, {{q(5), 1}, {q(2), 1}, {q(0), 1}});
    auto fab = a.mul(b); // degree 9: forces the lifting path
    auto v = decide_irreducible_in_zm(fab, wide);
    check_witness(fab, v);
}

TEST_CASE("exhaustive prime-field decider") {
    auto F2 = coeff_ring::prime_field(Int(2));
    auto m1 = puiseux_monoid::fin_gen({q(1)});
    CHECK(brute_force_irreducible_fp(make(F2, m1, {{q(1), 1}, {q(0), 1}}))
              .is_irreducible());

    auto m4 = puiseux_monoid::fin_gen({q(1, 4), q(1, 2)});
    auto fro = make(F2, m4, {{q(1, 2), 1}, {q(0), 1}});
    auto v = brute_force_irreducible_fp(fro);
    check_witness(fro, v);

    auto mh = puiseux_monoid::fin_gen({q(1, 2)});
    auto g = make(F2, mh, {{q(2), 1}, {q(3, 2), 1}, {q(0), 1}});
    CHECK(brute_force_irreducible_fp(g).kind() ==
          decide_irreducible_in_fm(g).kind());

    CHECK_THROWS_AS(brute_force_irreducible_fp(
                        make(Q, m1, {{q(1), 1}, {q(0), 1}})),
                    domain_error);
}

TEST_CASE("partition decider vs exhaustive trial division") {
    std::mt19937_64 rng(23);
    std::vector<puiseux_monoid> monoids{
        puiseux_monoid::fin_gen({q(1, 2)}),
        puiseux_monoid::grid(Int(3)),
        puiseux_monoid::fin_gen({q(2), q(3)}),
        puiseux_monoid::fin_gen({q(1, 4), q(1, 2)}),
    };
    std::vector<std::vector<rat>> pools{
        {q(0), q(1, 2), q(1), q(3, 2), q(2), q(5, 2), q(3)},
        {q(0), q(1, 3), q(2, 3), q(1), q(4, 3), q(5, 3), q(2)},
        {q(0), q(2), q(3), q(4), q(5), q(6), q(7)},
        {q(0), q(1, 4), q(1, 2), q(3, 4), q(1), q(5, 4), q(3, 2)},
    };
    const unsigned long primes[] = {2, 3};
    int reducible_seen = 0;
    for (int it = 0; it < 120; ++it) {
        std::size_t mi = rng() % monoids.size();
        unsigned long p = primes[rng() % 2];
        auto R = coeff_ring::prime_field(Int(long(p)));
        std::vector<term> ts;
        std::size_t nt = 2 + rng() % 3;
        for (std::size_t i = 0; i < nt; ++i) {
            const rat& e = pools[mi][rng() % pools[mi].size()];
            ts.push_back({e, mpq_class(long(1 + rng() % (p - 1 + 1)))});
        }
        auto f = poly_expr::make(R, monoids[mi], std::move(ts));
        if (f.is_constant())
            continue;
        auto v1 = decide_irreducible_in_fm(f);
        auto v2 = brute_force_irreducible_fp(f);
        CHECK(v1.kind() == v2.kind());
        if (v1.is_reducible()) {
            ++reducible_seen;
            check_witness(f, v1);
            check_witness(f, v2);
        }
    }
    CHECK(reducible_seen > 10); // the sample must actually exercise splits
}

TEST_CASE("Z[M] verdict equals primitivity plus Q[M] verdict") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 100; ++it) {
        long L = 1 + long(rng() % 3);
        auto M = puiseux_monoid::grid(Int(L));
        std::vector<term> ts;
        std::size_t nt = 2 + rng() % 3;
        for (std::size_t i = 0; i < nt; ++i) {
            long num = long(rng() % 9); // image degree stays within the bound
            long c = long(rng() % 19) - 9;
            if (c == 0)
                c = 1;
            ts.push_back({rat(Int(num), Int(L)), mpq_class(c)});
        }
        auto f = poly_expr::make(Z, M, std::move(ts));
        if (f.is_constant())
            continue;
        auto fq = poly_expr::make(Q, M, f.terms());
        auto vz = decide_irreducible_in_zm(f);
        auto vq = decide_irreducible_in_fm(fq);
        CHECK(vz.is_irreducible() == (is_primitive(f) && vq.is_irreducible()));
        if (vz.is_reducible())
            check_witness(f, vz);

        // on a pure grid, the Q[M] answer is the univariate answer
        auto img = embed(fq, Int(L));
        auto fac = factor_int_univariate(img.num);
        unsigned long total = 0;
        for (const auto& pf : fac.factors)
            total += pf.multiplicity;
        CHECK(vq.is_irreducible() == (total == 1));
    }
}

TEST_CASE("content pipeline wrapper") {
    auto g1 = puiseux_monoid::grid(Int(1));
    auto g6 = puiseux_monoid::grid(Int(6));
    auto m23 = puiseux_monoid::fin_gen({q(2), q(3)});

    auto v1 = gauss_irreducible_over_int(make(Z, g1, {{q(1), 2}, {q(0), 2}}));
    REQUIRE(v1.is_reducible());
    CHECK(v1.witness().first == make(Z, g1, {{q(0), 2}}));

    auto v2 = gauss_irreducible_over_int(make(Z, g6, {{q(5, 6), 1}, {q(0), 2}}));
    REQUIRE(v2.is_irreducible());
    CHECK(v2.certificate() == certificate_kind::gauss_pipeline);

    CHECK(gauss_irreducible_over_int(make(Z, m23, {{q(2), 1}}))
              .is_irreducible());

    CHECK(gauss_irreducible_over_int(make(Z, g1, {{q(0), 1}})).kind() ==
          verdict_kind::unit);
    CHECK(gauss_irreducible_over_int(make(Z, g1, {{q(0), -1}})).kind() ==
          verdict_kind::unit);
    CHECK(gauss_irreducible_over_int(make(Z, g1, {})).kind() ==
          verdict_kind::zero);
    auto v6 = gauss_irreducible_over_int(make(Z, g1, {{q(0), 6}}));
    CHECK(v6.kind() == verdict_kind::inapplicable);
    CHECK(v6.reason().find("constant") != std::string::npos);

    CHECK_THROWS_AS(
        gauss_irreducible_over_int(make(Q, g1, {{q(1), 1}, {q(0), 1}})),
        domain_error);
}
