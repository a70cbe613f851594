#include "doctest.h"

#include "facta/errors.hpp"
#include "facta/poly.hpp"

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

} // namespace

TEST_CASE("coefficient rings") {
    CHECK(Z.str() == "int");
    CHECK(Q.str() == "rat");
    auto F7 = coeff_ring::prime_field(Int(7));
    CHECK(F7.str() == "fp:7");
    CHECK_THROWS_AS(coeff_ring::prime_field(Int(6)), domain_error);

    CHECK(F7.reduce(mpq_class(10)) == 3);
    CHECK(F7.reduce(mpq_class(-1)) == 6);
    CHECK(F7.reduce(mpq_class(1, 2)) == 4); // 2 * 4 = 8 = 1 mod 7
    CHECK_THROWS_AS(F7.reduce(mpq_class(1, 7)), domain_error);
    CHECK_THROWS_AS(Z.reduce(mpq_class(1, 2)), domain_error);
    CHECK(Q.reduce(mpq_class(4, 6)) == mpq_class(2, 3));
    CHECK(F7.inv(mpq_class(3)) == 5);
}

TEST_CASE("canonical form") {
    auto g6 = puiseux_monoid::grid(Int(6));
    auto f = make(Z, g6, {{q(5, 6), 3}, {q(1, 2), -1}, {q(0), 7}});
    REQUIRE(f.terms().size() == 3);
    CHECK(f.terms()[0].exponent == q(5, 6));
    CHECK(f.terms()[0].coeff == 3);
    CHECK(f.terms()[2].exponent == q(0));
    CHECK(f.str() == "3X^(5/6)-X^(1/2)+7");

    // merging and cancellation
    auto g2 = puiseux_monoid::grid(Int(2));
    CHECK(make(Z, g2, {{q(1, 2), 1}, {q(1, 2), -1}}).is_zero());
    auto merged = make(Z, g2, {{q(1, 2), 1}, {q(1, 2), 1}});
    REQUIRE(merged.terms().size() == 1);
    CHECK(merged.terms()[0].coeff == 2);

    // membership gate names the offending exponent
    auto m23 = puiseux_monoid::fin_gen({q(2), q(3)});
    CHECK_THROWS_WITH_AS(make(Z, m23, {{q(1), 5}}),
                         doctest::Contains("exponent 1"), domain_error);

    // idempotence: re-canonicalizing is the identity
    CHECK(poly_expr::make(f.ring(), f.monoid(), f.terms()) == f);
}

TEST_CASE("degree and coefficient accessors") {
    auto g6 = puiseux_monoid::grid(Int(6));
    auto f = make(Z, g6, {{q(5, 6), 3}, {q(1, 2), -1}, {q(0), 7}});
    CHECK(f.degree() == q(5, 6));
    CHECK(f.leading_coeff() == 3);
    CHECK(f.constant_coeff() == 7);
    CHECK(f.has_constant_term());

    auto g2 = puiseux_monoid::grid(Int(2));
    auto h = make(Z, g2, {{q(1, 2), 1}});
    CHECK(h.degree() == q(1, 2));
    CHECK(h.constant_coeff() == 0);
    CHECK_FALSE(h.has_constant_term());

    auto c = poly_expr::constant(Z, g2, mpq_class(7));
    CHECK(c.degree() == q(0));
    CHECK(c.leading_coeff() == 7);
    CHECK(c.constant_coeff() == 7);

    CHECK_THROWS_AS(poly_expr::zero(Z, g2).degree(), domain_error);
}

TEST_CASE("arithmetic") {
    auto g2 = puiseux_monoid::grid(Int(2));
    auto a = make(Z, g2, {{q(1, 2), 1}, {q(0), 1}});
    auto b = make(Z, g2, {{q(1, 2), 1}, {q(0), -1}});
    CHECK(a.mul(b) == make(Z, g2, {{q(1), 1}, {q(0), -1}})); // X - 1
    CHECK(a.add(b) == make(Z, g2, {{q(1, 2), 2}}));
    CHECK(a.sub(a).is_zero());
    CHECK(a.mul(poly_expr::zero(Z, g2)).is_zero());

    // squaring over F_2 halves into the Frobenius identity
    auto F2 = coeff_ring::prime_field(Int(2));
    auto pp2 = puiseux_monoid::p_power(Int(2));
    auto u = make(F2, pp2, {{q(1, 4), 1}, {q(0), 1}});
    CHECK(u.pow(2) == make(F2, pp2, {{q(1, 2), 1}, {q(0), 1}}));

    // mismatched carriers are rejected
    auto other = make(Z, puiseux_monoid::grid(Int(3)), {{q(1, 3), 1}});
    CHECK_THROWS_AS(a.add(other), domain_error);
    CHECK_THROWS_AS(a.mul(make(Q, g2, {{q(1), 1}})), domain_error);
}

TEST_CASE("ring laws on random samples") {
    auto g4 = puiseux_monoid::grid(Int(4));
    std::mt19937 rng(7);
    auto rand_poly = [&]() {
        std::vector<term> ts;
        int k = static_cast<int>(rng() % 4);
        for (int i = 0; i <= k; ++i)
            ts.push_back({q(static_cast<long>(rng() % 8), 4),
                          mpq_class(static_cast<long>(rng() % 11) - 5)});
        return poly_expr::make(Z, g4, ts);
    };
    for (int i = 0; i < 50; ++i) {
        auto f = rand_poly(), g = rand_poly(), h = rand_poly();
        CHECK(f.mul(g) == g.mul(f));
        CHECK(f.mul(g.mul(h)) == f.mul(g).mul(h));
        CHECK(f.mul(g.add(h)) == f.mul(g).add(f.mul(h)));
        if (!f.is_zero() && !g.is_zero())
            CHECK(f.mul(g).degree() == f.degree() + g.degree());
    }
}

TEST_CASE("content and primitivity") {
    auto g2 = puiseux_monoid::grid(Int(2));
    auto f = make(Z, g2, {{q(1, 2), 6}, {q(0), 4}});
    CHECK(content(f) == 2);
    CHECK_FALSE(is_primitive(f));
    CHECK(primitive_part(f) == make(Z, g2, {{q(1, 2), 3}, {q(0), 2}}));

    auto g6 = puiseux_monoid::grid(Int(6));
    CHECK(content(make(Z, g6, {{q(5, 6), 1}, {q(0), 2}})) == 1);
    CHECK(is_primitive(make(Z, g6, {{q(5, 6), 1}, {q(0), 2}})));
    CHECK(content(make(Z, g2, {{q(2), 9}, {q(3, 2), -3}, {q(0), 6}})) == 3);

    // fields: always primitive, content rejected
    auto r = make(Q, g2, {{q(1), 1}});
    CHECK(is_primitive(r));
    CHECK_THROWS_AS(content(r), domain_error);
    CHECK_THROWS_AS(content(poly_expr::zero(Z, g2)), domain_error);
}

TEST_CASE("content is multiplicative") {
    auto g6 = puiseux_monoid::grid(Int(6));
    std::mt19937 rng(11);
    auto rand_poly = [&]() {
        std::vector<term> ts;
        int k = static_cast<int>(rng() % 5);
        for (int i = 0; i <= k; ++i)
            ts.push_back({q(static_cast<long>(rng() % 12), 6),
                          mpq_class(static_cast<long>(rng() % 21) - 10)});
        return poly_expr::make(Z, g6, ts);
    };
    int done = 0;
    while (done < 60) {
        auto f = rand_poly(), g = rand_poly();
        if (f.is_zero() || g.is_zero())
            continue;
        CHECK(content(f.mul(g)) == content(f) * content(g));
        ++done;
    }
}

TEST_CASE("scalar content") {
    auto g2 = puiseux_monoid::grid(Int(2));
    auto f = make(Z, g2, {{q(1, 2), 3}, {q(0), 2}});
    CHECK(content(f.scale(mpq_class(-4))) == 4 * content(f));
    CHECK(content(f.scale(mpq_class(5))) == 5 * content(f));
}

TEST_CASE("eisenstein criterion") {
    auto g6 = puiseux_monoid::grid(Int(6));
    auto f = make(Z, g6, {{q(5, 6), 1}, {q(0), 2}});
    auto out = eisenstein_check(f, Int(2));
    CHECK(out.applicable);
    CHECK(out.prime == 2);

    // condition (3) fails: 4 = 2^2 divides the constant term
    auto g2 = puiseux_monoid::grid(Int(2));
    auto h = make(Z, g2, {{q(1, 2), 1}, {q(0), 4}});
    auto bad = eisenstein_check(h, Int(2));
    CHECK_FALSE(bad.applicable);
    CHECK(bad.reason.find("constant term") != std::string::npos);

    // primitivity is a hard precondition, not a reason
    auto g1 = puiseux_monoid::grid(Int(1));
    CHECK_THROWS_AS(
        eisenstein_check(make(Z, g1, {{q(1), 2}, {q(0), 6}}), Int(3)),
        domain_error);

    auto g4 = puiseux_monoid::grid(Int(4));
    auto k = make(Z, g4, {{q(7, 4), 1}, {q(1, 2), 6}, {q(0), 10}});
    CHECK(eisenstein_check(k, Int(2)).applicable);

    // missing constant term and wrong leading divisibility
    CHECK_FALSE(eisenstein_check(make(Z, g2, {{q(1), 1}, {q(1, 2), 2}}), Int(2))
                    .applicable);
    CHECK_FALSE(
        eisenstein_check(make(Z, g1, {{q(1), 2}, {q(0), 3}}), Int(2)).applicable);
}

TEST_CASE("eisenstein search") {
    auto g6 = puiseux_monoid::grid(Int(6));
    auto out = eisenstein_search(make(Z, g6, {{q(5, 6), 1}, {q(0), 2}}), Int(100));
    CHECK(out.applicable);
    CHECK(out.prime == 2);

    auto g1 = puiseux_monoid::grid(Int(1));
    CHECK_FALSE(
        eisenstein_search(make(Z, g1, {{q(1), 1}, {q(0), 1}}), Int(100)).applicable);

    auto g2 = puiseux_monoid::grid(Int(2));
    auto f = make(Z, g2, {{q(3, 2), 1}, {q(1), 12}, {q(0), 6}});
    auto got = eisenstein_search(f, Int(100));
    CHECK(got.applicable);
    CHECK(got.prime == 2);

    // first certifying prime in ascending order: 45 = 3^2 * 5 rules out 3
    auto g = make(Z, g1, {{q(2), 1}, {q(1), 15}, {q(0), 45}});
    auto got2 = eisenstein_search(g, Int(100));
    CHECK(got2.applicable);
    CHECK(got2.prime == 5);
}

TEST_CASE("frobenius root") {
    auto F2 = coeff_ring::prime_field(Int(2));
    auto pp2 = puiseux_monoid::p_power(Int(2));
    auto f = make(F2, pp2, {{q(1, 2), 1}, {q(0), 1}});
    auto out = frobenius_root(f);
    REQUIRE(out.root.has_value());
    CHECK(*out.root == make(F2, pp2, {{q(1, 4), 1}, {q(0), 1}}));
    CHECK(out.root->pow(2) == f);
    CHECK(out.root->str() == "X^(1/4)+1");

    auto F3 = coeff_ring::prime_field(Int(3));
    auto pp3 = puiseux_monoid::p_power(Int(3));
    auto g = make(F3, pp3, {{q(2, 3), 1}, {q(1, 3), 2}, {q(0), 1}});
    auto out3 = frobenius_root(g);
    REQUIRE(out3.root.has_value());
    CHECK(*out3.root ==
          make(F3, pp3, {{q(2, 9), 1}, {q(1, 9), 2}, {q(0), 1}}));
    CHECK(out3.root->pow(3) == g);
}

TEST_CASE("frobenius root blocking exponent") {
    auto F2 = coeff_ring::prime_field(Int(2));
    auto m23 = puiseux_monoid::fin_gen({q(2), q(3)});
    auto h = make(F2, m23, {{q(2), 1}, {q(0), 1}});
    auto out = frobenius_root(h);
    CHECK_FALSE(out.root.has_value());
    CHECK(out.blocking_exponent == q(1));

    CHECK_THROWS_AS(frobenius_root(poly_expr::zero(F2, m23)), domain_error);
    CHECK_THROWS_AS(
        frobenius_root(poly_expr::constant(coeff_ring::integers(), m23, 1)),
        domain_error);

    // over PPow(p) the root always exists for nonzero input
    auto pp2 = puiseux_monoid::p_power(Int(2));
    auto f = make(F2, pp2, {{q(5, 8), 1}, {q(1, 2), 1}, {q(0), 1}});
    auto r = frobenius_root(f);
    REQUIRE(r.root.has_value());
    CHECK(r.root->pow(2) == f);
}

TEST_CASE("rendering round trips through canonical text") {
    auto g6 = puiseux_monoid::grid(Int(6));
    CHECK(make(Z, g6, {{q(5, 6), 3}, {q(1, 2), -1}, {q(0), 7}}).str() ==
          "3X^(5/6)-X^(1/2)+7");
    CHECK(make(Z, g6, {{q(1), 1}}).str() == "X");
    CHECK(make(Z, g6, {{q(2), -1}, {q(0), -1}}).str() == "-X^2-1");
    CHECK(make(Z, g6, {{q(1, 2), 1}, {q(0), -1}}).str() == "X^(1/2)-1");
    CHECK(poly_expr::zero(Z, g6).str() == "0");
    CHECK(poly_expr::constant(Z, g6, mpq_class(-7)).str() == "-7");
    auto Qr = coeff_ring::rationals();
    CHECK(poly_expr::make(Qr, g6, {{q(1), mpq_class(1, 2)}}).str() == "1/2X");
}
