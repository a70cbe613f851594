#include "doctest.h"

#include "facta/errors.hpp"
#include "facta/unipoly.hpp"

#include <random>

using namespace facta;

namespace {

int_poly ip(std::vector<long> cs) {
    std::vector<Int> v;
    for (long x : cs)
        v.emplace_back(x);
    return int_poly::from_coeffs(std::move(v));
}

int_poly rebuild(const int_factorization& F) {
    int_poly out = int_poly::from_coeffs({F.unit_content});
    for (const auto& [f, m] : F.factors)
        for (unsigned long i = 0; i < m; ++i)
            out = mul(out, f);
    return out;
}

fp_poly fpp(unsigned long p, std::vector<unsigned long> cs) {
    return fp_poly::from_coeffs(p, std::move(cs));
}

fp_poly rebuild(const fp_factorization& F, unsigned long p) {
    fp_poly out = fpp(p, {F.unit});
    for (const auto& [f, m] : F.factors)
        for (unsigned long i = 0; i < m; ++i)
            out = mul(out, f);
    return out;
}

} // namespace

TEST_CASE("integer polynomial arithmetic") {
    auto a = ip({-1, 0, 1}); // Y^2 - 1
    auto b = ip({1, 1});     // Y + 1
    CHECK(mul(b, ip({-1, 1})) == a);
    CHECK(add(a, neg(a)).is_zero());
    CHECK(derivative(a) == ip({0, 2}));
    CHECK(eval(a, Int(3)) == 8);
    CHECK(content(ip({4, -6, 2})) == 2);
    CHECK(primitive_part(ip({4, -6, 2})) == ip({2, -3, 1}));
    CHECK(primitive_part(ip({0, -2})) == ip({0, 1})); // sign normalization
    CHECK(divide_exact(a, b) == ip({-1, 1}));
    CHECK_FALSE(divide_exact(a, ip({1, 2})).has_value());
    CHECK(poly_gcd(mul(a, b), mul(b, b)) == mul(b, b)); // (Y+1)^2 divides both
    CHECK(poly_gcd(a, mul(b, ip({2, 1}))) == b);
    CHECK(poly_gcd(ip({2, 2}), ip({4})) == ip({1}));
}

TEST_CASE("integer factorization basics") {
    auto F = factor_int_univariate(ip({-1, 0, 1})); // Y^2 - 1
    CHECK(F.unit_content == 1);
    REQUIRE(F.factors.size() == 2);
    CHECK(F.factors[0].poly == ip({-1, 1}));
    CHECK(F.factors[1].poly == ip({1, 1}));

    auto G = factor_int_univariate(ip({2, 2})); // 2Y + 2
    CHECK(G.unit_content == 2);
    REQUIRE(G.factors.size() == 1);
    CHECK(G.factors[0].poly == ip({1, 1}));

    auto H = factor_int_univariate(ip({2, 0, 0, 0, 0, 1})); // Y^5 + 2
    CHECK(H.unit_content == 1);
    REQUIRE(H.factors.size() == 1);
    CHECK(H.factors[0].multiplicity == 1);

    // negative lead: unit carries the sign
    auto N = factor_int_univariate(ip({-1, -1}));
    CHECK(N.unit_content == -1);
    CHECK(N.factors[0].poly == ip({1, 1}));

    // Y-power extraction and multiplicity
    auto Y = factor_int_univariate(ip({0, 0, 1, 1})); // Y^2 (Y + 1)
    REQUIRE(Y.factors.size() == 2);
    CHECK(Y.factors[0].poly == ip({0, 1}));
    CHECK(Y.factors[0].multiplicity == 2);
    CHECK(Y.factors[1].poly == ip({1, 1}));

    auto S = factor_int_univariate(mul(ip({1, 0, 1}), ip({1, 0, 1}))); // (Y^2+1)^2
    REQUIRE(S.factors.size() == 1);
    CHECK(S.factors[0].poly == ip({1, 0, 1}));
    CHECK(S.factors[0].multiplicity == 2);

    auto C = factor_int_univariate(ip({-1, 0, 0, 1})); // Y^3 - 1
    REQUIRE(C.factors.size() == 2);
    CHECK(C.factors[0].poly == ip({-1, 1}));
    CHECK(C.factors[1].poly == ip({1, 1, 1}));

    CHECK(factor_int_univariate(ip({6})).unit_content == 6);
    CHECK(factor_int_univariate(ip({6})).factors.empty());
    CHECK_THROWS_AS(factor_int_univariate(int_poly::zero()), domain_error);
}

TEST_CASE("degree bound is enforced") {
    std::vector<Int> big(10, Int(1)); // degree 9
    CHECK_THROWS_AS(factor_int_univariate(int_poly::from_coeffs(big)),
                    oracle_scale_error);
    oracle_config wide;
    wide.degree_bound = 16;
    CHECK_NOTHROW(factor_int_univariate(int_poly::from_coeffs(big), wide));
}

TEST_CASE("interpolation and lifting paths agree") {
    std::mt19937 rng(20240817);
    oracle_config kron; // default: everything through interpolation
    oracle_config lift;
    lift.degree_bound = 8;
    lift.kronecker_cutoff = 1; // everything through the Hensel path
    int done = 0;
    while (done < 120) {
        std::vector<Int> cs;
        int deg = 2 + static_cast<int>(rng() % 6);
        for (int i = 0; i <= deg; ++i)
            cs.emplace_back(static_cast<long>(rng() % 19) - 9);
        int_poly P = int_poly::from_coeffs(cs);
        if (P.degree() < 2)
            continue;
        auto A = factor_int_univariate(P, kron);
        auto B = factor_int_univariate(P, lift);
        CHECK(rebuild(A) == P);
        REQUIRE(A.factors.size() == B.factors.size());
        CHECK(A.unit_content == B.unit_content);
        for (std::size_t i = 0; i < A.factors.size(); ++i) {
            CHECK(A.factors[i].poly == B.factors[i].poly);
            CHECK(A.factors[i].multiplicity == B.factors[i].multiplicity);
        }
        ++done;
    }
}

TEST_CASE("structured integer products factor back") {
    // multiply known irreducibles and require the exact multiset back
    auto p1 = ip({1, 1});        // Y + 1
    auto p2 = ip({3, -1, 1});    // Y^2 - Y + 3 (no rational root, disc < 0)
    auto p3 = ip({2, 0, 0, 1});  // Y^3 + 2 (Eisenstein at 2 classically)
    auto P = mul(mul(p1, p2), p3);
    auto F = factor_int_univariate(P);
    REQUIRE(F.factors.size() == 3);
    CHECK(F.factors[0].poly == p1);
    CHECK(F.factors[1].poly == p2);
    CHECK(F.factors[2].poly == p3);
    CHECK(rebuild(F) == P);

    auto scaled = factor_int_univariate(mul(ip({-6}), mul(p1, p1)));
    CHECK(scaled.unit_content == -6);
    REQUIRE(scaled.factors.size() == 1);
    CHECK(scaled.factors[0].multiplicity == 2);
}

TEST_CASE("fp polynomial arithmetic") {
    auto a = fpp(5, {1, 2, 3});
    auto b = fpp(5, {4, 1});
    auto [q, r] = divmod(a, b);
    CHECK(add(mul(q, b), r) == a);
    CHECK(r.degree() < b.degree());
    CHECK(monic(fpp(5, {2, 4})) == fpp(5, {3, 1}));
    CHECK(poly_gcd(mul(b, b), mul(b, fpp(5, {1, 1}))) == monic(b));
    CHECK(derivative(fpp(5, {1, 1, 1, 1, 1, 1})) == fpp(5, {1, 2, 3, 4, 0}));
    CHECK(powmod(fpp(5, {0, 1}), Int(25), fpp(5, {3, 1})) == fpp(5, {2}));
    CHECK_THROWS_AS(factor_fp_complete(fpp(4, {1, 1})), domain_error);
}

TEST_CASE("fp factorization examples") {
    auto F = factor_fp_univariate(fpp(2, {1, 0, 1})); // Y^2 + 1 over F_2
    CHECK(F.unit == 1);
    REQUIRE(F.factors.size() == 1);
    CHECK(F.factors[0].poly == fpp(2, {1, 1}));
    CHECK(F.factors[0].multiplicity == 2);

    auto G = factor_fp_univariate(fpp(3, {1, 0, 1})); // irreducible over F_3
    REQUIRE(G.factors.size() == 1);
    CHECK(G.factors[0].poly == fpp(3, {1, 0, 1}));
    CHECK(G.factors[0].multiplicity == 1);

    auto H = factor_fp_univariate(fpp(2, {0, 1, 0, 1})); // Y^3 + Y = Y (Y+1)^2
    REQUIRE(H.factors.size() == 2);
    CHECK(H.factors[0].poly == fpp(2, {0, 1}));
    CHECK(H.factors[0].multiplicity == 1);
    CHECK(H.factors[1].poly == fpp(2, {1, 1}));
    CHECK(H.factors[1].multiplicity == 2);

    auto U = factor_fp_univariate(fpp(5, {3, 2})); // unit normalization
    CHECK(U.unit == 2);
    REQUIRE(U.factors.size() == 1);
    CHECK(U.factors[0].poly == fpp(5, {4, 1})); // 2(Y + 4) = 2Y + 3

    CHECK_THROWS_AS(factor_fp_univariate(fp_poly::zero(3)), domain_error);
}

TEST_CASE("fp scale bounds") {
    CHECK_THROWS_AS(factor_fp_univariate(fpp(17, {1, 1})), oracle_scale_error);
    std::vector<unsigned long> big(14, 1); // degree 13
    CHECK_THROWS_AS(factor_fp_univariate(fp_poly::from_coeffs(2, big)),
                    oracle_scale_error);
    CHECK_NOTHROW(factor_fp_complete(fpp(17, {1, 1})));
}

TEST_CASE("trial division and general fp factorizer agree") {
    std::mt19937 rng(99);
    const unsigned long primes[] = {2, 3, 5, 7};
    int done = 0;
    while (done < 160) {
        unsigned long p = primes[rng() % 4];
        int deg = 1 + static_cast<int>(rng() % 8);
        std::vector<unsigned long> cs;
        for (int i = 0; i <= deg; ++i)
            cs.push_back(rng() % p);
        fp_poly P = fp_poly::from_coeffs(p, std::move(cs));
        if (P.degree() < 1)
            continue;
        auto A = factor_fp_univariate(P);
        auto B = factor_fp_complete(P);
        CHECK(A.unit == B.unit);
        REQUIRE(A.factors.size() == B.factors.size());
        for (std::size_t i = 0; i < A.factors.size(); ++i) {
            CHECK(A.factors[i].poly == B.factors[i].poly);
            CHECK(A.factors[i].multiplicity == B.factors[i].multiplicity);
        }
        CHECK(rebuild(A, p) == P);
        ++done;
    }
}

TEST_CASE("general fp factorizer handles larger inputs") {
    // (Y^2 + Y + 2)(Y^3 + Y + 1) over F_13, plus a squarefree tower
    auto f = mul(fpp(13, {2, 1, 1}), fpp(13, {1, 1, 0, 1}));
    auto F = factor_fp_complete(f);
    CHECK(rebuild(F, 13) == f);
    Int total(0);
    for (const auto& [g, m] : F.factors)
        total += Int(g.degree()) * Int(m);
    CHECK(total == 5);

    auto sq = mul(mul(fpp(7, {3, 1}), fpp(7, {3, 1})), fpp(7, {1, 0, 1}));
    auto G = factor_fp_complete(sq);
    CHECK(rebuild(G, 7) == sq);
    REQUIRE(G.factors.size() == 2);
    CHECK(G.factors[0].poly == fpp(7, {3, 1}));
    CHECK(G.factors[0].multiplicity == 2);
}
