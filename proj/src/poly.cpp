#include "facta/poly.hpp"

#include "facta/errors.hpp"

#include <algorithm>

namespace facta {

coeff_ring coeff_ring::prime_field(const Int& p) {
    if (!is_prime(p))
        throw domain_error("coeff_ring: " + p.get_str() + " is not prime");
    return coeff_ring(ring_kind::prime_field, p);
}

const Int& coeff_ring::prime() const {
    if (kind_ != ring_kind::prime_field)
        throw domain_error("prime: ring has no characteristic prime");
    return p_;
}

mpq_class coeff_ring::reduce(const mpq_class& raw) const {
    mpq_class c = raw;
    c.canonicalize(); // mpq_class(a, b) does not reduce on its own
    switch (kind_) {
    case ring_kind::integers:
        if (c.get_den() != 1)
            throw domain_error("coefficient " + c.get_str() + " is not an integer");
        return c;
    case ring_kind::rationals:
        return c;
    case ring_kind::prime_field: {
        Int den_mod;
        mpz_fdiv_r(den_mod.get_mpz_t(), c.get_den().get_mpz_t(), p_.get_mpz_t());
        Int num_mod;
        mpz_fdiv_r(num_mod.get_mpz_t(), c.get_num().get_mpz_t(), p_.get_mpz_t());
        if (den_mod == 0)
            throw domain_error("coefficient " + c.get_str() +
                               " has no inverse mod " + p_.get_str());
        Int inv;
        mpz_invert(inv.get_mpz_t(), den_mod.get_mpz_t(), p_.get_mpz_t());
        Int r = num_mod * inv;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
        return mpq_class(r);
    }
    }
    return c; // unreachable
}

mpq_class coeff_ring::add(const mpq_class& a, const mpq_class& b) const {
    return reduce(a + b);
}

mpq_class coeff_ring::mul(const mpq_class& a, const mpq_class& b) const {
    return reduce(a * b);
}

mpq_class coeff_ring::neg(const mpq_class& a) const {
    return reduce(-a);
}

mpq_class coeff_ring::inv(const mpq_class& a) const {
    if (kind_ == ring_kind::integers)
        throw domain_error("inv: Z is not a field");
    if (sgn(a) == 0)
        throw domain_error("inv: division by zero");
    if (kind_ == ring_kind::rationals)
        return 1 / a;
    Int am;
    mpz_fdiv_r(am.get_mpz_t(), mpq_class(a).get_num().get_mpz_t(), p_.get_mpz_t());
    Int inv;
    mpz_invert(inv.get_mpz_t(), am.get_mpz_t(), p_.get_mpz_t());
    return mpq_class(inv);
}

std::string coeff_ring::coeff_str(const mpq_class& c) const {
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string coeff_ring::str() const {
    switch (kind_) {
    case ring_kind::integers:
        return "int";
    case ring_kind::rationals:
        return "rat";
    case ring_kind::prime_field:
        return "fp:" + p_.get_str();
    }
    return {};
}

poly_expr::poly_expr(coeff_ring R, puiseux_monoid M, std::vector<term> canonical)
    : ring_(std::move(R)), monoid_(std::move(M)), terms_(std::move(canonical)) {}

poly_expr poly_expr::make(coeff_ring R, puiseux_monoid M, std::vector<term> terms) {
    for (term& t : terms) {
        if (!M.member(t.exponent))
            throw domain_error("exponent " + t.exponent.str() +
                               " is not a member of the monoid");
        t.coeff = R.reduce(t.coeff);
    }
    std::sort(terms.begin(), terms.end(), [](const term& a, const term& b) {
        return b.exponent < a.exponent;
    });
    std::vector<term> canon;
    for (term& t : terms) {
        if (!canon.empty() && canon.back().exponent == t.exponent)
            canon.back().coeff = R.add(canon.back().coeff, t.coeff);
        else
            canon.push_back(std::move(t));
        if (!canon.empty() && sgn(canon.back().coeff) == 0)
            canon.pop_back();
    }
    return poly_expr(std::move(R), std::move(M), std::move(canon));
}

poly_expr poly_expr::zero(coeff_ring R, puiseux_monoid M) {
    return poly_expr(std::move(R), std::move(M), {});
}

poly_expr poly_expr::constant(coeff_ring R, puiseux_monoid M, const mpq_class& c) {
    return make(std::move(R), std::move(M), {{rat(), c}});
}

poly_expr poly_expr::monomial(coeff_ring R, puiseux_monoid M, const rat& e,
                              const mpq_class& c) {
    return make(std::move(R), std::move(M), {{e, c}});
}

rat poly_expr::degree() const {
    if (is_zero())
        throw domain_error("degree: zero polynomial has no degree");
    return terms_.front().exponent;
}

mpq_class poly_expr::leading_coeff() const {
    if (is_zero())
        throw domain_error("leading_coeff: zero polynomial");
    return terms_.front().coeff;
}

mpq_class poly_expr::constant_coeff() const {
    if (!terms_.empty() && terms_.back().exponent.is_zero())
        return terms_.back().coeff;
    return mpq_class(0);
}

bool poly_expr::has_constant_term() const {
    return !terms_.empty() && terms_.back().exponent.is_zero();
}

namespace {

void require_compatible(const poly_expr& f, const poly_expr& g) {
    if (f.ring() != g.ring())
        throw domain_error("operands live over different coefficient rings");
    if (f.monoid() != g.monoid())
        throw domain_error("operands live over different exponent monoids");
}

} // namespace

poly_expr poly_expr::add(const poly_expr& g) const {
    require_compatible(*this, g);
    // Merge two already-descending term lists.
    std::vector<term> out;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
        if (j == g.terms_.size() ||
            (i < terms_.size() && g.terms_[j].exponent < terms_[i].exponent)) {
            out.push_back(terms_[i++]);
        } else if (i == terms_.size() ||
                   terms_[i].exponent < g.terms_[j].exponent) {
            out.push_back(g.terms_[j++]);
        } else {
            mpq_class c = ring_.add(terms_[i].coeff, g.terms_[j].coeff);
            if (sgn(c) != 0)
                out.push_back({terms_[i].exponent, std::move(c)});
            ++i;
            ++j;
        }
    }
    return poly_expr(ring_, monoid_, std::move(out));
}

poly_expr poly_expr::sub(const poly_expr& g) const { return add(g.neg()); }

poly_expr poly_expr::mul(const poly_expr& g) const {
    require_compatible(*this, g);
    // Term-by-term convolution; exponent sums stay in the monoid because
    // monoids are closed under addition, so no membership re-check is needed.
    std::vector<term> raw;
    raw.reserve(terms_.size() * g.terms_.size());
    for (const term& a : terms_)
        for (const term& b : g.terms_)
            raw.push_back({a.exponent + b.exponent, ring_.mul(a.coeff, b.coeff)});
    std::sort(raw.begin(), raw.end(), [](const term& a, const term& b) {
        return b.exponent < a.exponent;
    });
    std::vector<term> out;
    for (term& t : raw) {
        if (!out.empty() && out.back().exponent == t.exponent)
            out.back().coeff = ring_.add(out.back().coeff, t.coeff);
        else
            out.push_back(std::move(t));
        if (!out.empty() && sgn(out.back().coeff) == 0)
            out.pop_back();
    }
    return poly_expr(ring_, monoid_, std::move(out));
}

poly_expr poly_expr::neg() const {
    std::vector<term> out = terms_;
    for (term& t : out)
        t.coeff = ring_.neg(t.coeff);
    return poly_expr(ring_, monoid_, std::move(out));
}

poly_expr poly_expr::scale(const mpq_class& c) const {
    mpq_class r = ring_.reduce(c);
    if (sgn(r) == 0)
        return zero(ring_, monoid_);
    std::vector<term> out = terms_;
    for (term& t : out)
        t.coeff = ring_.mul(t.coeff, r);
    return poly_expr(ring_, monoid_, std::move(out));
}

poly_expr poly_expr::pow(unsigned long e) const {
    poly_expr acc = constant(ring_, monoid_, 1);
    poly_expr base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc.mul(base);
        e >>= 1;
        if (e > 0)
            base = base.mul(base);
    }
    return acc;
}

std::string poly_expr::str() const {
    if (is_zero())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const term& t = terms_[i];
        mpq_class c = t.coeff;
        bool negative = sgn(c) < 0;
        if (i == 0) {
            if (negative)
                s += '-';
        } else {
            s += negative ? '-' : '+';
        }
        mpq_class mag = negative ? mpq_class(-c) : c;
        bool unit_coeff = (mag == 1);
        if (t.exponent.is_zero()) {
            s += ring_.coeff_str(mag);
            continue;
        }
        if (!unit_coeff)
            s += ring_.coeff_str(mag);
        s += 'X';
        if (t.exponent != rat(Int(1))) {
            s += '^';
            if (t.exponent.is_integer())
                s += t.exponent.str();
            else
                s += "(" + t.exponent.str() + ")";
        }
    }
    return s;
}

bool poly_expr::operator==(const poly_expr& o) const {
    return ring_ == o.ring_ && monoid_ == o.monoid_ && terms_ == o.terms_;
}

Int content(const poly_expr& f) {
    if (f.ring().kind() != ring_kind::integers)
        throw domain_error("content: defined over Z only");
    if (f.is_zero())
        throw domain_error("content: zero polynomial");
    Int g(0);
    for (const term& t : f.terms())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    return g;
}

bool is_primitive(const poly_expr& f) {
    if (f.is_zero())
        throw domain_error("is_primitive: zero polynomial");
    if (f.ring().is_field())
        return true;
    return content(f) == 1;
}

poly_expr primitive_part(const poly_expr& f) {
    if (f.is_zero())
        throw domain_error("primitive_part: zero polynomial");
    if (f.ring().is_field())
        return f;
    Int c = content(f);
    std::vector<term> out;
    for (const term& t : f.terms()) {
        Int q;
        mpz_divexact(q.get_mpz_t(), t.coeff.get_num().get_mpz_t(), c.get_mpz_t());
        out.push_back({t.exponent, mpq_class(q)});
    }
    return poly_expr::make(f.ring(), f.monoid(), std::move(out));
}

verdict verdict::irreducible(certificate_kind c) {
    verdict v;
    v.kind_ = verdict_kind::irreducible;
    v.cert_ = c;
    return v;
}

verdict verdict::irreducible_eisenstein(const Int& p) {
    verdict v;
    v.kind_ = verdict_kind::irreducible;
    v.cert_ = certificate_kind::eisenstein;
    v.prime_ = p;
    return v;
}

verdict verdict::reducible(poly_expr g, poly_expr h) {
    verdict v;
    v.kind_ = verdict_kind::reducible;
    v.witness_.emplace(std::move(g), std::move(h));
    return v;
}

verdict verdict::unit() {
    verdict v;
    v.kind_ = verdict_kind::unit;
    return v;
}

verdict verdict::zero() {
    verdict v;
    v.kind_ = verdict_kind::zero;
    return v;
}

verdict verdict::inapplicable(std::string reason) {
    verdict v;
    v.kind_ = verdict_kind::inapplicable;
    v.reason_ = std::move(reason);
    return v;
}

certificate_kind verdict::certificate() const {
    if (kind_ != verdict_kind::irreducible)
        throw domain_error("certificate: verdict is not irreducible");
    return cert_;
}

const Int& verdict::eisenstein_prime() const {
    if (kind_ != verdict_kind::irreducible || cert_ != certificate_kind::eisenstein)
        throw domain_error("eisenstein_prime: no Eisenstein certificate attached");
    return prime_;
}

const std::pair<poly_expr, poly_expr>& verdict::witness() const {
    if (!witness_)
        throw domain_error("witness: verdict carries no factor pair");
    return *witness_;
}

namespace {

eisenstein_outcome eis_fail(std::string reason) {
    eisenstein_outcome o;
    o.applicable = false;
    o.reason = std::move(reason);
    return o;
}

} // namespace

eisenstein_outcome eisenstein_check(const poly_expr& f, const Int& p) {
    if (f.ring().kind() != ring_kind::integers)
        throw domain_error("eisenstein_check: defined over Z only");
    if (f.is_zero() || f.is_constant())
        throw domain_error("eisenstein_check: requires positive degree");
    if (!is_primitive(f))
        throw domain_error("eisenstein_check: polynomial is not primitive");
    if (!is_prime(p))
        throw domain_error("eisenstein_check: " + p.get_str() + " is not prime");

    if (!f.has_constant_term())
        return eis_fail("constant term absent");
    const auto& ts = f.terms();
    const Int lead = ts.front().coeff.get_num();
    if (mpz_divisible_p(lead.get_mpz_t(), p.get_mpz_t()))
        return eis_fail(p.get_str() + " divides the leading coefficient");
    for (std::size_t i = 1; i < ts.size(); ++i) {
        Int c = ts[i].coeff.get_num();
        if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t()))
            return eis_fail(p.get_str() + " does not divide the coefficient of X^(" +
                            ts[i].exponent.str() + ")");
    }
    Int c0 = ts.back().coeff.get_num();
    Int p2 = p * p;
    if (mpz_divisible_p(c0.get_mpz_t(), p2.get_mpz_t()))
        return eis_fail(p.get_str() + "^2 divides the constant term");

    eisenstein_outcome o;
    o.applicable = true;
    o.prime = p;
    return o;
}

eisenstein_outcome eisenstein_search(const poly_expr& f, const Int& prime_bound) {
    if (f.ring().kind() != ring_kind::integers)
        throw domain_error("eisenstein_search: defined over Z only");
    if (f.is_zero() || f.is_constant())
        throw domain_error("eisenstein_search: requires positive degree");
    if (!is_primitive(f))
        throw domain_error("eisenstein_search: polynomial is not primitive");
    if (!f.has_constant_term())
        return eis_fail("constant term absent");
    Int c0 = abs(Int(f.constant_coeff().get_num()));
    for (const Int& p : prime_divisors_up_to(c0, prime_bound)) {
        eisenstein_outcome o = eisenstein_check(f, p);
        if (o.applicable)
            return o;
    }
    return eis_fail("no certifying prime divides the constant term (bound " +
                    prime_bound.get_str() + ")");
}

frobenius_outcome frobenius_root(const poly_expr& f) {
    if (f.ring().kind() != ring_kind::prime_field)
        throw domain_error("frobenius_root: defined over prime fields only");
    if (f.is_zero())
        throw domain_error("frobenius_root: zero polynomial");
    const rat p(f.ring().prime());
    std::vector<term> out;
    for (const term& t : f.terms()) {
        rat e = t.exponent / p;
        if (!f.monoid().member(e)) {
            frobenius_outcome fo;
            fo.blocking_exponent = e;
            return fo;
        }
        // In a prime field the p-th power map fixes every coefficient, so
        // each coefficient is its own p-th root.
        out.push_back({e, t.coeff});
    }
    frobenius_outcome fo;
    fo.root = poly_expr::make(f.ring(), f.monoid(), std::move(out));
    return fo;
}

} // namespace facta
