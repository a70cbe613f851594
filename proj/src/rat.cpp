#include "facta/rat.hpp"

#include "facta/errors.hpp"

namespace facta {

rat::rat(const Int& num, const Int& den) {
    if (den == 0)
        throw domain_error("rat: denominator must be positive, got 0");
    if (sgn(den) < 0)
        throw domain_error("rat: denominator must be positive, got " + den.get_str());
    if (sgn(num) < 0)
        throw domain_error("rat: negative value " + num.get_str() + "/" + den.get_str() +
                           " is not representable");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

rat::rat(const Int& n) : rat(n, Int(1)) {}

rat::rat(long n) : rat(Int(n), Int(1)) {}

rat rat::parse(std::string_view text) {
    auto fail = [&](std::size_t pos, const char* what) -> rat {
        throw parse_error(pos, what);
    };
    std::size_t i = 0;
    auto read_digits = [&](const char* what) {
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start)
            fail(start, what);
        return std::string(text.substr(start, i - start));
    };
    Int num(read_digits("digit"));
    Int den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = Int(read_digits("digit after '/'"));
        if (den == 0)
            throw domain_error("rat: denominator must be positive, got 0");
    }
    if (i != text.size())
        fail(i, "end of rational literal");
    return rat(num, den);
}

rat rat::operator+(const rat& o) const {
    rat r;
    r.q_ = q_ + o.q_;
    return r;
}

rat rat::operator-(const rat& o) const {
    if (q_ < o.q_)
        throw domain_error("rat: subtraction " + str() + " - " + o.str() +
                           " would go below zero");
    rat r;
    r.q_ = q_ - o.q_;
    return r;
}

rat rat::operator*(const rat& o) const {
    rat r;
    r.q_ = q_ * o.q_;
    return r;
}

rat rat::operator/(const rat& o) const {
    if (o.is_zero())
        throw domain_error("rat: division by zero");
    rat r;
    r.q_ = q_ / o.q_;
    return r;
}

std::string rat::str() const {
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Int lcm_of_denominators(std::span<const rat> qs) {
    if (qs.empty())
        throw domain_error("lcm_of_denominators: empty list");
    Int l(1);
    for (const rat& q : qs)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), Int(q.den()).get_mpz_t());
    return l;
}

bool is_prime(const Int& n) {
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_power_of(const Int& n, const Int& p) {
    if (n < 1)
        throw domain_error("is_power_of: argument must be >= 1");
    if (p < 2)
        throw domain_error("is_power_of: base must be >= 2");
    Int m = n;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()))
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    return m == 1;
}

std::vector<Int> prime_divisors_up_to(const Int& n, const Int& bound) {
    if (n < 1)
        throw domain_error("prime_divisors_up_to: argument must be >= 1");
    std::vector<Int> out;
    Int m = n;
    for (Int d(2); d <= bound; ++d) {
        if (m == 1)
            break;
        if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            out.push_back(d);
            while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t()))
                mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
        }
    }
    return out;
}

} // namespace facta
