#pragma once

/// Exact nonnegative rationals on arbitrary-precision integers, plus the
/// small number-theory kit the rest of the library leans on. Values are
/// immutable once constructed and always stored reduced.

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace facta {

using Int = mpz_class;

/// Nonnegative rational q = num/den with gcd(num, den) = 1 and den >= 1.
/// Zero is represented as 0/1. Arithmetic is exact; subtraction below zero
/// and division by zero are rejected rather than wrapped.
class rat {
public:
    rat() : q_(0) {}
    rat(const Int& num, const Int& den);
    explicit rat(const Int& n);
    explicit rat(long n);

    /// Accepts "a" and "a/b" with nonnegative a and positive b.
    static rat parse(std::string_view text);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    rat operator+(const rat& o) const;
    rat operator-(const rat& o) const; // requires *this >= o
    rat operator*(const rat& o) const;
    rat operator/(const rat& o) const; // requires o > 0

    bool operator==(const rat& o) const { return q_ == o.q_; }
    bool operator!=(const rat& o) const { return q_ != o.q_; }
    bool operator<(const rat& o) const { return q_ < o.q_; }
    bool operator<=(const rat& o) const { return q_ <= o.q_; }
    bool operator>(const rat& o) const { return q_ > o.q_; }
    bool operator>=(const rat& o) const { return q_ >= o.q_; }

    /// "a/b", with "/b" omitted when b = 1.
    std::string str() const;

private:
    mpq_class q_; // canonical, >= 0
};

/// lcm of the denominators of a nonempty list; every element of the monoid
/// generated by qs has denominator dividing this.
Int lcm_of_denominators(std::span<const rat> qs);

bool is_prime(const Int& n);

/// True iff n = p^k for some k >= 0 (so 1 always qualifies). Requires n >= 1.
bool is_power_of(const Int& n, const Int& p);

/// Distinct prime divisors of n that are <= bound, ascending. n >= 1.
std::vector<Int> prime_divisors_up_to(const Int& n, const Int& bound);

} // namespace facta
