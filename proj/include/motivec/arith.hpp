#pragma once

// Exact integer arithmetic for the engine: arbitrary-precision naturals,
// verified primes, p-adic valuations and binomial coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace motivec {

// Arbitrary-precision integer. Library operations only ever produce
// non-negative values.
using Natural = boost::multiprecision::cpp_int;

namespace detail {

inline bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

} // namespace detail

// A primality-checked prime number.
class Prime {
public:
    explicit Prime(long long value) : value_(value) {
        if (!detail::is_prime(value))
            throw std::domain_error("Prime: " + std::to_string(value) +
                                    " is not prime");
    }

    [[nodiscard]] long long value() const noexcept { return value_; }

    auto operator<=>(const Prime&) const = default;

private:
    long long value_;
};

// base^exp over machine integers; exponents here stay at desk scale.
inline long long ipow(long long base, long long exp) {
    if (exp < 0) throw std::domain_error("ipow: negative exponent");
    long long r = 1;
    for (long long i = 0; i < exp; ++i) {
        if (base != 0 && r > (1LL << 62) / std::max<long long>(1, std::abs(base)))
            throw std::overflow_error("ipow: result does not fit");
        r *= base;
    }
    return r;
}

// p-adic valuation of x >= 1.
inline int vp(Natural x, const Prime& p) {
    if (x <= 0) throw std::domain_error("vp: argument must be positive");
    const Natural q(p.value());
    int e = 0;
    while (x % q == 0) {
        x /= q;
        ++e;
    }
    return e;
}

inline int vp(long long x, const Prime& p) { return vp(Natural(x), p); }

// Binomial coefficient, exact; 0 outside 0 <= k <= n.
inline Natural binom(long long n, long long k) {
    if (n < 0) throw std::domain_error("binom: n must be non-negative");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Natural r = 1;
    // Each partial product r is itself a binomial, so the division is exact.
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// v_p(binom(n, k)) by carry counting: the number of carries when adding
// k and n-k in base p. Requires 0 <= k <= n.
inline int vp_binom(long long n, long long k, const Prime& p) {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("vp_binom: requires 0 <= k <= n");
    const long long q = p.value();
    long long a = k;
    long long b = n - k;
    int carries = 0;
    int carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        const long long digit_sum = a % q + b % q + carry;
        carry = digit_sum >= q ? 1 : 0;
        carries += carry;
        a /= q;
        b /= q;
    }
    return carries;
}

} // namespace motivec
