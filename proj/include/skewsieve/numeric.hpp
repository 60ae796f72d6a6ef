#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace skewsieve {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// multinomial(sum parts; parts...)
inline Int multinomial(const std::vector<long>& parts) {
    long total = 0;
    Int r = 1;
    for (long p : parts) {
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline long divisor_count(long n) { return static_cast<long>(divisors(n).size()); }

// Number-theoretic Moebius function, by trial factorization.
inline int mobius(long n) {
    int result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

// floor(a^(1/k)) for a >= 0, k >= 1, by Newton iteration.
inline Int int_kth_root_floor(const Int& a, int k) {
    if (a < 0) throw std::domain_error("int_kth_root_floor: negative radicand");
    if (a == 0 || k == 1) return a;
    // initial guess from bit length, rounded up
    unsigned long bits = boost::multiprecision::msb(a) + 1;
    Int x = Int(1) << (bits / k + 1);
    while (true) {
        // next = ((k-1)*x + a / x^(k-1)) / k
        Int xk1 = int_pow(x, k - 1);
        Int next = ((k - 1) * x + a / xk1) / k;
        if (next >= x) break;
        x = next;
    }
    while (int_pow(x, k) > a) --x;
    while (int_pow(x + 1, k) <= a) ++x;
    return x;
}

}  // namespace skewsieve
