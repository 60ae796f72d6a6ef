#pragma once

#include <utility>

#include "skewsieve/errors.hpp"
#include "skewsieve/numeric.hpp"

namespace skewsieve {

// Closed interval with exact rational endpoints.  All constructions round
// outward, so a value proved to lie inside stays inside; comparisons
// against rationals are conclusive only when the whole interval is on one
// side.  Precision is the number of dyadic bits kept by rounded().
class Interval {
  public:
    Interval() = default;
    Interval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw Error("Interval: lo > hi");
    }

    static Interval point(Rat v) { return Interval(v, v); }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }

    bool contains(const Rat& v) const { return lo_ <= v && v <= hi_; }
    bool certainly_le(const Rat& v) const { return hi_ <= v; }
    bool certainly_lt(const Rat& v) const { return hi_ < v; }
    bool certainly_ge(const Rat& v) const { return lo_ >= v; }
    bool certainly_positive() const { return lo_ > 0; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return {a.lo_ + b.lo_, a.hi_ + b.hi_};
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return {a.lo_ - b.hi_, a.hi_ - b.lo_};
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        Rat c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
        Rat lo = c[0], hi = c[0];
        for (int i = 1; i < 4; ++i) {
            if (c[i] < lo) lo = c[i];
            if (c[i] > hi) hi = c[i];
        }
        return {lo, hi};
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.lo_ <= 0 && b.hi_ >= 0) throw Error("Interval: division by interval through 0");
        return a * Interval(Rat(1) / b.hi_, Rat(1) / b.lo_);
    }

    // Outward rounding to denominators 2^bits; keeps chained products small.
    Interval rounded(int bits) const {
        const Int n = Int(1) << bits;
        return {floor_scaled(lo_, n), ceil_scaled(hi_, n)};
    }

  private:
    static Rat floor_scaled(const Rat& v, const Int& n) {
        Int num = numerator(v) * n, den = denominator(v);
        Int q = num / den;
        if (num < 0 && q * den != num) --q;
        return Rat(q, n);
    }
    static Rat ceil_scaled(const Rat& v, const Int& n) {
        Int num = numerator(v) * n, den = denominator(v);
        Int q = num / den;
        if (num > 0 && q * den != num) ++q;
        return Rat(q, n);
    }

    Rat lo_ = 0, hi_ = 0;
};

// Enclosure of x^(1/k) for x >= 0 with width <= 2^(1-bits), via integer
// k-th roots of scaled numerators.
inline Interval root_enclosure(const Rat& x, int k, int bits) {
    if (x < 0) throw Error("root_enclosure: negative radicand");
    const Int n = Int(1) << bits;
    const Int nk = int_pow(n, k);
    Int lo_num = numerator(x) * nk / denominator(x);  // floor
    Int lo_root = int_kth_root_floor(lo_num, k);
    Int hi_num = lo_num + 1;  // ceil(x * n^k) <= floor + 1
    Int hi_root = int_kth_root_floor(hi_num, k);
    if (int_pow(hi_root, k) < hi_num) ++hi_root;
    return {Rat(lo_root, n), Rat(hi_root, n)};
}

inline Interval root_enclosure(const Interval& x, int k, int bits) {
    return {root_enclosure(x.lo(), k, bits).lo(), root_enclosure(x.hi(), k, bits).hi()};
}

inline Interval sqrt_enclosure(const Rat& x, int bits) { return root_enclosure(x, 2, bits); }

// Positive integer power, monotone on positive intervals.
inline Interval pow_interval(const Interval& x, long e) {
    if (x.lo() < 0) throw Error("pow_interval: negative base");
    Rat lo = 1, hi = 1;
    Rat bl = x.lo(), bh = x.hi();
    for (long i = 0; i < e; ++i) {
        lo *= bl;
        hi *= bh;
    }
    return {lo, hi};
}

namespace detail {

// Enclosure of e = sum 1/j!, remainder below 2/(J+1)!.
inline Interval e_enclosure(int bits) {
    Rat target = Rat(1, Int(1) << (bits + 4));
    Rat sum = 1, term = 1;
    int j = 1;
    while (true) {
        term /= j;
        sum += term;
        ++j;
        Rat rem = 2 * term / j;
        if (rem < target) return Interval(sum, sum + rem);
    }
}

}  // namespace detail

// Enclosure of e^x for rational x, by splitting off the integer part and
// summing the series on the fractional part.
inline Interval exp_enclosure(const Rat& x, int bits) {
    Int m = numerator(x) / denominator(x);
    if (x < 0 && m * denominator(x) != numerator(x)) --m;  // floor
    Rat f = x - Rat(m);  // 0 <= f < 1
    Rat target = Rat(1, Int(1) << (bits + 4));
    Rat sum = 1, term = 1;
    int j = 1;
    Rat rem;
    while (true) {
        term *= f;
        term /= j;
        sum += term;
        ++j;
        rem = 2 * term;  // f < 1, so the tail is below 2 * last term
        if (j > 2 && rem < target) break;
    }
    Interval ef(sum, sum + rem);
    Interval e = detail::e_enclosure(bits);
    long mi = static_cast<long>(m);
    Interval em = mi >= 0 ? pow_interval(e, mi)
                          : Interval(Rat(1), Rat(1)) / pow_interval(e, -mi);
    return (ef * em).rounded(bits);
}

// Enclosure of pi via Machin's formula with alternating arctan series.
inline Interval pi_enclosure(int bits) {
    Rat target = Rat(1, Int(1) << (bits + 6));
    auto arctan_inv = [&](long u) {
        Rat sum = 0, power = Rat(1, u);
        Rat u2 = Rat(1, static_cast<long long>(u) * u);
        int j = 0;
        while (true) {
            Rat term = power / (2 * j + 1);
            sum += (j % 2 == 0) ? term : -term;
            power *= u2;
            ++j;
            Rat next = power / (2 * j + 1);
            if (next < target) return Interval(sum - next, sum + next);
        }
    };
    Interval a5 = arctan_inv(5), a239 = arctan_inv(239);
    return (Interval::point(16) * a5 - Interval::point(4) * a239).rounded(bits);
}

}  // namespace skewsieve
