#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "skewsieve/borderstrip.hpp"
#include "skewsieve/interval.hpp"
#include "skewsieve/numeric.hpp"
#include "skewsieve/partition.hpp"
#include "skewsieve/tableaux.hpp"

namespace skewsieve {

struct BoundReport {
    std::string claim;
    std::string range;
    std::string margin;  // certified lower bound on the worst-case margin
    bool pass = false;
    std::string notes;
};

inline std::string rat_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Certified enclosure of n! from the two-sided factorial approximation
// sqrt(2 pi) n^(n+1/2) e^(-n + r_n) with 1/(12n+1) < r_n < 1/(12n).
inline Interval robbins_bounds(int n, int bits = 96) {
    Interval sqrt2pi = root_enclosure(Interval::point(2) * pi_enclosure(bits), 2, bits);
    Int nn = int_pow(n, n);
    Interval sqrtn = sqrt_enclosure(n, bits);
    Interval lo_exp = exp_enclosure(Rat(-n) + Rat(1, 12 * n + 1), bits);
    Interval hi_exp = exp_enclosure(Rat(-n) + Rat(1, 12 * n), bits);
    Interval base = sqrt2pi * Interval::point(nn) * sqrtn;
    return {(base * lo_exp).lo(), (base * hi_exp).hi()};
}

// Q(n, d) = (d^n / multinomial(n; n/d, ..., n/d))^(1/d), the growth factor
// in the border-strip count bound.
inline Interval q_fl(int n, int d, int bits = 96) {
    if (d < 1 || n % d != 0) throw Error("q_fl: d must divide n");
    Rat ratio = Rat(int_pow(d, n) * int_pow(factorial(n / d), d), factorial(n));
    return root_enclosure(ratio, d, bits);
}

// B_n(x) = sum over d | n of Q(n, d) x^(1/d - 1)
inline Interval b_n(int n, const Rat& x, int bits = 96) {
    if (x < 1) throw Error("b_n: x must be at least 1");
    Interval sum = Interval::point(0);
    Interval inv_x = Interval::point(Rat(1) / x);
    for (long d : divisors(n)) {
        Interval xr = root_enclosure(x, static_cast<int>(d), bits);
        sum = sum + q_fl(n, static_cast<int>(d), bits) * xr * inv_x;
    }
    return sum.rounded(bits);
}

// g_n(x) = 1 + sqrt(n) x^(-1/2) + 2 n x^(-2/3), the envelope used above
// n = 120.
inline Interval g_n(int n, const Rat& x, int bits = 96) {
    Interval one = Interval::point(1);
    Interval t1 = sqrt_enclosure(n, bits) / root_enclosure(x, 2, bits);
    Interval t2 = Interval::point(2 * n) / root_enclosure(x * x, 3, bits);
    return (one + t1 + t2).rounded(bits);
}

// B_n(n^2/3) <= 2 for 9 <= n <= 120, with escalating precision.
inline BoundReport verify_lemma_9_120() {
    BoundReport report{"lemma9-120", "9 <= n <= 120", "", false, ""};
    std::optional<Rat> worst;
    for (int n = 9; n <= 120; ++n) {
        Rat x = Rat(n * n, 3);
        bool conclusive = false;
        for (int bits : {96, 192, 384, 768}) {
            Interval b = b_n(n, x, bits);
            if (b.certainly_le(2)) {
                Rat margin = Rat(2) - b.hi();
                if (!worst || margin < *worst) worst = margin;
                conclusive = true;
                break;
            }
            if (b.lo() > 2) {
                report.margin = rat_string(b.lo() - 2);
                report.notes = "certified violation at n = " + std::to_string(n);
                return report;
            }
        }
        if (!conclusive) {
            report.notes = "inconclusive at n = " + std::to_string(n);
            return report;
        }
    }
    report.pass = true;
    report.margin = rat_string(*worst);
    return report;
}

// Two multinomial inequalities: the stretched-to-plain quotient bound
//   binom(dm; d m_j) / binom(m; m_j) >= d^(-(k-1)/2) (m^m / prod m_j^m_j)^(d-1)
// and, for d, k > 1, the divisor-count corollary
//   binom(dm; d m_j) / binom(m; m_j) >= prod (tau(d m_j) - 1).
// Exact multinomials on the left; the right side is exact unless k is even
// and d^(k-1) is not a perfect square, in which case intervals decide.
inline BoundReport verify_multinomial_lemmas(int limit) {
    BoundReport report{"multinomial", "d <= 5, k <= 4, m <= " + std::to_string(limit), "", false,
                       ""};
    std::optional<Rat> worst;
    auto note_margin = [&](const Rat& margin) {
        if (!worst || margin < *worst) worst = margin;
    };
    // compositions as weakly decreasing tuples; the inequalities are
    // symmetric in the m_j
    std::vector<std::vector<int>> tuples;
    std::vector<int> current;
    std::function<void(int, int)> gen = [&](int remaining, int max_part) {
        if (static_cast<int>(current.size()) > 4) return;
        if (remaining == 0) {
            if (!current.empty()) tuples.push_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            gen(remaining - p, p);
            current.pop_back();
        }
    };
    for (int m = 1; m <= limit; ++m) gen(m, m);

    for (const auto& tuple : tuples) {
        const int k = static_cast<int>(tuple.size());
        int m = 0;
        for (int v : tuple) m += v;
        for (int d = 1; d <= 5; ++d) {
            std::vector<long> parts(tuple.begin(), tuple.end());
            std::vector<long> stretched;
            for (int v : tuple) stretched.push_back(static_cast<long>(d) * v);
            Rat lhs = Rat(multinomial(stretched), multinomial(parts));
            // lemma right-hand side
            Rat base = Rat(int_pow(m, m));
            for (int v : tuple) base /= int_pow(v, v);
            Rat powered = 1;
            for (int i = 0; i < d - 1; ++i) powered *= base;
            bool exact_rhs = (k - 1) % 2 == 0;
            Int dk1 = int_pow(d, k - 1);
            Int root = int_kth_root_floor(dk1, 2);
            if (root * root == dk1) exact_rhs = true;
            if (exact_rhs) {
                Rat denom = (k - 1) % 2 == 0 ? Rat(int_pow(d, (k - 1) / 2)) : Rat(root);
                Rat rhs = powered / denom;
                if (lhs < rhs) {
                    report.notes = "lemma fails at d=" + std::to_string(d);
                    return report;
                }
                note_margin(lhs - rhs);
            } else {
                bool done = false;
                for (int bits : {96, 192, 384}) {
                    Interval denom = sqrt_enclosure(Rat(dk1), bits);
                    Interval rhs = Interval::point(powered) / denom;
                    if (rhs.certainly_le(lhs)) {
                        note_margin(lhs - rhs.hi());
                        done = true;
                        break;
                    }
                    if (rhs.lo() > lhs) {
                        report.notes = "lemma fails at d=" + std::to_string(d);
                        return report;
                    }
                }
                if (!done) {
                    report.notes = "inconclusive";
                    return report;
                }
            }
            // corollary
            if (d > 1 && k > 1) {
                Int rhs2 = 1;
                for (int v : tuple) rhs2 *= divisor_count(static_cast<long>(d) * v) - 1;
                if (lhs < Rat(rhs2)) {
                    report.notes = "corollary fails at d=" + std::to_string(d);
                    return report;
                }
                note_margin(lhs - Rat(rhs2));
            }
        }
    }
    report.pass = true;
    report.margin = worst ? rat_string(*worst) : "";
    return report;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// Main counting inequality: whenever |BST(shape, k)| >= 2 or n/k is prime,
// |BST(shape, k)| >= sum over d | n/k, d > 1 of |BST(shape, dk)|.
// Also records the k = 1 equality cases among shapes that are neither a
// single row nor a single column.
inline BoundReport verify_main_bound(int limit, int jobs = 1) {
    BoundReport report{"main-bound", "skew shapes of size <= " + std::to_string(limit), "", false,
                       ""};
    std::optional<Int> worst;
    std::vector<std::string> equality_cases;
    bool failed = false;
    std::string failure;

    for (int n = 1; n <= limit && !failed; ++n) {
        auto shapes = skew_shapes_of_size(n);
        const auto divs = divisors(n);
        std::vector<std::optional<Int>> worst_per(jobs);
        std::vector<std::vector<std::string>> equal_per(jobs);
        std::vector<std::string> fail_per(jobs);
        auto work = [&](int t) {
            for (std::size_t i = t; i < shapes.size(); i += jobs) {
                const SkewShape& shape = shapes[i];
                for (long k : divs) {
                    Int count_k = count_bst_uniform(shape, static_cast<int>(k));
                    bool applies = count_k >= 2 || is_prime(n / k);
                    if (!applies) continue;
                    Int rhs = 0;
                    for (long d : divisors(n / k))
                        if (d > 1) rhs += count_bst_uniform(shape, static_cast<int>(d * k));
                    Int margin = count_k - rhs;
                    if (margin < 0) {
                        fail_per[t] = shape.to_string() + " k=" + std::to_string(k);
                        return;
                    }
                    if (!worst_per[t] || margin < *worst_per[t]) worst_per[t] = margin;
                    bool row_or_column = shape.is_straight() &&
                                         (shape.outer().length() <= 1 || shape.outer().part(1) == 1);
                    if (k == 1 && margin == 0 && !row_or_column)
                        equal_per[t].push_back(shape.to_string());
                }
            }
        };
        if (jobs <= 1) {
            work(0);
        } else {
            std::vector<std::thread> threads;
            for (int t = 0; t < jobs; ++t) threads.emplace_back(work, t);
            for (auto& th : threads) th.join();
        }
        for (int t = 0; t < jobs; ++t) {
            if (!fail_per[t].empty()) {
                failed = true;
                failure = fail_per[t];
            }
            if (worst_per[t] && (!worst || *worst_per[t] < *worst)) worst = worst_per[t];
            for (auto& e : equal_per[t]) equality_cases.push_back(e);
        }
    }
    if (failed) {
        report.notes = "violated at " + failure;
        return report;
    }
    std::sort(equality_cases.begin(), equality_cases.end());
    report.pass = true;
    report.margin = worst ? worst->str() : "";
    std::string cases;
    for (const auto& c : equality_cases) cases += (cases.empty() ? "" : "; ") + c;
    report.notes = "k=1 equality cases: " + cases;
    return report;
}

// Base cases for the straight-shape bound: the summed counts are at most
// twice the tableau count up to size 8, and |SYT| >= n^2/3 for all
// partitions of 9 and 10 apart from rows, columns and near-hooks.
inline BoundReport verify_straight_base_cases() {
    BoundReport report{"base-cases", "|lambda| <= 8 and |lambda| in {9, 10}", "", false, ""};
    std::optional<Rat> worst;
    for (int n = 1; n <= 8; ++n) {
        for (const Partition& p : partitions_of(n)) {
            if (p.length() == 1 || p.part(1) == 1) continue;
            SkewShape shape(p);
            Int total = 0;
            for (long d : divisors(n)) total += count_bst_uniform(shape, static_cast<int>(d));
            Rat margin = Rat(2 * skew_syt_count(shape) - total);
            if (margin < 0) {
                report.notes = "sum bound fails at " + p.to_string();
                return report;
            }
            if (!worst || margin < *worst) worst = margin;
        }
    }
    for (int n = 9; n <= 10; ++n) {
        for (const Partition& p : partitions_of(n)) {
            if (p.length() == 1 || p.part(1) == 1) continue;
            if (p == Partition{n - 1, 1} || (p.part(1) == 2 && p.length() == n - 1)) continue;
            Rat margin = Rat(skew_syt_count(SkewShape(p))) - Rat(n * n, 3);
            if (margin < 0) {
                report.notes = "n^2/3 bound fails at " + p.to_string();
                return report;
            }
            if (!worst || margin < *worst) worst = margin;
        }
    }
    report.pass = true;
    report.margin = rat_string(*worst);
    return report;
}

// Q(n, d) <= sqrt(n), decided exactly by comparing Q^(2d) with n^d.
inline BoundReport verify_q_bound(int max_n = 200) {
    BoundReport report{"qsqrt", "n <= " + std::to_string(max_n) + ", d | n", "", false, ""};
    for (int n = 1; n <= max_n; ++n) {
        Int nfact = factorial(n);
        for (long d : divisors(n)) {
            Int qd_num = int_pow(d, n) * int_pow(factorial(n / d), d);  // Q^d * n!
            // Q^(2d) <= n^d  <=>  qd_num^2 <= n^d * (n!)^2
            if (qd_num * qd_num > int_pow(n, d) * nfact * nfact) {
                report.notes = "fails at n=" + std::to_string(n) + " d=" + std::to_string(d);
                return report;
            }
        }
    }
    report.pass = true;
    report.margin = "exact comparison";
    return report;
}

// Spot check of the imported tableau-count bound
// |BST(lambda, d)| <= Q(n, d) |SYT(lambda)|^(1/d), decided exactly.
inline bool fomin_lulov_spot_check(int max_n = 10) {
    for (int n = 1; n <= max_n; ++n) {
        Int nfact = factorial(n);
        for (const Partition& p : partitions_of(n)) {
            SkewShape shape(p);
            Int syt = skew_syt_count(shape);
            for (long d : divisors(n)) {
                Int bst = count_bst_uniform(shape, static_cast<int>(d));
                // bst^d * n! <= d^n * ((n/d)!)^d * syt
                if (int_pow(bst, d) * nfact >
                    int_pow(d, n) * int_pow(factorial(n / d), d) * syt)
                    return false;
            }
        }
    }
    return true;
}

}  // namespace skewsieve
