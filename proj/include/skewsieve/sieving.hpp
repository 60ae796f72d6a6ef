#pragma once

#include <map>
#include <string>
#include <vector>

#include "skewsieve/character.hpp"
#include "skewsieve/cyclotomic.hpp"
#include "skewsieve/errors.hpp"
#include "skewsieve/numeric.hpp"
#include "skewsieve/partition.hpp"
#include "skewsieve/tableaux.hpp"

namespace skewsieve {

enum class CspVerdict { Exists, FailsNonnegativity, FailsMobius, FailsDivisibility };

inline std::string to_string(CspVerdict v) {
    switch (v) {
        case CspVerdict::Exists: return "exists";
        case CspVerdict::FailsNonnegativity: return "fails_nonnegativity";
        case CspVerdict::FailsMobius: return "fails_mobius";
        case CspVerdict::FailsDivisibility: return "fails_divisibility";
    }
    return "?";
}

// Decision record for the existence of a cyclic group action with the
// given fixed-point values f(xi^d).  Raw values and all Moebius sums are
// kept so failures can be audited; orbit counts are filled on success.
struct CspCertificate {
    long order = 1;
    std::map<long, Int> values;       // d | order -> f(xi^d)
    std::map<long, Int> mobius_sums;  // k | order -> sum_{d|k} mu(k/d) f(xi^d)
    std::map<long, Int> orbit_counts;
    CspVerdict verdict = CspVerdict::Exists;
    long witness = 0;  // divisor at which the verdict was decided

    bool exists() const { return verdict == CspVerdict::Exists; }
};

// Criterion for f to be the fixed-point character of a cyclic group
// action of the given order: all values nonnegative, every Moebius sum
// nonnegative and divisible by k (the sums are k times the orbit counts).
inline CspCertificate aa_certificate(const std::map<long, Int>& values, long n) {
    CspCertificate cert;
    cert.order = n;
    cert.values = values;
    const auto divs = divisors(n);
    for (long d : divs)
        if (!values.count(d)) throw Error("aa_certificate: missing value at divisor " +
                                          std::to_string(d));
    for (long k : divs) {
        Int sum = 0;
        for (long d : divs)
            if (k % d == 0) sum += mobius(k / d) * values.at(d);
        cert.mobius_sums[k] = sum;
    }
    for (long d : divs) {
        if (values.at(d) < 0) {
            cert.verdict = CspVerdict::FailsNonnegativity;
            cert.witness = d;
            return cert;
        }
    }
    for (long k : divs) {
        const Int& sum = cert.mobius_sums.at(k);
        if (sum < 0) {
            cert.verdict = CspVerdict::FailsMobius;
            cert.witness = k;
            return cert;
        }
        if (sum % k != 0) {
            cert.verdict = CspVerdict::FailsDivisibility;
            cert.witness = k;
            return cert;
        }
        cert.orbit_counts[k] = sum / k;
    }
    return cert;
}

// Existence of a cyclic action on SYT(shape)^m with character
// fake_degree^m: the values are m-th powers of the characters at
// rectangular types.  A vanishing character (empty BST) counts as
// nonnegative.
inline CspCertificate csp_exists_power(const SkewShape& shape, int m) {
    const long n = shape.size();
    if (n < 1) throw Error("csp_exists_power: shape must be non-empty");
    std::map<long, Int> values;
    for (long d : divisors(n)) {
        Int chi = rect_character(shape, static_cast<int>(n / d), static_cast<int>(d));
        values[d] = int_pow(chi, m);
    }
    return aa_certificate(values, n);
}

// Hook shapes (a, 1^(n-a)): the unique tiling by m-strips has even height
// exactly when (a-1) mod m is even; the full-row hook a = n always
// carries the trivial action.
inline bool hook_csp(int a, int n) {
    if (a < 1 || a > n) throw Error("hook_csp: need 1 <= a <= n");
    if (a == n) return true;
    if (n % 2 == 0 || a % 2 == 0) return false;
    for (long m : divisors(n))
        if (m < a && ((a - 1) % m) % 2 != 0) return false;
    return true;
}

// Cyclic action of order m on SYT of a shape whose every row length is a
// multiple of m; values are fake-degree evaluations at powers of a
// primitive m-th root, reached through the order-n root as zeta = xi^(n/m).
inline CspCertificate stretched_csp(const SkewShape& shape, int m) {
    if (m < 1) throw Error("stretched_csp: order must be positive");
    for (int r = 1; r <= shape.rows(); ++r)
        if (shape.row_length(r) % m != 0)
            throw Error("stretched_csp: row " + std::to_string(r) +
                        " length not divisible by " + std::to_string(m));
    const long n = shape.size();
    std::map<long, Int> values;
    if (n == 0) {
        for (long d : divisors(m)) values[d] = 1;
    } else {
        const IntPolynomial fd = fake_degree(shape);
        for (long d : divisors(m)) values[d] = eval_at_root(fd, n, d * (n / m));
    }
    return aa_certificate(values, m);
}

// Rectangles a^b with the kappa-shifted fake degree, which is the
// q-analogue of the hook length formula.
inline CspCertificate rectangle_csp(int a, int b) {
    if (a < 1 || b < 1) throw Error("rectangle_csp: sides must be positive");
    Partition rect{std::vector<int>(b, a)};
    const long n = static_cast<long>(a) * b;
    const IntPolynomial shifted = q_hook_polynomial(rect);
    std::map<long, Int> values;
    for (long d : divisors(n)) values[d] = eval_at_root(shifted, n, d);
    return aa_certificate(values, n);
}

// Explicit order-n action on SYT((3,1^(n-3))), with tableaux identified
// by the two first-row entries (x, y) other than 1.
struct EtaAction {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;  // lexicographic
    std::vector<int> image;                  // pair index -> pair index

    int pair_index(int x, int y) const {
        auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(x, y));
        if (it == pairs.end() || *it != std::make_pair(x, y))
            throw Error("EtaAction: pair out of range");
        return static_cast<int>(it - pairs.begin());
    }

    std::vector<std::vector<int>> orbits() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(pairs.size(), false);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> orbit;
            int j = static_cast<int>(i);
            while (!seen[j]) {
                seen[j] = true;
                orbit.push_back(j);
                j = image[j];
            }
            out.push_back(std::move(orbit));
        }
        return out;
    }

    long fixed_points_of_power(long d) const {
        long count = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            int j = static_cast<int>(i);
            for (long step = 0; step < d; ++step) j = image[j];
            if (j == static_cast<int>(i)) ++count;
        }
        return count;
    }
};

inline EtaAction eta_action(int n) {
    if (n % 2 == 0 || n <= 3) throw Error("eta_action: n must be odd and greater than 3");
    EtaAction eta;
    eta.n = n;
    for (int x = 2; x < n; ++x)
        for (int y = x + 1; y <= n; ++y) eta.pairs.push_back({x, y});
    eta.image.resize(eta.pairs.size());
    for (std::size_t i = 0; i < eta.pairs.size(); ++i) {
        auto [x, y] = eta.pairs[i];
        std::pair<int, int> to;
        if (x == 2 && y == n) to = {2, n};
        else if (y <= n - 2) to = {x + 2, y + 2};
        else if (y == n - 1) to = {2, x + 1};
        else to = {3, x + 1};  // x > 2, y == n
        eta.image[i] = eta.pair_index(to.first, to.second);
    }
    return eta;
}

// The fake degree of the hook (3, 1^(n-3)) in closed form:
// q^((n-2)(n-3)/2) [n-1]_q [n-2]_q / [2]_q.
inline IntPolynomial eta_polynomial(int n) {
    IntPolynomial p = (q_int(n - 1) * q_int(n - 2)).divide_exact(q_int(2));
    return p.shifted((n - 2) * (n - 3) / 2);
}

}  // namespace skewsieve
