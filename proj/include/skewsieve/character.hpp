#pragma once

#include <map>
#include <vector>

#include "skewsieve/borderstrip.hpp"
#include "skewsieve/cyclotomic.hpp"
#include "skewsieve/errors.hpp"
#include "skewsieve/numeric.hpp"
#include "skewsieve/partition.hpp"
#include "skewsieve/tableaux.hpp"

namespace skewsieve {

// Murnaghan-Nakayama: signed sum over BST(shape, nu).  Runs the strip
// removal recursion directly, with heights read off as bead jumps.
inline Int mn_character(const SkewShape& shape, const Partition& nu) {
    if (nu.size() != shape.size())
        throw SizeMismatch("mn_character: |nu| differs from shape size");
    if (shape.size() == 0) return 1;
    detail::BstState state;
    state.init(shape);
    std::vector<int> scratch;
    Int total = 0;
    auto rec = [&](auto&& self, int j, int sign) -> void {
        if (j == 0) {
            total += sign;
            return;
        }
        const long s = nu.part(j);
        for (int idx = 0; idx < static_cast<int>(state.beads.size()); ++idx) {
            long b = state.beads[idx];
            long t = b - s;
            if (t < 0 || state.occupied(t)) continue;
            state.parts_after(idx, t, scratch);
            if (!state.contains_inner(scratch)) continue;
            int jumped = static_cast<int>(
                std::lower_bound(state.beads.begin(), state.beads.end(), b) -
                std::upper_bound(state.beads.begin(), state.beads.end(), t));
            std::vector<int> saved_parts = state.parts;
            std::vector<long> saved_beads = state.beads;
            state.apply(idx, t, scratch);
            self(self, j - 1, jumped % 2 == 0 ? sign : -sign);
            state.beads = saved_beads;
            state.parts = saved_parts;
        }
    };
    rec(rec, nu.length(), 1);
    return total;
}

// chi((m^d)) as a cancellation-free product: common sign times the number
// of tilings.  Agrees with mn_character(shape, (m^d)).
inline Int rect_character(const SkewShape& shape, int m, int d) {
    if (m * d != shape.size()) throw SizeMismatch("rect_character: md must equal the size");
    int sign = tiling_sign(shape, m);
    if (sign == 0) return 0;
    return sign * count_bst_uniform(shape, m);
}

// Root-of-unity evaluations of the fake degree must equal the character
// at rectangular types, for every divisor of the size.
inline bool springer_check(const SkewShape& shape) {
    const int n = shape.size();
    if (n == 0) return true;
    const IntPolynomial fd = fake_degree(shape);
    for (long d : divisors(n))
        if (eval_at_root(fd, n, d) != rect_character(shape, static_cast<int>(n / d),
                                                     static_cast<int>(d)))
            return false;
    return true;
}

// Littlewood-Richardson coefficients c^lambda_{mu,nu} for all nu, by
// enumerating semistandard fillings whose reverse reading word is a
// lattice word.  The content of such a filling is automatically a
// partition.
inline std::map<Partition, Int> lr_coefficients(const SkewShape& shape) {
    const int n = shape.size();
    std::map<Partition, Int> out;
    if (n == 0) {
        out[Partition{}] = 1;
        return out;
    }
    // cells in reverse reading order: rows top to bottom, right to left
    std::vector<Cell> order;
    for (int r = 1; r <= shape.rows(); ++r)
        for (int c = shape.row_end(r); c >= shape.row_start(r); --c) order.push_back({r, c});
    std::vector<std::vector<int>> fill(shape.rows());
    for (int r = 1; r <= shape.rows(); ++r) fill[r - 1].assign(shape.row_end(r) + 1, 0);
    std::vector<int> counts(n + 2, 0);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) {
            std::vector<int> content;
            for (int v = 1; v <= n && counts[v] > 0; ++v) content.push_back(counts[v]);
            ++out[Partition(std::move(content))];
            return;
        }
        auto [r, c] = order[idx];
        int hi = n;
        if (c < shape.row_end(r)) hi = fill[r - 1][c + 1];  // right neighbor placed first
        for (int v = 1; v <= hi; ++v) {
            if (v > 1 && counts[v] + 1 > counts[v - 1]) continue;  // lattice condition
            if (r > 1 && shape.contains_cell(r - 1, c) && fill[r - 2][c] >= v) continue;
            fill[r - 1][c] = v;
            ++counts[v];
            self(self, idx + 1);
            --counts[v];
            fill[r - 1][c] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

// z_nu = prod_j m_j! j^(m_j) over part multiplicities
inline Int z_factor(const Partition& nu) {
    Int z = 1;
    int run = 1;
    for (int i = 1; i <= nu.length(); ++i) {
        if (i < nu.length() && nu.part(i) == nu.part(i + 1)) {
            ++run;
        } else {
            z *= factorial(run) * int_pow(nu.part(i), run);
            run = 1;
        }
    }
    return z;
}

namespace detail {

// sparse multivariate polynomial with rational coefficients
using MultiPoly = std::map<std::vector<int>, Rat>;

inline MultiPoly multi_mul(const MultiPoly& a, const MultiPoly& b, int vars) {
    MultiPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(vars);
            for (int i = 0; i < vars; ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline MultiPoly power_sum_poly(const Partition& nu, int vars) {
    MultiPoly acc{{std::vector<int>(vars, 0), Rat(1)}};
    for (int i = 1; i <= nu.length(); ++i) {
        MultiPoly pj;
        for (int v = 0; v < vars; ++v) {
            std::vector<int> e(vars, 0);
            e[v] = nu.part(i);
            pj[e] = 1;
        }
        acc = multi_mul(acc, pj, vars);
    }
    return acc;
}

}  // namespace detail

// The power-sum expansion sum_nu chi(nu) p_nu / z_nu, expanded in
// num_vars variables, must reproduce the SSYT generating polynomial.
inline bool power_sum_expansion_check(const SkewShape& shape, int num_vars) {
    const int n = shape.size();
    detail::MultiPoly lhs;
    for (const Partition& nu : partitions_of(n)) {
        Int chi = mn_character(shape, nu);
        if (chi == 0) continue;
        Rat coeff = Rat(chi) / Rat(z_factor(nu));
        for (auto& [e, c] : detail::power_sum_poly(nu, num_vars)) lhs[e] += coeff * c;
    }
    for (auto it = lhs.begin(); it != lhs.end();)
        it = it->second == 0 ? lhs.erase(it) : std::next(it);
    detail::MultiPoly rhs;
    for_each_ssyt_bounded(shape, num_vars, [&](const SemistandardTableau& t) {
        std::vector<int> e(num_vars, 0);
        for (const auto& row : t.rows)
            for (int v : row)
                if (v) ++e[v - 1];
        rhs[e] += 1;
    });
    return lhs == rhs;
}

}  // namespace skewsieve
