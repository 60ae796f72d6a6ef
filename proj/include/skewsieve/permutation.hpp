#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "skewsieve/cyclotomic.hpp"
#include "skewsieve/errors.hpp"
#include "skewsieve/numeric.hpp"
#include "skewsieve/partition.hpp"
#include "skewsieve/sieving.hpp"
#include "skewsieve/tableaux.hpp"

namespace skewsieve {

class Permutation {
  public:
    Permutation() = default;

    explicit Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
        std::vector<bool> seen(values_.size() + 1, false);
        for (int v : values_) {
            if (v < 1 || v > static_cast<int>(values_.size()) || seen[v])
                throw Error("Permutation: not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(values_.size()); }
    int operator()(int i) const { return values_[i - 1]; }
    const std::vector<int>& one_line() const { return values_; }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(values_[i]);
        return s + "]";
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<int> values_;
};

// Conjugation by the long cycle c = (1,...,n), pinned by
// rotate([5,4,1,2,3]) = [3,5,1,2,4]: the permutation matrix shifts
// cyclically, the chord diagram rotates.
inline Permutation rotate(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<int> out(n);
    auto up = [n](int i) { return i % n + 1; };      // c
    auto down = [n](int i) { return (i + n - 2) % n + 1; };  // c^{-1}
    for (int i = 1; i <= n; ++i) out[i - 1] = down(sigma(up(i)));
    return Permutation(std::move(out));
}

inline Permutation rotate_power(Permutation sigma, long d) {
    for (long i = 0; i < d; ++i) sigma = rotate(sigma);
    return sigma;
}

// Common shape of the Robinson-Schensted insertion pair (row insertion;
// only the shape is consumed).
inline Partition rs_shape(const Permutation& sigma) {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= sigma.size(); ++i) {
        int v = sigma(i);
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({v});
                break;
            }
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), v);
            if (it == rows[r].end()) {
                rows[r].push_back(v);
                break;
            }
            std::swap(*it, v);
        }
    }
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

// Fixed points of rot^d counted directly against the evaluations of
// sum_lambda f^lambda(q)^2.
inline bool rotation_csp_check(int n) {
    std::vector<IntPolynomial> fds;
    for (const Partition& p : partitions_of(n)) fds.push_back(fake_degree(SkewShape(p)));
    for (long d : divisors(n)) {
        long fixed = 0;
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        do {
            // sigma commutes with c^d <=> sigma(i + d) = sigma(i) + d cyclically
            bool ok = true;
            for (int i = 1; i <= n && ok; ++i) {
                int j = static_cast<int>((i - 1 + d) % n) + 1;
                int expect = static_cast<int>((v[i - 1] - 1 + d) % n) + 1;
                if (v[j - 1] != expect) ok = false;
            }
            if (ok) ++fixed;
        } while (std::next_permutation(v.begin(), v.end()));
        Int rhs = 0;
        for (const auto& fd : fds) {
            Int value = eval_at_root(fd, n, d);
            rhs += value * value;
        }
        if (rhs != fixed) return false;
    }
    return true;
}

// Rotation-invariant statistic equidistributed with the RS shape.  Orbits
// of rotation are matched to partitions so that the fiber over lambda has
// exactly (1/k) sum_{d|k} mu(k/d) f^lambda(xi^d)^2 orbits of each size k;
// ties are broken deterministically (orbits by minimal element, partitions
// in lexicographic order).
struct StatisticTable {
    int n = 0;
    std::map<Permutation, Partition> assignment;

    const Partition& at(const Permutation& sigma) const { return assignment.at(sigma); }
};

inline StatisticTable synthesize_statistic(int n) {
    StatisticTable table;
    table.n = n;
    // rotation orbits, seeds in lexicographic order (the seed is the
    // orbit's minimal element)
    std::map<Permutation, int> orbit_of;
    std::vector<std::vector<Permutation>> orbits;
    {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        do {
            Permutation sigma(v);
            if (orbit_of.count(sigma)) continue;
            std::vector<Permutation> orbit;
            Permutation cur = sigma;
            do {
                orbit_of.emplace(cur, static_cast<int>(orbits.size()));
                orbit.push_back(cur);
                cur = rotate(cur);
            } while (cur != sigma);
            orbits.push_back(std::move(orbit));
        } while (std::next_permutation(v.begin(), v.end()));
    }
    std::map<long, std::vector<int>> orbits_by_size;
    for (std::size_t i = 0; i < orbits.size(); ++i)
        orbits_by_size[static_cast<long>(orbits[i].size())].push_back(static_cast<int>(i));

    // required orbit counts per partition
    std::vector<Partition> lambdas = partitions_of(n);
    std::sort(lambdas.begin(), lambdas.end());
    std::map<long, std::vector<std::pair<Partition, Int>>> demand;  // size -> (lambda, count)
    for (const Partition& lambda : lambdas) {
        IntPolynomial fd = fake_degree(SkewShape(lambda));
        std::map<long, Int> sq;
        for (long d : divisors(n)) {
            Int v = eval_at_root(fd, n, d);
            sq[d] = v * v;
        }
        for (long k : divisors(n)) {
            Int sum = 0;
            for (long d : divisors(k)) sum += mobius(k / d) * sq.at(d);
            if (sum % k != 0 || sum < 0)
                throw MatchingInfeasible("synthesize_statistic: orbit counts not integral");
            if (sum != 0) demand[k].push_back({lambda, sum / k});
        }
    }
    for (auto& [size, wants] : demand) {
        auto it = orbits_by_size.find(size);
        std::size_t offset = 0;
        Int total = 0;
        for (auto& [lambda, count] : wants) total += count;
        if (it == orbits_by_size.end() ||
            total != static_cast<long>(it->second.size()))
            throw MatchingInfeasible("synthesize_statistic: orbit sizes do not match");
        for (auto& [lambda, count] : wants) {
            for (Int c = 0; c < count; ++c) {
                int orbit_index = it->second[offset++];
                for (const Permutation& sigma : orbits[orbit_index])
                    table.assignment.emplace(sigma, lambda);
            }
        }
    }
    if (table.assignment.size() != orbit_of.size())
        throw MatchingInfeasible("synthesize_statistic: unassigned permutations");
    return table;
}

// Zero-weight walks alternately adding and subtracting 1 from an entry of
// a weakly decreasing integer vector.
struct AlternatingTableau {
    std::vector<std::vector<int>> staircases;  // 2n+1 vectors in Z^r

    bool operator==(const AlternatingTableau&) const = default;
};

template <class F>
void for_each_alternating(int r, int n, F&& visit) {
    if (r < 1) throw Error("for_each_alternating: need r >= 1");
    AlternatingTableau walk;
    std::vector<int> w(r, 0);
    walk.staircases.push_back(w);
    auto rec = [&](auto&& self, int step) -> void {
        if (step == 2 * n) {
            bool zero = std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
            if (zero) visit(walk);
            return;
        }
        long l1 = 0;
        for (int x : w) l1 += std::abs(x);
        if (l1 > 2 * n - step) return;  // cannot return to zero
        const int delta = step % 2 == 0 ? 1 : -1;
        for (int j = 0; j < r; ++j) {
            if (delta > 0 && j > 0 && w[j - 1] <= w[j]) continue;
            if (delta < 0 && j + 1 < r && w[j + 1] >= w[j]) continue;
            w[j] += delta;
            walk.staircases.push_back(w);
            self(self, step + 1);
            walk.staircases.pop_back();
            w[j] -= delta;
        }
    };
    rec(rec, 0);
}

inline Int count_alternating(int r, int n) {
    Int count = 0;
    for_each_alternating(r, n, [&](const AlternatingTableau&) { ++count; });
    return count;
}

// |Alt(r, n)| = sum over lambda of n with at most r rows of |SYT(lambda)|^2
inline bool alternating_dimension_check(int r, int n) {
    Int rhs = 0;
    for (const Partition& p : partitions_of(n)) {
        if (p.length() > r) continue;
        Int f = skew_syt_count(SkewShape(p));
        rhs += f * f;
    }
    return count_alternating(r, n) == rhs;
}

}  // namespace skewsieve
