#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "skewsieve/numeric.hpp"
#include "skewsieve/partition.hpp"
#include "skewsieve/polynomial.hpp"

namespace skewsieve {

// Filling of a skew diagram; rows_ is indexed by row, with one slot per
// column 1..outer_r and 0 marking cells outside the diagram.
struct StandardTableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;

    int at(int r, int c) const { return rows[r - 1][c - 1]; }
    bool operator==(const StandardTableau&) const = default;
};

namespace detail {

// DFS over placements of 1..n, filling each row left to right.  Candidate
// rows are scanned top to bottom, so tableaux stream in lexicographic
// order of the placement sequence.  f(rows_of_label) sees, for each label
// k (1-based index k-1), the row it was placed in.
template <class F>
void syt_placements(const SkewShape& shape, F&& f) {
    const int n = shape.size();
    const int nrows = shape.rows();
    std::vector<int> next(nrows + 1), row_of(n);
    for (int r = 1; r <= nrows; ++r) next[r] = shape.row_start(r);
    auto rec = [&](auto&& self, int k) -> void {
        if (k > n) {
            f(row_of);
            return;
        }
        for (int r = 1; r <= nrows; ++r) {
            int c = next[r];
            if (c > shape.row_end(r)) continue;
            if (r > 1 && c > shape.inner().part(r - 1) && next[r - 1] <= c)
                continue;  // cell above exists and is still empty
            next[r] = c + 1;
            row_of[k - 1] = r;
            self(self, k + 1);
            next[r] = c;
        }
    };
    rec(rec, 1);
}

}  // namespace detail

// Each standard tableau exactly once, in lexicographic order of the
// placement sequence.
template <class F>
void for_each_syt(const SkewShape& shape, F&& visit) {
    const int nrows = shape.rows();
    detail::syt_placements(shape, [&](const std::vector<int>& row_of) {
        StandardTableau t;
        t.shape = shape;
        t.rows.assign(nrows, {});
        for (int r = 1; r <= nrows; ++r) t.rows[r - 1].assign(shape.row_end(r), 0);
        std::vector<int> next(nrows + 1);
        for (int r = 1; r <= nrows; ++r) next[r] = shape.row_start(r);
        for (std::size_t k = 0; k < row_of.size(); ++k) {
            int r = row_of[k];
            t.rows[r - 1][next[r] - 1] = static_cast<int>(k) + 1;
            ++next[r];
        }
        visit(t);
    });
}

inline std::vector<StandardTableau> all_syt(const SkewShape& shape) {
    std::vector<StandardTableau> out;
    for_each_syt(shape, [&](const StandardTableau& t) { out.push_back(t); });
    return out;
}

// j is a descent when j+1 sits in a strictly lower row.
inline std::set<int> descents(const StandardTableau& t) {
    const int n = t.shape.size();
    std::vector<int> row_of(n + 1);
    for (int r = 1; r <= t.shape.rows(); ++r)
        for (int c = t.shape.row_start(r); c <= t.shape.row_end(r); ++c)
            row_of[t.at(r, c)] = r;
    std::set<int> out;
    for (int j = 1; j < n; ++j)
        if (row_of[j + 1] > row_of[j]) out.insert(j);
    return out;
}

inline int major_index(const StandardTableau& t) {
    int maj = 0;
    for (int j : descents(t)) maj += j;
    return maj;
}

namespace detail {

// maj histogram over the standard tableaux of one connected piece.
inline std::vector<std::uint64_t> maj_histogram(const SkewShape& shape) {
    const int n = shape.size();
    std::vector<std::uint64_t> hist(n * (n - 1) / 2 + 1, 0);
    int prev_row = 0, maj = 0;
    const int nrows = shape.rows();
    std::vector<int> next(nrows + 2);
    for (int r = 1; r <= nrows; ++r) next[r] = shape.row_start(r);
    auto rec = [&](auto&& self, int k) -> void {
        if (k > n) {
            ++hist[maj];
            return;
        }
        int saved_prev = prev_row;
        for (int r = 1; r <= nrows; ++r) {
            int c = next[r];
            if (c > shape.row_end(r)) continue;
            if (r > 1 && c > shape.inner().part(r - 1) && next[r - 1] <= c) continue;
            int desc = (k > 1 && r > saved_prev) ? k - 1 : 0;
            next[r] = c + 1;
            prev_row = r;
            maj += desc;
            self(self, k + 1);
            maj -= desc;
            next[r] = c;
        }
        prev_row = saved_prev;
    };
    rec(rec, 1);
    return hist;
}

}  // namespace detail

// Major-index generating polynomial over SYT(shape).  Disconnected
// diagrams factor: tableaux are shuffles of the component tableaux, and
// the principal specialization turns the shuffle into a q-multinomial.
inline IntPolynomial fake_degree(const SkewShape& shape) {
    if (shape.size() == 0) return IntPolynomial::constant(1);
    auto components = connected_components(shape);
    IntPolynomial result = IntPolynomial::constant(1);
    std::vector<int> sizes;
    for (const SkewShape& comp : components) {
        sizes.push_back(comp.size());
        auto hist = detail::maj_histogram(comp);
        std::vector<Int> coeffs(hist.begin(), hist.end());
        result = result * IntPolynomial(std::move(coeffs));
    }
    return result * q_multinomial(sizes);
}

namespace detail {

// Aitken determinant n! det(1 / (l_i - m_j - i + j)!) for one connected
// piece, by exact rational elimination.
inline Int aitken_count(const SkewShape& shape) {
    const int l = shape.outer().length();
    if (l == 0) return 1;
    std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            int a = shape.outer().part(i) - shape.inner().part(j) - i + j;
            m[i - 1][j - 1] = a < 0 ? Rat(0) : Rat(1, factorial(a));
        }
    Rat det = 1;
    for (int col = 0; col < l; ++col) {
        int pivot = -1;
        for (int r = col; r < l; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < l; ++r) {
            if (m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[col][col];
            for (int c = col; c < l; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    Rat result = det * factorial(shape.size());
    if (denominator(result) != 1) throw Error("aitken_count: non-integer determinant");
    return numerator(result);
}

}  // namespace detail

// |SYT(shape)|, via the Aitken determinant per connected component and a
// multinomial shuffle factor.  Memoized per component.
inline Int skew_syt_count(const SkewShape& shape) {
    if (shape.size() == 0) return 1;
    thread_local std::map<SkewShape, Int> memo;
    Int result = 1;
    std::vector<long> sizes;
    for (const SkewShape& comp : connected_components(shape)) {
        sizes.push_back(comp.size());
        auto it = memo.find(comp);
        if (it == memo.end()) it = memo.emplace(comp, detail::aitken_count(comp)).first;
        result *= it->second;
    }
    return result * multinomial(sizes);
}

struct SemistandardTableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;  // same layout as StandardTableau

    int at(int r, int c) const { return rows[r - 1][c - 1]; }
    int weight() const {  // sum of (entry - 1)
        int w = 0;
        for (const auto& row : rows)
            for (int v : row)
                if (v) w += v - 1;
        return w;
    }
    bool operator==(const SemistandardTableau&) const = default;
};

// All SSYT with entries <= max_entry, row-major fill order.
template <class F>
void for_each_ssyt_bounded(const SkewShape& shape, int max_entry, F&& visit) {
    const int nrows = shape.rows();
    SemistandardTableau t;
    t.shape = shape;
    t.rows.assign(nrows, {});
    for (int r = 1; r <= nrows; ++r) t.rows[r - 1].assign(shape.row_end(r), 0);
    auto cells = shape.cells();
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            visit(t);
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > shape.row_start(r)) lo = std::max(lo, t.at(r, c - 1));
        if (r > 1 && shape.contains_cell(r - 1, c)) lo = std::max(lo, t.at(r - 1, c) + 1);
        for (int v = lo; v <= max_entry; ++v) {
            t.rows[r - 1][c - 1] = v;
            self(self, idx + 1);
        }
        t.rows[r - 1][c - 1] = 0;
    };
    rec(rec, 0);
}

inline std::vector<SemistandardTableau> all_ssyt_bounded(const SkewShape& shape, int max_entry) {
    std::vector<SemistandardTableau> out;
    for_each_ssyt_bounded(shape, max_entry, [&](const SemistandardTableau& t) { out.push_back(t); });
    return out;
}

// Coefficients up to q^cap of fake_degree(shape) / ((1-q)...(1-q^n)) must
// count SSYT by weight.  Entries beyond cap+1 cannot contribute.
inline bool principal_specialization_check(const SkewShape& shape, int cap) {
    const int n = shape.size();
    std::vector<Int> series(cap + 1);
    const IntPolynomial fd = fake_degree(shape);
    for (int e = 0; e <= std::min(cap, fd.degree()); ++e) series[e] = fd.coeff(e);
    for (int j = 1; j <= n; ++j)  // multiply by 1/(1-q^j)
        for (int e = j; e <= cap; ++e) series[e] += series[e - j];
    std::vector<Int> counts(cap + 1);
    for_each_ssyt_bounded(shape, cap + 1, [&](const SemistandardTableau& t) {
        int w = t.weight();
        if (w <= cap) ++counts[w];
    });
    return series == counts;
}

// kappa(p) = sum_j C(p'_j, 2)
inline Int kappa(const Partition& p) {
    Int k = 0;
    for (int col : p.conjugate().parts()) k += binomial(col, 2);
    return k;
}

inline int hook_length(const Partition& p, const Partition& conj, int r, int c) {
    return p.part(r) - c + conj.part(c) - r + 1;
}

// [n]_q! / prod [h(box)]_q for a straight shape; equals q^(-kappa) f^p.
inline IntPolynomial q_hook_polynomial(const Partition& p) {
    IntPolynomial result = q_factorial(p.size());
    Partition conj = p.conjugate();
    for (int r = 1; r <= p.length(); ++r)
        for (int c = 1; c <= p.part(r); ++c)
            result = result.divide_exact(q_int(hook_length(p, conj, r, c)));
    return result;
}

}  // namespace skewsieve
