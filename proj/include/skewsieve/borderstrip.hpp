#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "skewsieve/abacus.hpp"
#include "skewsieve/errors.hpp"
#include "skewsieve/numeric.hpp"
#include "skewsieve/partition.hpp"
#include "skewsieve/tableau_tuple.hpp"
#include "skewsieve/tableaux.hpp"

namespace skewsieve {

// Labeled decomposition of a skew diagram into border strips; strip j
// (1-based) carries label j.
struct BorderStripTableau {
    SkewShape shape;
    std::vector<std::vector<Cell>> strips;  // cells row-major within each strip

    int strip_count() const { return static_cast<int>(strips.size()); }

    static int strip_height(const std::vector<Cell>& strip) {
        std::set<int> rows;
        for (const Cell& c : strip) rows.insert(c.row);
        return static_cast<int>(rows.size()) - 1;
    }

    int total_height() const {
        int h = 0;
        for (const auto& s : strips) h += strip_height(s);
        return h;
    }

    // The lowest leftmost box of a strip has the smallest content.
    Cell min_content_cell(int label) const {
        const auto& s = strips[label - 1];
        return *std::min_element(s.begin(), s.end(), [](const Cell& a, const Cell& b) {
            return a.content() < b.content();
        });
    }

    std::vector<std::vector<int>> filling() const {
        std::vector<std::vector<int>> rows(shape.rows());
        for (int r = 1; r <= shape.rows(); ++r) rows[r - 1].assign(shape.row_end(r), 0);
        for (int j = 1; j <= strip_count(); ++j)
            for (const Cell& c : strips[j - 1]) rows[c.row - 1][c.col - 1] = j;
        return rows;
    }

    // Checks the full definition: strips of the prescribed sizes, each
    // connected with no 2x2 block, partitioning the diagram, labels weakly
    // increasing along rows and columns.
    bool valid(const Partition& type) const {
        if (type.length() != strip_count()) return false;
        std::set<Cell> seen;
        for (int j = 1; j <= strip_count(); ++j) {
            const auto& strip = strips[j - 1];
            if (static_cast<int>(strip.size()) != type.part(j)) return false;
            std::set<Cell> cells(strip.begin(), strip.end());
            if (cells.size() != strip.size()) return false;
            for (const Cell& c : cells) {
                if (!shape.contains_cell(c.row, c.col) || seen.count(c)) return false;
                if (cells.count({c.row + 1, c.col}) && cells.count({c.row, c.col + 1}) &&
                    cells.count({c.row + 1, c.col + 1}))
                    return false;  // 2x2 block
            }
            // connectivity
            std::vector<Cell> stack = {strip[0]};
            std::set<Cell> reached = {strip[0]};
            while (!stack.empty()) {
                Cell c = stack.back();
                stack.pop_back();
                for (Cell nb : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col},
                                Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}})
                    if (cells.count(nb) && !reached.count(nb)) {
                        reached.insert(nb);
                        stack.push_back(nb);
                    }
            }
            if (reached.size() != cells.size()) return false;
            seen.insert(cells.begin(), cells.end());
        }
        if (static_cast<int>(seen.size()) != shape.size()) return false;
        auto fill = filling();
        auto label_at = [&](int r, int c) { return fill[r - 1][c - 1]; };
        for (int r = 1; r <= shape.rows(); ++r)
            for (int c = shape.row_start(r); c <= shape.row_end(r); ++c) {
                if (c > shape.row_start(r) && label_at(r, c - 1) > label_at(r, c)) return false;
                if (r > 1 && shape.contains_cell(r - 1, c) && label_at(r - 1, c) > label_at(r, c))
                    return false;
            }
        return true;
    }

    bool operator==(const BorderStripTableau&) const = default;
};

namespace detail {

// Removal engine on the beta-set with l(outer) beads: removing a border
// strip of size s is the bead move b -> b-s.
struct BstState {
    const Partition* inner;
    std::vector<long> beads;  // increasing
    std::vector<int> parts;   // current outer partition, padded to bead count

    void init(const SkewShape& shape) {
        inner = &shape.inner();
        int l = shape.outer().length();
        beads.clear();
        parts.assign(l, 0);
        for (int i = l; i >= 1; --i) beads.push_back(shape.outer().part(i) + l - i);
        for (int i = 1; i <= l; ++i) parts[i - 1] = shape.outer().part(i);
    }

    bool occupied(long b) const { return std::binary_search(beads.begin(), beads.end(), b); }

    // Parts of the partition after moving bead at index idx to value t.
    void parts_after(int idx, long t, std::vector<int>& out) const {
        int k = static_cast<int>(beads.size());
        std::vector<long> next(beads);
        next.erase(next.begin() + idx);
        next.insert(std::upper_bound(next.begin(), next.end(), t), t);
        out.assign(k, 0);
        for (int i = 0; i < k; ++i) out[k - 1 - i] = static_cast<int>(next[i] - i);
    }

    bool contains_inner(const std::vector<int>& p) const {
        for (int i = 1; i <= inner->length(); ++i) {
            int part = i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
            if (part < inner->part(i)) return false;
        }
        return true;
    }

    void apply(int idx, long t, const std::vector<int>& new_parts) {
        beads.erase(beads.begin() + idx);
        beads.insert(std::upper_bound(beads.begin(), beads.end(), t), t);
        parts = new_parts;
    }
};

inline std::vector<Cell> strip_cells(const std::vector<int>& before,
                                     const std::vector<int>& after) {
    std::vector<Cell> cells;
    int l = static_cast<int>(before.size());
    for (int row = 1; row <= l; ++row) {
        int b = before[row - 1], a = after[row - 1];
        for (int c = a + 1; c <= b; ++c) cells.push_back({row, c});
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace detail

// Each border-strip tableau of the given type exactly once, built by
// recursive removal of the largest label from the outer boundary.
// Deterministic: candidate bead moves are scanned in increasing bead order.
template <class F>
void for_each_bst(const SkewShape& shape, const Partition& type, F&& visit) {
    if (type.size() != shape.size())
        throw SizeMismatch("for_each_bst: type size differs from shape size");
    const int labels = type.length();
    BorderStripTableau tableau;
    tableau.shape = shape;
    tableau.strips.assign(labels, {});
    if (shape.size() == 0) {
        visit(tableau);
        return;
    }
    detail::BstState state;
    state.init(shape);
    std::vector<int> scratch;
    auto rec = [&](auto&& self, int j) -> void {
        if (j == 0) {
            visit(tableau);
            return;
        }
        const long s = type.part(j);
        for (int idx = 0; idx < static_cast<int>(state.beads.size()); ++idx) {
            long b = state.beads[idx];
            long t = b - s;
            if (t < 0 || state.occupied(t)) continue;
            state.parts_after(idx, t, scratch);
            if (!state.contains_inner(scratch)) continue;
            std::vector<int> saved_parts = state.parts;
            std::vector<long> saved_beads = state.beads;
            tableau.strips[j - 1] = detail::strip_cells(saved_parts, scratch);
            state.apply(idx, t, scratch);
            self(self, j - 1);
            state.beads = saved_beads;
            state.parts = saved_parts;
            tableau.strips[j - 1].clear();
        }
    };
    rec(rec, labels);
}

inline std::vector<BorderStripTableau> all_bst(const SkewShape& shape, const Partition& type) {
    std::vector<BorderStripTableau> out;
    for_each_bst(shape, type, [&](const BorderStripTableau& t) { out.push_back(t); });
    return out;
}

inline Partition uniform_type(int n, int d) {
    return Partition(std::vector<int>(n / d, d));
}

// |BST(shape, d)| by the quotient product formula: a multinomial over the
// skew d-quotient entry sizes times the product of their SYT counts.
// Returns 0 whenever no tiling exists.
inline Int count_bst_uniform(const SkewShape& shape, int d) {
    if (d < 1) throw Error("count_bst_uniform: strip size must be positive");
    const int n = shape.size();
    if (n == 0) return 1;
    if (n % d != 0) return 0;
    if (d == 1) return skew_syt_count(shape);
    std::vector<SkewShape> entries;
    if (detail::try_skew_quotient(shape, d, &entries) != detail::QuotientStatus::Ok) return 0;
    Int result = 1;
    std::vector<long> sizes;
    for (const SkewShape& entry : entries) {
        sizes.push_back(entry.size());
        result *= skew_syt_count(entry);
    }
    return result * multinomial(sizes);
}

// Sign of any tiling by strips of size m: all tilings of a shape share
// height parity, so the first one found decides.  0 when no tiling exists.
inline int tiling_sign(const SkewShape& shape, int m) {
    const int n = shape.size();
    if (n == 0) return 1;
    if (n % m != 0) return 0;
    detail::BstState state;
    state.init(shape);
    std::vector<int> scratch;
    int height = 0;
    bool found = false;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (found) return;
        if (remaining == 0) {
            found = true;
            return;
        }
        for (int idx = 0; idx < static_cast<int>(state.beads.size()); ++idx) {
            long b = state.beads[idx];
            long t = b - m;
            if (t < 0 || state.occupied(t)) continue;
            state.parts_after(idx, t, scratch);
            if (!state.contains_inner(scratch)) continue;
            // height of the removed strip = beads strictly between t and b
            int jumped = static_cast<int>(
                std::lower_bound(state.beads.begin(), state.beads.end(), b) -
                std::upper_bound(state.beads.begin(), state.beads.end(), t));
            std::vector<int> saved_parts = state.parts;
            std::vector<long> saved_beads = state.beads;
            state.apply(idx, t, scratch);
            height += jumped;
            self(self, remaining - 1);
            if (found) return;
            height -= jumped;
            state.beads = saved_beads;
            state.parts = saved_parts;
        }
    };
    rec(rec, n / m);
    if (!found) return 0;
    return height % 2 == 0 ? 1 : -1;
}

// Lemma relating |BST(shape, dk)| to the skew k-quotient: the count
// equals a multinomial in the entry sizes scaled by d times the product
// of the entries' |BST(-, d)|, and d divides every entry size whenever
// BST(shape, dk) is non-empty.
inline bool striphook_identity_check(const SkewShape& shape, int d, int k) {
    const int n = shape.size();
    if (d < 1 || k < 1 || (n > 0 && n % (d * k) != 0))
        throw Error("striphook_identity_check: dk must divide the size");
    Int lhs = count_bst_uniform(shape, d * k);
    std::vector<SkewShape> entries;
    if (detail::try_skew_quotient(shape, k, &entries) != detail::QuotientStatus::Ok)
        return lhs == 0;
    for (const SkewShape& entry : entries)
        if (entry.size() % d != 0) return lhs == 0;
    Int rhs = 1;
    std::vector<long> scaled;
    for (const SkewShape& entry : entries) {
        scaled.push_back(entry.size() / d);
        rhs *= count_bst_uniform(entry, d);
    }
    rhs *= multinomial(scaled);
    return lhs == rhs;
}

// Littlewood map, by replaying strip removals as bead moves: removing the
// strip with label x moves one bead up its runner, which removes one cell
// from the corresponding quotient entry; that cell receives label x.
inline TableauTuple littlewood(const BorderStripTableau& bst) {
    if (bst.strip_count() == 0) {
        if (bst.shape.size() != 0) throw Error("littlewood: empty tableau, non-empty shape");
        return empty_tuple(QuotientTuple{});
    }
    const std::size_t d = bst.strips[0].size();
    for (const auto& s : bst.strips)
        if (s.size() != d) throw Error("littlewood: strips must have uniform size");
    TableauTuple tuple = empty_tuple(skew_quotient(bst.shape, static_cast<int>(d)));

    const int l = bst.shape.outer().length();
    std::vector<int> parts(l);
    for (int i = 1; i <= l; ++i) parts[i - 1] = bst.shape.outer().part(i);
    std::vector<long> beads;
    for (int i = l; i >= 1; --i) beads.push_back(bst.shape.outer().part(i) + l - i);

    for (int label = bst.strip_count(); label >= 1; --label) {
        // partition after removing this strip
        std::vector<int> next_parts = parts;
        for (const Cell& c : bst.strips[label - 1]) {
            if (c.col - 1 < next_parts[c.row - 1]) next_parts[c.row - 1] = c.col - 1;
        }
        std::vector<long> next_beads;
        for (int i = l; i >= 1; --i) next_beads.push_back(next_parts[i - 1] + l - i);
        // locate the single moved bead
        long from = -1, to = -1;
        {
            std::vector<long> a(beads), b(next_beads);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::vector<long> gone, fresh;
            std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(gone));
            std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(fresh));
            if (gone.size() != 1 || fresh.size() != 1 ||
                gone[0] - fresh[0] != static_cast<long>(d))
                throw Error("littlewood: strip removal is not a single bead move");
            from = gone[0];
            to = fresh[0];
        }
        (void)to;
        const int runner = static_cast<int>(from % static_cast<long>(d));
        const long pos = from / static_cast<long>(d);
        std::vector<long> positions;
        for (long b : beads)
            if (b % static_cast<long>(d) == runner) positions.push_back(b / static_cast<long>(d));
        std::sort(positions.begin(), positions.end());
        const int m_r = static_cast<int>(positions.size());
        const int t = static_cast<int>(
            std::lower_bound(positions.begin(), positions.end(), pos) - positions.begin());
        const int row = m_r - t;
        const int col = static_cast<int>(pos) - t;
        tuple.set(runner + 1, row, col, label);
        parts = next_parts;
        beads = next_beads;
    }
    return tuple;
}

// Inverse replay: labels are added in increasing order, each moving one
// bead down its runner and gluing the corresponding border strip.
inline BorderStripTableau littlewood_inverse(const TableauTuple& tuple, const SkewShape& shape,
                                             int d) {
    QuotientTuple expected = skew_quotient(shape, d);
    if (tuple.shapes != expected.entries)
        throw Error("littlewood_inverse: tuple shapes do not match the skew quotient");
    if (!tuple.valid()) throw Error("littlewood_inverse: invalid tableau tuple");

    const int l = shape.outer().length();
    const int labels = tuple.label_count();
    BorderStripTableau bst;
    bst.shape = shape;
    bst.strips.assign(labels, {});

    std::vector<int> parts(l);
    for (int i = 1; i <= l; ++i) parts[i - 1] = shape.inner().part(i);
    std::vector<std::vector<long>> positions(d);
    {
        std::vector<long> beads;
        for (int i = l; i >= 1; --i) beads.push_back(shape.inner().part(i) + l - i);
        for (long b : beads) positions[b % d].push_back(b / d);
        for (auto& p : positions) std::sort(p.begin(), p.end());
    }
    auto parts_of = [&]() {
        std::vector<long> beads;
        for (int r = 0; r < d; ++r)
            for (long p : positions[r]) beads.push_back(p * d + r);
        std::sort(beads.begin(), beads.end());
        std::vector<int> out(l);
        for (int i = 0; i < l; ++i) out[l - 1 - i] = static_cast<int>(beads[i] - i);
        return out;
    };

    for (int label = 1; label <= labels; ++label) {
        auto where = tuple.find(label);
        const int runner = where.entry - 1;
        auto& pos = positions[runner];
        const int m_r = static_cast<int>(pos.size());
        const int t = m_r - where.row;
        if (t < 0 || t >= m_r) throw Error("littlewood_inverse: label outside runner");
        const long expected_pos = where.col - 1 + t;
        if (pos[t] != expected_pos)
            throw Error("littlewood_inverse: tuple is not reachable by bead moves");
        if (t + 1 < m_r && pos[t + 1] == expected_pos + 1)
            throw Error("littlewood_inverse: target bead position occupied");
        pos[t] = expected_pos + 1;
        std::vector<int> next_parts = parts_of();
        for (int row = 1; row <= l; ++row)
            for (int c = parts[row - 1] + 1; c <= next_parts[row - 1]; ++c)
                bst.strips[label - 1].push_back({row, c});
        std::sort(bst.strips[label - 1].begin(), bst.strips[label - 1].end());
        parts = next_parts;
    }
    for (int i = 1; i <= l; ++i)
        if (parts[i - 1] != shape.outer().part(i))
            throw Error("littlewood_inverse: replay does not reach the outer shape");
    return bst;
}

}  // namespace skewsieve
