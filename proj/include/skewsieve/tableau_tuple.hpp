#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewsieve/abacus.hpp"
#include "skewsieve/errors.hpp"
#include "skewsieve/partition.hpp"

namespace skewsieve {

// Tuple of standard-like fillings on the entries of a skew d-quotient;
// each of 1..m appears in exactly one tableau, rows and columns increase.
struct TableauTuple {
    std::vector<SkewShape> shapes;
    std::vector<std::vector<std::vector<int>>> fill;  // [entry][row][col-1], 0 = outside

    int entry_count() const { return static_cast<int>(shapes.size()); }

    int label_count() const {
        int n = 0;
        for (const auto& s : shapes) n += s.size();
        return n;
    }

    int at(int entry, int r, int c) const { return fill[entry - 1][r - 1][c - 1]; }

    void set(int entry, int r, int c, int v) { fill[entry - 1][r - 1][c - 1] = v; }

    struct Position {
        int entry = 0, row = 0, col = 0;
        bool operator==(const Position&) const = default;
    };

    Position find(int label) const {
        for (int e = 1; e <= entry_count(); ++e)
            for (int r = 1; r <= shapes[e - 1].rows(); ++r)
                for (int c = shapes[e - 1].row_start(r); c <= shapes[e - 1].row_end(r); ++c)
                    if (at(e, r, c) == label) return {e, r, c};
        throw Error("TableauTuple: label " + std::to_string(label) + " not present");
    }

    bool valid() const {
        std::vector<bool> seen(label_count() + 1, false);
        for (int e = 1; e <= entry_count(); ++e) {
            const SkewShape& s = shapes[e - 1];
            for (int r = 1; r <= s.rows(); ++r)
                for (int c = s.row_start(r); c <= s.row_end(r); ++c) {
                    int v = at(e, r, c);
                    if (v < 1 || v > label_count() || seen[v]) return false;
                    seen[v] = true;
                    if (c > s.row_start(r) && at(e, r, c - 1) >= v) return false;
                    if (r > 1 && s.contains_cell(r - 1, c) && at(e, r - 1, c) >= v) return false;
                }
        }
        return true;
    }

    bool operator==(const TableauTuple&) const = default;
    auto operator<=>(const TableauTuple&) const = default;
};

inline TableauTuple empty_tuple(const QuotientTuple& quotient) {
    TableauTuple t;
    t.shapes = quotient.entries;
    t.fill.resize(t.shapes.size());
    for (std::size_t e = 0; e < t.shapes.size(); ++e) {
        t.fill[e].assign(t.shapes[e].rows(), {});
        for (int r = 1; r <= t.shapes[e].rows(); ++r)
            t.fill[e][r - 1].assign(t.shapes[e].row_end(r), 0);
    }
    return t;
}

// Entry 1 takes 1..|entry 1| row by row, entry 2 the next block, and so on.
inline TableauTuple superstandard(const SkewShape& shape, int d) {
    TableauTuple t = empty_tuple(skew_quotient(shape, d));
    int next = 1;
    for (int e = 1; e <= t.entry_count(); ++e)
        for (int r = 1; r <= t.shapes[e - 1].rows(); ++r)
            for (int c = t.shapes[e - 1].row_start(r); c <= t.shapes[e - 1].row_end(r); ++c)
                t.set(e, r, c, next++);
    return t;
}

// Swap labels i and i+1; throws InvalidFlip if the swap breaks a row or
// column. Defined flips are involutions.
inline TableauTuple flip(const TableauTuple& t, int i) {
    if (i < 1 || i + 1 > t.label_count()) throw InvalidFlip("flip: label out of range");
    TableauTuple out = t;
    auto a = out.find(i), b = out.find(i + 1);
    out.set(a.entry, a.row, a.col, i + 1);
    out.set(b.entry, b.row, b.col, i);
    auto ok = [&](const TableauTuple::Position& p) {
        const SkewShape& s = out.shapes[p.entry - 1];
        int v = out.at(p.entry, p.row, p.col);
        if (p.col > s.row_start(p.row) && out.at(p.entry, p.row, p.col - 1) >= v) return false;
        if (p.col < s.row_end(p.row) && out.at(p.entry, p.row, p.col + 1) &&
            out.at(p.entry, p.row, p.col + 1) <= v)
            return false;
        if (p.row > 1 && s.contains_cell(p.row - 1, p.col) &&
            out.at(p.entry, p.row - 1, p.col) >= v)
            return false;
        if (p.row < s.rows() && s.contains_cell(p.row + 1, p.col) &&
            out.at(p.entry, p.row + 1, p.col) &&
            out.at(p.entry, p.row + 1, p.col) <= v)
            return false;
        return true;
    };
    if (!ok(a) || !ok(b))
        throw InvalidFlip("flip: swapping " + std::to_string(i) + "," + std::to_string(i + 1) +
                          " breaks the tuple");
    return out;
}

inline bool flip_allowed(const TableauTuple& t, int i) {
    try {
        flip(t, i);
        return true;
    } catch (const InvalidFlip&) {
        return false;
    }
}

// All elements of SYTT(shape, d), placing labels 1..m in DFS order
// (entries scanned in order, cells row-major).
template <class F>
void for_each_sytt(const SkewShape& shape, int d, F&& visit) {
    TableauTuple t = empty_tuple(skew_quotient(shape, d));
    const int m = t.label_count();
    std::vector<std::vector<int>> next(t.entry_count());
    for (int e = 1; e <= t.entry_count(); ++e) {
        next[e - 1].resize(t.shapes[e - 1].rows() + 1);
        for (int r = 1; r <= t.shapes[e - 1].rows(); ++r)
            next[e - 1][r] = t.shapes[e - 1].row_start(r);
    }
    auto rec = [&](auto&& self, int label) -> void {
        if (label > m) {
            visit(const_cast<const TableauTuple&>(t));
            return;
        }
        for (int e = 1; e <= t.entry_count(); ++e) {
            const SkewShape& s = t.shapes[e - 1];
            for (int r = 1; r <= s.rows(); ++r) {
                int c = next[e - 1][r];
                if (c > s.row_end(r)) continue;
                if (r > 1 && s.contains_cell(r - 1, c) && next[e - 1][r - 1] <= c) continue;
                next[e - 1][r] = c + 1;
                t.set(e, r, c, label);
                self(self, label + 1);
                t.set(e, r, c, 0);
                next[e - 1][r] = c;
            }
        }
    };
    rec(rec, 1);
}

inline std::vector<TableauTuple> all_sytt(const SkewShape& shape, int d) {
    std::vector<TableauTuple> out;
    for_each_sytt(shape, d, [&](const TableauTuple& t) { out.push_back(t); });
    return out;
}

namespace detail {

// labels in cell order, one byte each; enough for the sizes swept here
inline std::string encode_tuple(const TableauTuple& t) {
    std::string code;
    for (int e = 1; e <= t.entry_count(); ++e)
        for (int r = 1; r <= t.shapes[e - 1].rows(); ++r)
            for (int c = t.shapes[e - 1].row_start(r); c <= t.shapes[e - 1].row_end(r); ++c)
                code.push_back(static_cast<char>(t.at(e, r, c)));
    return code;
}

inline TableauTuple decode_tuple(const std::vector<SkewShape>& shapes, const std::string& code) {
    TableauTuple t;
    t.shapes = shapes;
    t.fill.resize(shapes.size());
    std::size_t i = 0;
    for (int e = 1; e <= t.entry_count(); ++e) {
        t.fill[e - 1].assign(shapes[e - 1].rows(), {});
        for (int r = 1; r <= shapes[e - 1].rows(); ++r) {
            t.fill[e - 1][r - 1].assign(shapes[e - 1].row_end(r), 0);
            for (int c = shapes[e - 1].row_start(r); c <= shapes[e - 1].row_end(r); ++c)
                t.fill[e - 1][r - 1][c - 1] = static_cast<int>(code[i++]);
        }
    }
    return t;
}

}  // namespace detail

// Is the graph on SYTT(shape, d) with flip edges connected?  Vertices are
// kept as compact codes so large graphs stay in memory.
inline bool flip_graph_connected(const SkewShape& shape, int d) {
    std::vector<SkewShape> shapes = skew_quotient(shape, d).entries;
    std::unordered_map<std::string, int> index;
    std::vector<std::string> codes;
    for_each_sytt(shape, d, [&](const TableauTuple& t) {
        std::string code = detail::encode_tuple(t);
        index.emplace(code, static_cast<int>(codes.size()));
        codes.push_back(std::move(code));
    });
    if (codes.size() <= 1) return true;
    const int m = static_cast<int>(codes[0].size());
    std::vector<bool> seen(codes.size(), false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        TableauTuple t = detail::decode_tuple(shapes, codes[v]);
        for (int i = 1; i < m; ++i) {
            TableauTuple next;
            try {
                next = flip(t, i);
            } catch (const InvalidFlip&) {
                continue;
            }
            int w = index.at(detail::encode_tuple(next));
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push(w);
            }
        }
    }
    return reached == codes.size();
}

}  // namespace skewsieve
