#pragma once

// Test-side oracles, independent of the abacus machinery: strip removal
// on the diagram itself, and reconstruction of a border-strip tableau
// from the positions of its minimal-content cells.

#include <skewsieve/borderstrip.hpp>
#include <skewsieve/partition.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace oracle {

using namespace skewsieve;

// All partitions obtained from p by removing one border strip of size s,
// found by scanning subdiagrams and checking the difference geometrically.
inline std::vector<Partition> removable_strip_results(const Partition& p, int s) {
    std::vector<Partition> out;
    for (const Partition& sub : subpartitions_of(p)) {
        if (sub.size() != p.size() - s) continue;
        if (is_border_strip(SkewShape(p, sub))) out.push_back(sub);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All partitions obtained from p by adding one border strip of size s.
inline std::vector<Partition> addable_strip_results(const Partition& p, int s) {
    std::vector<Partition> out;
    // a strip adds at most s rows and s columns
    int rows = p.length() + s;
    std::vector<int> current;
    auto rec = [&](auto&& self, int row, int prev) -> void {
        if (static_cast<int>(current.size()) == rows) {
            Partition bigger(current);
            if (bigger.size() == p.size() + s && bigger.contains(p) &&
                is_border_strip(SkewShape(bigger, p)))
                out.push_back(bigger);
            return;
        }
        int lo = p.part(row);
        for (int v = std::min(prev, p.part(1) + s); v >= lo; --v) {
            current.push_back(v);
            self(self, row + 1, v);
            current.pop_back();
        }
    };
    rec(rec, 1, p.part(1) + s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// The unique removable border strip of size s whose minimal-content cell
// is start: the bottom row keeps columns start.col..p_row, each row above
// spans from the next row's old end.  Returns the leftover partition.
inline std::optional<Partition> remove_strip_at(const Partition& p, Cell start, int s) {
    const int r0 = start.row, c0 = start.col;
    if (r0 < 1 || r0 > p.length() || c0 < 1 || c0 > p.part(r0)) return std::nullopt;
    if (p.part(r0 + 1) >= c0) return std::nullopt;  // leftover row r0 would be too short
    int need = s - (p.part(r0) - c0 + 1);
    int top = r0;
    while (need > 0 && top > 1) {
        --top;
        need -= p.part(top) - p.part(top + 1) + 1;
    }
    if (need != 0) return std::nullopt;
    std::vector<int> parts = p.parts();
    parts[r0 - 1] = c0 - 1;
    for (int r = top; r < r0; ++r) parts[r - 1] = p.part(r + 1) - 1;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) return std::nullopt;
    return Partition(std::move(parts));
}

// Rebuild a uniform border-strip tableau from its shape and the
// minimal-content cell of every strip (largest label removed first).
inline BorderStripTableau bst_from_min_content_cells(const SkewShape& shape, int d,
                                                     const std::vector<Cell>& cells) {
    BorderStripTableau bst;
    bst.shape = shape;
    bst.strips.assign(cells.size(), {});
    Partition current = shape.outer();
    for (int label = static_cast<int>(cells.size()); label >= 1; --label) {
        auto next = remove_strip_at(current, cells[label - 1], d);
        if (!next) throw Error("bst_from_min_content_cells: no strip at the given cell");
        for (int r = 1; r <= current.length(); ++r)
            for (int c = next->part(r) + 1; c <= current.part(r); ++c)
                bst.strips[label - 1].push_back({r, c});
        std::sort(bst.strips[label - 1].begin(), bst.strips[label - 1].end());
        current = *next;
    }
    if (!(current == shape.inner())) throw Error("bst_from_min_content_cells: wrong leftover");
    return bst;
}

}  // namespace oracle
