#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "skewsieve/errors.hpp"

namespace skewsieve {

// Weakly decreasing sequence of positive integers, stored without
// trailing zeros so that equality is plain vector equality.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
                throw Error("Partition: parts must be weakly decreasing and positive");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // "9,9,6,6,6,4,1"; the empty string is the empty partition.
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            if (token.empty()) continue;
            parts.push_back(std::stoi(token));
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Number of boxes.
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // 1-based, zero-padded beyond the last part.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    bool contains(const Partition& inner) const {
        if (inner.length() > length()) return false;
        for (int i = 1; i <= inner.length(); ++i)
            if (inner.part(i) > part(i)) return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> cols;
        if (!parts_.empty()) {
            cols.assign(parts_[0], 0);
            for (int p : parts_)
                for (int c = 0; c < p; ++c) ++cols[c];
        }
        return Partition(std::move(cols));
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

struct Cell {
    int row = 0;  // 1-based
    int col = 0;  // 1-based
    int content() const { return col - row; }
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

class SkewShape {
  public:
    SkewShape() = default;

    explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

    SkewShape(Partition outer, Partition inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!outer_.contains(inner_))
            throw Error("SkewShape: inner shape not contained in outer shape");
    }

    // "outer/inner"; the inner part may be omitted for straight shapes.
    static SkewShape parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos) return SkewShape(Partition::parse(text));
        return SkewShape(Partition::parse(text.substr(0, slash)),
                         Partition::parse(text.substr(slash + 1)));
    }

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }
    int rows() const { return outer_.length(); }
    bool is_straight() const { return inner_.empty(); }

    // Columns occupied by row r: row_start(r) .. row_end(r) (may be empty).
    int row_start(int r) const { return inner_.part(r) + 1; }
    int row_end(int r) const { return outer_.part(r); }
    int row_length(int r) const { return row_end(r) - row_start(r) + 1; }

    bool contains_cell(int r, int c) const {
        return r >= 1 && r <= rows() && c >= row_start(r) && c <= row_end(r);
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(size());
        for (int r = 1; r <= rows(); ++r)
            for (int c = row_start(r); c <= row_end(r); ++c) out.push_back({r, c});
        return out;
    }

    SkewShape conjugate() const { return {outer_.conjugate(), inner_.conjugate()}; }

    std::string to_string() const {
        if (inner_.empty()) return outer_.to_string();
        return outer_.to_string() + "/" + inner_.to_string();
    }

    bool operator==(const SkewShape&) const = default;
    auto operator<=>(const SkewShape&) const = default;

  private:
    Partition outer_;
    Partition inner_;
};

// First-column hook lengths {p_i + l - i}, i.e. the beta-set with l beads.
// Returned in increasing order.
inline std::vector<int> first_column_hooks(const Partition& p) {
    int l = p.length();
    std::vector<int> hooks;
    hooks.reserve(l);
    for (int i = l; i >= 1; --i) hooks.push_back(p.part(i) + l - i);
    return hooks;
}

inline SkewShape stretch(const SkewShape& shape, int s) {
    if (s < 1) throw Error("stretch: factor must be positive");
    auto scale = [s](const Partition& p) {
        std::vector<int> parts = p.parts();
        for (int& x : parts) x *= s;
        return Partition(std::move(parts));
    };
    return {scale(shape.outer()), scale(shape.inner())};
}

struct RowColProfile {
    bool has_row_with_two = false;
    bool has_col_with_two = false;
    bool operator==(const RowColProfile&) const = default;
};

inline RowColProfile row_column_profile(const SkewShape& shape) {
    RowColProfile profile;
    for (int r = 1; r <= shape.rows(); ++r)
        if (shape.row_length(r) >= 2) profile.has_row_with_two = true;
    // column with two boxes: consecutive rows sharing a column
    for (int r = 1; r < shape.rows(); ++r)
        if (shape.row_length(r + 1) >= 1 && shape.row_length(r) >= 1 &&
            shape.row_start(r) <= shape.row_end(r + 1))
            profile.has_col_with_two = true;
    return profile;
}

// Maximal runs of consecutive rows connected by a shared column.
// Every connected component of a skew diagram is such a run.
inline std::vector<SkewShape> connected_components(const SkewShape& shape) {
    std::vector<SkewShape> components;
    int r = 1;
    while (r <= shape.rows()) {
        if (shape.row_length(r) <= 0) {  // empty row separates components
            ++r;
            continue;
        }
        int top = r;
        while (r < shape.rows() && shape.row_length(r + 1) >= 1 &&
               shape.row_start(r) <= shape.row_end(r + 1))
            ++r;
        int bottom = r;
        // translate rows top..bottom so the component starts at row 1, column 1
        int shift = shape.row_start(bottom) - 1;
        std::vector<int> outer, inner;
        for (int i = top; i <= bottom; ++i) {
            outer.push_back(shape.row_end(i) - shift);
            inner.push_back(shape.row_start(i) - 1 - shift);
        }
        components.emplace_back(Partition(std::move(outer)), Partition(std::move(inner)));
        ++r;
    }
    return components;
}

// Connected and free of 2x2 blocks: the nonempty rows are consecutive and
// each pair of neighbours overlaps in exactly one column.
inline bool is_border_strip(const SkewShape& shape) {
    if (shape.size() == 0) return false;
    int first = 0, last = 0;
    for (int r = 1; r <= shape.rows(); ++r)
        if (shape.row_length(r) >= 1) {
            if (first == 0) first = r;
            last = r;
        }
    for (int r = first; r <= last; ++r)
        if (shape.row_length(r) <= 0) return false;
    for (int r = first; r < last; ++r)
        if (shape.row_start(r) != shape.row_end(r + 1)) return false;
    return true;
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// All subpartitions mu of p (weakly decreasing, mu_i <= p_i).
inline std::vector<Partition> subpartitions_of(const Partition& p) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int row, int prev) {
        if (row > p.length()) {
            out.emplace_back(current);
            return;
        }
        for (int v = std::min(prev, p.part(row)); v >= 0; --v) {
            current.push_back(v);
            rec(row + 1, v);
            current.pop_back();
        }
    };
    rec(1, p.length() == 0 ? 0 : p.part(1));
    return out;
}

// Canonical skew diagrams with n boxes: no empty rows, the first column
// occupied, outer width at most n.  Every skew diagram of size n is
// equivalent (as a union of translated connected components) to exactly
// one such pair, so sweeps over "all skew shapes of size n" range over
// this family.
template <class F>
void for_each_skew_shape(int n, F&& visit) {
    if (n == 0) {
        visit(SkewShape{});
        return;
    }
    std::vector<int> starts, ends;
    std::function<void(int)> rec = [&](int placed) {
        int rows = static_cast<int>(ends.size());
        if (placed == n) {
            if (starts.back() != 1) return;
            std::vector<int> outer(ends), inner;
            for (int s : starts) inner.push_back(s - 1);
            visit(SkewShape(Partition(std::move(outer)), Partition(std::move(inner))));
            return;
        }
        int max_end = rows == 0 ? n : ends.back();
        int max_start = rows == 0 ? n : starts.back();
        for (int e = max_end; e >= 1; --e) {
            for (int s = std::min(e, max_start); s >= 1; --s) {
                int len = e - s + 1;
                if (placed + len > n) continue;
                starts.push_back(s);
                ends.push_back(e);
                rec(placed + len);
                starts.pop_back();
                ends.pop_back();
            }
        }
    };
    rec(0);
}

inline std::vector<SkewShape> skew_shapes_of_size(int n) {
    std::vector<SkewShape> out;
    for_each_skew_shape(n, [&](const SkewShape& s) { out.push_back(s); });
    return out;
}

}  // namespace skewsieve
