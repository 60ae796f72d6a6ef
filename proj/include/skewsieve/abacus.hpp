#pragma once

#include <algorithm>
#include <vector>

#include "skewsieve/errors.hpp"
#include "skewsieve/partition.hpp"

namespace skewsieve {

// Beta-set of a partition drawn on d runners: bead b sits on runner
// b mod d at position (b - b mod d)/d.  The bead count is part of the
// data; all pair constructions here use exactly l(outer) beads, padding
// the inner partition with zero parts.
struct Abacus {
    int runner_count = 1;
    std::vector<long> beads;  // increasing, distinct, nonnegative

    int bead_count() const { return static_cast<int>(beads.size()); }
    long runner(long b) const { return b % runner_count; }
    long position(long b) const { return b / runner_count; }

    bool occupied(long b) const {
        return std::binary_search(beads.begin(), beads.end(), b);
    }

    // Positions on one runner, increasing.
    std::vector<long> runner_positions(int r) const {
        std::vector<long> out;
        for (long b : beads)
            if (runner(b) == r) out.push_back(position(b));
        return out;
    }

    bool operator==(const Abacus&) const = default;
};

inline Abacus abacus_of(const Partition& p, int d, int bead_count) {
    if (d < 1) throw Error("abacus_of: runner count must be positive");
    if (bead_count < p.length())
        throw Error("abacus_of: bead count smaller than number of parts");
    Abacus a;
    a.runner_count = d;
    a.beads.reserve(bead_count);
    for (int i = bead_count; i >= 1; --i)
        a.beads.push_back(p.part(i) + bead_count - i);
    return a;
}

// Partition read off a beta-set (any bead count).
inline Partition partition_of_beads(const std::vector<long>& beads) {
    const int k = static_cast<int>(beads.size());
    std::vector<long> sorted(beads);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> parts;
    for (int i = k - 1; i >= 0; --i) {
        int part = static_cast<int>(sorted[i] - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

inline Partition partition_of(const Abacus& a) { return partition_of_beads(a.beads); }

// Partition from positions on a single runner read as a 1-abacus.
inline Partition runner_partition(const std::vector<long>& positions) {
    return partition_of_beads(positions);
}

// All beads moved up their runners as far as possible.  The result does
// not depend on the bead-count normalization.
inline Partition core(const Partition& p, int d) {
    Abacus a = abacus_of(p, d, p.length());
    std::vector<long> counts(d, 0);
    for (long b : a.beads) ++counts[a.runner(b)];
    std::vector<long> packed;
    for (int r = 0; r < d; ++r)
        for (long j = 0; j < counts[r]; ++j) packed.push_back(r + j * static_cast<long>(d));
    return partition_of_beads(packed);
}

struct QuotientTuple {
    std::vector<SkewShape> entries;  // entry i (1-based) from runner residue i-1

    int total_size() const {
        int s = 0;
        for (const auto& e : entries) s += e.size();
        return s;
    }
    bool operator==(const QuotientTuple&) const = default;
};

// d-quotient of a straight shape: each runner read as a 1-abacus.
inline std::vector<Partition> quotient(const Partition& p, int d, int bead_count) {
    Abacus a = abacus_of(p, d, bead_count);
    std::vector<Partition> entries;
    entries.reserve(d);
    for (int r = 0; r < d; ++r) entries.push_back(runner_partition(a.runner_positions(r)));
    return entries;
}

namespace detail {

enum class QuotientStatus { Ok, CoreMismatch, NotNested };

// Exception-free skew quotient used by the counting sweeps.  Entries are
// appended to out only on success.
inline QuotientStatus try_skew_quotient(const SkewShape& shape, int d,
                                        std::vector<SkewShape>* out) {
    const int l = shape.outer().length();
    std::vector<long> ob(l), ib(l);
    for (int i = l; i >= 1; --i) {
        ob[l - i] = shape.outer().part(i) + l - i;
        ib[l - i] = shape.inner().part(i) + l - i;
    }
    std::vector<long> po, pi;
    std::vector<int> oparts, iparts;
    for (int r = 0; r < d; ++r) {
        po.clear();
        pi.clear();
        for (long b : ob)
            if (b % d == r) po.push_back(b / d);
        for (long b : ib)
            if (b % d == r) pi.push_back(b / d);
        if (po.size() != pi.size()) return QuotientStatus::CoreMismatch;
        for (std::size_t i = 0; i < po.size(); ++i)
            if (pi[i] > po[i]) return QuotientStatus::NotNested;
        if (out) {
            const int m = static_cast<int>(po.size());
            oparts.clear();
            iparts.clear();
            for (int i = m - 1; i >= 0; --i) {
                oparts.push_back(static_cast<int>(po[i] - i));
                iparts.push_back(static_cast<int>(pi[i] - i));
            }
            out->emplace_back(Partition(oparts), Partition(iparts));
        }
    }
    return QuotientStatus::Ok;
}

}  // namespace detail

// Skew d-quotient with both abaci normalized to l(outer) beads.  Errors
// signal that BST(lambda/mu, d) is empty: CoreMismatch when the d-cores
// differ, RunnerNotNested when some runner's inner positions are not
// dominated by the outer ones.
inline QuotientTuple skew_quotient(const SkewShape& shape, int d) {
    QuotientTuple tuple;
    switch (detail::try_skew_quotient(shape, d, &tuple.entries)) {
        case detail::QuotientStatus::Ok:
            return tuple;
        case detail::QuotientStatus::CoreMismatch:
            throw CoreMismatch("skew_quotient: d-cores of outer and inner shape differ");
        case detail::QuotientStatus::NotNested:
            throw RunnerNotNested("skew_quotient: runner positions not nested");
    }
    throw Error("unreachable");
}

// Single-bead moves b -> b+d available on the abacus; each corresponds to
// adding one border strip of size d to the partition.
inline std::vector<std::pair<long, long>> bead_moves_down(const Abacus& a) {
    std::vector<std::pair<long, long>> moves;
    for (long b : a.beads)
        if (!a.occupied(b + a.runner_count)) moves.push_back({b, b + a.runner_count});
    return moves;
}

}  // namespace skewsieve
