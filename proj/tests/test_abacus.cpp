#include <catch2/catch_amalgamated.hpp>

#include <skewsieve/abacus.hpp>
#include <skewsieve/partition.hpp>

#include "oracles.hpp"

#include <algorithm>

using namespace skewsieve;

TEST_CASE("abacus_of") {
    Abacus a = abacus_of(Partition{9, 9, 6, 6, 6, 4, 1}, 3, 7);
    CHECK(a.beads == std::vector<long>{1, 5, 8, 9, 10, 14, 15});
    Abacus b = abacus_of(Partition{2, 1, 1, 1}, 3, 7);
    CHECK(b.beads == std::vector<long>{0, 1, 2, 4, 5, 6, 8});
    Abacus c = abacus_of(Partition{}, 4, 5);
    CHECK(c.beads == std::vector<long>{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(abacus_of(Partition{1, 1}, 2, 1), Error);
}

TEST_CASE("core") {
    CHECK(core(Partition{9, 9, 6, 6, 6, 4, 1}, 3) == Partition{2});
    CHECK(core(Partition{2, 1, 1, 1}, 3) == Partition{2});
    for (int n = 1; n <= 8; ++n) CHECK(core(Partition{n}, n) == Partition{});
}

TEST_CASE("core independent of bead count") {
    for (int n = 0; n <= 10; ++n)
        for (const Partition& p : partitions_of(n))
            for (int d = 1; d <= 5; ++d) {
                Partition reference = core(p, d);
                for (int extra = 1; extra <= 3; ++extra) {
                    Abacus a = abacus_of(p, d, p.length() + extra);
                    std::vector<long> packed;
                    for (int r = 0; r < d; ++r) {
                        long count = static_cast<long>(a.runner_positions(r).size());
                        for (long j = 0; j < count; ++j) packed.push_back(r + j * d);
                    }
                    CHECK(partition_of_beads(packed) == reference);
                }
            }
}

TEST_CASE("quotient of straight shapes") {
    auto q = quotient(Partition{9, 9, 6, 6, 6, 4, 1}, 3, 7);
    CHECK(q == std::vector<Partition>{Partition{4, 3}, Partition{2}, Partition{2, 1, 1}});
    auto qmu = quotient(Partition{2, 1, 1, 1}, 3, 7);
    CHECK(qmu == std::vector<Partition>{Partition{1}, Partition{}, Partition{}});
    auto q6 = quotient(Partition{9, 7, 4, 4, 3, 3, 1}, 6, 7);
    CHECK(q6 == std::vector<Partition>{Partition{2}, Partition{}, Partition{1}, Partition{2},
                                       Partition{}, Partition{}});
}

TEST_CASE("skew quotient") {
    QuotientTuple q = skew_quotient(SkewShape::parse("9,9,6,6,6,4,1/2,1,1,1"), 3);
    REQUIRE(q.entries.size() == 3);
    CHECK(q.entries[0] == SkewShape::parse("4,3/1"));
    CHECK(q.entries[1] == SkewShape::parse("2"));
    CHECK(q.entries[2] == SkewShape::parse("2,1,1"));

    QuotientTuple q2 = skew_quotient(SkewShape::parse("9,7,4,4,3,3,1/3,2,1,1"), 3);
    CHECK(q2.entries[0] == SkewShape::parse("4,4/2"));
    CHECK(q2.entries[1] == SkewShape{});
    CHECK(q2.entries[2] == SkewShape::parse("1,1"));

    QuotientTuple q3 = skew_quotient(SkewShape(Partition{3, 2}, Partition{3, 2}), 4);
    for (const auto& e : q3.entries) CHECK(e.size() == 0);

    CHECK_THROWS_AS(skew_quotient(SkewShape::parse("1"), 2), CoreMismatch);
    CHECK_THROWS_AS(skew_quotient(SkewShape::parse("3,1/2"), 2), RunnerNotNested);
}

TEST_CASE("bead moves down") {
    Abacus a{1, {0, 1, 2}};
    CHECK(bead_moves_down(a) == std::vector<std::pair<long, long>>{{2, 3}});

    Abacus empty2 = abacus_of(Partition{}, 2, 2);
    CHECK(bead_moves_down(empty2) == std::vector<std::pair<long, long>>{{0, 2}, {1, 3}});

    // moves on an l+d bead abacus match addable border strips
    for (int n = 0; n <= 9; ++n)
        for (const Partition& p : partitions_of(n))
            for (int d = 1; d <= 4; ++d) {
                Abacus a2 = abacus_of(p, d, p.length() + d);
                std::vector<Partition> via_moves;
                for (auto [from, to] : bead_moves_down(a2)) {
                    std::vector<long> beads = a2.beads;
                    beads.erase(std::find(beads.begin(), beads.end(), from));
                    beads.push_back(to);
                    via_moves.push_back(partition_of_beads(beads));
                }
                std::sort(via_moves.begin(), via_moves.end());
                CHECK(via_moves == oracle::addable_strip_results(p, d));
            }
}

TEST_CASE("bead moves up match strip removal on the diagram") {
    for (int n = 1; n <= 12; ++n)
        for (const Partition& p : partitions_of(n))
            for (int s = 1; s <= n; ++s) {
                Abacus a = abacus_of(p, 1, p.length());
                std::vector<Partition> via_moves;
                for (long b : a.beads) {
                    long t = b - s;
                    if (t < 0 || a.occupied(t)) continue;
                    std::vector<long> beads = a.beads;
                    beads.erase(std::find(beads.begin(), beads.end(), b));
                    beads.push_back(t);
                    via_moves.push_back(partition_of_beads(beads));
                }
                std::sort(via_moves.begin(), via_moves.end());
                CHECK(via_moves == oracle::removable_strip_results(p, s));
            }
}

TEST_CASE("quotient size identity") {
    for (int n = 0; n <= 14; ++n)
        for (const Partition& p : partitions_of(n))
            for (int d = 1; d <= 6; ++d) {
                int total = core(p, d).size();
                for (const Partition& e : quotient(p, d, std::max(p.length(), 1)))
                    total += d * e.size();
                CHECK(total == n);
            }
}

TEST_CASE("quotient bead count conventions") {
    for (int n = 0; n <= 10; ++n)
        for (const Partition& p : partitions_of(n))
            for (int d = 1; d <= 4; ++d) {
                int base = p.length() + 1;
                auto q0 = quotient(p, d, base);
                // adding d beads leaves the tuple unchanged
                CHECK(quotient(p, d, base + d) == q0);
                // adding one bead shifts entries one step to the right
                auto q1 = quotient(p, d, base + 1);
                std::vector<Partition> rotated(q0.size());
                for (int r = 0; r < d; ++r) rotated[(r + 1) % d] = q0[r];
                CHECK(q1 == rotated);
            }
}

TEST_CASE("runner nesting against the double quotient") {
    // positions on runner i+(j-1)k of the dk-abacus equal positions on
    // runner j of the d-abacus of the i-th k-quotient entry
    auto check_nesting = [](const Partition& p, int d, int k) {
        Abacus big = abacus_of(p, d * k, p.length());
        Abacus small = abacus_of(p, k, p.length());
        for (int i = 1; i <= k; ++i) {
            auto runner_beads = small.runner_positions(i - 1);
            Partition entry = runner_partition(runner_beads);
            Abacus entry_abacus =
                abacus_of(entry, d, static_cast<int>(runner_beads.size()));
            for (int j = 1; j <= d; ++j)
                CHECK(big.runner_positions((i - 1) + (j - 1) * k) ==
                      entry_abacus.runner_positions(j - 1));
        }
    };
    for (int n = 1; n <= 12; ++n)
        for (const Partition& p : partitions_of(n))
            for (int k = 1; k <= 12; ++k)
                for (int d = 1; d * k <= 12; ++d) check_nesting(p, d, k);

    // the paper's pair: first and fourth runner of the 6-abacus carry the
    // 2-quotient of the first 3-quotient entry
    check_nesting(Partition{9, 7, 4, 4, 3, 3, 1}, 2, 3);
    check_nesting(Partition{3, 2, 1, 1}, 2, 3);
}
