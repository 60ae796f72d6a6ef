#include <catch2/catch_amalgamated.hpp>

#include <skewsieve/partition.hpp>
#include <skewsieve/abacus.hpp>

using namespace skewsieve;

TEST_CASE("partition basics and canonical form") {
    CHECK(Partition{3, 2, 1}.size() == 6);
    CHECK(Partition(std::vector<int>{3, 2, 0, 0}) == Partition{3, 2});
    CHECK(Partition{}.empty());
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), Error);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, -1}), Error);
    CHECK(Partition::parse("9,9,6,6,6,4,1").to_string() == "9,9,6,6,6,4,1");
    CHECK(Partition::parse("") == Partition{});
}

TEST_CASE("skew shape containment and parsing") {
    CHECK_THROWS_AS(SkewShape(Partition{1}, Partition{2}), Error);
    CHECK_THROWS_AS(SkewShape(Partition{2, 1}, Partition{1, 1, 1}), Error);
    SkewShape s = SkewShape::parse("9,9,6,6,6,4,1/2,1,1,1");
    CHECK(s.size() == 36);
    CHECK(s.to_string() == "9,9,6,6,6,4,1/2,1,1,1");
    CHECK(SkewShape::parse("3,1") == SkewShape(Partition{3, 1}));
    CHECK(SkewShape::parse(s.to_string()) == s);
}

TEST_CASE("cells") {
    SkewShape full(Partition{2, 1});
    CHECK(full.cells() == std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});
    SkewShape skew(Partition{2, 1}, Partition{1});
    CHECK(skew.cells() == std::vector<Cell>{{1, 2}, {2, 1}});
    CHECK(SkewShape::parse("9,9,6,6,6,4,1/2,1,1,1").cells().size() == 36);
}

TEST_CASE("cells size and content progression") {
    for (int n = 1; n <= 10; ++n)
        for (const Partition& p : partitions_of(n))
            for (const Partition& mu : subpartitions_of(p)) {
                SkewShape shape(p, mu);
                auto cells = shape.cells();
                CHECK(static_cast<int>(cells.size()) == p.size() - mu.size());
                for (std::size_t i = 1; i < cells.size(); ++i)
                    if (cells[i].row == cells[i - 1].row)
                        CHECK(cells[i].content() == cells[i - 1].content() + 1);
            }
}

TEST_CASE("conjugate") {
    CHECK(Partition{2, 2}.conjugate() == Partition{2, 2});
    CHECK(Partition{3, 1, 1}.conjugate() == Partition{3, 1, 1});
    CHECK(Partition{4, 3}.conjugate() == Partition{2, 2, 2, 1});
    for (int n = 0; n <= 20; ++n)
        for (const Partition& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("first column hooks") {
    CHECK(first_column_hooks(Partition{9, 9, 6, 6, 6, 4, 1}) ==
          std::vector<int>{1, 5, 8, 9, 10, 14, 15});
    CHECK(first_column_hooks(Partition{2, 1, 1, 1}) == std::vector<int>{1, 2, 3, 5});
    CHECK(first_column_hooks(Partition{1}) == std::vector<int>{1});
}

TEST_CASE("beta set recovers the partition") {
    for (int n = 0; n <= 20; ++n)
        for (const Partition& p : partitions_of(n)) {
            auto hooks = first_column_hooks(p);
            std::vector<long> beads(hooks.begin(), hooks.end());
            CHECK(partition_of_beads(beads) == p);
        }
}

TEST_CASE("stretch") {
    CHECK(stretch(SkewShape(Partition{2, 1}), 2) == SkewShape(Partition{4, 2}));
    CHECK(stretch(SkewShape(Partition{2, 1}, Partition{1}), 3) ==
          SkewShape(Partition{6, 3}, Partition{3}));
    CHECK(stretch(SkewShape{}, 5) == SkewShape{});
}

TEST_CASE("row and column profile") {
    CHECK(row_column_profile(SkewShape(Partition{2, 2})) == RowColProfile{true, true});
    for (int n = 2; n <= 6; ++n)
        CHECK(row_column_profile(SkewShape(Partition{n})) == RowColProfile{true, false});
    CHECK(row_column_profile(SkewShape(Partition{2, 1}, Partition{1})) ==
          RowColProfile{false, false});
}

TEST_CASE("connected components and border strips") {
    auto comps = connected_components(SkewShape::parse("3,1/1"));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == SkewShape::parse("2"));
    CHECK(comps[1] == SkewShape::parse("1"));
    CHECK(connected_components(SkewShape::parse("2,2")).size() == 1);

    CHECK(is_border_strip(SkewShape::parse("2,2/1")));
    CHECK(is_border_strip(SkewShape::parse("3")));
    CHECK_FALSE(is_border_strip(SkewShape::parse("2,2")));
    CHECK_FALSE(is_border_strip(SkewShape::parse("2,1/1")));
}

TEST_CASE("canonical skew shape family") {
    // no empty rows, first column occupied, width bounded by the size
    long expected[] = {1, 1, 3, 11, 46, 205, 947};
    for (int n = 0; n <= 6; ++n) {
        long count = 0;
        for_each_skew_shape(n, [&](const SkewShape& s) {
            ++count;
            if (n == 0) return;
            CHECK(s.size() == n);
            CHECK(s.outer().part(1) <= n);
            CHECK(s.inner().length() < s.outer().length());
            for (int r = 1; r <= s.rows(); ++r) CHECK(s.row_length(r) >= 1);
        });
        CHECK(count == expected[n]);
    }
}
