#include <catch2/catch_amalgamated.hpp>

#include "xkostka/partition.hpp"
#include "xkostka/tableau.hpp"

using namespace xkostka;

TEST_CASE("conjugate") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("partition invariants") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    Partition p({4, 2, 1});
    CHECK(p.size() == 7);
    CHECK(p.length() == 3);
    CHECK(p.part(1) == 4);
    CHECK(p.part(5) == 0);
    CHECK(p.multiplicity(1) == 1);
    CHECK(p.column_sum(2) == 5);
}

TEST_CASE("removed boxes strips the bottom rows first") {
    Partition mu({4, 4, 3, 2, 2});
    CHECK(mu.removed_boxes(0) == mu);
    CHECK(mu.removed_boxes(1) == Partition({4, 4, 3, 2, 1}));
    CHECK(mu.removed_boxes(9) == Partition({4, 2}));
    CHECK(mu.removed_boxes(15) == Partition());
    CHECK_THROWS_AS(mu.removed_boxes(16), std::invalid_argument);
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(6).size() == 11);
    CHECK(double_partitions_of(5).size() == 36);
}

TEST_CASE("skew shapes") {
    SkewShape sh(Partition({4, 4, 2, 1}), Partition({2, 1}));
    CHECK(sh.cells() == 8);
    CHECK(sh.has_cell(1, 3));
    CHECK_FALSE(sh.has_cell(1, 2));
    CHECK(sh.has_cell(3, 1));
    CHECK_THROWS_AS(SkewShape(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("xi shape") {
    CHECK(xi_shape({Partition({2, 1}), Partition({2})}, 2) ==
          SkewShape(Partition({4, 3, 2}), Partition({2, 2})));
    CHECK(xi_shape({Partition(), Partition({3, 1})}, 5) ==
          SkewShape(Partition({3, 1}), Partition()));
    CHECK(xi_shape({Partition({4, 2}), Partition({4, 2, 2, 1})}, 4) ==
          SkewShape(Partition({8, 6, 4, 2, 2, 1}), Partition({4, 4})));
    CHECK_THROWS_AS(xi_shape({Partition({1}), Partition({3})}, 2), std::invalid_argument);
}
