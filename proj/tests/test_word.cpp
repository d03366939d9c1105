#include <catch2/catch_amalgamated.hpp>

#include "xkostka/tableau.hpp"
#include "xkostka/word.hpp"

using namespace xkostka;

TEST_CASE("weights and concatenation") {
    Word w({2, 1, 1, 3});
    CHECK(weight_of(w) == std::vector<int>{2, 1, 1});
    CHECK(weight_is_partition(weight_of(w)));
    CHECK_FALSE(weight_is_partition(std::vector<int>{1, 2}));
    CHECK_FALSE(weight_is_partition(std::vector<int>{2, 0, 1}));
    CHECK(concat(Word({1, 2}), Word({3})) == Word({1, 2, 3}));
}

TEST_CASE("rows and double rows") {
    CHECK(is_row(Word({1, 1, 4})));
    CHECK_FALSE(is_row(Word({2, 1})));
    CHECK_THROWS_AS(is_double_row(Word({2, 3, 1, 1, 4})), std::invalid_argument);
    // halves a = "1 1", b = "2 3" written as "2 3 1 1"
    CHECK(is_double_row(Word({2, 3, 1, 1})));
    CHECK_FALSE(is_double_row(Word({1, 1, 2, 3})));
    CHECK_FALSE(is_double_row(Word({2, 2, 2, 3})));
}

TEST_CASE("lattice words") {
    CHECK(is_lattice(Word()));
    CHECK(is_lattice(Word({2, 1})));
    CHECK_FALSE(is_lattice(Word({1, 2})));
    CHECK(is_lattice(Word({1, 2, 1, 3, 2, 1})));
}

TEST_CASE("elementary Knuth moves") {
    auto moves = knuth_moves(Word({1, 3, 2}));
    CHECK(moves.count(Word({3, 1, 2})) == 1);
    CHECK(knuth_moves(Word({5})).empty());
    CHECK(knuth_moves(Word({1, 2, 3})).empty());
    // moves preserve the weight
    for (const Word& m : knuth_moves(Word({2, 1, 3, 2})))
        CHECK(weight_of(m) == weight_of(Word({2, 1, 3, 2})));
}

TEST_CASE("charge values") {
    CHECK(charge(Word({3, 2, 1})) == 0);
    CHECK(charge(Word({1, 2, 3})) == 3);
    CHECK(charge(Word({3, 1, 2})) == 2);
    CHECK(charge(Word({2, 1, 3})) == 1);
    CHECK(charge(Word({2, 1, 1})) == 0);
    CHECK(charge(Word({1, 1, 2})) == 1);
    CHECK(charge(Word()) == 0);
    for (int k = 1; k <= 6; ++k) {
        std::vector<int> up, down;
        for (int a = 1; a <= k; ++a) {
            up.push_back(a);
            down.push_back(k + 1 - a);
        }
        CHECK(charge(Word(up)) == k * (k - 1) / 2);
        CHECK(charge(Word(down)) == 0);
    }
    CHECK_THROWS_AS(charge(Word({2, 2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(charge(Word({2})), std::invalid_argument);
}

TEST_CASE("charge of tableaux") {
    CHECK(charge_tableau(tableau_of_partition(Partition({3}), {{1, 2, 3}})) == 3);
    CHECK(charge_tableau(tableau_of_partition(Partition({1, 1, 1}), {{1}, {2}, {3}})) == 0);
    // the unique tableau of shape = weight has charge zero
    CHECK(charge_tableau(tableau_of_partition(Partition({2, 2, 1}),
                                              {{1, 1}, {2, 2}, {3}})) == 0);
}
