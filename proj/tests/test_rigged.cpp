#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "xkostka/reference_data.hpp"
#include "xkostka/rigged.hpp"

using namespace xkostka;

namespace {
RiggedConfiguration make_rc(int n, Partition mu,
                            std::vector<std::vector<RcString>> levels) {
    RiggedConfiguration rc(n, std::move(mu));
    rc.levels = std::move(levels);
    rc.canonicalize();
    return rc;
}
}  // namespace

TEST_CASE("vacancy numbers") {
    RiggedConfiguration empty(2, Partition({1, 1}));
    CHECK(vacancy(empty, 1, 1) == 2);
    CHECK(vacancy(empty, 1, 0) == 0);
    CHECK_THROWS_AS(vacancy(empty, 2, 1), std::invalid_argument);

    // far beyond all strings the vacancy stabilises at lambda_a - lambda_{a+1}
    Partition mu({3, 2, 1}), la({3, 2, 1});
    for (const auto& rc : enumerate_rc(mu, la, 3))
        for (int a = 1; a < 3; ++a)
            CHECK(vacancy(rc, a, 40) == la.part(a) - la.part(a + 1));

    // the convolution form agrees with the difference form
    for (const auto& rc : enumerate_rc(Partition({2, 2, 1}), Partition({3, 2}), 3))
        for (int a = 1; a < 3; ++a)
            for (int i = 1; i <= 6; ++i) CHECK(vacancy(rc, a, i) == vacancy_general(rc, a, i));
}

TEST_CASE("label permutations among equal lengths are identified") {
    auto a = make_rc(3, Partition({2, 2}), {{{2, 1}, {2, 0}, {1, 3}}, {{1, -1}}});
    auto b = make_rc(3, Partition({2, 2}), {{{2, 0}, {2, 1}, {1, 3}}, {{1, -1}}});
    CHECK(a == b);
    CHECK(cocharge(a) == cocharge(b));
    auto c = make_rc(3, Partition({2, 2}), {{{2, 1}, {2, 1}, {1, 3}}, {{1, -1}}});
    CHECK(!(a == c));
}

TEST_CASE("weights validity and cocharge") {
    RiggedConfiguration empty(3, Partition({2, 1}));
    CHECK(rc_weight(empty) == (Weight{{3, 0, 0}}));
    CHECK(is_valid(empty));
    CHECK(is_highest(empty));
    CHECK(cocharge(empty) == 0);

    auto rc = make_rc(2, Partition({1, 1}), {{{1, 0}}});
    CHECK(cc_config(rc) == 1);
    CHECK(cocharge(rc) == 1);
    CHECK(cc_config_double(rc, 1) == 0);
    CHECK(cc_config_double(rc, 0) == 1);

    auto bad = make_rc(2, Partition({1, 1}), {{{1, 3}}});
    CHECK_FALSE(is_valid(bad));  // label above the vacancy number
    auto neg = make_rc(2, Partition({1, 1}), {{{1, -1}}});
    CHECK_FALSE(is_highest(neg));
}

TEST_CASE("concavity propagation") {
    CHECK(nonneg_by_concavity({0, 2, 3, 3, 2, 0}));
    CHECK_THROWS_AS(nonneg_by_concavity({0, 1, 5, 1, 0}), std::invalid_argument);
    std::mt19937 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        // build a random concave sequence with nonnegative ends from random
        // decreasing increments
        int m = 3 + static_cast<int>(gen() % 8);
        std::vector<int> inc(m - 1);
        for (auto& x : inc) x = static_cast<int>(gen() % 7) - 3;
        std::sort(inc.rbegin(), inc.rend());
        std::vector<int> a{static_cast<int>(gen() % 5)};
        for (int d : inc) a.push_back(a.back() + d);
        if (a.back() < 0) continue;
        CHECK(nonneg_by_concavity(a));
        for (int x : a) CHECK(x >= 0);
    }
}

TEST_CASE("psi on degenerate inputs") {
    RowTuple ones{{{1, 1, 1}, {}, {}}};
    RiggedConfiguration rc = psi_rc(ones);
    for (const auto& lvl : rc.levels) CHECK(lvl.empty());
    CHECK(rc.mu == Partition({3}));
}

TEST_CASE("psi traces match the reference tables") {
    for (const auto& fix : {reference::trace_fixture_1(), reference::trace_fixture_2()}) {
        TableauPair pr{tableau_of_partition(fix.lambda.lp, fix.plus_rows),
                       tableau_of_partition(fix.lambda.lpp, fix.minus_rows)};
        PsiTrace trace;
        RiggedConfiguration rc = psi_rc(row_tuple_of_pair(pr, fix.n), &trace, fix.s);
        REQUIRE(trace.steps.size() == fix.step_rows.size());
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            CHECK(is_valid(trace.steps[i].rc));  // valid over the truncated content
            CHECK(trace.steps[i].w.rows == fix.step_rows[i]);
            for (int a = 1; a < fix.n; ++a) {
                const auto& lvl = trace.steps[i].rc.levels[a - 1];
                const auto& exp = fix.step_levels[i][a - 1];
                REQUIRE(lvl.size() == exp.size());
                for (std::size_t j = 0; j < lvl.size(); ++j) {
                    CHECK(lvl[j].length == exp[j][0]);
                    CHECK(lvl[j].label == exp[j][1]);
                    CHECK(vacancy(trace.steps[i].rc, a, lvl[j].length) == exp[j][2]);
                }
            }
        }
        RiggedConfiguration plus = j_plus(rc, fix.s);
        for (int a = 1; a < fix.n; ++a) {
            REQUIRE(plus.levels[a - 1].size() == fix.jplus[a - 1].size());
            for (std::size_t j = 0; j < plus.levels[a - 1].size(); ++j) {
                CHECK(plus.levels[a - 1][j].length == fix.jplus[a - 1][j][0]);
                CHECK(plus.levels[a - 1][j].label == fix.jplus[a - 1][j][1]);
            }
        }
        // the selected lengths obey i_0 <= i_1 <= ... by construction; a
        // violation would have thrown inside psi_rc
        CHECK(is_valid(rc));
        CHECK_FALSE(is_highest(rc));  // negative labels are present
    }
}

TEST_CASE("psi inverse") {
    auto fix = reference::trace_fixture_1();
    TableauPair pr{tableau_of_partition(fix.lambda.lp, fix.plus_rows),
                   tableau_of_partition(fix.lambda.lpp, fix.minus_rows)};
    RowTuple w = row_tuple_of_pair(pr, fix.n);
    RiggedConfiguration rc = psi_rc(w);
    auto back = psi_rc_inverse(rc, w.content(), fix.n);
    REQUIRE(back);
    CHECK(back->rows == w.rows);

    // empty configuration over mu = (N) pulls back to the all-ones tuple
    RiggedConfiguration empty(2, Partition({3}));
    auto ones = psi_rc_inverse(empty, Partition({3}), 2);
    REQUIRE(ones);
    CHECK(ones->rows == std::vector<std::vector<int>>{{1, 1, 1}, {}});

    // full round trip over W((2,2)), n = 3
    for (const auto& v : enumerate_w(Partition({2, 2}), 3)) {
        auto u = psi_rc_inverse(psi_rc(v), Partition({2, 2}), 3);
        REQUIRE(u);
        CHECK(u->rows == v.rows);
    }

    // something outside the image is reported
    auto stray = make_rc(2, Partition({2}), {{{1, 0}}});
    CHECK_FALSE(psi_rc_inverse(stray, Partition({2}), 2).has_value());
}

TEST_CASE("highest weight enumeration") {
    auto only_empty = enumerate_rc(Partition({1, 1}), Partition({2}), 2);
    REQUIRE(only_empty.size() == 1);
    CHECK(only_empty[0].levels[0].empty());

    auto one = enumerate_rc(Partition({1, 1}), Partition({1, 1}), 2);
    REQUIRE(one.size() == 1);
    REQUIRE(one[0].levels[0].size() == 1);
    CHECK(one[0].levels[0][0] == RcString{1, 0});
    CHECK(vacancy(one[0], 1, 1) == 0);

    // Kostka numbers
    for (int N = 1; N <= 5; ++N)
        for (const auto& la : partitions_of(N))
            for (const auto& mu : partitions_of(N)) {
                int n = std::max(2, N);
                std::vector<int> wt(mu.length());
                for (int i = 1; i <= mu.length(); ++i) wt[i - 1] = mu.part(i);
                CHECK(enumerate_rc(mu, la, n).size() ==
                      enumerate_tableaux(SkewShape(la, Partition()), wt).size());
            }
}

TEST_CASE("admissible configurations") {
    CHECK(enumerate_c(Partition({1, 1}), Partition({2}), 2).size() == 1);
    auto c = enumerate_c(Partition({2, 1}), Partition({2, 1}), 3);
    REQUIRE(c.size() == 1);
    CHECK(c[0].levels[0].size() == 1);
    CHECK(vacancy(c[0], 1, 1) == 0);
}

TEST_CASE("level shift") {
    auto fix3 = reference::pair_rc_fixtures();
    Partition mu = reference::pair_rc_mu();
    auto rc = make_rc(3, mu, {{{2, 1}, {1, 0}}, {{2, -1}}});
    auto plus = j_plus(rc, 2);
    CHECK(plus.levels[1][0] == RcString{2, 1});
    CHECK(j_minus(plus, 2) == rc);
    CHECK(j_plus(rc, 0) == rc);
    CHECK(j_plus(rc, 3) == rc);  // the top level holds no strings
    // shifting a level without strings is the identity
    auto rc2 = make_rc(3, mu, {{{1, 0}}, {}});
    CHECK(j_plus(rc2, 2) == rc2);
}

TEST_CASE("double sets on the six-element example") {
    Partition mu = reference::pair_rc_mu();
    DoublePartition dla = reference::pair_rc_lambda();
    auto rcs = rc_double(mu, dla, 3);
    CHECK(rcs.size() == 6);
    auto qm = enumerate_qm_double(mu, dla, 3);
    CHECK(qm.size() == 6);
    std::vector<RiggedConfiguration> plus;
    for (const auto& rc : rcs) plus.push_back(j_plus(rc, dla.s()));
    std::sort(plus.begin(), plus.end());
    CHECK(plus == qm);
    for (const auto& rc : qm) {
        CHECK(is_highest(rc));
        CHECK((rc_weight(rc) == weight_from_double(dla, 3)));
    }
    // the configurations C(mu, Lambda) are the projections
    auto confs = enumerate_c_double(mu, dla, 3);
    CHECK(confs.size() == 2);
}

TEST_CASE("double sets degenerate to the ordinary ones") {
    // s = 0: no shift anywhere
    Partition mu({2, 1});
    DoublePartition dla{Partition(), Partition({2, 1})};
    auto dbl = enumerate_qm_double(mu, dla, 3);
    auto ord = enumerate_rc(mu, Partition({2, 1}), 3);
    CHECK(dbl == ord);
    CHECK(rc_double(mu, dla, 3) == ord);
}
