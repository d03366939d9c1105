#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "xkostka/io.hpp"
#include "xkostka/reference_data.hpp"

using namespace xkostka;

TEST_CASE("json round trips") {
    detail::Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        Partition p = detail::random_partition(rng, 9, 6);
        CHECK(io::partition_from_json(io::to_json(p)) == p);

        SkewShape sh = detail::random_skew_shape(rng, 4, 4, 9);
        CHECK(io::skew_from_json(io::to_json(sh)) == sh);

        Tableau t = detail::random_filling(rng, sh, sh.rows() + 2);
        CHECK(io::tableau_from_json(io::to_json(t)) == t);
    }
    for (const auto& w : enumerate_w(Partition({2, 1}), 3)) {
        CHECK(io::row_tuple_from_json(io::to_json(w)).rows == w.rows);
        RiggedConfiguration rc = psi_rc(w);
        CHECK(io::rc_from_json(io::to_json(rc)) == rc);
        CHECK(io::tensor_from_json(io::to_json(psi(w))) == psi(w));
    }
}

TEST_CASE("tableau pair json") {
    auto fix = reference::trace_fixture_1();
    TableauPair pr{tableau_of_partition(fix.lambda.lp, fix.plus_rows),
                   tableau_of_partition(fix.lambda.lpp, fix.minus_rows)};
    auto j = io::to_json(pr);
    auto back = io::pair_from_json(j);
    CHECK(back.plus == pr.plus);
    CHECK(back.minus == pr.minus);
}

TEST_CASE("trace serialisation matches the golden files") {
    struct Case {
        reference::TraceFixture fix;
        const char* golden;
    };
    for (auto&& [fix, golden] : {Case{reference::trace_fixture_1(), "/appendix1_trace.json"},
                                 Case{reference::trace_fixture_2(), "/appendix2_trace.json"}}) {
        TableauPair pr{tableau_of_partition(fix.lambda.lp, fix.plus_rows),
                       tableau_of_partition(fix.lambda.lpp, fix.minus_rows)};
        PsiTrace trace;
        psi_rc(row_tuple_of_pair(pr, fix.n), &trace, fix.s);
        std::ifstream in(std::string(XKOSTKA_FIXTURES_DIR) + golden);
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK(io::to_json(trace).dump(2) + "\n" == buf.str());
    }
}

TEST_CASE("text rendering") {
    RowTuple w{{{2, 2, 3}, {1, 1, 3}, {1}, {4}, {}}};
    CHECK(io::row_tuple_text(w) == "(-,4,1,113,223)");
    CHECK(io::tensor_text(psi(w)) == "4(x)12(x)11(x)223");
    RowTuple big{{{10, 11}, {}}};
    CHECK(io::row_tuple_text(big) == "(-,10,11)");
}

TEST_CASE("crystal graph export") {
    std::string dot = io::crystal_graph_dot(Partition({1}), 3);
    CHECK(dot == "digraph crystal {\n  rankdir=TB;\n  \"1\";\n  \"2\";\n  \"3\";\n"
                 "  \"1\" -> \"2\" [label=\"1\"];\n  \"2\" -> \"3\" [label=\"2\"];\n}\n");
    auto j = io::crystal_graph_json(Partition({2, 1}), 3);
    CHECK(j.at("nodes").size() == 18);
}
