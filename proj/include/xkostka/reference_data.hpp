#pragma once

#include <array>
#include <vector>

#include "xkostka/partition.hpp"

namespace xkostka::reference {

// Strings are listed canonically (length descending, then label descending)
// as {length, label, vacancy}; vacancy numbers are taken over the truncated
// content of the step.
using Str = std::array<int, 3>;
using Levels = std::vector<std::vector<Str>>;

struct TraceFixture {
    DoublePartition lambda;
    std::vector<std::vector<int>> plus_rows;
    std::vector<std::vector<int>> minus_rows;
    int n = 6;
    int s = 2;
    std::vector<std::vector<std::vector<int>>> step_rows;  // per step: w_1..w_n
    std::vector<Levels> step_levels;                       // per step: levels 1..n-1
    std::vector<std::vector<std::array<int, 2>>> jplus;    // final riggings after J_+
};

inline TraceFixture trace_fixture_1() {
    TraceFixture f;
    f.lambda = {Partition({4, 2}), Partition({4, 2, 2, 1})};
    f.plus_rows = {{1, 2, 2, 3}, {3, 5}};
    f.minus_rows = {{1, 1, 1, 2}, {2, 4}, {3, 5}, {4}};
    f.step_rows = {
        {{}, {}, {}, {}, {}, {}},
        {{}, {}, {1}, {}, {}, {}},
        {{}, {}, {1, 1}, {}, {}, {}},
        {{}, {}, {1, 1, 1}, {}, {}, {}},
        {{1}, {}, {1, 1, 1}, {}, {}, {}},
        {{1}, {}, {1, 1, 1}, {2}, {}, {}},
        {{1}, {}, {1, 1, 1, 2}, {2}, {}, {}},
        {{1, 2}, {}, {1, 1, 1, 2}, {2}, {}, {}},
        {{1, 2, 2}, {}, {1, 1, 1, 2}, {2}, {}, {}},
        {{1, 2, 2}, {}, {1, 1, 1, 2}, {2}, {3}, {}},
        {{1, 2, 2}, {3}, {1, 1, 1, 2}, {2}, {3}, {}},
        {{1, 2, 2, 3}, {3}, {1, 1, 1, 2}, {2}, {3}, {}},
        {{1, 2, 2, 3}, {3}, {1, 1, 1, 2}, {2}, {3}, {4}},
        {{1, 2, 2, 3}, {3}, {1, 1, 1, 2}, {2, 4}, {3}, {4}},
        {{1, 2, 2, 3}, {3}, {1, 1, 1, 2}, {2, 4}, {3, 5}, {4}},
        {{1, 2, 2, 3}, {3, 5}, {1, 1, 1, 2}, {2, 4}, {3, 5}, {4}},
    };
    f.step_levels = {
        {{}, {}, {}, {}, {}},
        {{{1, 0, 0}}, {{1, -1, -1}}, {}, {}, {}},
        {{{2, 0, 0}}, {{2, -2, -2}}, {}, {}, {}},
        {{{3, 0, 0}}, {{3, -3, -3}}, {}, {}, {}},
        {{{3, 0, 0}}, {{3, -3, -3}}, {}, {}, {}},
        {{{3, 0, 0}, {1, 0, 0}}, {{3, -3, -3}, {1, -1, -1}}, {{1, 0, 0}}, {}, {}},
        {{{4, 1, 1}, {1, 0, 0}}, {{4, -4, -4}, {1, -1, -1}}, {{1, 0, 0}}, {}, {}},
        {{{4, 1, 2}, {1, 0, 0}}, {{4, -4, -4}, {1, -1, -1}}, {{1, 0, 0}}, {}, {}},
        {{{4, 1, 3}, {1, 0, 0}}, {{4, -4, -4}, {1, -1, -1}}, {{1, 0, 0}}, {}, {}},
        {{{4, 1, 3}, {1, 0, 0}, {1, 0, 0}},
         {{4, -4, -4}, {1, -1, -1}, {1, -1, -1}},
         {{1, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}},
         {}},
        {{{4, 1, 2}, {2, 0, 0}, {1, 0, 0}},
         {{4, -4, -3}, {1, -1, -1}, {1, -1, -1}},
         {{1, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}},
         {}},
        {{{4, 1, 3}, {2, 0, 0}, {1, 0, 0}},
         {{4, -4, -3}, {1, -1, -1}, {1, -1, -1}},
         {{1, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}},
         {}},
        {{{4, 1, 3}, {2, 0, 0}, {1, 0, 0}, {1, 0, 0}},
         {{4, -4, -3}, {1, -1, -1}, {1, -1, -1}, {1, -1, -1}},
         {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}}},
        {{{4, 1, 3}, {2, 0, 0}, {2, 0, 0}, {1, 0, 0}},
         {{4, -4, -3}, {2, -1, -1}, {1, -1, -1}, {1, -1, -1}},
         {{2, 0, 0}, {1, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}}},
        {{{4, 1, 3}, {2, 0, 0}, {2, 0, 0}, {2, 0, 0}},
         {{4, -4, -3}, {2, -1, -1}, {2, -1, -1}, {1, -1, -1}},
         {{2, 0, 0}, {2, 0, 0}, {1, 0, 0}},
         {{2, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}}},
        {{{4, 1, 2}, {3, 1, 1}, {2, 0, 1}, {2, 0, 1}},
         {{4, -4, -2}, {2, -1, -1}, {2, -1, -1}, {1, -1, -1}},
         {{2, 0, 0}, {2, 0, 0}, {1, 0, 0}},
         {{2, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}}},
    };
    f.jplus = {{{4, 1}, {3, 1}, {2, 0}, {2, 0}},
               {{4, 0}, {2, 1}, {2, 1}, {1, 0}},
               {{2, 0}, {2, 0}, {1, 0}},
               {{2, 0}, {1, 0}},
               {{1, 0}}};
    return f;
}

inline TraceFixture trace_fixture_2() {
    TraceFixture f;
    f.lambda = {Partition({4, 2}), Partition({3, 3, 2, 1})};
    f.plus_rows = {{1, 1, 2, 4}, {2, 3}};
    f.minus_rows = {{1, 1, 2}, {3, 5, 7}, {4, 6}, {5}};
    f.step_rows = {
        {{}, {}, {}, {}, {}, {}},
        {{}, {}, {1}, {}, {}, {}},
        {{}, {}, {1, 1}, {}, {}, {}},
        {{1}, {}, {1, 1}, {}, {}, {}},
        {{1, 1}, {}, {1, 1}, {}, {}, {}},
        {{1, 1}, {}, {1, 1, 2}, {}, {}, {}},
        {{1, 1}, {2}, {1, 1, 2}, {}, {}, {}},
        {{1, 1, 2}, {2}, {1, 1, 2}, {}, {}, {}},
        {{1, 1, 2}, {2}, {1, 1, 2}, {3}, {}, {}},
        {{1, 1, 2}, {2, 3}, {1, 1, 2}, {3}, {}, {}},
        {{1, 1, 2}, {2, 3}, {1, 1, 2}, {3}, {4}, {}},
        {{1, 1, 2, 4}, {2, 3}, {1, 1, 2}, {3}, {4}, {}},
        {{1, 1, 2, 4}, {2, 3}, {1, 1, 2}, {3}, {4}, {5}},
        {{1, 1, 2, 4}, {2, 3}, {1, 1, 2}, {3, 5}, {4}, {5}},
        {{1, 1, 2, 4}, {2, 3}, {1, 1, 2}, {3, 5}, {4, 6}, {5}},
        {{1, 1, 2, 4}, {2, 3}, {1, 1, 2}, {3, 5, 7}, {4, 6}, {5}},
    };
    f.step_levels = {
        {{}, {}, {}, {}, {}},
        {{{1, 0, 0}}, {{1, -1, -1}}, {}, {}, {}},
        {{{2, 0, 0}}, {{2, -2, -2}}, {}, {}, {}},
        {{{2, 0, 0}}, {{2, -2, -2}}, {}, {}, {}},
        {{{2, 0, 0}}, {{2, -2, -2}}, {}, {}, {}},
        {{{3, 1, 1}}, {{3, -3, -3}}, {}, {}, {}},
        {{{4, 1, 1}}, {{3, -3, -3}}, {}, {}, {}},
        {{{4, 1, 2}}, {{3, -3, -3}}, {}, {}, {}},
        {{{4, 1, 2}, {1, 1, 1}}, {{3, -3, -3}, {1, -1, -1}}, {{1, 0, 0}}, {}, {}},
        {{{4, 1, 1}, {2, 1, 1}}, {{3, -3, -2}, {1, -1, -1}}, {{1, 0, 0}}, {}, {}},
        {{{4, 1, 1}, {2, 1, 1}, {1, 1, 1}},
         {{3, -3, -2}, {1, -1, -1}, {1, -1, -1}},
         {{1, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}},
         {}},
        {{{4, 1, 2}, {2, 1, 2}, {1, 1, 1}},
         {{3, -3, -2}, {1, -1, -1}, {1, -1, -1}},
         {{1, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}},
         {}},
        {{{4, 1, 2}, {2, 1, 2}, {1, 1, 1}, {1, 1, 1}},
         {{3, -3, -2}, {1, -1, -1}, {1, -1, -1}, {1, -1, -1}},
         {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}}},
        {{{4, 1, 2}, {2, 2, 2}, {2, 1, 2}, {1, 1, 1}},
         {{3, -3, -2}, {2, -1, -1}, {1, -1, -1}, {1, -1, -1}},
         {{2, 0, 0}, {1, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}}},
        {{{4, 1, 2}, {2, 2, 2}, {2, 2, 2}, {2, 1, 2}},
         {{3, -3, -2}, {2, -1, -1}, {2, -1, -1}, {1, -1, -1}},
         {{2, 0, 0}, {2, 0, 0}, {1, 0, 0}},
         {{2, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}}},
        {{{4, 1, 2}, {3, 3, 3}, {2, 2, 3}, {2, 1, 3}},
         {{3, -2, -2}, {3, -3, -2}, {2, -1, -1}, {1, -1, -1}},
         {{3, 0, 0}, {2, 0, 0}, {1, 0, 0}},
         {{2, 0, 0}, {1, 0, 0}},
         {{1, 0, 0}}},
    };
    f.jplus = {{{4, 1}, {3, 3}, {2, 2}, {2, 1}},
               {{3, 1}, {3, 0}, {2, 1}, {1, 0}},
               {{3, 0}, {2, 0}, {1, 0}},
               {{2, 0}, {1, 0}},
               {{1, 0}}};
    return f;
}

// The six tableau pairs of shape ((2,1),(2)) and weight (2,2,1) with their
// rigged configurations, riggings only.
struct PairRcFixture {
    std::vector<std::vector<int>> plus_rows;
    std::vector<std::vector<int>> minus_rows;
    std::vector<std::vector<std::array<int, 2>>> levels;  // {length, label}
};

inline std::vector<PairRcFixture> pair_rc_fixtures() {
    return {
        {{{1, 1}, {2}}, {{2, 3}}, {{{2, 1}, {1, 0}}, {{2, -1}}}},
        {{{1, 2}, {2}}, {{1, 3}}, {{{2, 0}, {1, 0}}, {{2, -1}}}},
        {{{1, 1}, {3}}, {{2, 2}}, {{{3, 1}}, {{2, -2}}}},
        {{{1, 2}, {3}}, {{1, 2}}, {{{2, 1}, {1, 0}}, {{2, -2}}}},
        {{{2, 2}, {3}}, {{1, 1}}, {{{2, 0}, {1, 0}}, {{2, -2}}}},
        {{{1, 3}, {2}}, {{1, 2}}, {{{3, 0}}, {{2, -2}}}},
    };
}

inline Partition pair_rc_mu() { return Partition({2, 2, 1}); }
inline DoublePartition pair_rc_lambda() { return {Partition({2, 1}), Partition({2})}; }

}  // namespace xkostka::reference
