// Acceptance suite: one line per criterion, exact comparisons throughout.
// The exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "xkostka/verify.hpp"

using namespace xkostka;

namespace {

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;  // 0 = no stated budget
    std::function<VerifyReport()> run;
    std::string note;  // printed when the criterion fails as documented
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "worked trace 1: full psi trace with vacancies and J_+", 1.0,
         [] { return suites::appendix_trace(1); }, ""},
        {2, "worked trace 2: full psi trace with vacancies and J_+", 1.0,
         [] { return suites::appendix_trace(2); }, ""},
        {3, "six double-weight configurations and the QM bijection", 1.0,
         [] { return suites::appendix_pairs(); }, ""},
        {4, "fermionic formula equals the charge route, N <= 6", 60.0,
         [] { return suites::xm(6, 0); }, ""},
        {5, "charge route equals the crystal route, N <= 6", 120.0,
         [] { return suites::routes(6, 0); }, ""},
        {6, "double Kostka main identity, three routes, N <= 5", 120.0,
         [] { return suites::double_identity(5, 0); }, ""},
        {7, "double 1D sum equals the inverted fermionic sum, N <= 5", 0.0,
         [] { return suites::double_xm(5, 0); }, ""},
        {8, "psi is a crystal isomorphism, mu up to 5, n up to 5", 0.0,
         [] { return suites::psi_iso(5, 0); }, ""},
        {9, "insertion and plactic property suites", 0.0,
         [] { return suites::plactic(0); }, ""},
        {10, "pair bijection: image, charge, LR symmetry", 0.0,
         [] { return suites::gamma_charge(6, 0); }, ""},
        {11, "rigged configuration structure, N <= 5", 0.0,
         [] { return suites::rigged(5, 0); },
         "known divergence: the bijection implemented here matches its published "
         "worked examples step for step, and under it the cocharge complement "
         "holds as a multiset identity on every Tab(lambda,mu) but not tableau "
         "by tableau; no reading convention for the charge closes the gap (see "
         "README, Known divergence)"},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        VerifyReport rep = c.run();
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = c.budget_seconds <= 0.0 || dt <= c.budget_seconds;
        bool pass = rep.passed() && in_budget;
        std::printf("[%2d] %-58s %s  (%ld cases, %.2fs)\n", c.id, c.name.c_str(),
                    pass ? "PASS" : "FAIL", rep.cases, dt);
        if (!in_budget)
            std::printf("     exceeded the %.0fs budget\n", c.budget_seconds);
        if (!rep.passed()) {
            std::size_t shown = 0;
            for (const auto& f : rep.failures) {
                if (shown++ == 4) {
                    std::printf("     ... and %zu more\n", rep.failures.size() - 4);
                    break;
                }
                std::printf("     %s\n", f.c_str());
            }
            if (!c.note.empty()) std::printf("     note: %s\n", c.note.c_str());
        }
        if (!pass) ++failed;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed;
}
