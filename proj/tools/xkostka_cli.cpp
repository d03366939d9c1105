// Command-line front end: Kostka and double Kostka polynomials, fermionic
// formulas, 1D sums, bijection traces, crystal graphs, and the verification
// sweeps.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "xkostka/io.hpp"
#include "xkostka/kostka.hpp"
#include "xkostka/verify.hpp"

namespace {

using namespace xkostka;

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
}

std::vector<int> parse_row(const std::string& s) {
    std::vector<int> row;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) row.push_back(std::stoi(tok));
    return row;
}

RowTuple parse_rows(const std::string& s, int n) {
    RowTuple w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) w.rows.push_back(parse_row(tok));
    if (n > static_cast<int>(w.rows.size())) w.rows.resize(n);
    return w;
}

void print_poly(const LaurentPoly& p, const std::string& format) {
    if (format == "json")
        std::cout << io::to_json(p).dump(2) << "\n";
    else
        std::cout << p.to_string() << "\n";
}

int default_rank(int given, int natural) { return given > 0 ? given : std::max(2, natural); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kostka polynomials, crystals, and rigged configurations"};
    app.require_subcommand(1);

    std::string lambda_s, mu_s, lp_s, lpp_s, method = "charge", format = "text";
    std::string rows_s, tableau_json, suite, route = "config";
    int rank = 0, max_n = 0;

    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka polynomial K_{lambda,mu}(t)");
    kostka_cmd->add_option("--lambda", lambda_s, "shape, comma separated")->required();
    kostka_cmd->add_option("--mu", mu_s, "weight, comma separated")->required();
    kostka_cmd->add_option("--method", method, "charge|onedsum|fermionic");
    kostka_cmd->add_option("--n", rank, "rank (default: |mu|)");
    kostka_cmd->add_option("--format", format, "text|json");

    auto* double_cmd =
        app.add_subcommand("double", "double Kostka polynomial K_{(lp,lpp),(-,mu)}(t)");
    double_cmd->add_option("--lp", lp_s, "first component (may be empty)");
    double_cmd->add_option("--lpp", lpp_s, "second component (may be empty)");
    double_cmd->add_option("--mu", mu_s, "weight mu''")->required();
    double_cmd->add_option("--method", method, "charge|lr|onedsum|fermionic");
    double_cmd->add_option("--n", rank, "rank");
    double_cmd->add_option("--format", format, "text|json");

    auto* ferm_cmd = app.add_subcommand("fermionic", "fermionic formula M(mu,lambda;t)");
    ferm_cmd->add_option("--mu", mu_s, "tensor content")->required();
    ferm_cmd->add_option("--lambda", lambda_s, "highest weight");
    ferm_cmd->add_option("--lp", lp_s, "double weight, first component");
    ferm_cmd->add_option("--lpp", lpp_s, "double weight, second component");
    ferm_cmd->add_option("--route", route, "rigged|config|msum|literal (double only)");
    ferm_cmd->add_option("--n", rank, "rank");
    ferm_cmd->add_option("--format", format, "text|json");

    auto* oned_cmd = app.add_subcommand("onedsum", "1D sum X(mu,lambda;t)");
    oned_cmd->add_option("--mu", mu_s, "tensor content")->required();
    oned_cmd->add_option("--lambda", lambda_s, "highest weight");
    oned_cmd->add_option("--lp", lp_s, "double weight, first component");
    oned_cmd->add_option("--lpp", lpp_s, "double weight, second component");
    oned_cmd->add_option("--n", rank, "rank");
    oned_cmd->add_option("--format", format, "text|json");

    auto* trace_cmd = app.add_subcommand("rc-trace", "rigged configuration bijection trace");
    trace_cmd->add_option("--tableau-json", tableau_json, "file with {\"plus\":...,\"minus\":...}");
    trace_cmd->add_option("--rows", rows_s, "row tuple, w_1 first, ';' separated");
    trace_cmd->add_option("--lp", lp_s, "expected shape of the plus component");
    trace_cmd->add_option("--lpp", lpp_s, "expected shape of the minus component");
    trace_cmd->add_option("--mu", mu_s, "expected content");
    trace_cmd->add_option("--n", rank, "number of rows");
    trace_cmd->add_option("--format", format, "text|json");

    auto* graph_cmd = app.add_subcommand("crystal-graph", "crystal graph of B(mu)");
    graph_cmd->add_option("--mu", mu_s, "tensor content")->required();
    graph_cmd->add_option("--n", rank, "rank")->required();
    std::string gformat = "dot";
    graph_cmd->add_option("--format", gformat, "dot|json");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->add_option("--suite", suite, "appendix|xm|routes|double|double-xm|psi-iso|"
                                             "plactic|gamma-charge|rigged|slide-operators|all")
        ->required();
    verify_cmd->add_option("--max-n", max_n, "size bound override");
    verify_cmd->add_option("--format", format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        auto parse_method = [](const std::string& m) {
            if (m == "charge") return KostkaRequest::Method::Charge;
            if (m == "onedsum") return KostkaRequest::Method::OneDSum;
            if (m == "fermionic") return KostkaRequest::Method::Fermionic;
            if (m == "lr") return KostkaRequest::Method::LR;
            throw std::invalid_argument("unknown method '" + m + "'");
        };
        if (*kostka_cmd) {
            KostkaRequest req{parse_partition(mu_s), parse_partition(lambda_s), rank,
                              parse_method(method)};
            print_poly(kostka_compute(req), format);
        } else if (*double_cmd) {
            KostkaRequest req{parse_partition(mu_s),
                              DoublePartition{parse_partition(lp_s), parse_partition(lpp_s)},
                              rank, parse_method(method)};
            print_poly(kostka_compute(req), format);
        } else if (*ferm_cmd) {
            Partition mu = parse_partition(mu_s);
            if (!lp_s.empty() || !lpp_s.empty()) {
                DoublePartition dla{parse_partition(lp_s), parse_partition(lpp_s)};
                int n = default_rank(rank, std::max(mu.size(), dla.s() + dla.t()));
                LaurentPoly m;
                if (route == "rigged")
                    m = fermionic_double(mu, dla, n, DoubleFermRoute::Rigged);
                else if (route == "config")
                    m = fermionic_double(mu, dla, n, DoubleFermRoute::ConfigBinomial);
                else if (route == "msum")
                    m = fermionic_double(mu, dla, n, DoubleFermRoute::MultiplicitySum);
                else if (route == "literal")
                    m = fermionic_double_literal(mu, dla, n);
                else
                    throw std::invalid_argument("unknown route '" + route + "'");
                print_poly(m, format);
            } else {
                Partition la = parse_partition(lambda_s);
                int n = default_rank(rank, mu.size());
                print_poly(fermionic(mu, la, n), format);
            }
        } else if (*oned_cmd) {
            Partition mu = parse_partition(mu_s);
            if (!lp_s.empty() || !lpp_s.empty()) {
                DoublePartition dla{parse_partition(lp_s), parse_partition(lpp_s)};
                int n = default_rank(rank, std::max(mu.size(), dla.s() + dla.t()));
                print_poly(oned_sum_double(mu, dla, n), format);
            } else {
                Partition la = parse_partition(lambda_s);
                int n = default_rank(rank, mu.size());
                print_poly(oned_sum(mu, la, n), format);
            }
        } else if (*trace_cmd) {
            RowTuple w;
            int monitor_s = 0;
            if (!tableau_json.empty()) {
                std::ifstream in(tableau_json);
                if (!in) throw std::invalid_argument("cannot open " + tableau_json);
                auto pr = io::pair_from_json(io::json::parse(in));
                monitor_s = pr.plus.shape().rows();
                int n = default_rank(rank, pr.plus.shape().rows() + pr.minus.shape().rows());
                if (!lp_s.empty() && !(pr.plus.shape().outer == parse_partition(lp_s)))
                    throw std::invalid_argument("plus component shape mismatch");
                if (!lpp_s.empty() && !(pr.minus.shape().outer == parse_partition(lpp_s)))
                    throw std::invalid_argument("minus component shape mismatch");
                w = row_tuple_of_pair(pr, n);
            } else {
                w = parse_rows(rows_s, rank);
                if (w.n() < 2) w.rows.resize(2);
            }
            if (!mu_s.empty() && !(w.content() == parse_partition(mu_s)))
                throw std::invalid_argument("content differs from --mu");
            PsiTrace trace;
            psi_rc(w, &trace, monitor_s);
            if (format == "json")
                std::cout << io::to_json(trace).dump(2) << "\n";
            else
                std::cout << io::trace_text(trace);
        } else if (*graph_cmd) {
            Partition mu = parse_partition(mu_s);
            if (rank < 2) throw std::invalid_argument("crystal-graph needs --n >= 2");
            if (gformat == "dot")
                std::cout << io::crystal_graph_dot(mu, rank);
            else if (gformat == "json")
                std::cout << io::crystal_graph_json(mu, rank).dump(2) << "\n";
            else
                throw std::invalid_argument("unknown format '" + gformat + "'");
        } else if (*verify_cmd) {
            VerifyReport rep = verify(suite, max_n);
            if (format == "json") {
                std::cout << io::to_json(rep).dump(2) << "\n";
            } else {
                std::cout << "suite " << rep.suite << ": " << rep.cases << " cases, "
                          << rep.failures.size() << " failure(s)\n";
                for (const auto& fmsg : rep.failures) std::cout << "  " << fmsg << "\n";
            }
            return rep.passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
