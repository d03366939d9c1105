#pragma once

#include <json.hpp>

#include <string>

#include "xkostka/crystal.hpp"
#include "xkostka/qpoly.hpp"
#include "xkostka/rigged.hpp"
#include "xkostka/tableau.hpp"
#include "xkostka/verify.hpp"

namespace xkostka::io {

using nlohmann::json;

// ---- JSON encodings -------------------------------------------------------

inline json to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

inline json to_json(const SkewShape& sh) {
    return json{{"outer", sh.outer.parts()}, {"inner", sh.inner.parts()}};
}

inline SkewShape skew_from_json(const json& j) {
    return SkewShape(partition_from_json(j.at("outer")), partition_from_json(j.at("inner")));
}

inline json to_json(const Tableau& t) {
    return json{{"outer", t.shape().outer.parts()},
                {"inner", t.shape().inner.parts()},
                {"rows", t.rows()}};
}

inline Tableau tableau_from_json(const json& j) {
    return Tableau(SkewShape(partition_from_json(j.at("outer")),
                             j.contains("inner") ? partition_from_json(j.at("inner"))
                                                 : Partition()),
                   j.at("rows").get<std::vector<std::vector<int>>>());
}

inline json to_json(const Word& w) { return json(w.letters); }

inline json to_json(const TableauPair& t) {
    return json{{"plus", to_json(t.plus)}, {"minus", to_json(t.minus)}};
}

inline TableauPair pair_from_json(const json& j) {
    return {tableau_from_json(j.at("plus")), tableau_from_json(j.at("minus"))};
}

inline json to_json(const RowTuple& w) {  // w_1 listed first
    return json{{"rows", w.rows}, {"n", w.n()}};
}

inline RowTuple row_tuple_from_json(const json& j) {
    RowTuple w;
    w.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (j.contains("n")) w.rows.resize(j.at("n").get<int>());
    return w;
}

inline json to_json(const TensorElement& b) {  // b_1 listed first
    return json{{"factors", b.factors}};
}

inline TensorElement tensor_from_json(const json& j) {
    return {j.at("factors").get<std::vector<std::vector<int>>>()};
}

inline json to_json(const RiggedConfiguration& rc) {
    json levels = json::array();
    for (const auto& lvl : rc.levels) {
        json strings = json::array();
        for (const auto& s : lvl) strings.push_back({s.length, s.label});
        levels.push_back({{"strings", strings}});
    }
    return json{{"mu", rc.mu.parts()}, {"n", rc.n}, {"levels", levels}};
}

inline RiggedConfiguration rc_from_json(const json& j) {
    RiggedConfiguration rc(j.at("n").get<int>(), partition_from_json(j.at("mu")));
    const auto& levels = j.at("levels");
    for (std::size_t a = 0; a < levels.size() && a < rc.levels.size(); ++a)
        for (const auto& s : levels[a].at("strings"))
            rc.levels[a].push_back({s.at(0).get<int>(), s.at(1).get<int>()});
    rc.canonicalize();
    return rc;
}

inline json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms()) terms.push_back({json(k), json(c.str())});
    return json{{"terms", terms}};
}

// trace steps carry the vacancy number of each string for display
inline json to_json(const PsiTrace& tr) {
    json steps = json::array();
    for (const auto& st : tr.steps) {
        json levels = json::array();
        for (int a = 1; a < tr.n; ++a) {
            json strings = json::array();
            for (const auto& s : st.rc.levels[a - 1])
                strings.push_back({s.length, s.label, vacancy(st.rc, a, s.length)});
            levels.push_back({{"strings", strings}});
        }
        json step{{"i", st.index}, {"rows", st.w.rows}, {"levels", levels}};
        if (st.index > 0) {
            step["rank"] = st.rank;
            step["chosen"] = st.chosen;
            step["i0"] = st.i0;
        }
        steps.push_back(std::move(step));
    }
    return json{{"mu", tr.mu.parts()}, {"n", tr.n}, {"steps", steps}};
}

inline json to_json(const VerifyReport& r) {
    return json{{"suite", r.suite}, {"cases", r.cases}, {"failures", r.failures}};
}

// ---- text rendering -------------------------------------------------------

inline std::string row_text(const std::vector<int>& row) {
    if (row.empty()) return "-";
    bool compact = true;
    for (int a : row) compact &= a <= 9;
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i && !compact) s += ",";
        s += std::to_string(row[i]);
    }
    return s;
}

// (w_n, ..., w_1) like the tables
inline std::string row_tuple_text(const RowTuple& w) {
    std::string s = "(";
    for (int i = w.n(); i >= 1; --i) {
        s += row_text(w.rows[i - 1]);
        if (i > 1) s += ",";
    }
    return s + ")";
}

inline std::string tensor_text(const TensorElement& b) {
    std::string s;
    for (auto it = b.factors.rbegin(); it != b.factors.rend(); ++it) {
        if (it != b.factors.rbegin()) s += "(x)";
        s += row_text(*it);
    }
    return s.empty() ? "(empty)" : s;
}

inline std::string rc_text(const RiggedConfiguration& rc, bool with_vacancy = true) {
    std::string s;
    for (int a = 1; a < rc.n; ++a) {
        if (a > 1) s += "  ";
        s += "nu(" + std::to_string(a) + ")=";
        if (rc.levels[a - 1].empty()) {
            s += "-";
            continue;
        }
        for (const auto& str : rc.levels[a - 1]) {
            s += "[" + std::to_string(str.length);
            if (with_vacancy) s += "|p=" + std::to_string(vacancy(rc, a, str.length));
            s += "|J=" + std::to_string(str.label) + "]";
        }
    }
    return s;
}

inline std::string trace_text(const PsiTrace& tr) {
    std::string s;
    for (const auto& st : tr.steps) {
        s += "i=" + std::to_string(st.index);
        s += "  w=" + row_tuple_text(st.w);
        if (st.index > 0) s += "  rank=" + std::to_string(st.rank);
        s += "\n    " + rc_text(st.rc) + "\n";
    }
    return s;
}

// ---- DOT export of crystal graphs -----------------------------------------

inline std::string crystal_graph_dot(const Partition& mu, int n) {
    auto elements = enumerate_b(mu, n);
    std::string out = "digraph crystal {\n  rankdir=TB;\n";
    for (const auto& b : elements) out += "  \"" + tensor_text(b) + "\";\n";
    for (const auto& b : elements)
        for (int i = 1; i < n; ++i)
            if (auto fb = f_op(b, i))
                out += "  \"" + tensor_text(b) + "\" -> \"" + tensor_text(*fb) + "\" [label=\"" +
                       std::to_string(i) + "\"];\n";
    out += "}\n";
    return out;
}

inline json crystal_graph_json(const Partition& mu, int n) {
    auto elements = enumerate_b(mu, n);
    json nodes = json::array(), edges = json::array();
    for (const auto& b : elements) nodes.push_back(to_json(b));
    for (const auto& b : elements)
        for (int i = 1; i < n; ++i)
            if (auto fb = f_op(b, i))
                edges.push_back({{"from", tensor_text(b)},
                                 {"to", tensor_text(*fb)},
                                 {"i", i}});
    return json{{"nodes", nodes}, {"edges", edges}};
}

}  // namespace xkostka::io
