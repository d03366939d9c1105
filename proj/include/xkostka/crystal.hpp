#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "xkostka/tableau.hpp"

namespace xkostka {

// Element of Z^n / Z(1,...,1); equality is tested modulo the all-ones vector.
struct Weight {
    std::vector<int> coords;

    bool operator==(const Weight& o) const {
        if (coords.size() != o.coords.size()) return false;
        if (coords.empty()) return true;
        int d = coords[0] - o.coords[0];
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] - o.coords[i] != d) return false;
        return true;
    }
};

inline Weight weight_from_partition(const Partition& la, int n) {
    if (la.length() > n) throw std::invalid_argument("weight_from_partition: rank too small");
    Weight w;
    w.coords.resize(n, 0);
    for (int i = 1; i <= la.length(); ++i) w.coords[i - 1] = la.part(i);
    return w;
}

inline Weight weight_from_double(const DoublePartition& dla, int n) {
    if (dla.s() + dla.t() > n) throw std::invalid_argument("weight_from_double: rank too small");
    Weight w;
    w.coords.resize(n, 0);
    for (int i = 1; i <= dla.s(); ++i) w.coords[i - 1] = dla.lp.part(i);
    for (int j = 1; j <= dla.t(); ++j) w.coords[dla.s() + j - 1] = dla.lpp.part(j);
    return w;
}

// Element of W(mu): n weakly increasing rows; rows[i] holds w_{i+1} with
// ascending letters. Letter k occurs mu_k times across all rows.
struct RowTuple {
    std::vector<std::vector<int>> rows;

    int n() const { return static_cast<int>(rows.size()); }
    auto operator<=>(const RowTuple&) const = default;

    Partition content() const {
        std::vector<int> cnt;
        for (const auto& row : rows)
            for (int a : row) {
                if (a > static_cast<int>(cnt.size())) cnt.resize(a, 0);
                cnt[a - 1] += 1;
            }
        return Partition(std::move(cnt));
    }

    Word concat_word() const {  // w_n * ... * w_1
        Word w;
        for (auto it = rows.rbegin(); it != rows.rend(); ++it)
            w.letters.insert(w.letters.end(), it->begin(), it->end());
        return w;
    }
};

// Element of B(mu) = B^{1,mu_r} x ... x B^{1,mu_1}; factors[k] holds b_{k+1}
// as a weakly increasing word over 1..n.
struct TensorElement {
    std::vector<std::vector<int>> factors;
    auto operator<=>(const TensorElement&) const = default;
};

// b_k lists, with multiplicity, the rows of w containing the letter k.
inline TensorElement psi(const RowTuple& w) {
    Partition mu = w.content();
    TensorElement b;
    b.factors.resize(mu.length());
    for (int i = 1; i <= w.n(); ++i)
        for (int a : w.rows[i - 1]) b.factors[a - 1].push_back(i);
    return b;
}

inline RowTuple psi_inverse(const TensorElement& b, int n) {
    RowTuple w;
    w.rows.resize(n);
    for (int k = 1; k <= static_cast<int>(b.factors.size()); ++k)
        for (int i : b.factors[k - 1]) {
            if (i < 1 || i > n) throw std::invalid_argument("psi_inverse: letter out of range");
            w.rows[i - 1].push_back(k);
        }
    return w;
}

inline Weight weight_of(const RowTuple& w) {
    Weight wt;
    for (const auto& row : w.rows) wt.coords.push_back(static_cast<int>(row.size()));
    return wt;
}

inline Weight weight_of(const TensorElement& b, int n) {
    Weight wt;
    wt.coords.resize(n, 0);
    for (const auto& f : b.factors)
        for (int x : f) {
            if (x < 1 || x > n) throw std::invalid_argument("weight_of: letter out of range");
            wt.coords[x - 1] += 1;
        }
    return wt;
}

// Two-row tableau T_{(w2,w1)}: w1 on top, w2 below, overlapped as far as
// column strictness allows. t0 is the overlap width; t0 = 0 when a row is
// empty or no overlap is possible.
struct TwoRowTableau {
    Tableau tab;
    int t0 = 0;
};

inline TwoRowTableau two_row(const std::vector<int>& w2, const std::vector<int>& w1) {
    int p = static_cast<int>(w1.size());
    int q = static_cast<int>(w2.size());
    int t0 = 0;
    for (int t = std::min(p, q); t >= 1; --t) {
        bool ok = true;
        for (int c = q - t + 1; c <= std::min(q, q - t + p) && ok; ++c)
            ok = w1[c - (q - t) - 1] < w2[c - 1];
        if (ok) {
            t0 = t;
            break;
        }
    }
    if (p == 0 && q == 0) return {Tableau::empty(), 0};
    if (q == 0)  // empty bottom row: the shape degenerates to the top row only
        return {Tableau(SkewShape(Partition({p}), Partition()), {w1}), 0};
    SkewShape sh(Partition({q - t0 + p, q}), Partition({q - t0}));
    return {Tableau(sh, {w1, w2}), t0};
}

namespace detail {

// e(w2,w1): slide into the upper position of the first row; 0 unless t0 < |w2|.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> e_rows(
    const std::vector<int>& w2, const std::vector<int>& w1) {
    auto tr = two_row(w2, w1);
    int q = static_cast<int>(w2.size());
    if (tr.t0 >= q) return std::nullopt;
    Tableau res = jdt_slide(tr.tab, {1, q - tr.t0}, SlideDir::Upper);
    std::vector<int> r1 = res.shape().rows() >= 1 ? res.rows()[0] : std::vector<int>{};
    std::vector<int> r2 = res.shape().rows() >= 2 ? res.rows()[1] : std::vector<int>{};
    return std::make_pair(r2, r1);
}

// f(w2,w1): slide into the lower position adjacent to the first row; 0 unless
// t0 < |w1|.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> f_rows(
    const std::vector<int>& w2, const std::vector<int>& w1) {
    auto tr = two_row(w2, w1);
    int p = static_cast<int>(w1.size());
    int q = static_cast<int>(w2.size());
    if (tr.t0 >= p) return std::nullopt;
    Tableau res = jdt_slide(tr.tab, {2, q + 1}, SlideDir::Lower);
    std::vector<int> r1 = res.shape().rows() >= 1 ? res.rows()[0] : std::vector<int>{};
    std::vector<int> r2 = res.shape().rows() >= 2 ? res.rows()[1] : std::vector<int>{};
    return std::make_pair(r2, r1);
}

}  // namespace detail

inline std::optional<RowTuple> e_op(const RowTuple& w, int i) {
    if (i < 1 || i >= w.n()) throw std::invalid_argument("e_op: index out of range");
    auto r = detail::e_rows(w.rows[i], w.rows[i - 1]);
    if (!r) return std::nullopt;
    RowTuple out = w;
    out.rows[i] = r->first;
    out.rows[i - 1] = r->second;
    return out;
}

inline std::optional<RowTuple> f_op(const RowTuple& w, int i) {
    if (i < 1 || i >= w.n()) throw std::invalid_argument("f_op: index out of range");
    auto r = detail::f_rows(w.rows[i], w.rows[i - 1]);
    if (!r) return std::nullopt;
    RowTuple out = w;
    out.rows[i] = r->first;
    out.rows[i - 1] = r->second;
    return out;
}

namespace detail {

// Reduction of the i-signature: the factor b_r contributes its symbols first,
// '+' per letter i and '-' per letter i+1, and "-+" subsequences are removed
// until the form +...+-...-. Scanning left to right, a '+' cancels the most
// recent open '-', otherwise it survives.
struct SigResult {
    std::vector<int> surviving_plus;   // factor indices, in signature order
    std::vector<int> surviving_minus;  // factor indices, in signature order
};

inline SigResult reduce_signature(const TensorElement& b, int i) {
    SigResult r;
    std::vector<int> minus_stack;
    for (int k = static_cast<int>(b.factors.size()) - 1; k >= 0; --k) {
        int np = 0, nm = 0;
        for (int x : b.factors[k]) {
            if (x == i) ++np;
            if (x == i + 1) ++nm;
        }
        // this factor contributes '+' * np then '-' * nm
        for (int j = 0; j < np; ++j) {
            if (!minus_stack.empty())
                minus_stack.pop_back();
            else
                r.surviving_plus.push_back(k);
        }
        for (int j = 0; j < nm; ++j) minus_stack.push_back(k);
    }
    r.surviving_minus = minus_stack;
    return r;
}

inline std::vector<int> factor_raise(std::vector<int> f, int i) {
    // change one i+1 into i, keeping the row weakly increasing
    for (auto it = f.begin(); it != f.end(); ++it)
        if (*it == i + 1) {
            *it = i;
            return f;
        }
    throw std::logic_error("factor_raise: no letter to change");
}

inline std::vector<int> factor_lower(std::vector<int> f, int i) {
    // change one i into i+1
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        if (*it == i) {
            *it = i + 1;
            return f;
        }
    throw std::logic_error("factor_lower: no letter to change");
}

}  // namespace detail

inline std::optional<TensorElement> e_op(const TensorElement& b, int i) {
    if (i < 1) throw std::invalid_argument("e_op: index out of range");
    auto sig = detail::reduce_signature(b, i);
    if (sig.surviving_minus.empty()) return std::nullopt;
    int k = sig.surviving_minus.front();  // leftmost '-'
    TensorElement out = b;
    out.factors[k] = detail::factor_raise(out.factors[k], i);
    return out;
}

inline std::optional<TensorElement> f_op(const TensorElement& b, int i) {
    if (i < 1) throw std::invalid_argument("f_op: index out of range");
    auto sig = detail::reduce_signature(b, i);
    if (sig.surviving_plus.empty()) return std::nullopt;
    int k = sig.surviving_plus.back();  // rightmost '+'
    TensorElement out = b;
    out.factors[k] = detail::factor_lower(out.factors[k], i);
    return out;
}

template <typename Elem>
inline int eps(const Elem& x, int i) {
    int k = 0;
    auto cur = e_op(x, i);
    while (cur) {
        ++k;
        cur = e_op(*cur, i);
    }
    return k;
}

template <typename Elem>
inline int phi(const Elem& x, int i) {
    int k = 0;
    auto cur = f_op(x, i);
    while (cur) {
        ++k;
        cur = f_op(*cur, i);
    }
    return k;
}

// All of W(mu) over letters 1..n, in lexicographic order of the distribution.
inline std::vector<RowTuple> enumerate_w(const Partition& mu, int n) {
    std::vector<RowTuple> out;
    RowTuple cur;
    cur.rows.resize(n);
    auto rec = [&](auto&& self, int letter) -> void {
        if (letter > mu.length()) {
            out.push_back(cur);
            return;
        }
        int m = mu.part(letter);
        auto dist = [&](auto&& self2, int row, int left) -> void {
            if (row == n) {
                if (left == 0) self(self, letter + 1);
                return;
            }
            for (int c = 0; c <= left; ++c) {
                for (int j = 0; j < c; ++j) cur.rows[row].push_back(letter);
                self2(self2, row + 1, left - c);
                for (int j = 0; j < c; ++j) cur.rows[row].pop_back();
            }
        };
        dist(dist, 0, m);
    };
    rec(rec, 1);
    return out;
}

// w_T for a (skew) tableau: w_i is the i-th row, padded with empty rows to n.
inline RowTuple row_tuple_of_tableau(const Tableau& t, int n) {
    if (t.shape().rows() > n) throw std::invalid_argument("row_tuple_of_tableau: rank too small");
    RowTuple w;
    w.rows = t.rows();
    w.rows.resize(n);
    return w;
}

inline RowTuple row_tuple_of_pair(const TableauPair& t, int n) {
    DoublePartition dp{t.plus.shape().outer, t.minus.shape().outer};
    return row_tuple_of_tableau(pair_as_skew(t, std::max(1, dp.lpp.part(1))), n);
}

// P(B(mu), lambda) on the W(mu) side: elements of weight lambda killed by
// every e_i. Scans the crystal rather than going through tableaux.
inline std::vector<RowTuple> highest_weight_set(const Partition& mu, const Partition& la, int n) {
    if (la.size() != mu.size()) throw std::invalid_argument("highest_weight_set: size mismatch");
    if (la.length() > n) throw std::invalid_argument("highest_weight_set: rank too small");
    Weight target = weight_from_partition(la, n);
    std::vector<RowTuple> out;
    for (auto& w : enumerate_w(mu, n)) {
        if (!(weight_of(w) == target)) continue;
        bool hw = true;
        for (int i = 1; i < n && hw; ++i) hw = !e_op(w, i).has_value();
        if (hw) out.push_back(std::move(w));
    }
    return out;
}

// P(B(mu), Lambda): row lengths follow (lambda', lambda'', 0, ...), rows
// 1..s form a tableau of shape lambda' and rows s+1..s+t one of shape
// lambda''. Equals { w_T : T in Tab(Lambda, mu) }.
inline std::vector<RowTuple> p_set_double(const Partition& mu, const DoublePartition& dla,
                                          int n) {
    if (dla.s() + dla.t() > n) throw std::invalid_argument("p_set_double: rank too small");
    if (dla.size() != mu.size()) throw std::invalid_argument("p_set_double: size mismatch");
    std::vector<int> wt(mu.length());
    for (int i = 1; i <= mu.length(); ++i) wt[i - 1] = mu.part(i);
    std::vector<RowTuple> out;
    for (const auto& pr : enumerate_pairs(dla, wt)) out.push_back(row_tuple_of_pair(pr, n));
    return out;
}

// Energy realised through the charge of the underlying row words.
inline long energy(const TensorElement& b, int n) {
    return charge(psi_inverse(b, n).concat_word());
}

inline long charge_of(const RowTuple& w) { return charge(w.concat_word()); }

// BFS closure under all e_i, f_i.
template <typename Elem>
inline std::set<Elem> connected_component(const Elem& x, int n) {
    std::set<Elem> seen{x};
    std::vector<Elem> queue{x};
    while (!queue.empty()) {
        Elem cur = queue.back();
        queue.pop_back();
        for (int i = 1; i < n; ++i) {
            for (auto nb : {e_op(cur, i), f_op(cur, i)})
                if (nb && seen.insert(*nb).second) queue.push_back(*nb);
        }
    }
    return seen;
}

// All of B(mu) over letters 1..n (factor b_1 varies fastest).
inline std::vector<TensorElement> enumerate_b(const Partition& mu, int n) {
    std::vector<TensorElement> out;
    TensorElement cur;
    cur.factors.resize(mu.length());
    auto rec = [&](auto&& self, int k) -> void {
        if (k > mu.length()) {
            out.push_back(cur);
            return;
        }
        int m = mu.part(k);
        std::vector<int> word(m, 1);
        auto next = [&]() -> bool {
            int j = m - 1;
            while (j >= 0 && word[j] == n) --j;
            if (j < 0) return false;
            int v = word[j] + 1;
            for (int q = j; q < m; ++q) word[q] = v;
            return true;
        };
        do {
            cur.factors[k - 1] = word;
            self(self, k + 1);
        } while (next());
    };
    rec(rec, 1);
    return out;
}

}  // namespace xkostka
