#pragma once

#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "xkostka/kostka.hpp"
#include "xkostka/reference_data.hpp"

namespace xkostka {

struct VerifyReport {
    std::string suite;
    long cases = 0;
    std::vector<std::string> failures;

    VerifyReport() = default;
    explicit VerifyReport(std::string name) : suite(std::move(name)) {}
    bool passed() const { return failures.empty(); }
};

namespace detail {

inline int env_threads() {
    if (const char* env = std::getenv("XKOSTKA_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Chunked parallel sweep; failures are merged in chunk order so the output
// does not depend on scheduling.
template <typename Fn>
inline void run_cases(long cases, int threads, std::vector<std::string>& failures, Fn&& fn) {
    if (threads <= 0) threads = env_threads();
    threads = static_cast<int>(std::max<long>(1, std::min<long>(threads, cases ? cases : 1)));
    if (threads == 1) {
        for (long i = 0; i < cases; ++i) fn(i, failures);
        return;
    }
    std::vector<std::vector<std::string>> fails(threads);
    std::vector<std::thread> pool;
    long chunk = (cases + threads - 1) / threads;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            long lo = t * chunk, hi = std::min(cases, lo + chunk);
            for (long i = lo; i < hi; ++i) fn(i, fails[t]);
        });
    for (auto& th : pool) th.join();
    for (auto& f : fails) failures.insert(failures.end(), f.begin(), f.end());
}

// ---- slide-based rectification oracle ------------------------------------

inline std::vector<Cell> inner_corners(const SkewShape& sh) {
    std::vector<Cell> out;
    for (int r = 1; r <= sh.inner.length(); ++r) {
        int c = sh.inner.part(r);
        if (c >= 1 && c > sh.inner.part(r + 1)) out.push_back({r, c});
    }
    return out;
}

inline Tableau rectify_by_slides(Tableau t) {
    while (!t.shape().inner.empty())
        t = slide_any(t, inner_corners(t.shape()).front(), SlideDir::Upper).first;
    return t;
}

// Explores every corner choice; true iff all orders reach `expected`.
inline bool rectify_all_orders(const Tableau& start, const Tableau& expected) {
    std::set<Tableau> seen;
    std::vector<Tableau> stack{start};
    while (!stack.empty()) {
        Tableau cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        if (cur.shape().inner.empty()) {
            if (!(cur == expected)) return false;
            continue;
        }
        for (Cell c : inner_corners(cur.shape()))
            stack.push_back(slide_any(cur, c, SlideDir::Upper).first);
    }
    return true;
}

// ---- enumeration and random generation helpers ---------------------------

inline std::vector<Tableau> enumerate_fillings(const SkewShape& sh, int max_letter) {
    std::vector<std::vector<int>> rows(sh.rows());
    for (int r = 1; r <= sh.rows(); ++r) rows[r - 1].assign(sh.row_cells(r), 0);
    std::vector<Tableau> out;
    auto fill = [&](auto&& self, int r, int j) -> void {
        if (r > sh.rows()) {
            out.emplace_back(sh, rows);
            return;
        }
        if (j >= sh.row_cells(r)) {
            self(self, r + 1, 0);
            return;
        }
        int c = sh.row_begin(r) + 1 + j;
        int lo = (j > 0) ? rows[r - 1][j - 1] : 1;
        if (sh.has_cell(r - 1, c)) lo = std::max(lo, rows[r - 2][c - sh.row_begin(r - 1) - 1] + 1);
        for (int a = lo; a <= max_letter; ++a) {
            rows[r - 1][j] = a;
            self(self, r, j + 1);
        }
        rows[r - 1][j] = 0;
    };
    fill(fill, 1, 0);
    return out;
}

inline std::vector<Partition> partitions_in_box(int max_rows, int max_cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int maxpart) -> void {
        out.emplace_back(cur);
        if (row >= max_rows) return;
        for (int p = maxpart; p >= 1; --p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 0, max_cols);
    return out;
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
};

inline Partition random_partition(Rng& rng, int max_size, int max_part) {
    int size = rng.uniform(0, max_size);
    std::vector<int> parts;
    int prev = max_part;
    while (size > 0) {
        int p = rng.uniform(1, std::min(prev, size));
        parts.push_back(p);
        prev = p;
        size -= p;
    }
    return Partition(std::move(parts));
}

// random semistandard filling; feasible whenever max_letter >= number of rows
inline Tableau random_filling(Rng& rng, const SkewShape& sh, int max_letter) {
    std::vector<std::vector<int>> rows(sh.rows());
    for (int r = 1; r <= sh.rows(); ++r) {
        rows[r - 1].assign(sh.row_cells(r), 0);
        for (int j = 0; j < sh.row_cells(r); ++j) {
            int c = sh.row_begin(r) + 1 + j;
            int lo = j > 0 ? rows[r - 1][j - 1] : 1;
            if (sh.has_cell(r - 1, c))
                lo = std::max(lo, rows[r - 2][c - sh.row_begin(r - 1) - 1] + 1);
            rows[r - 1][j] = rng.uniform(lo, std::max(lo, max_letter));
        }
    }
    return Tableau(sh, std::move(rows));
}

inline SkewShape random_skew_shape(Rng& rng, int max_rows, int max_cols, int max_cells) {
    for (;;) {
        Partition outer = random_partition(rng, max_rows * max_cols, max_cols);
        if (outer.length() > max_rows || outer.empty()) continue;
        std::vector<int> inner;
        int prev = outer.part(1);
        for (int r = 1; r <= outer.length(); ++r) {
            int v = rng.uniform(0, std::min(prev, outer.part(r)));
            inner.push_back(v);
            prev = v;
        }
        SkewShape sh(outer, Partition(std::move(inner)));
        if (sh.cells() >= 1 && sh.cells() <= max_cells) return sh;
    }
}

inline Word random_partition_word(Rng& rng, int max_len) {
    Partition mu = random_partition(rng, max_len, max_len);
    std::vector<int> letters;
    for (int k = 1; k <= mu.length(); ++k)
        for (int j = 0; j < mu.part(k); ++j) letters.push_back(k);
    std::shuffle(letters.begin(), letters.end(), rng.gen);
    return Word(std::move(letters));
}

inline std::string poly_mismatch(const std::string& what, const LaurentPoly& lhs,
                                 const LaurentPoly& rhs) {
    return what + ": " + lhs.to_string() + " != " + rhs.to_string();
}

}  // namespace detail

namespace suites {

// one worked trace: every intermediate configuration with vacancy numbers,
// plus the final J_+ image
inline VerifyReport appendix_trace(int which) {
    VerifyReport rep{"appendix-" + std::to_string(which)};
    auto check_trace = [&](const reference::TraceFixture& f, const std::string& name) {
        TableauPair pr{tableau_of_partition(f.lambda.lp, f.plus_rows),
                       tableau_of_partition(f.lambda.lpp, f.minus_rows)};
        RowTuple w = row_tuple_of_pair(pr, f.n);
        PsiTrace trace;
        RiggedConfiguration rc = psi_rc(w, &trace, f.s);
        rep.cases += 1;
        if (trace.steps.size() != f.step_rows.size()) {
            rep.failures.push_back(name + ": step count mismatch");
            return;
        }
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const auto& st = trace.steps[i];
            if (st.w.rows != f.step_rows[i]) {
                rep.failures.push_back(name + ": tuple mismatch at step " + std::to_string(i));
                continue;
            }
            for (int a = 1; a < f.n; ++a) {
                const auto& lvl = st.rc.levels[a - 1];
                const auto& exp = f.step_levels[i][a - 1];
                bool ok = lvl.size() == exp.size();
                for (std::size_t j = 0; ok && j < lvl.size(); ++j)
                    ok = lvl[j].length == exp[j][0] && lvl[j].label == exp[j][1] &&
                         vacancy(st.rc, a, lvl[j].length) == exp[j][2];
                if (!ok)
                    rep.failures.push_back(name + ": level " + std::to_string(a) +
                                           " mismatch at step " + std::to_string(i));
            }
        }
        RiggedConfiguration plus = j_plus(rc, f.s);
        for (int a = 1; a < f.n; ++a) {
            const auto& lvl = plus.levels[a - 1];
            const auto& exp = f.jplus[a - 1];
            bool ok = lvl.size() == exp.size();
            for (std::size_t j = 0; ok && j < lvl.size(); ++j)
                ok = lvl[j].length == exp[j][0] && lvl[j].label == exp[j][1];
            if (!ok) rep.failures.push_back(name + ": J_+ mismatch at level " + std::to_string(a));
        }
    };
    check_trace(which == 1 ? reference::trace_fixture_1() : reference::trace_fixture_2(),
                "trace-" + std::to_string(which));
    return rep;
}

// the six-element double case: psi images, the direct characterisation, and
// the J_+ image against QM
inline VerifyReport appendix_pairs() {
    VerifyReport rep{"appendix-3"};
    Partition mu = reference::pair_rc_mu();
    DoublePartition dla = reference::pair_rc_lambda();
    int n = 3;
    std::vector<RiggedConfiguration> expected;
    for (const auto& fix : reference::pair_rc_fixtures()) {
        TableauPair pr{tableau_of_partition(dla.lp, fix.plus_rows),
                       tableau_of_partition(dla.lpp, fix.minus_rows)};
        RiggedConfiguration want(n, mu);
        for (std::size_t a = 0; a < fix.levels.size(); ++a)
            for (const auto& s : fix.levels[a]) want.levels[a].push_back({s[0], s[1]});
        want.canonicalize();
        expected.push_back(want);
        rep.cases += 1;
        RiggedConfiguration got = psi_rc(row_tuple_of_pair(pr, n), nullptr, dla.s());
        if (!(got == want)) rep.failures.push_back("pair-rc: psi image mismatch");
    }
    std::sort(expected.begin(), expected.end());
    rep.cases += 1;
    if (rc_double(mu, dla, n) != expected)
        rep.failures.push_back("pair-rc: rc_double differs from the printed set");
    std::vector<RiggedConfiguration> plus_img;
    for (const auto& rc : expected) plus_img.push_back(j_plus(rc, dla.s()));
    std::sort(plus_img.begin(), plus_img.end());
    rep.cases += 1;
    if (plus_img != enumerate_qm_double(mu, dla, n))
        rep.failures.push_back("pair-rc: J_+ image differs from QM");
    return rep;
}

// all three worked examples
inline VerifyReport appendix() {
    VerifyReport rep{"appendix"};
    for (auto part : {appendix_trace(1), appendix_trace(2), appendix_pairs()}) {
        rep.cases += part.cases;
        for (auto& f : part.failures) rep.failures.push_back(std::move(f));
    }
    return rep;
}

// fermionic formula against the charge route
inline VerifyReport xm(int max_n, int threads) {
    VerifyReport rep{"xm"};
    if (max_n <= 0) max_n = 6;
    std::vector<std::pair<Partition, Partition>> cases;
    for (int N = 1; N <= max_n; ++N)
        for (const auto& la : partitions_of(N))
            for (const auto& mu : partitions_of(N)) cases.emplace_back(la, mu);
    rep.cases = static_cast<long>(cases.size());
    detail::run_cases(rep.cases, threads, rep.failures, [&](long i, std::vector<std::string>& f) {
        const auto& [la, mu] = cases[i];
        int n = std::max(2, la.size());
        LaurentPoly m = fermionic(mu, la, n);
        LaurentPoly rhs =
            kostka_charge(la, mu).subst_inverse().shifted(static_cast<int>(n_of(mu)));
        if (!(m == rhs))
            f.push_back(
                detail::poly_mismatch("M(" + mu.to_string() + "," + la.to_string() + ")", m, rhs));
    });
    return rep;
}

// charge route against the crystal route
inline VerifyReport routes(int max_n, int threads) {
    VerifyReport rep{"routes"};
    if (max_n <= 0) max_n = 6;
    std::vector<std::pair<Partition, Partition>> cases;
    for (int N = 1; N <= max_n; ++N)
        for (const auto& la : partitions_of(N))
            for (const auto& mu : partitions_of(N)) cases.emplace_back(la, mu);
    rep.cases = static_cast<long>(cases.size());
    detail::run_cases(rep.cases, threads, rep.failures, [&](long i, std::vector<std::string>& f) {
        const auto& [la, mu] = cases[i];
        int n = std::max(2, la.size());
        LaurentPoly a = kostka_charge(la, mu);
        LaurentPoly b = kostka_1d(la, mu, n);
        if (!(a == b))
            f.push_back(
                detail::poly_mismatch("K(" + la.to_string() + "," + mu.to_string() + ")", a, b));
    });
    return rep;
}

// the double Kostka identity, all fermionic routes agreeing
inline VerifyReport double_identity(int max_n, int threads) {
    VerifyReport rep{"double"};
    if (max_n <= 0) max_n = 5;
    std::vector<std::pair<DoublePartition, Partition>> cases;
    for (int N = 1; N <= max_n; ++N)
        for (const auto& dla : double_partitions_of(N))
            for (const auto& mu : partitions_of(N)) cases.emplace_back(dla, mu);
    rep.cases = static_cast<long>(cases.size());
    detail::run_cases(rep.cases, threads, rep.failures, [&](long i, std::vector<std::string>& f) {
        const auto& [dla, mu] = cases[i];
        int n = std::max(2, mu.size());
        std::string tag = "Lambda=" + dla.to_string() + ", mu=" + mu.to_string();
        LaurentPoly m1 = fermionic_double(mu, dla, n, DoubleFermRoute::Rigged);
        LaurentPoly m2 = fermionic_double(mu, dla, n, DoubleFermRoute::ConfigBinomial);
        LaurentPoly m3 = fermionic_double(mu, dla, n, DoubleFermRoute::MultiplicitySum);
        if (!(m1 == m2)) f.push_back(detail::poly_mismatch(tag + " rigged/config", m1, m2));
        if (!(m2 == m3)) f.push_back(detail::poly_mismatch(tag + " config/msum", m2, m3));
        LaurentPoly dk = double_kostka(dla, mu);
        LaurentPoly dklr = double_kostka_lr(dla, mu);
        if (!(dk == dklr)) f.push_back(detail::poly_mismatch(tag + " K routes", dk, dklr));
        LaurentPoly dke = double_kostka_energy(dla, mu, n);
        if (!(dk == dke)) f.push_back(detail::poly_mismatch(tag + " K energy route", dk, dke));
        LaurentPoly lhs = m2.subst_square();
        LaurentPoly rhs =
            dk.subst_inverse().shifted(2 * static_cast<int>(n_of(mu)) + dla.lp.size());
        if (!(lhs == rhs)) f.push_back(detail::poly_mismatch(tag + " main identity", lhs, rhs));
    });
    return rep;
}

// the double analogue of X = M
inline VerifyReport double_xm(int max_n, int threads) {
    VerifyReport rep{"double-xm"};
    if (max_n <= 0) max_n = 5;
    std::vector<std::pair<DoublePartition, Partition>> cases;
    for (int N = 1; N <= max_n; ++N)
        for (const auto& dla : double_partitions_of(N))
            for (const auto& mu : partitions_of(N)) cases.emplace_back(dla, mu);
    rep.cases = static_cast<long>(cases.size());
    detail::run_cases(rep.cases, threads, rep.failures, [&](long i, std::vector<std::string>& f) {
        const auto& [dla, mu] = cases[i];
        int n = std::max(2, mu.size());
        LaurentPoly x = oned_sum_double(mu, dla, n);
        LaurentPoly rhs =
            fermionic_double(mu, dla, n).subst_inverse().shifted(static_cast<int>(n_of(mu)));
        if (!(x == rhs))
            f.push_back(
                detail::poly_mismatch("X(" + mu.to_string() + "," + dla.to_string() + ")", x, rhs));
    });
    return rep;
}

// the crystal isomorphism and the crystal axioms on W(mu) and B(mu)
inline VerifyReport psi_iso(int max_n, int threads) {
    VerifyReport rep{"psi-iso"};
    if (max_n <= 0) max_n = 5;
    std::vector<std::pair<Partition, int>> cases;
    for (int n = 2; n <= 5; ++n)
        for (int N = 1; N <= max_n; ++N)
            for (const auto& mu : partitions_of(N)) cases.emplace_back(mu, n);
    rep.cases = static_cast<long>(cases.size());
    detail::run_cases(rep.cases, threads, rep.failures, [&](long ci, std::vector<std::string>& f) {
        const auto& [mu, n] = cases[ci];
        std::string tag = "mu=" + mu.to_string() + ", n=" + std::to_string(n);
        for (const auto& w : enumerate_w(mu, n)) {
            TensorElement b = psi(w);
            if (psi_inverse(b, n).rows != w.rows) {
                f.push_back(tag + ": psi round trip failed");
                return;
            }
            if (!(weight_of(b, n) == weight_of(w))) {
                f.push_back(tag + ": psi does not preserve the weight");
                return;
            }
            for (int i = 1; i < n; ++i) {
                auto we = e_op(w, i), wf = f_op(w, i);
                auto be = e_op(b, i), bf = f_op(b, i);
                if (we.has_value() != be.has_value() || (we && !(psi(*we) == *be))) {
                    f.push_back(tag + ": e_" + std::to_string(i) + " does not commute");
                    return;
                }
                if (wf.has_value() != bf.has_value() || (wf && !(psi(*wf) == *bf))) {
                    f.push_back(tag + ": f_" + std::to_string(i) + " does not commute");
                    return;
                }
                int ew = eps(w, i), fw = phi(w, i);
                if (ew != eps(b, i) || fw != phi(b, i)) {
                    f.push_back(tag + ": eps/phi not preserved");
                    return;
                }
                auto wt = weight_of(w);
                if (fw - ew != wt.coords[i - 1] - wt.coords[i]) {
                    f.push_back(tag + ": phi - eps != <h_i, wt>");
                    return;
                }
                if (wf) {
                    auto wt2 = weight_of(*wf);
                    wt2.coords[i - 1] += 1;
                    wt2.coords[i] -= 1;
                    if (!(wt2 == wt)) {
                        f.push_back(tag + ": wt(f_i w) != wt(w) - alpha_i");
                        return;
                    }
                    auto back = e_op(*wf, i);
                    if (!back || !(*back == w)) {
                        f.push_back(tag + ": e_i f_i != id");
                        return;
                    }
                    if (eps(*wf, i) != ew + 1 || phi(*wf, i) != fw - 1) {
                        f.push_back(tag + ": eps/phi shift under f_i");
                        return;
                    }
                }
                if (we) {
                    auto back = f_op(*we, i);
                    if (!back || !(*back == w)) {
                        f.push_back(tag + ": f_i e_i != id");
                        return;
                    }
                }
            }
        }
    });
    return rep;
}

// the insertion and plactic property suites
inline VerifyReport plactic(int threads) {
    VerifyReport rep{"plactic"};
    const int RANDOM_CASES = 10000;

    std::vector<Tableau> small_tabs;  // partition tableaux, |T| <= 8, letters <= 5
    for (int m = 0; m <= 8; ++m)
        for (const auto& la : partitions_of(m))
            for (auto& t : detail::enumerate_fillings(SkewShape(la, Partition()), 5))
                small_tabs.push_back(std::move(t));

    // R-monotonicity of successive insertions
    detail::run_cases(static_cast<long>(small_tabs.size()), threads, rep.failures,
                      [&](long i, std::vector<std::string>& f) {
                          const Tableau& t = small_tabs[i];
                          for (int u = 1; u <= 5; ++u) {
                              auto [tu, ru] = column_insert(u, t);
                              for (int v = 1; v <= u; ++v)
                                  if (column_insert(v, tu).second > ru) {
                                      f.push_back("R(v -> [u -> T]) > R(u -> T)");
                                      return;
                                  }
                          }
                      });
    rep.cases += static_cast<long>(small_tabs.size()) * 25;

    // rows insert to rows, double-rows to double-rows, sentinel comparison
    {
        std::vector<Word> rows4, words4;
        std::vector<Word> doubles;
        {
            std::vector<int> buf;
            auto gen = [&](auto&& self, int maxlen, bool sorted, std::vector<Word>& out) -> void {
                if (!buf.empty()) out.push_back(Word(buf));
                if (static_cast<int>(buf.size()) == maxlen) return;
                int lo = sorted && !buf.empty() ? buf.back() : 1;
                for (int a = lo; a <= 4; ++a) {
                    buf.push_back(a);
                    self(self, maxlen, sorted, out);
                    buf.pop_back();
                }
            };
            gen(gen, 4, true, rows4);
            gen(gen, 4, false, words4);
            for (const Word& top : rows4)
                for (const Word& bot : rows4) {
                    if (top.length() != bot.length()) continue;
                    Word w = concat(bot, top);
                    if (is_double_row(w)) doubles.push_back(w);
                }
        }
        std::vector<const Tableau*> tabs6;
        for (const auto& t : small_tabs) {
            auto wt = t.weight();
            bool small_letters = true;
            for (std::size_t k = 4; k < wt.size(); ++k) small_letters &= wt[k] == 0;
            if (t.cells() <= 6 && small_letters) tabs6.push_back(&t);
        }
        detail::run_cases(
            static_cast<long>(tabs6.size()), threads, rep.failures,
            [&](long i, std::vector<std::string>& f) {
                const Tableau& t = *tabs6[i];
                for (const Word& w : rows4) {
                    Tableau cur = t;
                    int prev = INT_MAX;
                    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
                        auto [nt, r] = column_insert(*it, cur);
                        cur = std::move(nt);
                        if (r > prev) {
                            f.push_back("row word with non-monotone R sequence");
                            return;
                        }
                        prev = r;
                    }
                }
                for (const Word& w : doubles) {
                    Tableau cur = t;
                    std::vector<int> rseq;
                    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
                        auto [nt, r] = column_insert(*it, cur);
                        cur = std::move(nt);
                        rseq.push_back(r);
                    }
                    int half = static_cast<int>(rseq.size()) / 2;
                    std::vector<int> written;
                    for (int j = 2 * half - 1; j >= half; --j) written.push_back(rseq[j]);
                    for (int j = half - 1; j >= 0; --j) written.push_back(rseq[j]);
                    if (!is_double_row(Word(written))) {
                        f.push_back("double-row word with non-double-row R sequence");
                        return;
                    }
                }
                if (t.cells() > 5) return;
                for (const Word& w : words4) {
                    if (w.length() > 4) continue;
                    int sentinel = 6;
                    Tableau plain = t, with_inf = column_insert(sentinel, t).first;
                    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
                        auto [pt, rp] = column_insert(*it, plain);
                        auto [st, rs_] = column_insert(*it, with_inf);
                        if (rp < rs_) {
                            f.push_back("sentinel insertion raised an R index");
                            return;
                        }
                        plain = std::move(pt);
                        with_inf = std::move(st);
                    }
                }
            });
        rep.cases += static_cast<long>(tabs6.size());
    }

    // charge is constant under elementary Knuth moves: every word of
    // partition weight up to length 8
    {
        std::vector<Word> words;
        for (int len = 2; len <= 8; ++len)
            for (const auto& mu : partitions_of(len)) {
                std::vector<int> letters;
                for (int k = 1; k <= mu.length(); ++k)
                    for (int j = 0; j < mu.part(k); ++j) letters.push_back(k);
                do {
                    words.push_back(Word{letters});
                } while (std::next_permutation(letters.begin(), letters.end()));
            }
        rep.cases += static_cast<long>(words.size());
        detail::run_cases(static_cast<long>(words.size()), threads, rep.failures,
                          [&](long i, std::vector<std::string>& f) {
                              long c = charge(words[i]);
                              for (const Word& m : knuth_moves(words[i]))
                                  if (charge(m) != c) {
                                      f.push_back("charge changed under a Knuth move: " +
                                                  words[i].to_string());
                                      return;
                                  }
                          });
    }

    // slides: order independence, agreement with insertion, Knuth class and
    // charge preservation
    {
        std::vector<Tableau> skews;
        for (const auto& outer : detail::partitions_in_box(4, 4)) {
            if (outer.empty()) continue;
            for (const auto& inner : detail::partitions_in_box(4, 4)) {
                if (!outer.contains(inner)) continue;
                SkewShape sh(outer, inner);
                if (sh.cells() < 1 || sh.cells() > 6) continue;
                for (auto& t : detail::enumerate_fillings(sh, 3)) skews.push_back(std::move(t));
            }
        }
        rep.cases += static_cast<long>(skews.size());
        detail::run_cases(
            static_cast<long>(skews.size()), threads, rep.failures,
            [&](long i, std::vector<std::string>& f) {
                const Tableau& t = skews[i];
                Tableau byinsert = rectify(t);
                if (!(detail::rectify_by_slides(t) == byinsert)) {
                    f.push_back("slides disagree with insertion");
                    return;
                }
                if (!detail::rectify_all_orders(t, byinsert)) {
                    f.push_back("slide order dependence detected");
                    return;
                }
                for (auto dir : {SlideDir::Upper, SlideDir::Lower})
                    for (Cell c : jdt_positions(t.shape(), dir))
                        if (!knuth_equivalent(word_of(t), word_of(jdt_slide(t, c, dir)))) {
                            f.push_back("slide left the Knuth class");
                            return;
                        }
                if (weight_is_partition(t.weight()) &&
                    charge(word_of(t)) != charge(word_of(byinsert))) {
                    f.push_back("charge changed under rectification");
                    return;
                }
            });
    }

    // the RS correspondence inverts
    {
        std::vector<Word> words;
        std::vector<int> buf;
        auto gen = [&](auto&& self, int len) -> void {
            if (static_cast<int>(buf.size()) == len) {
                words.push_back(Word{buf});
                return;
            }
            for (int a = 1; a <= 3; ++a) {
                buf.push_back(a);
                self(self, len);
                buf.pop_back();
            }
        };
        for (int len = 0; len <= 6; ++len) gen(gen, len);
        rep.cases += static_cast<long>(words.size());
        detail::run_cases(static_cast<long>(words.size()), threads, rep.failures,
                          [&](long i, std::vector<std::string>& f) {
                              auto [q, p] = rs(words[i]);
                              if (!(rs_inverse(q, p) == words[i]))
                                  f.push_back("rs did not invert: " + words[i].to_string());
                          });
    }

    // randomized sweeps over larger shapes, covering every suite above
    {
        detail::Rng rng(20250809);
        long fails_before = static_cast<long>(rep.failures.size());
        for (int it = 0; it < RANDOM_CASES; ++it) {
            SkewShape sh = detail::random_skew_shape(rng, 5, 5, 7);
            Tableau t = detail::random_filling(rng, sh, 5 + rng.uniform(0, 2));
            Tableau byinsert = rectify(t);
            if (!(detail::rectify_by_slides(t) == byinsert)) {
                rep.failures.push_back("random slides/insertion mismatch");
                break;
            }
            Tableau cur = t;
            while (!cur.shape().inner.empty()) {
                auto corners = detail::inner_corners(cur.shape());
                cur = detail::slide_any(cur, corners[rng.uniform(0, (int)corners.size() - 1)],
                                        SlideDir::Upper)
                          .first;
            }
            if (!(cur == byinsert)) {
                rep.failures.push_back("random slide order mismatch");
                break;
            }
            Word w = detail::random_partition_word(rng, 9);
            long c = charge(w);
            for (const Word& m : knuth_moves(w))
                if (charge(m) != c) {
                    rep.failures.push_back("random Knuth move changed charge");
                    break;
                }
            auto [q, p] = rs(w);
            if (!(rs_inverse(q, p) == w)) {
                rep.failures.push_back("random rs inversion failed");
                break;
            }

            // insertion indices on a random straight tableau
            Partition shape = detail::random_partition(rng, 9, 5);
            Tableau base =
                detail::random_filling(rng, SkewShape(shape, Partition()), shape.length() + 3);
            int maxletter = shape.length() + 3;
            int u = rng.uniform(1, maxletter), v = rng.uniform(1, u);
            auto [tu, ru] = column_insert(u, base);
            if (column_insert(v, tu).second > ru) {
                rep.failures.push_back("random insertion monotonicity failed");
                break;
            }
            {  // a random row inserts with weakly decreasing landing rows
                int len = rng.uniform(1, 5);
                std::vector<int> row(len);
                for (int j = 0; j < len; ++j) row[j] = rng.uniform(1, maxletter);
                std::sort(row.begin(), row.end());
                Tableau acc = base;
                int prev = INT_MAX;
                for (auto itl = row.rbegin(); itl != row.rend(); ++itl) {
                    auto [nt, r] = column_insert(*itl, acc);
                    acc = std::move(nt);
                    if (r > prev) {
                        rep.failures.push_back("random row insertion failed");
                        break;
                    }
                    prev = r;
                }
            }
            {  // a random double-row inserts to a double-row of indices
                int len = rng.uniform(1, 4);
                std::vector<int> bot(len), top(len);
                for (int j = 0; j < len; ++j) {
                    top[j] = rng.uniform(1, maxletter - 1);
                    bot[j] = rng.uniform(top[j] + 1, maxletter);
                }
                std::sort(top.begin(), top.end());
                std::sort(bot.begin(), bot.end());
                Word dw = concat(Word(bot), Word(top));
                if (is_double_row(dw)) {
                    Tableau acc = base;
                    std::vector<int> rseq;
                    for (auto itl = dw.letters.rbegin(); itl != dw.letters.rend(); ++itl) {
                        auto [nt, r] = column_insert(*itl, acc);
                        acc = std::move(nt);
                        rseq.push_back(r);
                    }
                    std::vector<int> written;
                    for (int j = 2 * len - 1; j >= len; --j) written.push_back(rseq[j]);
                    for (int j = len - 1; j >= 0; --j) written.push_back(rseq[j]);
                    if (!is_double_row(Word(written))) {
                        rep.failures.push_back("random double-row insertion failed");
                        break;
                    }
                }
            }
            {  // the sentinel never lowers a landing row
                int len = rng.uniform(1, 5);
                std::vector<int> word(len);
                for (int j = 0; j < len; ++j) word[j] = rng.uniform(1, maxletter);
                Tableau plain = base, with_inf = column_insert(maxletter + 1, base).first;
                for (auto itl = word.rbegin(); itl != word.rend(); ++itl) {
                    auto [pt2, rp] = column_insert(*itl, plain);
                    auto [st2, rs2] = column_insert(*itl, with_inf);
                    if (rp < rs2) {
                        rep.failures.push_back("random sentinel comparison failed");
                        break;
                    }
                    plain = std::move(pt2);
                    with_inf = std::move(st2);
                }
            }
            if (static_cast<long>(rep.failures.size()) != fails_before) break;
        }
        rep.cases += RANDOM_CASES;
    }
    return rep;
}

// the tableau-to-pair bijection: injectivity, image, charge preservation,
// independence of the embedding width, LR symmetry
inline VerifyReport gamma_charge(int max_n, int threads) {
    VerifyReport rep{"gamma-charge"};
    if (max_n <= 0) max_n = 6;
    struct Case {
        SkewShape shape;
        Partition mu;
    };
    std::vector<Case> cases;
    for (int m = 1; m <= max_n; ++m)
        for (const auto& la : partitions_of(m)) {
            std::vector<Partition> inners;
            for (int k = 0; k < m; ++k)
                for (const auto& rho : partitions_of(k))
                    if (la.contains(rho)) inners.push_back(rho);
            for (const auto& rho : inners) {
                SkewShape sh(la, rho);
                for (const auto& mu : partitions_of(sh.cells())) cases.push_back({sh, mu});
            }
        }
    rep.cases = static_cast<long>(cases.size());
    detail::run_cases(rep.cases, threads, rep.failures, [&](long ci, std::vector<std::string>& f) {
        const auto& [sh, mu] = cases[ci];
        std::vector<int> wt(mu.length());
        for (int i = 1; i <= mu.length(); ++i) wt[i - 1] = mu.part(i);
        auto tabs = enumerate_tableaux(sh, wt);
        std::set<std::pair<Tableau, Tableau>> images;
        for (const auto& t : tabs) {
            auto [d, s] = gamma(t);
            if (charge(word_of(t)) != charge(word_of(s))) {
                f.push_back("gamma does not preserve charge");
                return;
            }
            if (!is_lattice(word_of(d))) {
                f.push_back("gamma first component is not a lattice tableau");
                return;
            }
            images.insert({d, s});
        }
        if (images.size() != tabs.size()) {
            f.push_back("gamma is not injective on " + sh.outer.to_string());
            return;
        }
        std::set<std::pair<Tableau, Tableau>> target;
        for (const auto& nu : partitions_of(sh.cells())) {
            std::vector<int> nuwt(nu.length());
            for (int i = 1; i <= nu.length(); ++i) nuwt[i - 1] = nu.part(i);
            auto lattice = enumerate_tableaux(sh, nuwt, true);
            auto inner = enumerate_tableaux(SkewShape(nu, Partition()), wt);
            for (const auto& d : lattice)
                for (const auto& s : inner) target.insert({d, s});
        }
        if (images != target) {
            f.push_back("gamma image mismatch on " + sh.outer.to_string() + "/" +
                        sh.inner.to_string());
            return;
        }
    });

    // LR symmetry and the embedding-width independence of the pair map
    {
        int bound = std::min(max_n, 5);
        for (int N = 1; N <= bound; ++N)
            for (const auto& eta : partitions_of(N))
                for (int k = 0; k <= N; ++k)
                    for (const auto& lp : partitions_of(k))
                        for (const auto& lpp : partitions_of(N - k)) {
                            rep.cases += 1;
                            if (lr_coefficient(lp, lpp, eta) != lr_coefficient(lpp, lp, eta))
                                rep.failures.push_back("LR symmetry failed at eta=" +
                                                       eta.to_string());
                        }
        for (int N = 1; N <= std::min(bound, 4); ++N)
            for (const auto& dla : double_partitions_of(N))
                for (const auto& mu : partitions_of(N)) {
                    std::vector<int> wt(mu.length());
                    for (int i = 1; i <= mu.length(); ++i) wt[i - 1] = mu.part(i);
                    for (const auto& pr : enumerate_pairs(dla, wt)) {
                        rep.cases += 1;
                        int a0 = std::max(1, dla.lpp.part(1));
                        auto base = gamma(pair_as_skew(pr, a0));
                        Word w0 = word_of(pair_as_skew(pr, a0));
                        for (int a = a0 + 1; a <= a0 + 2; ++a) {
                            Tableau emb = pair_as_skew(pr, a);
                            if (!(word_of(emb) == w0)) {
                                rep.failures.push_back("pair word depends on the embedding");
                                break;
                            }
                            auto [d, s] = gamma(emb);
                            if (!(s == base.second) || d.rows() != base.first.rows()) {
                                rep.failures.push_back("gamma depends on the embedding");
                                break;
                            }
                        }
                    }
                }
    }
    return rep;
}

// rigged-configuration structure sweeps
inline VerifyReport rigged(int max_n, int threads) {
    VerifyReport rep{"rigged"};
    if (max_n <= 0) max_n = 5;

    // highest-weight case: set equality, cocharge complement, vacancy forms
    std::vector<std::pair<Partition, Partition>> pcases;
    for (int N = 1; N <= max_n; ++N)
        for (const auto& la : partitions_of(N))
            for (const auto& mu : partitions_of(N)) pcases.emplace_back(la, mu);
    rep.cases += static_cast<long>(pcases.size());
    detail::run_cases(
        static_cast<long>(pcases.size()), threads, rep.failures,
        [&](long i, std::vector<std::string>& f) {
            const auto& [la, mu] = pcases[i];
            int n = std::max(2, mu.size());
            std::string tag = "la=" + la.to_string() + ", mu=" + mu.to_string();
            std::vector<int> wt(mu.length());
            for (int k = 1; k <= mu.length(); ++k) wt[k - 1] = mu.part(k);
            std::vector<RiggedConfiguration> image;
            std::multiset<long> cc_set, comp_set;
            bool elementwise = true;
            for (const auto& t : enumerate_tableaux(SkewShape(la, Partition()), wt)) {
                RowTuple w = row_tuple_of_tableau(t, n);
                RiggedConfiguration rc = psi_rc(w);
                if (!(rc_weight(rc) == weight_of(w))) {
                    f.push_back(tag + ": psi does not preserve the weight");
                    return;
                }
                if (!is_valid(rc) || !is_highest(rc)) {
                    f.push_back(tag + ": psi image not valid highest weight");
                    return;
                }
                cc_set.insert(cocharge(rc));
                comp_set.insert(n_of(mu) - charge(word_of(t)));
                elementwise &= cocharge(rc) == n_of(mu) - charge(word_of(t));
                image.push_back(std::move(rc));
            }
            if (cc_set != comp_set) {
                f.push_back(tag + ": cocharge multiset differs from the charge complement");
                return;
            }
            if (!elementwise) {
                f.push_back(tag +
                            ": cc(psi(w_T)) = n(mu) - c(T) fails elementwise; the multiset "
                            "identity holds, and psi pairs tableaux with configurations up "
                            "to a content-preserving twist of the charge statistic");
                return;
            }
            std::sort(image.begin(), image.end());
            auto direct = enumerate_rc(mu, la, n);
            if (image != direct) {
                f.push_back(tag + ": RC enumeration differs from the psi image");
                return;
            }
            if (!(fermionic(mu, la, n) == fermionic_rigged(mu, la, n))) {
                f.push_back(tag + ": binomial and rigged fermionic sums differ");
                return;
            }
            for (const auto& rc : direct) {
                for (int a = 1; a < n; ++a) {
                    int imax = rc.level_partition(a - 1).part(1) + 1;
                    for (int k = 1; k <= imax; ++k) {
                        if (vacancy(rc, a, k) != vacancy_general(rc, a, k)) {
                            f.push_back(tag + ": vacancy forms disagree");
                            return;
                        }
                        int lhs = 2 * vacancy(rc, a, k) - vacancy(rc, a, k - 1) -
                                  vacancy(rc, a, k + 1);
                        int rhs = rc.level_partition(a - 1).multiplicity(k) -
                                  2 * rc.level_partition(a).multiplicity(k) +
                                  rc.level_partition(a + 1).multiplicity(k);
                        if (lhs < rhs) {
                            f.push_back(tag + ": vacancy convexity bound violated");
                            return;
                        }
                    }
                }
            }
            // projection of the rigged enumeration onto configurations
            std::set<std::vector<std::vector<int>>> proj, confs;
            for (const auto& rc : direct) {
                std::vector<std::vector<int>> key(rc.levels.size());
                for (std::size_t a = 0; a < rc.levels.size(); ++a)
                    for (const auto& s : rc.levels[a]) key[a].push_back(s.length);
                proj.insert(key);
            }
            for (const auto& conf : enumerate_c(mu, la, n)) {
                std::vector<std::vector<int>> key(conf.levels.size());
                for (std::size_t a = 0; a < conf.levels.size(); ++a)
                    for (const auto& s : conf.levels[a]) key[a].push_back(s.length);
                confs.insert(key);
            }
            if (proj != confs) {
                f.push_back(tag + ": admissible configurations differ from the projection");
                return;
            }
        });

    // double case: cardinality, bijection, inverse lookup
    std::vector<std::pair<DoublePartition, Partition>> dcases;
    for (int N = 1; N <= max_n; ++N)
        for (const auto& dla : double_partitions_of(N))
            for (const auto& mu : partitions_of(N)) dcases.emplace_back(dla, mu);
    rep.cases += static_cast<long>(dcases.size());
    detail::run_cases(
        static_cast<long>(dcases.size()), threads, rep.failures,
        [&](long i, std::vector<std::string>& f) {
            const auto& [dla, mu] = dcases[i];
            int n = std::max(2, mu.size());
            std::string tag = "Lambda=" + dla.to_string() + ", mu=" + mu.to_string();
            std::vector<int> wt(mu.length());
            for (int k = 1; k <= mu.length(); ++k) wt[k - 1] = mu.part(k);
            auto qm = enumerate_qm_double(mu, dla, n);
            auto tab = enumerate_pairs(dla, wt);
            if (qm.size() != tab.size()) {
                f.push_back(tag + ": |QM| != |Tab|");
                return;
            }
            auto rcs = rc_double(mu, dla, n);  // asserts the psi image internally
            std::vector<RiggedConfiguration> plus;
            for (const auto& rc : rcs) plus.push_back(j_plus(rc, dla.s()));
            std::sort(plus.begin(), plus.end());
            if (plus != qm) {
                f.push_back(tag + ": J_+ is not a bijection onto QM");
                return;
            }
            for (const auto& rc : rcs)
                if (!(j_minus(j_plus(rc, dla.s()), dla.s()) == rc)) {
                    f.push_back(tag + ": J_- does not invert J_+");
                    return;
                }
        });

    // cocharge is constant on connected components, psi inverse works
    std::vector<Partition> mus;
    for (int N = 1; N <= std::min(max_n, 5); ++N)
        for (const auto& mu : partitions_of(N)) mus.push_back(mu);
    rep.cases += static_cast<long>(mus.size());
    detail::run_cases(
        static_cast<long>(mus.size()), threads, rep.failures,
        [&](long i, std::vector<std::string>& f) {
            const Partition& mu = mus[i];
            int n = std::max(2, mu.size());
            std::set<RowTuple> left;
            std::set<RiggedConfiguration> images;
            long total = 0;
            for (const auto& w : enumerate_w(mu, n)) {
                left.insert(w);
                images.insert(psi_rc(w));
                ++total;
            }
            if (static_cast<long>(images.size()) != total) {
                f.push_back("psi is not injective on W(" + mu.to_string() + ")");
                return;
            }
            while (!left.empty()) {
                RowTuple seed = *left.begin();
                auto comp = connected_component(seed, n);
                long cc0 = cocharge(psi_rc(seed));
                long en0 = charge_of(seed);
                for (const auto& w : comp) {
                    left.erase(w);
                    if (cocharge(psi_rc(w)) != cc0) {
                        f.push_back("cocharge not constant on a component of W(" +
                                    mu.to_string() + ")");
                        return;
                    }
                    if (charge_of(w) != en0) {
                        f.push_back("energy not constant on a component of W(" + mu.to_string() +
                                    ")");
                        return;
                    }
                }
            }
            // spot-check the table-lookup inverse on RC(mu, mu)
            for (const auto& rc : enumerate_rc(mu, mu, n)) {
                auto w = psi_rc_inverse(rc, mu, n);
                if (!w || !(psi_rc(*w) == rc)) {
                    f.push_back("psi inverse failed over mu=" + mu.to_string());
                    return;
                }
            }
        });
    return rep;
}

// single slides against operator strings on the row-tuple crystal
inline VerifyReport slide_operators(int threads) {
    VerifyReport rep{"slide-operators"};
    std::vector<Tableau> tabs;
    for (const auto& outer : detail::partitions_in_box(3, 4)) {
        if (outer.empty()) continue;
        for (const auto& inner : detail::partitions_in_box(3, 4)) {
            if (!outer.contains(inner)) continue;
            SkewShape sh(outer, inner);
            if (sh.cells() < 1 || sh.cells() > 6) continue;
            for (auto& t : detail::enumerate_fillings(sh, std::min(4, sh.rows() + 2)))
                tabs.push_back(std::move(t));
        }
    }
    rep.cases = static_cast<long>(tabs.size());
    detail::run_cases(
        static_cast<long>(tabs.size()), threads, rep.failures,
        [&](long i, std::vector<std::string>& f) {
            const Tableau& t = tabs[i];
            int maxletter = 1;
            for (const auto& row : t.rows())
                for (int a : row) maxletter = std::max(maxletter, a);
            int n = std::max(t.shape().rows() + 1, maxletter + 1);
            RowTuple w = row_tuple_of_tableau(t, n);
            for (Cell c : jdt_positions(t.shape(), SlideDir::Upper)) {
                auto [res, fin] = jdt_slide_traced(t, c, SlideDir::Upper);
                RowTuple expect = row_tuple_of_tableau(res, n);
                std::optional<RowTuple> got = w;
                for (int k = c.row; k < fin.row && got; ++k) got = e_op(*got, k);
                if (!got || !(got->rows == expect.rows)) {
                    f.push_back("upper slide != operator string");
                    return;
                }
            }
            for (Cell c : jdt_positions(t.shape(), SlideDir::Lower)) {
                auto [res, fin] = jdt_slide_traced(t, c, SlideDir::Lower);
                RowTuple expect = row_tuple_of_tableau(res, n);
                std::optional<RowTuple> got = w;
                for (int k = c.row - 1; k >= fin.row && got; --k) got = f_op(*got, k);
                if (!got || !(got->rows == expect.rows)) {
                    f.push_back("lower slide != operator string");
                    return;
                }
            }
            // membership in the component of the rectification (sampled; the
            // weight must be a partition for psi)
            if (i % 8 == 0 && weight_is_partition(t.weight())) {
                TensorElement b = psi(w);
                TensorElement hw = psi(row_tuple_of_tableau(rectify(t), n));
                auto comp = connected_component(hw, n);
                if (comp.find(b) == comp.end()) {
                    f.push_back("element escapes the component of its rectification");
                    return;
                }
                if (energy(b, n) != energy(hw, n)) {
                    f.push_back("energy differs inside a component");
                    return;
                }
            }
        });
    return rep;
}

}  // namespace suites

inline VerifyReport verify(const std::string& suite, int max_n = 0, int threads = 0) {
    if (suite == "appendix") return suites::appendix();
    if (suite == "xm") return suites::xm(max_n, threads);
    if (suite == "routes") return suites::routes(max_n, threads);
    if (suite == "double") return suites::double_identity(max_n, threads);
    if (suite == "double-xm") return suites::double_xm(max_n, threads);
    if (suite == "psi-iso") return suites::psi_iso(max_n, threads);
    if (suite == "plactic") return suites::plactic(threads);
    if (suite == "gamma-charge") return suites::gamma_charge(max_n, threads);
    if (suite == "rigged") return suites::rigged(max_n, threads);
    if (suite == "slide-operators") return suites::slide_operators(threads);
    if (suite == "all") {
        VerifyReport all{"all"};
        for (const char* name : {"appendix", "plactic", "gamma-charge", "psi-iso",
                                 "slide-operators", "rigged", "xm", "routes", "double",
                                 "double-xm"}) {
            VerifyReport r = verify(name, max_n, threads);
            all.cases += r.cases;
            for (auto& f : r.failures) all.failures.push_back(r.suite + ": " + f);
        }
        return all;
    }
    throw std::invalid_argument("verify: unknown suite '" + suite + "'");
}

}  // namespace xkostka
