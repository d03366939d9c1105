#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "xkostka/crystal.hpp"
#include "xkostka/partition.hpp"

namespace xkostka {

// (alpha_a, alpha_b) for the type-A Cartan matrix
inline int cartan_pairing(int a, int b) {
    if (a == b) return 2;
    return (a - b == 1 || b - a == 1) ? -1 : 0;
}

// Concave sequences (2 a_i >= a_{i-1} + a_{i+1} on the interior) with
// nonnegative end values are nonnegative throughout; the enumeration filters
// rely on this to bound vacancy checks to the occupied lengths.
inline bool nonneg_by_concavity(const std::vector<int>& a) {
    if (a.empty()) return true;
    if (a.front() < 0 || a.back() < 0) return false;
    for (std::size_t i = 1; i + 1 < a.size(); ++i)
        if (2 * a[i] < a[i - 1] + a[i + 1])
            throw std::invalid_argument("nonneg_by_concavity: sequence is not concave");
    return true;
}

struct RcString {
    int length = 0;
    int label = 0;
    auto operator<=>(const RcString&) const = default;
};

// Rigged configuration over the multiplicity array L(mu): levels 1..n-1 each
// hold strings (length, label). Strings are kept in canonical order (length
// descending, then label descending), which realises the identification of
// label permutations among equal lengths.
struct RiggedConfiguration {
    int n = 2;
    Partition mu;
    std::vector<std::vector<RcString>> levels;  // levels[a-1]

    RiggedConfiguration() = default;
    RiggedConfiguration(int rank, Partition context)
        : n(rank), mu(std::move(context)), levels(static_cast<std::size_t>(rank - 1)) {
        if (rank < 2) throw std::invalid_argument("RiggedConfiguration: rank must be >= 2");
    }

    void canonicalize() {
        for (auto& lvl : levels)
            std::sort(lvl.begin(), lvl.end(), [](const RcString& a, const RcString& b) {
                return a.length != b.length ? a.length > b.length : a.label > b.label;
            });
    }

    auto operator<=>(const RiggedConfiguration&) const = default;

    // nu^{(a)} with nu^{(0)} = mu and nu^{(n)} empty
    Partition level_partition(int a) const {
        if (a == 0) return mu;
        if (a >= n) return Partition();
        std::vector<int> parts;
        for (const auto& s : levels[a - 1]) parts.push_back(s.length);
        std::sort(parts.rbegin(), parts.rend());
        return Partition(std::move(parts));
    }

    int level_size(int a) const {
        if (a == 0) return mu.size();
        if (a >= n) return 0;
        int s = 0;
        for (const auto& str : levels[a - 1]) s += str.length;
        return s;
    }

    long label_sum() const {
        long s = 0;
        for (const auto& lvl : levels)
            for (const auto& str : lvl) s += str.label;
        return s;
    }
};

// p_i^{(a)} = Q_i^{(a-1)} - 2 Q_i^{(a)} + Q_i^{(a+1)}, with p_0 = 0.
inline int vacancy(const RiggedConfiguration& rc, int a, int i) {
    if (a < 1 || a >= rc.n) throw std::invalid_argument("vacancy: level out of range");
    if (i == 0) return 0;
    return rc.level_partition(a - 1).column_sum(i) - 2 * rc.level_partition(a).column_sum(i) +
           rc.level_partition(a + 1).column_sum(i);
}

// General form: p_i^{(a)} = sum_j min(i,j) L^{(a)}_j
//                           - sum_{(b,j)} (alpha_a, alpha_b) min(i,j) m_j^{(b)}
inline int vacancy_general(const RiggedConfiguration& rc, int a, int i) {
    if (a < 1 || a >= rc.n) throw std::invalid_argument("vacancy_general: level out of range");
    int p = (a == 1) ? rc.mu.column_sum(i) : 0;
    for (int b = 1; b < rc.n; ++b) {
        int c = cartan_pairing(a, b);
        if (c == 0) continue;
        for (const auto& s : rc.levels[b - 1]) p -= c * std::min(i, s.length);
    }
    return p;
}

inline Weight rc_weight(const RiggedConfiguration& rc) {
    Weight w;
    for (int a = 1; a <= rc.n; ++a)
        w.coords.push_back(rc.level_size(a - 1) - rc.level_size(a));
    return w;
}

inline bool is_valid(const RiggedConfiguration& rc) {
    for (int a = 1; a < rc.n; ++a)
        for (const auto& s : rc.levels[a - 1])
            if (s.label > vacancy(rc, a, s.length)) return false;
    return true;
}

inline bool is_highest(const RiggedConfiguration& rc) {
    for (const auto& lvl : rc.levels)
        for (const auto& s : lvl)
            if (s.label < 0) return false;
    return true;
}

// cc(nu) = 1/2 sum (alpha_a,alpha_b) min(i,j) m_i^{(a)} m_j^{(b)}
inline long cc_config(const RiggedConfiguration& rc) {
    long twice = 0;
    for (int a = 1; a < rc.n; ++a)
        for (int b = 1; b < rc.n; ++b) {
            int c = cartan_pairing(a, b);
            if (c == 0) continue;
            for (const auto& sa : rc.levels[a - 1])
                for (const auto& sb : rc.levels[b - 1])
                    twice += static_cast<long>(c) * std::min(sa.length, sb.length);
        }
    if (twice % 2 != 0) throw std::logic_error("cc_config: odd double sum");
    return twice / 2;
}

// cc(nu) - |nu^{(s)}|, the configuration cocharge used on the double side
inline long cc_config_double(const RiggedConfiguration& rc, int s) {
    return cc_config(rc) - (s >= 1 ? rc.level_size(s) : 0);
}

inline long cocharge(const RiggedConfiguration& rc) { return cc_config(rc) + rc.label_sum(); }

// Replace every level-s string (i, x) by (i, i + x). Levels without strings
// (s = 0, or s = n where nu^{(n)} is empty) leave the configuration alone.
inline RiggedConfiguration j_plus(const RiggedConfiguration& rc, int s) {
    if (s < 0 || s > rc.n) throw std::invalid_argument("j_plus: level out of range");
    RiggedConfiguration out = rc;
    if (s >= 1 && s < rc.n)
        for (auto& str : out.levels[s - 1]) str.label += str.length;
    out.canonicalize();
    return out;
}

inline RiggedConfiguration j_minus(const RiggedConfiguration& rc, int s) {
    if (s < 0 || s > rc.n) throw std::invalid_argument("j_minus: level out of range");
    RiggedConfiguration out = rc;
    if (s >= 1 && s < rc.n)
        for (auto& str : out.levels[s - 1]) str.label -= str.length;
    out.canonicalize();
    return out;
}

// One step of the bijection trace: the truncated tuple, its rank, the
// selected string lengths i_1 <= ... <= i_r (old lengths) and i_0, and the
// configuration after the step.
struct PsiStep {
    int index = 0;
    RowTuple w;
    int rank = 0;
    std::vector<int> chosen;  // i_1 .. i_r
    int i0 = 0;
    RiggedConfiguration rc;
};

struct PsiTrace {
    Partition mu;
    int n = 2;
    std::vector<PsiStep> steps;  // indices 0..N
};

// The crystal-to-rigged-configuration bijection on W(mu), built by the
// N-step induction: repeatedly delete the rightmost letter of the first row
// containing the maximal letter; a deletion at row r+1 selects singular
// strings at levels r,...,1 with weakly decreasing lengths, lengthens each by
// one and makes the lengthened strings singular for the new vacancy numbers.
//
// monitor_s > 0 additionally asserts, after every step, that every level-s
// string (i, x) satisfies 0 <= x + i <= p_i^{(s)} + i.
inline RiggedConfiguration psi_rc(const RowTuple& w, PsiTrace* trace = nullptr,
                                  int monitor_s = 0) {
    int n = w.n();
    if (n < 2) throw std::invalid_argument("psi_rc: need at least two rows");
    Partition mu = w.content();  // throws if the content is not a partition
    int total = mu.size();

    // deletion sequence: ranks[i-1] is the rank of the step-i tuple
    std::vector<int> ranks(total, 0);
    std::vector<RowTuple> tuples;
    if (trace) tuples.assign(total + 1, RowTuple{});
    RowTuple cur = w;
    for (int i = total; i >= 1; --i) {
        if (trace) tuples[i] = cur;
        int maxletter = 0;
        for (const auto& row : cur.rows)
            for (int a : row) maxletter = std::max(maxletter, a);
        int host = -1;
        for (int r = 0; r < n && host < 0; ++r)
            if (!cur.rows[r].empty() && cur.rows[r].back() == maxletter) host = r;
        // rows are sorted, so the maximal letter of a row sits at its back;
        // the first row containing the global maximum has back() == maxletter
        if (host < 0) throw std::logic_error("psi_rc: deletion host not found");
        ranks[i - 1] = host;  // rank r when the letter sits in row r+1
        cur.rows[host].pop_back();
    }
    if (trace) tuples[0] = cur;

    RiggedConfiguration rc(n, Partition());
    if (trace) {
        trace->mu = mu;
        trace->n = n;
        trace->steps.clear();
        trace->steps.push_back({0, tuples[0], 0, {}, 0, rc});
    }

    Partition trunc;  // mu - [N - i], the content handled so far
    for (int i = 1; i <= total; ++i) {
        int r = ranks[i - 1];
        trunc = mu.removed_boxes(total - i);
        std::vector<int> chosen;
        if (r > 0) {
            // select singular strings, level r downward, lengths non-increasing;
            // singularity is read off the state before the step, over the
            // previous truncated content
            RiggedConfiguration old = rc;
            std::vector<std::pair<int, int>> picks;  // (level, index into old level) or -1
            int cap = INT_MAX;
            for (int k = r; k >= 1; --k) {
                int best = -1, best_len = -1;
                const auto& lvl = old.levels[k - 1];
                for (int idx = 0; idx < static_cast<int>(lvl.size()); ++idx) {
                    const auto& s = lvl[idx];
                    if (s.length > cap || s.length <= best_len) continue;
                    if (s.label == vacancy(old, k, s.length)) {
                        best = idx;
                        best_len = s.length;
                    }
                }
                picks.emplace_back(k, best);
                int len = best < 0 ? 0 : best_len;
                chosen.push_back(len);
                cap = len;
            }
            std::reverse(chosen.begin(), chosen.end());  // i_1 .. i_r
            // lengthen the picks
            rc.mu = trunc;
            for (auto [k, idx] : picks) {
                auto& lvl = rc.levels[k - 1];
                if (idx < 0)
                    lvl.push_back({1, 0});
                else
                    lvl[idx].length += 1;
            }
            // relabel the lengthened strings as singular for the new vacancies
            for (auto [k, idx] : picks) {
                auto& lvl = rc.levels[k - 1];
                int pos = idx < 0 ? static_cast<int>(lvl.size()) - 1 : idx;
                lvl[pos].label = vacancy(rc, k, lvl[pos].length);
            }
            rc.canonicalize();
            int i0 = trunc.part(trunc.length()) - 1;
            if (!chosen.empty() && i0 > chosen.front())
                throw std::logic_error("psi_rc: i_0 <= i_1 violated");
            for (std::size_t j = 0; j + 1 < chosen.size(); ++j)
                if (chosen[j] > chosen[j + 1])
                    throw std::logic_error("psi_rc: selected lengths not monotone");
            if (trace) trace->steps.push_back({i, tuples[i], r, chosen, i0, rc});
        } else {
            rc.mu = trunc;
            if (trace)
                trace->steps.push_back({i, tuples[i], 0, {}, trunc.part(trunc.length()) - 1, rc});
        }
        if (monitor_s >= 1 && monitor_s < n) {
            for (const auto& s : rc.levels[monitor_s - 1]) {
                int p = vacancy(rc, monitor_s, s.length);
                if (!(0 <= s.label + s.length && s.label + s.length <= p + s.length))
                    throw std::logic_error("psi_rc: level-s string bound violated");
            }
        }
    }
    rc.canonicalize();
    return rc;
}

namespace detail {

// visit every tuple with the given row lengths and content mu; stops early
// when the visitor returns true
template <typename Fn>
inline bool visit_w_with_lengths(const Partition& mu, const std::vector<int>& lengths, Fn&& fn) {
    int n = static_cast<int>(lengths.size());
    RowTuple cur;
    cur.rows.resize(n);
    std::vector<int> room = lengths;
    auto rec = [&](auto&& self, int letter) -> bool {
        if (letter > mu.length()) return fn(cur);
        int m = mu.part(letter);
        auto dist = [&](auto&& self2, int row, int left) -> bool {
            if (row == n) return left == 0 ? self(self, letter + 1) : false;
            int hi = std::min(left, room[row]);
            for (int c = 0; c <= hi; ++c) {
                for (int j = 0; j < c; ++j) cur.rows[row].push_back(letter);
                room[row] -= c;
                bool stop = self2(self2, row + 1, left - c);
                room[row] += c;
                for (int j = 0; j < c; ++j) cur.rows[row].pop_back();
                if (stop) return true;
            }
            return false;
        };
        return dist(dist, 0, m);
    };
    return rec(rec, 1);
}

}  // namespace detail

// Desk-scale inverse: the row lengths of any preimage are fixed by the
// weight, so only tuples with those lengths are scanned.
inline std::optional<RowTuple> psi_rc_inverse(const RiggedConfiguration& rc, const Partition& mu,
                                              int n) {
    if (rc.n != n || !(rc.mu == mu)) {
        RiggedConfiguration adjusted = rc;
        adjusted.mu = mu;
        if (adjusted.n != n) return std::nullopt;
        return psi_rc_inverse(adjusted, mu, n);
    }
    Weight wt = rc_weight(rc);
    std::vector<int> lengths = wt.coords;
    for (int l : lengths)
        if (l < 0) return std::nullopt;
    RiggedConfiguration key = rc;
    key.canonicalize();
    std::optional<RowTuple> found;
    detail::visit_w_with_lengths(mu, lengths, [&](const RowTuple& w) {
        if (psi_rc(w) == key) {
            found = w;
            return true;
        }
        return false;
    });
    return found;
}

namespace detail {

// partitions of total size with parts bounded by maxpart
inline std::vector<Partition> bounded_partitions(int total, int maxpart) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int mx) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, mx); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, total, std::min(total, maxpart));
    return out;
}

// configurations (no riggings) with the given level sizes
inline std::vector<RiggedConfiguration> configurations(const Partition& mu, int n,
                                                       const std::vector<int>& sizes) {
    std::vector<RiggedConfiguration> out;
    RiggedConfiguration cur(n, mu);
    auto rec = [&](auto&& self, int a) -> void {
        if (a >= n) {
            out.push_back(cur);
            return;
        }
        for (const auto& part : bounded_partitions(sizes[a - 1], sizes[a - 1])) {
            cur.levels[a - 1].clear();
            for (int p : part.parts()) cur.levels[a - 1].push_back({p, 0});
            self(self, a + 1);
        }
        cur.levels[a - 1].clear();
    };
    rec(rec, 1);
    return out;
}

// level sizes |nu^{(a)}| = sum_{j>a} b_j for the padded coordinate vector b
inline std::vector<int> level_sizes_from_coords(const std::vector<int>& b, int n) {
    std::vector<int> sizes(n - 1, 0);
    for (int a = 1; a < n; ++a)
        for (int j = a + 1; j <= static_cast<int>(b.size()); ++j) sizes[a - 1] += b[j - 1];
    return sizes;
}

inline std::vector<int> coords_of_partition(const Partition& la, int n) {
    std::vector<int> b(n, 0);
    for (int i = 1; i <= la.length(); ++i) b[i - 1] = la.part(i);
    return b;
}

inline std::vector<int> coords_of_double(const DoublePartition& dla, int n) {
    std::vector<int> b(n, 0);
    for (int i = 1; i <= dla.s(); ++i) b[i - 1] = dla.lp.part(i);
    for (int j = 1; j <= dla.t(); ++j) b[dla.s() + j - 1] = dla.lpp.part(j);
    return b;
}

// expand a configuration into rigged configurations, attaching to every
// string group of length i at level a all label multisets inside
// [lo(a,i), hi(a,i)]; returns nothing if some box is empty
template <typename LoFn, typename HiFn>
inline void attach_riggings(const RiggedConfiguration& conf, LoFn lo, HiFn hi,
                            std::vector<RiggedConfiguration>& out) {
    struct Group {
        int a, len, mult, lo, hi;
    };
    std::vector<Group> groups;
    for (int a = 1; a < conf.n; ++a) {
        const auto& lvl = conf.levels[a - 1];
        for (std::size_t j = 0; j < lvl.size();) {
            std::size_t k = j;
            while (k < lvl.size() && lvl[k].length == lvl[j].length) ++k;
            Group g{a, lvl[j].length, static_cast<int>(k - j), lo(a, lvl[j].length),
                    hi(a, lvl[j].length)};
            if (g.lo > g.hi) return;
            groups.push_back(g);
            j = k;
        }
    }
    RiggedConfiguration cur = conf;
    auto rec = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            RiggedConfiguration r = cur;
            r.canonicalize();
            out.push_back(std::move(r));
            return;
        }
        const Group& g = groups[gi];
        // weakly decreasing label tuples within [lo, hi]
        std::vector<int> labels(g.mult, g.hi);
        auto emit = [&](auto&& self2, int pos, int maxv) -> void {
            if (pos == g.mult) {
                auto& lvl = cur.levels[g.a - 1];
                int base = 0;
                while (lvl[base].length != g.len) ++base;
                for (int q = 0; q < g.mult; ++q) lvl[base + q].label = labels[q];
                self(self, gi + 1);
                return;
            }
            for (int v = maxv; v >= g.lo; --v) {
                labels[pos] = v;
                self2(self2, pos + 1, v);
            }
        };
        emit(emit, 0, g.hi);
    };
    rec(rec, 0);
}

}  // namespace detail

// RC(mu, lambda): valid highest-weight rigged configurations of weight
// lambda, enumerated by the box condition 0 <= x <= p_i^{(a)} over admissible
// configurations.
inline std::vector<RiggedConfiguration> enumerate_rc(const Partition& mu, const Partition& la,
                                                     int n) {
    if (mu.size() != la.size()) throw std::invalid_argument("enumerate_rc: size mismatch");
    if (la.length() > n) throw std::invalid_argument("enumerate_rc: rank too small");
    auto sizes = detail::level_sizes_from_coords(detail::coords_of_partition(la, n), n);
    std::vector<RiggedConfiguration> out;
    for (const auto& conf : detail::configurations(mu, n, sizes)) {
        bool ok = true;
        for (int a = 1; a < n && ok; ++a) {
            int imax = std::max({conf.level_partition(a - 1).part(1),
                                 conf.level_partition(a).part(1),
                                 conf.level_partition(a + 1).part(1)});
            for (int i = 1; i <= imax && ok; ++i) ok = vacancy(conf, a, i) >= 0;
        }
        if (!ok) continue;
        detail::attach_riggings(
            conf, [](int, int) { return 0; },
            [&](int a, int i) { return vacancy(conf, a, i); }, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// C(mu, lambda): admissible configurations of weight lambda (p >= 0
// everywhere), no riggings.
inline std::vector<RiggedConfiguration> enumerate_c(const Partition& mu, const Partition& la,
                                                    int n) {
    if (mu.size() != la.size()) throw std::invalid_argument("enumerate_c: size mismatch");
    if (la.length() > n) throw std::invalid_argument("enumerate_c: rank too small");
    auto sizes = detail::level_sizes_from_coords(detail::coords_of_partition(la, n), n);
    std::vector<RiggedConfiguration> out;
    for (const auto& conf : detail::configurations(mu, n, sizes)) {
        bool ok = true;
        for (int a = 1; a < n && ok; ++a) {
            int imax = std::max({conf.level_partition(a - 1).part(1),
                                 conf.level_partition(a).part(1),
                                 conf.level_partition(a + 1).part(1)});
            for (int i = 1; i <= imax && ok; ++i) ok = vacancy(conf, a, i) >= 0;
        }
        if (ok) out.push_back(conf);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// C(mu, Lambda): configurations of weight Lambda with p_i^{(a)} + [a==s] i
// >= 0 wherever a string is present.
inline std::vector<RiggedConfiguration> enumerate_c_double(const Partition& mu,
                                                           const DoublePartition& dla, int n) {
    if (mu.size() != dla.size()) throw std::invalid_argument("enumerate_c_double: size mismatch");
    if (dla.s() + dla.t() > n) throw std::invalid_argument("enumerate_c_double: rank too small");
    int s = dla.s();
    auto sizes = detail::level_sizes_from_coords(detail::coords_of_double(dla, n), n);
    std::vector<RiggedConfiguration> out;
    for (const auto& conf : detail::configurations(mu, n, sizes)) {
        bool ok = true;
        for (int a = 1; a < n && ok; ++a)
            for (const auto& str : conf.levels[a - 1]) {
                int shift = (a == s) ? str.length : 0;
                if (vacancy(conf, a, str.length) + shift < 0) {
                    ok = false;
                    break;
                }
            }
        if (ok) out.push_back(conf);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// QM(mu, Lambda): weight Lambda and 0 <= x <= p_i^{(a)} + [a==s] i on every
// string.
inline std::vector<RiggedConfiguration> enumerate_qm_double(const Partition& mu,
                                                            const DoublePartition& dla, int n) {
    if (mu.size() != dla.size())
        throw std::invalid_argument("enumerate_qm_double: size mismatch");
    if (dla.s() + dla.t() > n) throw std::invalid_argument("enumerate_qm_double: rank too small");
    int s = dla.s();
    auto sizes = detail::level_sizes_from_coords(detail::coords_of_double(dla, n), n);
    std::vector<RiggedConfiguration> out;
    for (const auto& conf : detail::configurations(mu, n, sizes))
        detail::attach_riggings(
            conf, [](int, int) { return 0; },
            [&](int a, int i) { return vacancy(conf, a, i) + (a == s ? i : 0); }, out);
    std::sort(out.begin(), out.end());
    return out;
}

// RC(mu, Lambda) = { psi(w_T) : T in Tab(Lambda, mu) }, characterised by
// 0 <= x + [a==s] i <= p_i^{(a)} + [a==s] i on every string. Both routes are
// computed and must coincide.
inline std::vector<RiggedConfiguration> rc_double(const Partition& mu, const DoublePartition& dla,
                                                  int n) {
    if (mu.size() != dla.size()) throw std::invalid_argument("rc_double: size mismatch");
    if (dla.s() + dla.t() > n) throw std::invalid_argument("rc_double: rank too small");
    int s = dla.s();
    auto sizes = detail::level_sizes_from_coords(detail::coords_of_double(dla, n), n);
    std::vector<RiggedConfiguration> out;
    for (const auto& conf : detail::configurations(mu, n, sizes))
        detail::attach_riggings(
            conf, [&](int a, int i) { return a == s ? -i : 0; },
            [&](int a, int i) { return vacancy(conf, a, i); }, out);
    std::sort(out.begin(), out.end());

    std::vector<RiggedConfiguration> image;
    for (const auto& w : p_set_double(mu, dla, n)) image.push_back(psi_rc(w, nullptr, s));
    std::sort(image.begin(), image.end());
    if (image != out) throw std::logic_error("rc_double: characterisation and psi image differ");
    return out;
}

}  // namespace xkostka
