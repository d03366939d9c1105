#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "xkostka/partition.hpp"

namespace xkostka {

// A word is a sequence of positive letters stored in written order: letters[0]
// is the leftmost written character.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    auto operator<=>(const Word&) const = default;

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(letters[i]);
        }
        return s;
    }
};

// composition counting occurrences of each letter; index k-1 holds #k
inline std::vector<int> weight_of(const Word& w) {
    std::vector<int> wt;
    for (int a : w.letters) {
        if (a <= 0) throw std::invalid_argument("weight_of: letters must be positive");
        if (a > static_cast<int>(wt.size())) wt.resize(a, 0);
        wt[a - 1] += 1;
    }
    return wt;
}

inline bool weight_is_partition(const std::vector<int>& wt) {
    for (std::size_t i = 0; i + 1 < wt.size(); ++i)
        if (wt[i] < wt[i + 1]) return false;
    return wt.empty() || wt.back() > 0;
}

inline Word concat(const Word& w1, const Word& w2) {
    Word r = w1;
    r.letters.insert(r.letters.end(), w2.letters.begin(), w2.letters.end());
    return r;
}

// weakly increasing in written order
inline bool is_row(const Word& w) {
    return std::is_sorted(w.letters.begin(), w.letters.end());
}

// First written half strictly dominates the second half columnwise: for the
// written word b_m..b_1 a_m..a_1 both halves are rows and a_i < b_i.
inline bool is_double_row(const Word& w) {
    if (w.length() % 2 != 0) throw std::invalid_argument("is_double_row: odd length");
    int m = w.length() / 2;
    Word top(std::vector<int>(w.letters.begin() + m, w.letters.end()));
    Word bot(std::vector<int>(w.letters.begin(), w.letters.begin() + m));
    if (!is_row(top) || !is_row(bot)) return false;
    for (int j = 0; j < m; ++j)
        if (top.letters[j] >= bot.letters[j]) return false;
    return true;
}

// Lattice permutation: every suffix of the written word has #i >= #(i+1).
inline bool is_lattice(const Word& w) {
    std::vector<int> cnt;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        int a = *it;
        if (a > static_cast<int>(cnt.size())) cnt.resize(a, 0);
        cnt[a - 1] += 1;
        if (a >= 2 && cnt[a - 1] > cnt[a - 2]) return false;
    }
    return true;
}

// All words reachable by one elementary Knuth transformation, applied to the
// written string: xzy <-> zxy for x <= y < z, and yzx <-> yxz for x < y <= z.
inline std::set<Word> knuth_moves(const Word& w) {
    std::set<Word> out;
    const auto& l = w.letters;
    for (std::size_t j = 0; j + 2 < l.size(); ++j) {
        int a = l[j], b = l[j + 1], c = l[j + 2];
        auto emit_swap01 = [&] {
            Word v = w;
            std::swap(v.letters[j], v.letters[j + 1]);
            out.insert(v);
        };
        auto emit_swap12 = [&] {
            Word v = w;
            std::swap(v.letters[j + 1], v.letters[j + 2]);
            out.insert(v);
        };
        // xzy -> zxy and zxy -> xzy with x <= y < z
        if (a <= c && c < b) emit_swap01();
        if (b <= c && c < a) emit_swap01();
        // yzx -> yxz and yxz -> yzx with x < y <= z
        if (c < a && a <= b) emit_swap12();
        if (b < a && a <= c) emit_swap12();
    }
    return out;
}

// Lascoux-Schutzenberger charge of a word of partition weight.
//
// A standard word gets the sum of its indices: index(1) = 0 and index(r+1) =
// index(r) + 1 exactly when r+1 is written to the right of r. A general word
// is handled by repeatedly extracting a standard subword: scan the written
// word right to left for the first 1, then continue leftward (wrapping
// cyclically to the right end) for the first 2, and so on up to the number
// of nonzero parts of the remaining weight; the extracted letters contribute
// their standard charge and are removed. A single row 1 2 ... k gets charge
// k(k-1)/2 and a single column k ... 2 1 gets charge 0.
inline long charge(const Word& w) {
    auto wt = weight_of(w);
    if (!weight_is_partition(wt))
        throw std::invalid_argument("charge: weight is not a partition");
    std::vector<int> letters = w.letters;
    std::vector<char> alive(letters.size(), 1);
    long total = 0;
    int remaining = static_cast<int>(letters.size());
    int nparts = static_cast<int>(wt.size());
    while (remaining > 0) {
        int n = static_cast<int>(letters.size());
        // find rightmost live 1
        int pos = -1;
        for (int j = n - 1; j >= 0; --j)
            if (alive[j] && letters[j] == 1) {
                pos = j;
                break;
            }
        alive[pos] = 0;
        int index = 0;
        for (int r = 2; r <= nparts; ++r) {
            int q = pos;
            for (;;) {
                q = (q == 0) ? n - 1 : q - 1;
                if (alive[q] && letters[q] == r) break;
            }
            if (q > pos) index += 1;  // r written to the right of r-1
            total += index;
            alive[q] = 0;
            pos = q;
        }
        remaining -= nparts;
        for (int r = 0; r < nparts; ++r) wt[r] -= 1;
        while (nparts > 0 && wt[nparts - 1] == 0) --nparts;
    }
    return total;
}

}  // namespace xkostka
