#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "xkostka/partition.hpp"
#include "xkostka/word.hpp"

namespace xkostka {

// Semistandard filling of a skew shape. rows_[r-1] holds the filled cells of
// row r, left-justified after the inner offset.
class Tableau {
public:
    Tableau() = default;

    Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        validate();
    }

    static Tableau empty() { return Tableau(); }

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int cells() const { return shape_.cells(); }
    bool is_partition_shape() const { return shape_.is_partition_shape(); }

    // entry at absolute (row, col), both 1-based; shape must contain the cell
    int at(int r, int c) const { return rows_[r - 1][c - shape_.row_begin(r) - 1]; }

    auto operator<=>(const Tableau&) const = default;

    std::vector<int> weight() const {
        std::vector<int> wt;
        for (const auto& row : rows_)
            for (int a : row) {
                if (a > static_cast<int>(wt.size())) wt.resize(a, 0);
                wt[a - 1] += 1;
            }
        return wt;
    }

private:
    void validate() const {
        if (static_cast<int>(rows_.size()) != shape_.rows())
            throw std::invalid_argument("Tableau: row count mismatch");
        for (int r = 1; r <= shape_.rows(); ++r) {
            const auto& row = rows_[r - 1];
            if (static_cast<int>(row.size()) != shape_.row_cells(r))
                throw std::invalid_argument("Tableau: row length mismatch");
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j] <= 0) throw std::invalid_argument("Tableau: letters must be positive");
                if (j > 0 && row[j] < row[j - 1])
                    throw std::invalid_argument("Tableau: rows must weakly increase");
            }
        }
        for (int r = 2; r <= shape_.rows(); ++r)
            for (int c = shape_.row_begin(r) + 1; c <= shape_.row_end(r); ++c)
                if (shape_.has_cell(r - 1, c) && at(r - 1, c) >= at(r, c))
                    throw std::invalid_argument("Tableau: columns must strictly increase");
    }

    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

inline Tableau tableau_of_partition(const Partition& shape, std::vector<std::vector<int>> rows) {
    return Tableau(SkewShape(shape, Partition()), std::move(rows));
}

// Reading word: letters right to left in successive rows starting with the
// top row give the sequence a_1, a_2, ...; the written string is its
// reverse, i.e. bottom row first, each row left to right.
inline Word word_of(const Tableau& t) {
    Word w;
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
        w.letters.insert(w.letters.end(), it->begin(), it->end());
    return w;
}

// Column bumping: the letter enters column 1 and displaces the topmost entry
// >= it (ties displace); the displaced entry enters the next column by the
// same rule; a letter that displaces nothing is appended at the bottom of its
// column. Returns the new tableau and the row of the final added box.
inline std::pair<Tableau, int> column_insert(int a, const Tableau& t) {
    if (a <= 0) throw std::invalid_argument("column_insert: invalid letter");
    if (!t.is_partition_shape())
        throw std::invalid_argument("column_insert: tableau must have partition shape");
    std::vector<std::vector<int>> rows = t.rows();
    int carry = a;
    for (int c = 0;; ++c) {
        // entries of column c (0-based) live in rows 0..h-1
        int h = 0;
        while (h < static_cast<int>(rows.size()) && c < static_cast<int>(rows[h].size())) ++h;
        int hit = -1;
        for (int r = 0; r < h; ++r)
            if (rows[r][c] >= carry) {
                hit = r;
                break;
            }
        if (hit < 0) {
            if (h == static_cast<int>(rows.size())) rows.emplace_back();
            rows[h].push_back(carry);
            std::vector<int> parts;
            for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
            return {Tableau(SkewShape(Partition(parts), Partition()), std::move(rows)), h + 1};
        }
        std::swap(rows[hit][c], carry);
    }
}

// [w -> T]: letters are inserted starting from the rightmost written one.
inline Tableau insert_word(const Word& w, Tableau t = Tableau::empty()) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        t = column_insert(*it, t).first;
    return t;
}

inline Tableau rectify(const Tableau& t) { return insert_word(word_of(t)); }

inline long charge_tableau(const Tableau& t) { return charge(word_of(t)); }

inline bool knuth_equivalent(const Word& w1, const Word& w2) {
    return insert_word(w1) == insert_word(w2);
}

struct Cell {
    int row = 0, col = 0;  // 1-based
    auto operator<=>(const Cell&) const = default;
};

enum class SlideDir { Upper, Lower };

// Valid slide entry points in the strict sense: an upper position shares its
// lower edge with the shape, a lower position its upper edge, and the union
// stays a skew shape.
inline std::vector<Cell> jdt_positions(const SkewShape& sh, SlideDir dir) {
    std::vector<Cell> out;
    if (dir == SlideDir::Upper) {
        for (int r = 1; r <= sh.rows(); ++r) {
            int c = sh.inner.part(r);
            if (c >= 1 && c > sh.inner.part(r + 1) && sh.has_cell(r + 1, c))
                out.push_back({r, c});
        }
    } else {
        for (int r = 2; r <= sh.rows() + 1; ++r) {
            int c = sh.outer.part(r) + 1;
            if (sh.has_cell(r - 1, c)) out.push_back({r, c});
        }
    }
    return out;
}

namespace detail {

// Dense grid holding the union shape during a slide; 0 marks the pawn.
struct SlideGrid {
    std::vector<int> outer, inner;       // per-row bounds of the union, 1-based cols
    std::vector<std::vector<int>> grid;  // grid[r-1][c-1]

    bool inside(int r, int c) const {
        return r >= 1 && r <= static_cast<int>(outer.size()) && c > inner[r - 1] &&
               c <= outer[r - 1];
    }
    int get(int r, int c) const { return grid[r - 1][c - 1]; }
    void set(int r, int c, int v) { grid[r - 1][c - 1] = v; }
};

inline SlideGrid make_grid(const Tableau& t, Cell extra) {
    SlideGrid g;
    int nrows = std::max(t.shape().rows(), extra.row);
    int ncols = std::max(t.shape().outer.part(1), extra.col);
    g.outer.resize(nrows);
    g.inner.resize(nrows);
    g.grid.assign(nrows, std::vector<int>(ncols, -1));
    for (int r = 1; r <= nrows; ++r) {
        g.outer[r - 1] = t.shape().outer.part(r);
        g.inner[r - 1] = t.shape().inner.part(r);
        for (int c = g.inner[r - 1] + 1; c <= g.outer[r - 1]; ++c)
            g.grid[r - 1][c - 1] = t.at(r, c);
    }
    // adjoin the pawn cell
    if (extra.col == g.inner[extra.row - 1]) {
        g.inner[extra.row - 1] -= 1;
    } else if (extra.col == g.outer[extra.row - 1] + 1) {
        g.outer[extra.row - 1] += 1;
    } else {
        throw std::invalid_argument("jdt_slide: cell does not extend the shape");
    }
    g.set(extra.row, extra.col, 0);
    return g;
}

// Runs the exchange loop; returns the final pawn cell.
inline Cell run_slide(SlideGrid& g, Cell pawn, SlideDir dir) {
    for (;;) {
        int r = pawn.row, c = pawn.col;
        if (dir == SlideDir::Upper) {
            bool hasR = g.inside(r, c + 1), hasD = g.inside(r + 1, c);
            if (!hasR && !hasD) break;
            bool moveD = hasD && (!hasR || g.get(r + 1, c) <= g.get(r, c + 1));
            Cell src = moveD ? Cell{r + 1, c} : Cell{r, c + 1};
            g.set(r, c, g.get(src.row, src.col));
            g.set(src.row, src.col, 0);
            pawn = src;
        } else {
            bool hasL = g.inside(r, c - 1), hasU = g.inside(r - 1, c);
            if (!hasL && !hasU) break;
            bool moveU = hasU && (!hasL || g.get(r - 1, c) >= g.get(r, c - 1));
            Cell src = moveU ? Cell{r - 1, c} : Cell{r, c - 1};
            g.set(r, c, g.get(src.row, src.col));
            g.set(src.row, src.col, 0);
            pawn = src;
        }
    }
    return pawn;
}

inline Tableau grid_to_tableau(const SlideGrid& g, Cell removed, SlideDir dir) {
    std::vector<int> outer = g.outer, inner = g.inner;
    if (dir == SlideDir::Upper) {
        if (removed.col != outer[removed.row - 1])
            throw std::logic_error("jdt_slide: upper pawn not at a row end");
        outer[removed.row - 1] -= 1;
    } else {
        if (removed.col != inner[removed.row - 1] + 1)
            throw std::logic_error("jdt_slide: lower pawn not at a row start");
        inner[removed.row - 1] += 1;
    }
    std::vector<std::vector<int>> rows(outer.size());
    for (std::size_t r = 0; r < outer.size(); ++r)
        for (int c = inner[r] + 1; c <= outer[r]; ++c) rows[r].push_back(g.grid[r][c - 1]);
    while (!rows.empty() && outer.back() == 0) {
        rows.pop_back();
        outer.pop_back();
        inner.pop_back();
    }
    return Tableau(SkewShape(Partition(outer), Partition(inner)), std::move(rows));
}

// Slide without the strict edge-sharing precondition; used by the
// rectification oracle, which also needs entry cells that only touch the
// shape sideways (and isolated corner removals that merely renormalise the
// inner shape).
inline std::pair<Tableau, Cell> slide_any(const Tableau& t, Cell cell, SlideDir dir) {
    auto g = make_grid(t, cell);
    Cell fin = run_slide(g, cell, dir);
    return {grid_to_tableau(g, fin, dir), fin};
}

}  // namespace detail

// Slide with the final pawn cell reported.
inline std::pair<Tableau, Cell> jdt_slide_traced(const Tableau& t, Cell cell, SlideDir dir) {
    auto pos = jdt_positions(t.shape(), dir);
    if (std::find(pos.begin(), pos.end(), cell) == pos.end())
        throw std::invalid_argument("jdt_slide: not a valid jeu de taquin position");
    return detail::slide_any(t, cell, dir);
}

inline Tableau jdt_slide(const Tableau& t, Cell cell, SlideDir dir) {
    return jdt_slide_traced(t, cell, dir).first;
}

// RS correspondence: w -> (Q, P) with P the column-insertion tableau and Q
// the standard recording tableau.
inline std::pair<Tableau, Tableau> rs(const Word& w) {
    Tableau p = Tableau::empty();
    std::vector<std::vector<int>> qrows;
    int step = 0;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        auto [np, r] = column_insert(*it, p);
        ++step;
        if (r > static_cast<int>(qrows.size())) qrows.emplace_back();
        qrows[r - 1].push_back(step);
        p = std::move(np);
    }
    return {Tableau(SkewShape(p.shape().outer, Partition()), std::move(qrows)), p};
}

// Exact inverse of rs. Q must be standard with the shape of P.
inline Word rs_inverse(const Tableau& q, const Tableau& p) {
    if (q.shape() != p.shape() || !p.is_partition_shape())
        throw std::invalid_argument("rs_inverse: shape mismatch");
    int m = p.cells();
    std::vector<std::vector<int>> rows = p.rows();
    std::vector<int> written;  // letters a_m, ..., a_1, which is the written order
    for (int step = m; step >= 1; --step) {
        int br = -1, bc = -1;
        for (int r = 0; r < static_cast<int>(q.rows().size()); ++r)
            for (int c = 0; c < static_cast<int>(q.rows()[r].size()); ++c)
                if (q.rows()[r][c] == step) {
                    br = r;
                    bc = c;
                }
        if (br < 0) throw std::invalid_argument("rs_inverse: Q is not standard");
        if (bc != static_cast<int>(rows[br].size()) - 1)
            throw std::invalid_argument("rs_inverse: Q does not record an insertion order");
        int carry = rows[br][bc];
        rows[br].pop_back();
        if (rows[br].empty()) rows.pop_back();
        for (int c = bc - 1; c >= 0; --c) {
            // bottommost entry of column c that is <= carry
            int hit = -1;
            for (int r = 0; r < static_cast<int>(rows.size()) && c < static_cast<int>(rows[r].size()); ++r)
                if (rows[r][c] <= carry) hit = r;
            if (hit < 0) throw std::invalid_argument("rs_inverse: malformed pair");
            std::swap(rows[hit][c], carry);
        }
        written.push_back(carry);
    }
    return Word(std::move(written));
}

// sigma(T): the k-th inserted letter of w(T) lands in row b_k; the written
// word is b_N ... b_1.
inline Word row_sequence(const Tableau& t) {
    Word w = word_of(t);
    Tableau p = Tableau::empty();
    std::vector<int> written(w.length());
    int k = 0;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        auto [np, r] = column_insert(*it, p);
        p = std::move(np);
        written[w.length() - 1 - k] = r;
        ++k;
    }
    return Word(std::move(written));
}

// Unique filling of the shape with the given word; written word = bottom row
// first. Throws if the filling is not a tableau.
inline Tableau tableau_from_word(const SkewShape& sh, const Word& w) {
    if (w.length() != sh.cells()) throw std::invalid_argument("tableau_from_word: size mismatch");
    std::vector<std::vector<int>> rows(sh.rows());
    int pos = 0;
    for (int r = sh.rows(); r >= 1; --r) {
        int len = sh.row_cells(r);
        rows[r - 1].assign(w.letters.begin() + pos, w.letters.begin() + pos + len);
        pos += len;
    }
    return Tableau(sh, std::move(rows));
}

// T -> (D, S): D is the unique tableau of the same shape with word sigma(T),
// S the rectification. Charge is preserved: c(T) = c(S).
inline std::pair<Tableau, Tableau> gamma(const Tableau& t) {
    Tableau d = tableau_from_word(t.shape(), row_sequence(t));
    return {std::move(d), rectify(t)};
}

// All tableaux of the given shape and weight, filled cell by cell in row-major
// order; the output is sorted by written word.
inline std::vector<Tableau> enumerate_tableaux(const SkewShape& sh, const std::vector<int>& wt,
                                               bool lattice_only = false) {
    int total = 0;
    for (int x : wt) {
        if (x < 0) throw std::invalid_argument("enumerate_tableaux: bad weight");
        total += x;
    }
    if (total != sh.cells()) throw std::invalid_argument("enumerate_tableaux: size mismatch");
    std::vector<std::vector<int>> rows(sh.rows());
    for (int r = 1; r <= sh.rows(); ++r) rows[r - 1].assign(sh.row_cells(r), 0);
    std::vector<int> rem = wt;
    std::vector<Tableau> out;
    auto fill = [&](auto&& self, int r, int j) -> void {
        if (r > sh.rows()) {
            Tableau t(sh, rows);
            if (!lattice_only || is_lattice(word_of(t))) out.push_back(std::move(t));
            return;
        }
        if (j >= sh.row_cells(r)) {
            self(self, r + 1, 0);
            return;
        }
        int c = sh.row_begin(r) + 1 + j;
        int lo = (j > 0) ? rows[r - 1][j - 1] : 1;
        if (sh.has_cell(r - 1, c)) lo = std::max(lo, rows[r - 2][c - sh.row_begin(r - 1) - 1] + 1);
        for (int a = lo; a <= static_cast<int>(rem.size()); ++a) {
            if (rem[a - 1] == 0) continue;
            rem[a - 1] -= 1;
            rows[r - 1][j] = a;
            self(self, r, j + 1);
            rows[r - 1][j] = 0;
            rem[a - 1] += 1;
        }
    };
    fill(fill, 1, 0);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return word_of(a).letters < word_of(b).letters;
    });
    return out;
}

// Tableau pair (plus of shape lambda', minus of shape lambda''); its word is
// w(minus) * w(plus).
struct TableauPair {
    Tableau plus, minus;
    auto operator<=>(const TableauPair&) const = default;
};

inline Word pair_word(const TableauPair& t) { return concat(word_of(t.minus), word_of(t.plus)); }

// Skew shape with components congruent to lp (shifted right by a) above lpp.
inline SkewShape xi_shape(const DoublePartition& dp, int a) {
    if (a < dp.lpp.part(1)) throw std::invalid_argument("xi_shape: a too small");
    std::vector<int> outer, inner;
    for (int i = 1; i <= dp.s(); ++i) {
        outer.push_back(dp.lp.part(i) + a);
        inner.push_back(a);
    }
    for (int i = 1; i <= dp.t(); ++i) outer.push_back(dp.lpp.part(i));
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

// Identify the pair with a skew tableau of shape xi_{(lp,lpp),a}.
inline Tableau pair_as_skew(const TableauPair& t, int a) {
    DoublePartition dp{t.plus.shape().outer, t.minus.shape().outer};
    std::vector<std::vector<int>> rows = t.plus.rows();
    rows.insert(rows.end(), t.minus.rows().begin(), t.minus.rows().end());
    return Tableau(xi_shape(dp, a), std::move(rows));
}

inline std::vector<TableauPair> enumerate_pairs(const DoublePartition& dp,
                                                const std::vector<int>& wt,
                                                bool lattice_only = false) {
    int total = 0;
    for (int x : wt) total += x;
    if (total != dp.size()) throw std::invalid_argument("enumerate_pairs: size mismatch");
    std::vector<TableauPair> out;
    SkewShape shp(dp.lp, Partition());
    SkewShape shm(dp.lpp, Partition());
    // split the weight between the two components
    std::vector<int> wplus(wt.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, int used) -> void {
        if (k == wt.size()) {
            if (used != dp.lp.size()) return;
            std::vector<int> wminus(wt.size());
            for (std::size_t i = 0; i < wt.size(); ++i) wminus[i] = wt[i] - wplus[i];
            for (const auto& tp : enumerate_tableaux(shp, wplus))
                for (const auto& tm : enumerate_tableaux(shm, wminus)) {
                    TableauPair pr{tp, tm};
                    if (!lattice_only || is_lattice(pair_word(pr))) out.push_back(std::move(pr));
                }
            return;
        }
        for (int c = 0; c <= wt[k] && used + c <= dp.lp.size(); ++c) {
            wplus[k] = c;
            self(self, k + 1, used + c);
        }
        wplus[k] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), [](const TableauPair& a, const TableauPair& b) {
        return pair_word(a).letters < pair_word(b).letters;
    });
    return out;
}

// |Tab^0((lp,lpp), eta)| = Littlewood-Richardson coefficient c^eta_{lp,lpp}.
inline long lr_coefficient(const Partition& lp, const Partition& lpp, const Partition& eta) {
    if (lp.size() + lpp.size() != eta.size())
        throw std::invalid_argument("lr_coefficient: size mismatch");
    std::vector<int> wt(eta.length());
    for (int i = 1; i <= eta.length(); ++i) wt[i - 1] = eta.part(i);
    return static_cast<long>(enumerate_pairs({lp, lpp}, wt, true).size());
}

}  // namespace xkostka
