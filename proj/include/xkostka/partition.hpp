#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace xkostka {

// Integer partition: weakly decreasing list of positive parts.
// Zero parts in the input are stripped; interior zeros are rejected by the
// weakly-decreasing check.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    // 1-based part access; 0 beyond the last part.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    // number of parts equal to i
    int multiplicity(int i) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
    }

    // Q_i = sum_j min(i, lambda_j)
    int column_sum(int i) const {
        int q = 0;
        for (int p : parts_) q += std::min(i, p);
        return q;
    }

    Partition conjugate() const {
        std::vector<int> c;
        if (!parts_.empty()) {
            c.resize(parts_[0]);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) c[j] += 1;
        }
        return Partition(std::move(c));
    }

    bool contains(const Partition& rho) const {
        if (rho.length() > length()) return false;
        for (int i = 1; i <= rho.length(); ++i)
            if (rho.part(i) > part(i)) return false;
        return true;
    }

    // Remove m boxes from the diagram, bottom row first, right to left.
    Partition removed_boxes(int m) const {
        if (m < 0 || m > size()) throw std::invalid_argument("removed_boxes: bad count");
        std::vector<int> p = parts_;
        while (m > 0) {
            int take = std::min(m, p.back());
            p.back() -= take;
            m -= take;
            if (p.back() == 0) p.pop_back();
        }
        return Partition(std::move(p));
    }

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

// Skew shape outer/inner with inner contained in outer.
// Cells of row r (1-based) occupy columns inner.part(r)+1 .. outer.part(r).
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!outer.contains(inner))
            throw std::invalid_argument("SkewShape: inner not contained in outer");
    }

    int rows() const { return outer.length(); }
    int cells() const { return outer.size() - inner.size(); }
    int row_begin(int r) const { return inner.part(r); }  // columns start after this
    int row_end(int r) const { return outer.part(r); }
    int row_cells(int r) const { return row_end(r) - row_begin(r); }
    bool has_cell(int r, int c) const {
        return r >= 1 && r <= rows() && c > row_begin(r) && c <= row_end(r);
    }
    bool is_partition_shape() const { return inner.empty(); }

    auto operator<=>(const SkewShape&) const = default;
};

// Pair of partitions (lp, lpp) with |lp| + |lpp| = ambient size.
struct DoublePartition {
    Partition lp;   // first component, s parts
    Partition lpp;  // second component, t parts

    int size() const { return lp.size() + lpp.size(); }
    int s() const { return lp.length(); }
    int t() const { return lpp.length(); }

    auto operator<=>(const DoublePartition&) const = default;

    std::string to_string() const { return "(" + lp.to_string() + "," + lpp.to_string() + ")"; }
};

inline std::vector<DoublePartition> double_partitions_of(int n) {
    std::vector<DoublePartition> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& lp : partitions_of(k))
            for (const auto& lpp : partitions_of(n - k)) out.push_back({lp, lpp});
    return out;
}

}  // namespace xkostka
