#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

#include "xkostka/partition.hpp"

namespace xkostka {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in t with arbitrary-precision integer coefficients,
// stored sparsely by exponent. Zero coefficients are never kept.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return t_power(0); }
    static LaurentPoly t_power(int k, BigInt coeff = 1) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[k] = std::move(coeff);
        return p;
    }
    static LaurentPoly constant(BigInt c) { return t_power(0, std::move(c)); }

    const std::map<int, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? BigInt(0) : it->second;
    }
    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    LaurentPoly& operator+=(const LaurentPoly& q) {
        for (const auto& [k, c] : q.terms_) add_term(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& q) {
        for (const auto& [k, c] : q.terms_) add_term(k, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
        LaurentPoly r;
        for (const auto& [k1, c1] : p.terms_)
            for (const auto& [k2, c2] : q.terms_) r.add_term(k1 + k2, c1 * c2);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

    LaurentPoly scaled(const BigInt& c) const {
        LaurentPoly r;
        if (c != 0)
            for (const auto& [k, a] : terms_) r.terms_[k] = a * c;
        return r;
    }

    // t -> t^2
    LaurentPoly subst_square() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_[2 * k] = c;
        return r;
    }

    // t -> t^{-1}
    LaurentPoly subst_inverse() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_[-k] = c;
        return r;
    }

    // multiply by t^k
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [k, c] : terms_) s += c;
        return s;
    }

    bool operator==(const LaurentPoly&) const = default;

    // "1 + 2*t + t^2" with ascending exponents; "0" when empty.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            BigInt a = c;
            if (first) {
                if (a < 0) {
                    s += "-";
                    a = -a;
                }
            } else {
                s += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            bool unit = (a == 1) && k != 0;
            if (!unit) s += a.str();
            if (k != 0) {
                if (!unit) s += "*";
                s += "t";
                if (k != 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void add_term(int k, const BigInt& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (c != 0) terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<int, BigInt> terms_;
};

// Gaussian binomial [p+m over m]_t via the Pascal recurrence
// [n,k] = [n-1,k-1] + t^k [n-1,k].
inline LaurentPoly gauss_binomial(int p, int m) {
    if (p < 0 || m < 0) throw std::invalid_argument("gauss_binomial: negative input");
    int n = p + m;
    std::vector<LaurentPoly> row(static_cast<std::size_t>(m) + 1);
    row[0] = LaurentPoly::one();
    for (int i = 1; i <= n; ++i)
        for (int k = std::min(i, m); k >= 1; --k)
            row[k] = row[k].shifted(k) + row[k - 1];
    return row[m];
}

// n(mu) = sum_j (j-1) mu_j
inline long n_of(const Partition& mu) {
    long s = 0;
    for (int j = 1; j <= mu.length(); ++j) s += static_cast<long>(j - 1) * mu.part(j);
    return s;
}

}  // namespace xkostka
