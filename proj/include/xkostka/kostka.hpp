#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "xkostka/crystal.hpp"
#include "xkostka/qpoly.hpp"
#include "xkostka/rigged.hpp"
#include "xkostka/tableau.hpp"

namespace xkostka {

// K_{lambda,mu}(t) as the charge generating function over Tab(lambda, mu).
inline LaurentPoly kostka_charge(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size()) throw std::invalid_argument("kostka_charge: size mismatch");
    std::vector<int> wt(mu.length());
    for (int i = 1; i <= mu.length(); ++i) wt[i - 1] = mu.part(i);
    LaurentPoly k;
    for (const auto& t : enumerate_tableaux(SkewShape(la, Partition()), wt))
        k += LaurentPoly::t_power(static_cast<int>(charge(word_of(t))));
    return k;
}

// K_{lambda,mu}(t) as the energy generating function over the maximal
// elements of B(mu), which are located by the crystal operators.
inline LaurentPoly kostka_1d(const Partition& la, const Partition& mu, int n) {
    LaurentPoly k;
    for (const auto& w : highest_weight_set(mu, la, n))
        k += LaurentPoly::t_power(static_cast<int>(charge_of(w)));
    return k;
}

inline LaurentPoly oned_sum(const Partition& mu, const Partition& la, int n) {
    return kostka_1d(la, mu, n);
}

// M(mu, lambda; t): configuration sum with Gaussian binomial weights.
inline LaurentPoly fermionic(const Partition& mu, const Partition& la, int n) {
    LaurentPoly m;
    for (const auto& conf : enumerate_c(mu, la, n)) {
        LaurentPoly term = LaurentPoly::t_power(static_cast<int>(cc_config(conf)));
        for (int a = 1; a < n; ++a) {
            const auto& lvl = conf.levels[a - 1];
            for (std::size_t j = 0; j < lvl.size();) {
                std::size_t k = j;
                while (k < lvl.size() && lvl[k].length == lvl[j].length) ++k;
                int mult = static_cast<int>(k - j);
                term *= gauss_binomial(vacancy(conf, a, lvl[j].length), mult);
                j = k;
            }
        }
        m += term;
    }
    return m;
}

// M(mu, lambda; t) as the cocharge generating function over RC(mu, lambda).
inline LaurentPoly fermionic_rigged(const Partition& mu, const Partition& la, int n) {
    LaurentPoly m;
    for (const auto& rc : enumerate_rc(mu, la, n))
        m += LaurentPoly::t_power(static_cast<int>(cocharge(rc)));
    return m;
}

// K_{Lambda,(-,mu'')}(t) = t^{|lambda'|} sum over Tab(Lambda, mu'') of
// t^{2 c(T)}.
inline LaurentPoly double_kostka(const DoublePartition& dla, const Partition& mupp) {
    if (dla.size() != mupp.size()) throw std::invalid_argument("double_kostka: size mismatch");
    std::vector<int> wt(mupp.length());
    for (int i = 1; i <= mupp.length(); ++i) wt[i - 1] = mupp.part(i);
    LaurentPoly k;
    for (const auto& pr : enumerate_pairs(dla, wt))
        k += LaurentPoly::t_power(2 * static_cast<int>(charge(pair_word(pr))));
    return k.shifted(dla.lp.size());
}

// Independent route: t^{|lambda'|} sum_eta c^eta_{lambda',lambda''}
// K_{eta,mu''}(t^2).
inline LaurentPoly double_kostka_lr(const DoublePartition& dla, const Partition& mupp) {
    if (dla.size() != mupp.size()) throw std::invalid_argument("double_kostka_lr: size mismatch");
    LaurentPoly k;
    for (const auto& eta : partitions_of(mupp.size())) {
        long c = lr_coefficient(dla.lp, dla.lpp, eta);
        if (c == 0) continue;
        k += kostka_charge(eta, mupp).subst_square().scaled(BigInt(c));
    }
    return k.shifted(dla.lp.size());
}

// Crystal route: t^{|lambda'|} sum over P(B(mu''), Lambda) of t^{2 E(b)}.
inline LaurentPoly double_kostka_energy(const DoublePartition& dla, const Partition& mupp,
                                        int n) {
    LaurentPoly k;
    for (const auto& w : p_set_double(mupp, dla, n))
        k += LaurentPoly::t_power(2 * static_cast<int>(charge_of(w)));
    return k.shifted(dla.lp.size());
}

enum class DoubleFermRoute {
    Rigged,           // cocharge sum over RC(mu, Lambda)
    ConfigBinomial,   // configuration sum with shifted binomials
    MultiplicitySum,  // direct sum over multiplicity arrays
};

namespace detail {

inline LaurentPoly fermionic_double_conf_sum(const DoublePartition& dla, int n,
                                             const std::vector<RiggedConfiguration>& confs) {
    int s = dla.s();
    LaurentPoly m;
    for (const auto& conf : confs) {
        LaurentPoly term = LaurentPoly::t_power(static_cast<int>(cc_config_double(conf, s)));
        for (int a = 1; a < n; ++a) {
            const auto& lvl = conf.levels[a - 1];
            for (std::size_t j = 0; j < lvl.size();) {
                std::size_t k = j;
                while (k < lvl.size() && lvl[k].length == lvl[j].length) ++k;
                int mult = static_cast<int>(k - j);
                int len = lvl[j].length;
                term *= gauss_binomial(vacancy(conf, a, len) + (a == s ? len : 0), mult);
                j = k;
            }
        }
        m += term;
    }
    return m;
}

// configurations of weight Lambda with p + [a==s] i >= 0 for every (a, i),
// string or not
inline std::vector<RiggedConfiguration> multiplicity_arrays(const Partition& mu,
                                                            const DoublePartition& dla, int n) {
    int s = dla.s();
    auto sizes = level_sizes_from_coords(coords_of_double(dla, n), n);
    std::vector<RiggedConfiguration> out;
    for (const auto& conf : configurations(mu, n, sizes)) {
        bool ok = true;
        for (int a = 1; a < n && ok; ++a) {
            int imax = std::max({conf.level_partition(a - 1).part(1),
                                 conf.level_partition(a).part(1),
                                 conf.level_partition(a + 1).part(1)});
            for (int i = 1; i <= imax && ok; ++i)
                ok = vacancy(conf, a, i) + (a == s ? i : 0) >= 0;
        }
        if (ok) out.push_back(conf);
    }
    return out;
}

}  // namespace detail

// M(mu, Lambda; t), computed by the requested route; the three routes agree.
inline LaurentPoly fermionic_double(const Partition& mu, const DoublePartition& dla, int n,
                                    DoubleFermRoute route = DoubleFermRoute::ConfigBinomial) {
    if (mu.size() != dla.size()) throw std::invalid_argument("fermionic_double: size mismatch");
    if (dla.s() + dla.t() > n) throw std::invalid_argument("fermionic_double: rank too small");
    switch (route) {
        case DoubleFermRoute::Rigged: {
            LaurentPoly m;
            for (const auto& rc : rc_double(mu, dla, n))
                m += LaurentPoly::t_power(static_cast<int>(cocharge(rc)));
            return m;
        }
        case DoubleFermRoute::ConfigBinomial:
            return detail::fermionic_double_conf_sum(dla, n, enumerate_c_double(mu, dla, n));
        case DoubleFermRoute::MultiplicitySum:
            return detail::fermionic_double_conf_sum(dla, n,
                                                     detail::multiplicity_arrays(mu, dla, n));
    }
    throw std::logic_error("fermionic_double: unknown route");
}

// The binomial printed with a bare Kronecker delta instead of the delta times
// the string length. Kept for comparison; it does not satisfy the double
// identities whenever level s carries strings of length > 1.
inline LaurentPoly fermionic_double_literal(const Partition& mu, const DoublePartition& dla,
                                            int n) {
    int s = dla.s();
    LaurentPoly m;
    for (const auto& conf : enumerate_c_double(mu, dla, n)) {
        LaurentPoly term = LaurentPoly::t_power(static_cast<int>(cc_config_double(conf, s)));
        for (int a = 1; a < n; ++a) {
            const auto& lvl = conf.levels[a - 1];
            for (std::size_t j = 0; j < lvl.size();) {
                std::size_t k = j;
                while (k < lvl.size() && lvl[k].length == lvl[j].length) ++k;
                int mult = static_cast<int>(k - j);
                int p = vacancy(conf, a, lvl[j].length) + (a == s ? 1 : 0);
                if (p < 0) {
                    term = LaurentPoly::zero();
                    break;
                }
                term *= gauss_binomial(p, mult);
                j = k;
            }
            if (term.is_zero()) break;
        }
        m += term;
    }
    return m;
}

// X(mu, Lambda; t): energy generating function over P(B(mu), Lambda).
inline LaurentPoly oned_sum_double(const Partition& mu, const DoublePartition& dla, int n) {
    LaurentPoly x;
    for (const auto& w : p_set_double(mu, dla, n))
        x += LaurentPoly::t_power(static_cast<int>(charge_of(w)));
    return x;
}

// Dispatch record for the polynomial API: a weight, an ordinary or double
// target, a rank, and the route to compute the Kostka polynomial by.
struct KostkaRequest {
    enum class Method { Charge, OneDSum, Fermionic, LR };

    Partition mu;
    std::variant<Partition, DoublePartition> target;
    int n = 0;  // 0 picks a sufficient default
    Method method = Method::Charge;
};

inline LaurentPoly kostka_compute(const KostkaRequest& req) {
    if (std::holds_alternative<Partition>(req.target)) {
        const Partition& la = std::get<Partition>(req.target);
        if (la.size() != req.mu.size()) throw std::invalid_argument("kostka_compute: size mismatch");
        int n = req.n > 0 ? req.n : std::max(2, req.mu.size());
        if (la.length() > n) throw std::invalid_argument("kostka_compute: rank too small");
        switch (req.method) {
            case KostkaRequest::Method::Charge:
                return kostka_charge(la, req.mu);
            case KostkaRequest::Method::OneDSum:
                return kostka_1d(la, req.mu, n);
            case KostkaRequest::Method::Fermionic:
                return fermionic(req.mu, la, n)
                    .subst_inverse()
                    .shifted(static_cast<int>(n_of(req.mu)));
            case KostkaRequest::Method::LR:
                throw std::invalid_argument("kostka_compute: LR needs a double target");
        }
    }
    const DoublePartition& dla = std::get<DoublePartition>(req.target);
    if (dla.size() != req.mu.size()) throw std::invalid_argument("kostka_compute: size mismatch");
    int n = req.n > 0 ? req.n : std::max({2, req.mu.size(), dla.s() + dla.t()});
    if (dla.s() + dla.t() > n) throw std::invalid_argument("kostka_compute: rank too small");
    switch (req.method) {
        case KostkaRequest::Method::Charge:
            return double_kostka(dla, req.mu);
        case KostkaRequest::Method::OneDSum:
            return double_kostka_energy(dla, req.mu, n);
        case KostkaRequest::Method::Fermionic:
            return fermionic_double(req.mu, dla, n)
                .subst_square()
                .subst_inverse()
                .shifted(2 * static_cast<int>(n_of(req.mu)) + dla.lp.size());
        case KostkaRequest::Method::LR:
            return double_kostka_lr(dla, req.mu);
    }
    throw std::logic_error("kostka_compute: unhandled method");
}

}  // namespace xkostka
