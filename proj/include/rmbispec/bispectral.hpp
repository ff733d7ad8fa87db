#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "series.hpp"

namespace rmb {

/**
 * Strictly upper-triangular n x n matrix of nonnegative integers; the
 * summation index of the formal eigenfunction series.  Entry (i,j) is kept
 * for 1 <= i < j <= n.
 */
struct UpperTri {
    int n = 2;
    std::vector<int> ent; // packed rows: (1,2),(1,3),...,(1,n),(2,3),...

    explicit UpperTri(int n_) : n(n_), ent(size_t(n_) * (n_ - 1) / 2, 0) {}

    static size_t pack(int n, int i, int j) {
        // 1-based i < j
        return size_t(i - 1) * (2 * n - i) / 2 + (j - i - 1);
    }

    int operator()(int i, int j) const { return ent[pack(n, i, j)]; }
    int& at(int i, int j) { return ent[pack(n, i, j)]; }

    /** Weighted degree sum_{i<j} (j-i) * theta_ij (the z-degree of its monomial). */
    int zdeg() const {
        int d = 0;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) d += (j - i) * (*this)(i, j);
        return d;
    }

    /** Total entry sum (shell index for numeric summation). */
    int total() const {
        int d = 0;
        for (int v : ent) d += v;
        return d;
    }

    /** Root-cone vector mu(theta): slot m carries sum_{i<=m<j} theta_ij. */
    std::vector<int> mu() const {
        std::vector<int> m(n - 1, 0);
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = i; k < j; ++k) m[k - 1] += (*this)(i, j);
        return m;
    }

    bool operator==(const UpperTri& o) const { return n == o.n && ent == o.ent; }
};

/** All theta with zdeg(theta) <= cap, in deterministic lexicographic order. */
inline std::vector<UpperTri> enumerate_upper(int n, int zdeg_cap) {
    std::vector<std::pair<int, int>> pos; // (i,j) in packed order
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) pos.emplace_back(i, j);
    std::vector<UpperTri> out;
    UpperTri cur(n);
    std::function<void(size_t, int)> rec = [&](size_t k, int used) {
        if (k == pos.size()) {
            out.push_back(cur);
            return;
        }
        auto [i, j] = pos[k];
        int wt = j - i;
        for (int v = 0; used + v * wt <= zdeg_cap; ++v) {
            cur.at(i, j) = v;
            rec(k + 1, used + v * wt);
        }
        cur.at(i, j) = 0;
    };
    rec(0, 0);
    return out;
}

/** All theta with total entry sum <= cap (numeric shell enumeration). */
inline std::vector<UpperTri> enumerate_upper_by_total(int n, int total_cap) {
    std::vector<std::pair<int, int>> pos;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) pos.emplace_back(i, j);
    std::vector<UpperTri> out;
    UpperTri cur(n);
    std::function<void(size_t, int)> rec = [&](size_t k, int used) {
        if (k == pos.size()) {
            out.push_back(cur);
            return;
        }
        auto [i, j] = pos[k];
        for (int v = 0; used + v <= total_cap; ++v) {
            cur.at(i, j) = v;
            rec(k + 1, used + v);
        }
        cur.at(i, j) = 0;
    };
    rec(0, 0);
    return out;
}

/**
 * Series coefficient c_n(theta; s | q,t) evaluated at scalar spectral values
 * s = (s_1,...,s_n).  Division by zero in a Pochhammer denominator
 * propagates as an exception from the scalar field.
 */
template <class K>
K c_at(const UpperTri& th, const std::vector<K>& s, const K& q, const K& t) {
    const int n = th.n;
    if (int(s.size()) != n) throw std::invalid_argument("c_at: |s| != n");
    const K one = ring_traits<K>::one();
    K num = one, den = one;
    for (int k = 2; k <= n; ++k) {
        for (int i = 1; i < k; ++i) {
            int ti = th(i, k);
            if (ti == 0) continue;
            for (int j = i + 1; j <= k; ++j) {
                long E = 0;
                for (int a = k + 1; a <= n; ++a) E += th(i, a) - th(j, a);
                K base = pow_i(q, E) * s[j - 1] / s[i - 1];
                num = num * qpoch(base * t, q, ti);
                den = den * qpoch(base * q, q, ti);
            }
            for (int j = i; j < k; ++j) {
                long E = -th(j, k);
                for (int a = k + 1; a <= n; ++a) E += th(i, a) - th(j, a);
                K base = pow_i(q, E) * s[j - 1] / s[i - 1];
                num = num * qpoch(base * q / t, q, ti);
                den = den * qpoch(base, q, ti);
            }
        }
    }
    return num / den;
}

/**
 * c_n(theta) as a truncated power series in the w-block (s-ratios), with
 * exact coefficients in q,t.  The z-part of the signature is unused here.
 */
template <class K>
Series<K> c_series(const UpperTri& th, const Params<K>& pr, const VarSig& sig) {
    const int n = th.n;
    if (sig.n != n) throw std::invalid_argument("c_series: signature mismatch");
    const K& q = pr.q;
    const K& t = pr.t;
    const K one = ring_traits<K>::one();
    Series<K> acc = Series<K>::one(sig);
    K scal_num = one, scal_den = one;
    for (int k = 2; k <= n; ++k) {
        for (int i = 1; i < k; ++i) {
            int ti = th(i, k);
            if (ti == 0) continue;
            for (int j = i + 1; j <= k; ++j) {
                long E = 0;
                for (int a = k + 1; a <= n; ++a) E += th(i, a) - th(j, a);
                K c = pow_i(q, E);
                Mono m = ratio_mono_w(sig, i, j);
                acc *= poch_series(sig, c * t, m, q, ti);
                acc *= poch_series(sig, c * q, m, q, ti).inverse();
            }
            for (int j = i; j < k; ++j) {
                long E = -th(j, k);
                for (int a = k + 1; a <= n; ++a) E += th(i, a) - th(j, a);
                K c = pow_i(q, E);
                if (j == i) {
                    scal_num = scal_num * qpoch(c * q / t, q, ti);
                    scal_den = scal_den * qpoch(c, q, ti);
                } else {
                    Mono m = ratio_mono_w(sig, i, j);
                    acc *= poch_series(sig, c * q / t, m, q, ti);
                    acc *= poch_series(sig, c, m, q, ti).inverse();
                }
            }
        }
    }
    return acc.scaled(scal_num / scal_den);
}

/**
 * The basic formal eigenfunction series p_n = sum_theta c_n(theta) z^{mu(theta)}.
 */
template <class K>
Series<K> p_series(int n, const Params<K>& pr, int dz, int dw) {
    VarSig sig{n, dz, dw};
    Series<K> acc(sig);
    for (const UpperTri& th : enumerate_upper(n, dz)) {
        std::vector<int> mu = th.mu();
        Mono m{mu, std::vector<int>(sig.slots(), 0)};
        acc += Series<K>::monomial(sig, m, ring_traits<K>::one()) * c_series(th, pr, sig);
    }
    return acc;
}

/**
 * p_n with the spectral variables frozen at scalar values: a series in the
 * z-block only, coefficients p_mu(s) summed over the fibre M_n(mu).
 */
template <class K>
Series<K> p_series_at_s(int n, const K& q, const K& t, const std::vector<K>& s, int dz) {
    VarSig sig{n, dz, 0};
    Series<K> acc(sig);
    for (const UpperTri& th : enumerate_upper(n, dz)) {
        Mono m{th.mu(), std::vector<int>(sig.slots(), 0)};
        acc.add_term(m, c_at(th, s, q, t));
    }
    return acc;
}

/** Gauge prefactor in the w-block: prod_{i<j} (q s_j/s_i;q)_inf / (q s_j/t s_i;q)_inf. */
template <class K>
Series<K> gauge_w(const VarSig& sig, const Params<K>& pr) {
    Series<K> g = Series<K>::one(sig);
    for (int i = 1; i < sig.n; ++i)
        for (int j = i + 1; j <= sig.n; ++j) {
            Mono m = ratio_mono_w(sig, i, j);
            g *= poch_inf_series(sig, pr.q, m, pr.q);
            g *= poch_inf_series_recip(sig, pr.q / pr.t, m, pr.q);
        }
    return g;
}

/** Gauge prefactor in the z-block: prod_{i<j} (q x_j/t x_i;q)_inf / (q x_j/x_i;q)_inf. */
template <class K>
Series<K> gauge_z(const VarSig& sig, const Params<K>& pr) {
    Series<K> g = Series<K>::one(sig);
    for (int i = 1; i < sig.n; ++i)
        for (int j = i + 1; j <= sig.n; ++j) {
            Mono m = ratio_mono_z(sig, i, j);
            g *= poch_inf_series(sig, pr.q / pr.t, m, pr.q);
            g *= poch_inf_series_recip(sig, pr.q, m, pr.q);
        }
    return g;
}

/** phi_n: p_n renormalized so its s-leading coefficient matches the x-gauge. */
template <class K>
Series<K> phi_series(int n, const Params<K>& pr, int dz, int dw) {
    VarSig sig{n, dz, dw};
    return gauge_w(sig, pr) * p_series(n, pr, dz, dw);
}

/** psi_n: the self-dual gauge, symmetric under block swap and t <-> q/t. */
template <class K>
Series<K> psi_series(int n, const Params<K>& pr, int dz, int dw) {
    VarSig sig{n, dz, dw};
    return gauge_z(sig, pr) * p_series(n, pr, dz, dw);
}

/** F_n = prod_{i<j} (q x_j/x_i;q)_inf (q s_j/s_i;q)_inf * psi_n. */
template <class K>
Series<K> F_series(int n, const Params<K>& pr, int dz, int dw) {
    VarSig sig{n, dz, dw};
    Series<K> g = Series<K>::one(sig);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            g *= poch_inf_series(sig, pr.q, ratio_mono_z(sig, i, j), pr.q);
            g *= poch_inf_series(sig, pr.q, ratio_mono_w(sig, i, j), pr.q);
        }
    return g * psi_series(n, pr, dz, dw);
}

/**
 * Right-hand side of the coefficient recurrence: a theta in n+1 variables is
 * split as (theta', nu) with nu its last column, and
 *   c_{n+1}(theta) = prod_{i<j<=n+1} (t s_j/s_i;q)_{nu_i} / (q s_j/s_i;q)_{nu_i}
 *                  * prod_{i<=j<=n} (q^{-nu_j} q s_j/t s_i;q)_{nu_i} / (q^{-nu_j} s_j/s_i;q)_{nu_i}
 *                  * c_n(theta'; q^{-nu} s).
 * Returned as a w-block series for comparison against c_series directly.
 */
template <class K>
Series<K> c_recurrence_rhs(const UpperTri& th, const Params<K>& pr, const VarSig& sig) {
    const int np1 = th.n;
    const int n = np1 - 1;
    if (sig.n != np1) throw std::invalid_argument("c_recurrence_rhs: signature mismatch");
    const K& q = pr.q;
    const K& t = pr.t;
    const K one = ring_traits<K>::one();
    std::vector<int> nu(n);
    for (int i = 1; i <= n; ++i) nu[i - 1] = th(i, np1);
    UpperTri sub(n);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) sub.at(i, j) = th(i, j);

    Series<K> acc = Series<K>::one(sig);
    K scal_num = one, scal_den = one;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= np1; ++j) {
            Mono m = ratio_mono_w(sig, i, j);
            acc *= poch_series(sig, t, m, q, nu[i - 1]);
            acc *= poch_series(sig, q, m, q, nu[i - 1]).inverse();
        }
        for (int j = i; j <= n; ++j) {
            K c = pow_i(q, -long(nu[j - 1]));
            if (j == i) {
                scal_num = scal_num * qpoch(c * q / t, q, nu[i - 1]);
                scal_den = scal_den * qpoch(c, q, nu[i - 1]);
            } else {
                Mono m = ratio_mono_w(sig, i, j);
                acc *= poch_series(sig, c * q / t, m, q, nu[i - 1]);
                acc *= poch_series(sig, c, m, q, nu[i - 1]).inverse();
            }
        }
    }
    // c_n(theta'; q^{-nu} s) embedded into the (n+1)-variable signature.
    VarSig small{n, sig.dz, sig.dw};
    Series<K> csub = c_series(sub, pr, small).embed(sig);
    std::vector<int> shift(np1, 0);
    for (int i = 0; i < n; ++i) shift[i] = -nu[i];
    csub = csub.qshift(false, shift, q);
    return acc.scaled(scal_num / scal_den) * csub;
}

} // namespace rmb
