#pragma once

#include <algorithm>
#include <vector>

#include "bispectral.hpp"
#include "real.hpp"

namespace rmb {

/**
 * Diagonal coefficient sum of the rank-3 series with deformation parameter
 * q/t: the coefficient of (x_2/x_1)^theta (x_3/x_2)^rho in p_3(x;s|q,q/t),
 *   sum_k c_3(theta-k, k, rho-k; s | q, q/t).
 */
template <class K>
K sum_c3_diag(int theta, int rho, const std::vector<K>& s, const K& q, const K& t) {
    K acc = ring_traits<K>::zero();
    K qt = q / t;
    for (int k = 0; k <= std::min(theta, rho); ++k) {
        UpperTri th(3);
        th.at(1, 2) = theta - k;
        th.at(1, 3) = k;
        th.at(2, 3) = rho - k;
        acc = acc + c_at(th, s, q, qt);
    }
    return acc;
}

/**
 * Closed form of the same diagonal sum: double q-hypergeometric expression
 * with a terminating 5phi4 kernel.
 */
template <class K>
K diag_closed(int theta, int rho, const std::vector<K>& s, const K& q, const K& t) {
    const K one = ring_traits<K>::one();
    const K w21 = s[1] / s[0], w32 = s[2] / s[1], w31 = s[2] / s[0];
    K pre = pow_i(t, long(theta)) * qpoch(q / t, q, theta) * qpoch(q * w21 / t, q, theta)
          / (qpoch(q, q, theta) * qpoch(q * w21, q, theta));
    pre = pre * pow_i(t, long(rho)) * qpoch(q / t, q, rho) * qpoch(q * w32 / t, q, rho)
          / (qpoch(q, q, rho) * qpoch(q * w32, q, rho));
    K acc = ring_traits<K>::zero();
    for (int j = 0; j <= std::min(theta, rho); ++j) {
        K qmt = pow_i(q, -long(theta)), qmr = pow_i(q, -long(rho));
        K term = qpoch(qmt, q, j) * qpoch(qmt / w21, q, j)
               / (qpoch(qmt * t, q, j) * qpoch(qmt * t / w21, q, j));
        term = term * qpoch(qmr, q, j) * qpoch(qmr / w32, q, j)
               / (qpoch(qmr * t, q, j) * qpoch(qmr * t / w32, q, j));
        term = term * qpoch(q / t, q, j) * qpoch(q * w31 / t, q, j)
               / (qpoch(q, q, j) * qpoch(q * w31, q, j));
        term = term * pow_i(t, 3L * j);
        K qj = pow_i(q, -long(j));
        std::vector<K> up{t, t, qj, pow_i(q, long(theta - j + 1)) / t, pow_i(q, long(rho - j + 1)) / t};
        std::vector<K> lo{q / t, qj * t / w31, pow_i(q, long(theta - j + 1)) * w21,
                          pow_i(q, long(rho - j + 1)) * w32};
        term = term * bhs_phi(up, lo, q, q, j + 1);
        acc = acc + term;
    }
    (void)one;
    return pre * acc;
}

/**
 * The same diagonal sum written as a single very-well-poised series in base
 * q with argument t^2, anchored at the corner coefficient:
 *   sum_k c_3(theta-k,k,rho-k;s|q,q/t)
 *     = c_3(theta,0,rho;s|q,q/t) * W(a; q^{-theta}, q^theta a f, c,d,e,f,g,
 *                                     +-(aq/f)^{1/2}, +-(aq^2/f)^{1/2}; q, t^2)
 * with a = q^{-rho}s_2/s_1, c = q s_3/t s_1, d = q^{-rho}s_2/s_3,
 * e = q s_2/t s_1, f = q/t, g = q^{-rho}.
 */
template <class K>
K diag_vwp(int theta, int rho, const std::vector<K>& s, const K& q, const K& t) {
    const K w21 = s[1] / s[0], w32 = s[2] / s[1], w31 = s[2] / s[0];
    K a = pow_i(q, -long(rho)) * w21;
    K c = q * w31 / t;
    K d = pow_i(q, -long(rho)) / w32;
    K e = q * w21 / t;
    K f = q / t;
    K g = pow_i(q, -long(rho));
    UpperTri corner(3);
    corner.at(1, 2) = theta;
    corner.at(2, 3) = rho;
    K base = c_at(corner, s, q, q / t);
    std::vector<K> params{pow_i(q, -long(theta)), pow_i(q, long(theta)) * a * f, c, d, e, f, g};
    std::vector<K> pairs{a * q / f, a * q * q / f};
    return base * bhs_vwp(a, params, pairs, q, t * t, theta);
}

/**
 * Left- and right-hand sides of the contiguous expansion of a very-well-
 * poised series with a +-square-root parameter quadruple: the W-series with
 * the four paired parameters expands into theta+1 plain W-series.
 */
template <class K>
std::pair<K, K> vwp_reduction_sides(int theta, const K& a, const K& f,
                                    const std::vector<K>& free_params, const K& z, const K& q) {
    std::vector<K> lp{pow_i(q, -long(theta)), pow_i(q, long(theta)) * a * f};
    lp.insert(lp.end(), free_params.begin(), free_params.end());
    std::vector<K> pairs{a * q / f, a * q * q / f};
    K lhs = bhs_vwp(a, lp, pairs, q, z, theta);

    K pre = qpoch(a * q, q, theta) * qpoch(f * f / q, q, theta)
          / (qpoch(a * f, q, theta) * qpoch(f, q, theta));
    K acc = ring_traits<K>::zero();
    for (int m = 0; m <= theta; ++m) {
        K qmt = pow_i(q, -long(theta));
        K coef = qpoch(q / f, q, m) * qpoch(qmt, q, m) * qpoch(a * q / f, q, m)
               / (qpoch(q, q, m) * qpoch(qmt * q * q / (f * f), q, m) * qpoch(a * q, q, m));
        coef = coef * pow_i(q, long(m));
        std::vector<K> rp{pow_i(q, -long(m)), pow_i(q, long(m)) * a * q / f};
        rp.insert(rp.end(), free_params.begin(), free_params.end());
        acc = acc + coef * bhs_vwp(a, rp, std::vector<K>{}, q, z, m);
    }
    return {lhs, pre * acc};
}

/**
 * Left- and right-hand sides of the double-sum transformation that trades
 * the m-summed W-series (with the m-dependent second parameter q^m aq/f)
 * for a j-sum with a terminating 5phi4 kernel.
 */
template <class K>
std::pair<K, K> wsum_to_5phi4_sides(int theta, const K& a, const K& c, const K& d,
                                    const K& e, const K& f, const K& q) {
    const K one = ring_traits<K>::one();
    K qmt = pow_i(q, -long(theta));
    K lhs = ring_traits<K>::zero();
    for (int m = 0; m <= theta; ++m) {
        K coef = qpoch(q / f, q, m) * qpoch(qmt, q, m) * qpoch(a * q / f, q, m)
               / (qpoch(q, q, m) * qpoch(qmt * q * q / (f * f), q, m) * qpoch(a * q, q, m));
        coef = coef * pow_i(q, long(m));
        std::vector<K> params{pow_i(q, long(m)) * a * q / f, c, d, e, f, a * f / e,
                              pow_i(q, -long(m))};
        lhs = lhs + coef * bhs_vwp(a, params, std::vector<K>{}, q, a * q * q / (c * d * f), m);
    }

    K pre = qpoch(e, q, theta) * qpoch(f, q, theta)
          / (qpoch(e * q / f, q, theta) * qpoch(f * f / q, q, theta));
    K rhs = ring_traits<K>::zero();
    K arg = a * q * q * q / (c * d * f * f);
    for (int j = 0; j <= theta; ++j) {
        K coef = qpoch(c, q, j) * qpoch(d, q, j) * qpoch(f, q, j) * qpoch(a * f / e, q, j)
               * qpoch(qmt, q, j) * qpoch(qmt * f / e, q, j);
        coef = coef / (qpoch(q, q, j) * qpoch(a * q / c, q, j) * qpoch(a * q / d, q, j)
               * qpoch(a * q / e, q, j) * qpoch(qmt * q / e, q, j) * qpoch(qmt * q / f, q, j));
        coef = coef * pow_i(arg, long(j));
        K qj = pow_i(q, -long(j));
        std::vector<K> up{qj, a * q / (c * d), q / f, pow_i(q, long(theta - j)) * f, qj * e / a};
        std::vector<K> lo{f, qj * q / d, qj * q / c, pow_i(q, long(theta - j)) * e * q / f};
        rhs = rhs + coef * bhs_phi(up, lo, q, q, j + 1);
    }
    (void)one;
    return {lhs, pre * rhs};
}

/**
 * Rank-3 series at deformation parameter q/t assembled from its closed form:
 *   sum_k [(q/t;q)_k (t;q)_k]^2 / [(q;q)_k prod (q s_j/s_i;q)_k]
 *         (q s_3/t s_1)^k (t x_3/x_1)^k
 *   * prod_{i<j} 2phi1[q^{k+1}/t, q s_j/t s_i; q^{k+1} s_j/s_i; q, t x_j/x_i],
 * truncated to the caps; must agree with p_series(3, {q, q/t}).
 */
template <class K>
Series<K> rank3_closed_series(const Params<K>& pr, int dz, int dw) {
    const K& q = pr.q;
    const K& t = pr.t;
    VarSig sig{3, dz, dw};
    Series<K> acc(sig);
    for (int k = 0; 2 * k <= dz && 2 * k <= dw; ++k) {
        K scal = qpoch(q / t, q, k) * qpoch(q / t, q, k) * qpoch(t, q, k) * qpoch(t, q, k)
               / qpoch(q, q, k);
        scal = scal * pow_i(q / t, long(k)) * pow_i(t, long(k));
        Series<K> term(sig, scal);
        // 1 / prod_{i<j} (q s_j/s_i;q)_k and grading (s_3/s_1)^k (x_3/x_1)^k
        for (int i = 1; i < 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                term *= poch_series(sig, q, ratio_mono_w(sig, i, j), q, k).inverse();
        Mono grad = Mono::unit(sig.slots());
        for (int l = 0; l < k; ++l)
            grad = grad * ratio_mono_w(sig, 1, 3) * ratio_mono_z(sig, 1, 3);
        term = Series<K>::monomial(sig, grad, ring_traits<K>::one()) * term;
        // the three 2phi1 kernels, expanded in the z-monomial argument
        for (int i = 1; i < 3; ++i)
            for (int j = i + 1; j <= 3; ++j) {
                Mono mz = ratio_mono_z(sig, i, j);
                Mono mw = ratio_mono_w(sig, i, j);
                int mmax = dz / std::max(1, mz.zdeg());
                Series<K> phi(sig);
                for (int m = 0; m <= mmax; ++m) {
                    K cm = qpoch(pow_i(q, long(k + 1)) / t, q, m) / qpoch(q, q, m)
                         * pow_i(t, long(m));
                    Series<K> piece(sig, cm);
                    piece *= poch_series(sig, q / t, mw, q, m);
                    piece *= poch_series(sig, pow_i(q, long(k + 1)), mw, q, m).inverse();
                    Mono zm = Mono::unit(sig.slots());
                    for (int l = 0; l < m; ++l) zm = zm * mz;
                    phi += Series<K>::monomial(sig, zm, ring_traits<K>::one()) * piece;
                }
                term *= phi;
            }
        acc += term;
    }
    return acc;
}

/** Numeric evaluator for the rank-2 holomorphic kernel, |t| < 1 form. */
inline Real f2_closed_t(const Real& z, const Real& w, const Real& q, const Real& t, long kmax = 300) {
    std::vector<Real> up{q * z / t, q * w / t};
    std::vector<Real> lo{q * z * w};
    return qpoch_inf(t, q) * qpoch_inf(q * z * w, q) * bhs_phi(up, lo, q, t, kmax);
}

/** Numeric evaluator for the rank-2 holomorphic kernel, |q/t| < 1 form. */
inline Real f2_closed_qt(const Real& z, const Real& w, const Real& q, const Real& t, long kmax = 300) {
    std::vector<Real> up{t * z, t * w};
    std::vector<Real> lo{q * z * w};
    return qpoch_inf(q / t, q) * qpoch_inf(q * z * w, q) * bhs_phi(up, lo, q, q / t, kmax);
}

/**
 * Numeric evaluator for the rank-3 x-gauge closed form, |t| < 1:
 * z12,z23 and w12,w23 are the consecutive ratios.
 */
inline Real phi3_closed(const std::vector<Real>& zv, const std::vector<Real>& wv,
                        const Real& q, const Real& t, long kmax = 200) {
    Real zr[4][4], wr[4][4];
    zr[1][2] = zv[0]; zr[2][3] = zv[1]; zr[1][3] = zv[0] * zv[1];
    wr[1][2] = wv[0]; wr[2][3] = wv[1]; wr[1][3] = wv[0] * wv[1];
    Real acc(0L, q.precision());
    Real coef(1L, q.precision());
    Real big = zr[1][3] * wr[1][3] * q;
    for (long k = 0; k <= kmax; ++k) {
        Real inner(1L, q.precision());
        for (int i = 1; i < 3; ++i)
            for (int j = i + 1; j <= 3; ++j) {
                Real pre = qpoch_inf(t, q) * qpoch_inf(q * zr[i][j] * wr[i][j], q)
                         / (qpoch_inf(q * zr[i][j] / t, q) * qpoch_inf(q * wr[i][j] / t, q));
                std::vector<Real> up{q * zr[i][j] / t, q * wr[i][j] / t};
                std::vector<Real> lo{q * zr[i][j] * wr[i][j]};
                inner = inner * pre * bhs_phi(up, lo, q, q.pow(k) * t, 200);
            }
        acc = acc + coef * inner;
        Real qk = q.pow(k);
        Real r = (Real(1L) - q / t * qk) * (Real(1L) - q / t * qk) * big
               / ((Real(1L) - q * qk) * (Real(1L) - t * qk));
        coef = coef * r;
        if (coef.abs() < Real::ulp_threshold(q.precision() / 2)) break;
    }
    return acc;
}

/**
 * Numeric partial sum of the principal summation: shells of theta by total
 * entry sum up to `shells`.
 */
inline Real principal_lhs(int n, const std::vector<Real>& s, const Real& q, const Real& t,
                          int shells) {
    Real acc(0L, q.precision());
    for (const UpperTri& th : enumerate_upper_by_total(n, shells)) {
        long e = 0;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) e += long(i - j) * th(i, j);
        acc = acc + c_at(th, s, q, t) * t.pow(e);
    }
    return acc;
}

/** Product side of the principal summation. */
inline Real principal_rhs(int n, const std::vector<Real>& s, const Real& q, const Real& t) {
    Real acc(1L, q.precision());
    for (int i = 1; i <= n; ++i)
        acc = acc * qpoch_inf(q / t, q) / qpoch_inf(q / t.pow(i), q);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            acc = acc * qpoch_inf(q * s[j - 1] / (t * s[i - 1]), q)
                      / qpoch_inf(q * s[j - 1] / s[i - 1], q);
    return acc;
}

/**
 * Pole probe: evaluate the z-coefficients of the spectral-side series over
 * the Laurent scalar field with s_{jpin} pinned to q^{qexp} s_{ipin}
 * (1 + eps) and all other ratios generic.  Returns the largest pole order
 * (by valuation in eps) among the z-coefficients and whether any floor
 * saturation occurred.
 */
struct PoleProbeResult {
    int max_order = 0;      // largest pole order seen across coefficients
    bool saturated = false; // some coefficient lost its floor (order unknown)
    int witnesses = 0;      // number of coefficients with order exactly 1
};

inline PoleProbeResult pole_probe(int n, int ipin, int jpin, int qexp,
                                  const Rational& q, const Rational& t, int dz) {
    std::vector<EpsLaurent> s(n);
    std::vector<Rational> base{Rational(1), rational(3, 11), rational(5, 83), rational(7, 417)};
    for (int i = 0; i < n; ++i) s[i] = EpsLaurent(base[i]);
    s[jpin - 1] = EpsLaurent(base[ipin - 1] * pow_int(q, qexp)) * EpsLaurent::one_plus_eps();
    EpsLaurent ql{q}, tl{t};
    Series<EpsLaurent> p = p_series_at_s(n, ql, tl, s, dz);
    PoleProbeResult res;
    for (const auto& [m, c] : p.terms()) {
        PoleOrder po = c.pole_order();
        if (po.kind == PoleOrder::Kind::FloorSaturated) {
            res.saturated = true;
            continue;
        }
        res.max_order = std::max(res.max_order, po.order);
        if (po.confirmed(1)) ++res.witnesses;
    }
    return res;
}

} // namespace rmb
