#pragma once

#include <stdexcept>
#include <vector>

#include "ring.hpp"

namespace rmb {

/** Base q and deformation parameter t shared by most constructions. */
template <class K>
struct Params {
    K q;
    K t;
};

/**
 * Finite q-Pochhammer symbol (a;q)_k for any integer k:
 *   k >= 0 : prod_{l=0}^{k-1} (1 - a q^l)
 *   k <  0 : 1 / prod_{l=1}^{-k} (1 - a q^{-l})
 */
template <class K>
K qpoch(const K& a, const K& q, long k) {
    const K one = ring_traits<K>::one();
    if (k >= 0) {
        K acc = one, p = a;
        for (long l = 0; l < k; ++l) {
            acc = acc * (one - p);
            p = p * q;
        }
        return acc;
    }
    K acc = one;
    K p = a / q;
    for (long l = 1; l <= -k; ++l) {
        K f = one - p;
        if (ring_traits<K>::is_zero(f)) throw std::domain_error("qpoch: zero factor at negative index");
        acc = acc * f;
        p = p / q;
    }
    return one / acc;
}

/** (a;q)_k with the base stepping by q^2 rather than q. */
template <class K>
K qpoch_sq(const K& a, const K& q, long k) {
    return qpoch(a, q * q, k);
}

/**
 * Infinite product (a;q)_infty for |q| < 1, evaluated to the working
 * precision of the operands: factors are accumulated until the pending tail
 * is below one unit in the last place of the running value.
 */
inline Real qpoch_inf(const Real& a, const Real& q) {
    Real one(1L, std::max(a.precision(), q.precision()));
    if (!(q.abs() < one)) throw std::domain_error("qpoch_inf: needs |q| < 1");
    long prec = std::max(a.precision(), q.precision());
    Real acc = one, p = a;
    Real thresh = Real::ulp_threshold(prec + 8);
    // |log prod_{l>=k}(1-aq^l)| <= |aq^k|/(1-|q|) once |aq^k| < 1/2.
    Real tail_scale = one / (one - q.abs());
    for (int l = 0; l < 100000; ++l) {
        acc = acc * (one - p);
        p = p * q;
        if (p.abs() * tail_scale < thresh) return acc;
    }
    throw std::runtime_error("qpoch_inf: did not converge");
}

/** Jacobi theta function theta(z;q) = (z;q)_inf (q/z;q)_inf (q;q)_inf. */
inline Real theta(const Real& z, const Real& q) {
    if (z.is_zero()) throw std::domain_error("theta: z must be nonzero");
    return qpoch_inf(z, q) * qpoch_inf(q / z, q) * qpoch_inf(q, q);
}

/**
 * Coefficient list of the Euler expansion (c u;q)_inf = sum_k e_k u^k up to
 * u^N: e_k = (-1)^k q^{k(k-1)/2} c^k / (q;q)_k.
 */
template <class K>
std::vector<K> euler_expand(const K& c, const K& q, int N) {
    const K one = ring_traits<K>::one();
    std::vector<K> e;
    e.reserve(N + 1);
    e.push_back(one);
    K num = one;   // (-1)^k q^{k(k-1)/2} c^k
    K den = one;   // (q;q)_k
    K qp = one;    // q^{k-1} within the triangular power
    for (int k = 1; k <= N; ++k) {
        // q^{k(k-1)/2} / q^{(k-1)(k-2)/2} = q^{k-1}
        num = num * (ring_traits<K>::zero() - one) * qp * c;
        qp = qp * q;
        K f = one - pow_i(q, k);
        den = den * f;
        e.push_back(num / den);
    }
    return e;
}

/**
 * Coefficient list of 1/(c u;q)_inf = sum_k c^k/(q;q)_k u^k up to u^N.
 */
template <class K>
std::vector<K> euler_expand_recip(const K& c, const K& q, int N) {
    const K one = ring_traits<K>::one();
    std::vector<K> e;
    e.reserve(N + 1);
    e.push_back(one);
    K num = one, den = one;
    for (int k = 1; k <= N; ++k) {
        num = num * c;
        den = den * (one - pow_i(q, k));
        e.push_back(num / den);
    }
    return e;
}

/**
 * Basic hypergeometric sum with explicit term count:
 *   sum_{k=0}^{kmax} prod(a_i;q)_k / [ (q;q)_k prod(b_j;q)_k ]
 *                    * [(-1)^k q^{k(k-1)/2}]^{1+#b-#a} * z^k.
 * For terminating series pass kmax at least the termination index; a term
 * that hits a vanishing upper Pochhammer zeroes out the remainder.
 */
template <class K>
K bhs_phi(const std::vector<K>& upper, const std::vector<K>& lower,
          const K& q, const K& z, long kmax) {
    const K one = ring_traits<K>::one();
    int gamma = 1 + int(lower.size()) - int(upper.size());
    K sum = one, term = one;
    K qk = one; // q^k
    for (long k = 0; k < kmax; ++k) {
        K ratio = z;
        for (const K& a : upper) ratio = ratio * (one - a * qk);
        K den = one - q * qk; // (1 - q^{k+1})
        for (const K& b : lower) {
            K f = one - b * qk;
            if (ring_traits<K>::is_zero(f))
                throw std::domain_error("bhs_phi: vanishing lower parameter factor");
            den = den * f;
        }
        if (gamma != 0) ratio = ratio * pow_i(ring_traits<K>::zero() - qk, long(gamma));
        term = term * ratio / den;
        if (ring_traits<K>::is_zero(term)) break;
        sum = sum + term;
        qk = qk * q;
    }
    return sum;
}

/**
 * Very-well-poised sum r+1 W r (root-free form).  `params` are the free
 * parameters a_4..a_{r+1}; each entry v of `sq_pairs` stands for a
 * +/-sqrt(v) pair of parameters, contributing (v;q^2)_k / (a^2 q^2/v;q^2)_k
 * per term so no square root is ever materialized.  Term k:
 *   (a;q)_k/(q;q)_k * (1-a q^{2k})/(1-a) * prod_j (a_j;q)_k/(aq/a_j;q)_k
 *   * pair factors * z^k.
 */
template <class K>
K bhs_vwp(const K& a, const std::vector<K>& params, const std::vector<K>& sq_pairs,
          const K& q, const K& z, long kmax) {
    const K one = ring_traits<K>::one();
    K sum = ring_traits<K>::zero();
    const K q2 = q * q;
    const K aq = a * q;
    const K a2q2 = a * a * q2;
    K num = one;   // running (a;q)_k * prod (a_j;q)_k * prod (v;q^2)_k * z^k
    K den = one;   // running (q;q)_k * prod (aq/a_j;q)_k * prod (a^2q^2/v;q^2)_k
    K qk = one, q2k = one; // q^k and q^{2k}
    K corr0 = one - a;
    if (ring_traits<K>::is_zero(corr0)) throw std::domain_error("bhs_vwp: a = 1");
    for (long k = 0; ; ++k) {
        K term = num * (one - a * q2k) / (den * corr0);
        sum = sum + term;
        if (k >= kmax) break;
        // push running products from k to k+1
        num = num * (one - a * qk) * z;
        den = den * (one - q * qk);
        for (const K& p : params) {
            num = num * (one - p * qk);
            K f = one - (aq / p) * qk;
            if (ring_traits<K>::is_zero(f)) throw std::domain_error("bhs_vwp: vanishing denominator factor");
            den = den * f;
        }
        for (const K& v : sq_pairs) {
            num = num * (one - v * q2k);
            K f = one - (a2q2 / v) * q2k;
            if (ring_traits<K>::is_zero(f)) throw std::domain_error("bhs_vwp: vanishing paired denominator factor");
            den = den * f;
        }
        if (ring_traits<K>::is_zero(num)) break;
        qk = qk * q;
        q2k = q2k * q2;
    }
    return sum;
}

/** True when a equals q^{-m} for some 0 <= m <= mmax (termination test). */
template <class K>
bool is_neg_q_power(const K& a, const K& q, long mmax, long* m_out = nullptr) {
    const K one = ring_traits<K>::one();
    K v = a;
    for (long m = 0; m <= mmax; ++m) {
        if (v == one) {
            if (m_out) *m_out = m;
            return true;
        }
        v = v * q;
    }
    return false;
}

} // namespace rmb
