#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "bispectral.hpp"

namespace rmb {

/** Weakly decreasing vector of nonnegative parts, padded with zeros. */
using Partition = std::vector<int>;

inline bool is_partition(const Partition& la) {
    for (size_t i = 0; i + 1 < la.size(); ++i)
        if (la[i] < la[i + 1]) return false;
    return la.empty() || la.back() >= 0;
}

inline int part_at(const Partition& la, size_t i) { return i < la.size() ? la[i] : 0; }

inline int weight(const Partition& la) {
    int s = 0;
    for (int v : la) s += v;
    return s;
}

/** mu subseteq la and la/mu a horizontal strip: la_{i+1} <= mu_i <= la_i. */
inline bool is_horizontal_strip(const Partition& la, const Partition& mu) {
    size_t n = std::max(la.size(), mu.size());
    for (size_t i = 0; i < n; ++i) {
        if (part_at(mu, i) > part_at(la, i)) return false;
        if (part_at(mu, i) < part_at(la, i + 1)) return false;
    }
    return true;
}

/**
 * Branching coefficient of the tableau sum for a horizontal strip la/mu,
 * with both partitions read as length-n vectors:
 *   prod_{1<=i<j<=n} (q^{mu_i-la_j+1} t^{j-i-1};q)_{la_i-mu_i}
 *                  / (q^{mu_i-la_j}   t^{j-i}  ;q)_{la_i-mu_i}
 * * prod_{1<=i<=j<=n-1} (q^{mu_i-mu_j}   t^{j-i+1};q)_{la_i-mu_i}
 *                     / (q^{mu_i-mu_j+1} t^{j-i}  ;q)_{la_i-mu_i}.
 */
template <class K>
K psi_strip(const Partition& la, const Partition& mu, int n, const Params<K>& pr) {
    if (!is_horizontal_strip(la, mu)) return ring_traits<K>::zero();
    const K& q = pr.q;
    const K& t = pr.t;
    K num = ring_traits<K>::one(), den = ring_traits<K>::one();
    for (int i = 1; i <= n; ++i) {
        long len = part_at(la, i - 1) - part_at(mu, i - 1);
        if (len == 0) continue;
        for (int j = i + 1; j <= n; ++j) {
            long a = part_at(mu, i - 1) - part_at(la, j - 1);
            num = num * qpoch(pow_i(q, a + 1) * pow_i(t, long(j - i - 1)), q, len);
            den = den * qpoch(pow_i(q, a) * pow_i(t, long(j - i)), q, len);
        }
        for (int j = i; j <= n - 1; ++j) {
            long a = part_at(mu, i - 1) - part_at(mu, j - 1);
            num = num * qpoch(pow_i(q, a) * pow_i(t, long(j - i + 1)), q, len);
            den = den * qpoch(pow_i(q, a + 1) * pow_i(t, long(j - i)), q, len);
        }
    }
    return num / den;
}

/** Sparse polynomial in n variables with exponent-vector keys. */
template <class K>
using Poly = std::map<std::vector<int>, K>;

template <class K>
void poly_add(Poly<K>& p, const std::vector<int>& e, const K& c) {
    if (ring_traits<K>::is_zero(c)) return;
    auto it = p.find(e);
    if (it == p.end()) p[e] = c;
    else {
        it->second = it->second + c;
        if (ring_traits<K>::is_zero(it->second)) p.erase(it);
    }
}

template <class K>
K poly_eval(const Poly<K>& p, const std::vector<K>& x) {
    K acc = ring_traits<K>::zero();
    for (const auto& [e, c] : p) {
        K v = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) v = v * pow_i(x[i], e[i]);
        acc = acc + v;
    }
    return acc;
}

/**
 * Monic Macdonald polynomial in n variables via the tableau sum: chains
 * 0 = mu^(0) <= mu^(1) <= ... <= mu^(n) = la of horizontal strips, each step
 * contributing psi_strip * x_k^{|strip|}.
 */
template <class K>
Poly<K> macdonald_poly(const Partition& la, int n, const Params<K>& pr) {
    if (!is_partition(la)) throw std::invalid_argument("macdonald_poly: not a partition");
    if (int(la.size()) > n && part_at(la, n) > 0)
        throw std::invalid_argument("macdonald_poly: more parts than variables");
    Poly<K> out;
    std::vector<int> expo(n, 0);
    // enumerate downward from mu^(n) = la; mu^(k) has at most k parts
    std::function<void(int, const Partition&, const K&)> rec =
        [&](int k, const Partition& upper, const K& coef) {
            if (k == 0) {
                poly_add(out, expo, coef);
                return;
            }
            // choose mu = mu^(k-1) inside upper = mu^(k) with la/mu horizontal
            Partition mu(upper.size(), 0);
            std::function<void(size_t)> choose = [&](size_t i) {
                if (i == upper.size() || part_at(upper, i) == 0) {
                    for (size_t j = i; j < mu.size(); ++j) mu[j] = 0;
                    if (int(i) > k - 1 && part_at(mu, k - 1) > 0) return;
                    Partition mu_trim(mu.begin(), mu.end());
                    K w = psi_strip(upper, mu_trim, int(upper.size()), pr);
                    if (ring_traits<K>::is_zero(w)) return;
                    expo[k - 1] = weight(upper) - weight(mu_trim);
                    rec(k - 1, mu_trim, coef * w);
                    expo[k - 1] = 0;
                    return;
                }
                int lo = part_at(upper, i + 1);
                int hi = part_at(upper, i);
                if (int(i) >= k - 1) {
                    // mu^(k-1) may have at most k-1 nonzero parts
                    if (lo > 0) return;
                    hi = 0;
                }
                for (int v = lo; v <= hi; ++v) {
                    mu[i] = v;
                    choose(i + 1);
                }
                mu[i] = 0;
            };
            choose(0);
        };
    Partition lan(la);
    lan.resize(n, 0);
    rec(n, lan, ring_traits<K>::one());
    return out;
}

/** Principal specialization point t^delta q^la = (t^{n-1}q^{la_1},...,q^{la_n}). */
template <class K>
std::vector<K> principal_point(const Partition& la, int n, const Params<K>& pr) {
    std::vector<K> s(n);
    for (int i = 0; i < n; ++i)
        s[i] = pow_i(pr.t, long(n - 1 - i)) * pow_i(pr.q, long(part_at(la, i)));
    return s;
}

/**
 * Principal value of the monic Macdonald polynomial, finite-product form:
 *   t^{sum_i (i-1) la_i} prod_{i<j} (t^{j-i+1};q)_{la_i-la_j} / (t^{j-i};q)_{la_i-la_j}.
 */
template <class K>
K principal_eval(const Partition& la, int n, const Params<K>& pr) {
    K acc = ring_traits<K>::one();
    long e = 0;
    for (int i = 1; i <= n; ++i) e += long(i - 1) * part_at(la, i - 1);
    acc = acc * pow_i(pr.t, e);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            long len = part_at(la, i - 1) - part_at(la, j - 1);
            acc = acc * qpoch(pow_i(pr.t, long(j - i + 1)), pr.q, len)
                      / qpoch(pow_i(pr.t, long(j - i)), pr.q, len);
        }
    return acc;
}

/**
 * Principal value in the infinite-product form
 *   t^{<delta,la>} prod_i (q/t;q)_inf/(q/t^i;q)_inf
 *                  prod_{i<j} (q s_j/t s_i;q)_inf/(q s_j/s_i;q)_inf
 * at s = t^delta q^la, evaluated exactly: every factor is (q^a t^b;q)_inf
 * and for each fixed b the infinite tails must cancel between numerator and
 * denominator, leaving a finite product.  Throws if they do not.
 */
template <class K>
K principal_eval_products(const Partition& la, int n, const Params<K>& pr) {
    // multiplicity of (q^a t^b;q)_inf, keyed by (b, a)
    std::map<std::pair<long, long>, long> mult;
    auto add = [&](long a, long b, long m) { mult[{b, a}] += m; };
    for (int i = 1; i <= n; ++i) {
        add(1, -1, +1);
        add(1, -long(i), -1);
    }
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            long dl = part_at(la, j - 1) - part_at(la, i - 1);
            add(1 + dl, long(i - j) - 1, +1);
            add(1 + dl, long(i - j), -1);
        }
    K acc = ring_traits<K>::one();
    long e = 0;
    for (int i = 1; i <= n; ++i) e += long(n - i) * part_at(la, i - 1);
    acc = acc * pow_i(pr.t, e);
    // reduce each fixed-b class against its largest a
    for (auto it = mult.begin(); it != mult.end();) {
        long b = it->first.first;
        auto jt = it;
        long amax = it->first.second;
        long total = 0;
        while (jt != mult.end() && jt->first.first == b) {
            amax = jt->first.second;
            total += jt->second;
            ++jt;
        }
        if (total != 0)
            throw std::domain_error("principal_eval_products: infinite tails do not cancel");
        for (auto kt = it; kt != jt; ++kt) {
            long a = kt->first.second;
            long m = kt->second;
            if (m == 0) continue;
            // (q^a t^b;q)_inf = (q^amax t^b;q)_inf * prod_{l=a}^{amax-1}(1-q^l t^b)
            K fin = qpoch(pow_i(pr.q, a) * pow_i(pr.t, b), pr.q, amax - a);
            acc = acc * pow_i(fin, m);
        }
        it = jt;
    }
    return acc;
}

/** All partitions with at most n parts and |la| <= size cap. */
inline std::vector<Partition> partitions_up_to(int n, int cap) {
    std::vector<Partition> out;
    Partition cur(n, 0);
    std::function<void(int, int, int)> rec = [&](int i, int maxpart, int rem) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= std::min(maxpart, rem); ++v) {
            cur[i] = v;
            rec(i + 1, v, rem - v);
        }
        cur[i] = 0;
    };
    rec(0, cap, cap);
    return out;
}

} // namespace rmb
