#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "bispectral.hpp"

namespace rmb {

/** All subsets of {1,...,n} of size r, each sorted ascending (1-based). */
inline std::vector<std::vector<int>> subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (int(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        if (n - next + 1 < r - int(cur.size())) return;
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

/**
 * Coefficient of the gauged column operator attached to the shift set I:
 *   B_I(x) = prod_{i<j, i not in I, j in I}
 *            (1 - t x_j/x_i)(1 - q x_j/t x_i) / ((1 - x_j/x_i)(1 - q x_j/x_i))
 * as a series in the z-block.
 */
template <class K>
Series<K> b_subset_series(const VarSig& sig, const Params<K>& pr, const std::vector<int>& I) {
    std::vector<bool> in(sig.n + 1, false);
    for (int v : I) in[v] = true;
    Series<K> acc = Series<K>::one(sig);
    const K one = ring_traits<K>::one();
    for (int i = 1; i < sig.n; ++i) {
        if (in[i]) continue;
        for (int j = i + 1; j <= sig.n; ++j) {
            if (!in[j]) continue;
            Mono m = ratio_mono_z(sig, i, j);
            acc *= poch_series(sig, pr.t, m, pr.q, 1);
            acc *= poch_series(sig, pr.q / pr.t, m, pr.q, 1);
            acc *= (poch_series(sig, one, m, pr.q, 1) * poch_series(sig, pr.q, m, pr.q, 1)).inverse();
        }
    }
    return acc;
}

/**
 * Degree-r piece of the gauged eigenoperator acting on a series in the two
 * ratio blocks, normalized by s_1^{-r}:
 *   sum_{|I|=r} prod_{i in I} (s_i/s_1) B_I(x) f(q^{eps_I} x).
 */
template <class K>
Series<K> l_r_apply(const Series<K>& f, const Params<K>& pr, int r) {
    const VarSig& sig = f.sig();
    Series<K> acc(sig);
    for (const auto& I : subsets(sig.n, r)) {
        std::vector<int> shift(sig.n, 0);
        Mono sm = Mono::unit(sig.slots());
        for (int v : I) {
            shift[v - 1] = 1;
            if (v > 1) sm = sm * ratio_mono_w(sig, 1, v);
        }
        Series<K> term = b_subset_series(sig, pr, I) * f.qshift(true, shift, pr.q);
        acc += Series<K>::monomial(sig, sm, ring_traits<K>::one()) * term;
    }
    return acc;
}

/** e_r(s_1,...,s_n)/s_1^r as a polynomial in the w-block. */
template <class K>
Series<K> e_r_over_s1(const VarSig& sig, int r) {
    Series<K> acc(sig);
    for (const auto& I : subsets(sig.n, r)) {
        Mono sm = Mono::unit(sig.slots());
        for (int v : I)
            if (v > 1) sm = sm * ratio_mono_w(sig, 1, v);
        acc.add_term(sm, ring_traits<K>::one());
    }
    return acc;
}

/**
 * Residual of the order-r eigenfunction equation for the self-dual gauge:
 * zero iff sum_{|I|=r} s^{eps_I} B_I(x) psi(q^{eps_I}x; s) = e_r(s) psi(x;s)
 * holds modulo the degree caps.
 */
template <class K>
Series<K> eigen_residual(const Series<K>& psi, const Params<K>& pr, int r) {
    return l_r_apply(psi, pr, r) - e_r_over_s1<K>(psi.sig(), r) * psi;
}

/** Enumerate nu in N^len with sum_i weight[i]*nu_i <= cap. */
inline std::vector<std::vector<int>> weighted_tuples(const std::vector<int>& weight, int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(weight.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t k, int used) {
        if (k == weight.size()) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; used + v * weight[k] <= cap; ++v) {
            cur[k] = v;
            rec(k + 1, used + v * weight[k]);
        }
        cur[k] = 0;
    };
    rec(0, 0);
    return out;
}

/**
 * One step of the Jackson-transform recursion: builds the x-gauge series of
 * rank n+1 from the rank-n one.  Input and output both live in the signature
 * of the output rank.
 */
template <class K>
Series<K> jackson_recur_step(const Series<K>& phi_n, int n, const Params<K>& pr, int dz, int dw) {
    const K& q = pr.q;
    const K& t = pr.t;
    const int np1 = n + 1;
    VarSig sig{np1, dz, dw};
    if (!(phi_n.sig() == VarSig{n, dz, dw}))
        throw std::invalid_argument("jackson_recur_step: input signature mismatch");
    const K one = ring_traits<K>::one();

    Series<K> pre = Series<K>::one(sig);
    for (int i = 1; i <= n; ++i) {
        Mono mw = ratio_mono_w(sig, i, np1);
        pre *= poch_inf_series(sig, t, mw, q);
        pre *= poch_inf_series_recip(sig, q / t, mw, q);
    }
    for (int i = 1; i <= np1; ++i)
        for (int j = i + 1; j <= np1; ++j) {
            Mono mz = ratio_mono_z(sig, i, j);
            pre *= poch_inf_series(sig, q, mz, q);
            pre *= poch_inf_series_recip(sig, q / t, mz, q);
        }

    Series<K> phi_emb = phi_n.embed(sig);
    Series<K> acc(sig);
    std::vector<int> wt(n);
    for (int i = 1; i <= n; ++i) wt[i - 1] = np1 - i; // w-degree of s_{n+1}/s_i
    for (const auto& nu : weighted_tuples(wt, dw)) {
        K scal = one;
        for (int i = 1; i <= n; ++i)
            scal = scal * qpoch(q / t, q, nu[i - 1]) / qpoch(q, q, nu[i - 1]);
        Series<K> term(sig, scal);
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= np1; ++j) {
                Mono mz = ratio_mono_z(sig, i, j);
                term *= poch_series(sig, q / t, mz, q, nu[i - 1]);
                term *= poch_series(sig, q, mz, q, nu[i - 1]).inverse();
            }
        }
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                K c = pow_i(q, -long(nu[j - 1]));
                Mono mz = ratio_mono_z(sig, i, j);
                term *= poch_series(sig, c * t, mz, q, nu[i - 1]);
                term *= poch_series(sig, c, mz, q, nu[i - 1]).inverse();
            }
        // grading prod_i (t s_{n+1}/s_i)^{nu_i}
        Mono grad = Mono::unit(sig.slots());
        K gscal = one;
        for (int i = 1; i <= n; ++i)
            for (int k = 0; k < nu[i - 1]; ++k) {
                grad = grad * ratio_mono_w(sig, i, np1);
                gscal = gscal * t;
            }
        if (grad.wdeg() > dw) continue;
        term = Series<K>::monomial(sig, grad, gscal) * term;
        // correction products prod_{i<j<=n} (q^{1+nu_i-nu_j} x_j/t x_i)_inf / (q^{1+nu_i-nu_j} x_j/x_i)_inf
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                K c = pow_i(q, 1 + long(nu[i - 1]) - long(nu[j - 1]));
                Mono mz = ratio_mono_z(sig, i, j);
                term *= poch_inf_series(sig, c / t, mz, q);
                term *= poch_inf_series_recip(sig, c, mz, q);
            }
        std::vector<int> shift(np1, 0);
        for (int i = 0; i < n; ++i) shift[i] = -nu[i];
        term *= phi_emb.qshift(true, shift, q);
        acc += term;
    }
    return pre * acc;
}

/**
 * One step of the row-operator recursion: builds the self-dual gauge series
 * of rank n+1 from the rank-n one via the explicit double sum with coupling
 * q^{sum_i mu_i nu_i}.
 */
template <class K>
Series<K> kop_recur_step(const Series<K>& psi_n, int n, const Params<K>& pr, int dz, int dw) {
    const K& q = pr.q;
    const K& t = pr.t;
    const int np1 = n + 1;
    VarSig sig{np1, dz, dw};
    if (!(psi_n.sig() == VarSig{n, dz, dw}))
        throw std::invalid_argument("kop_recur_step: input signature mismatch");
    const K one = ring_traits<K>::one();

    Series<K> pre = Series<K>::one(sig);
    for (int i = 1; i <= n; ++i) {
        Mono mz = ratio_mono_z(sig, i, np1);
        pre *= poch_inf_series(sig, t, mz, q);
        pre *= poch_inf_series_recip(sig, q, mz, q);
        Mono mw = ratio_mono_w(sig, i, np1);
        pre *= poch_inf_series(sig, q / t, mw, q);
        pre *= poch_inf_series_recip(sig, q, mw, q);
    }

    Series<K> psi_emb = psi_n.embed(sig);
    Series<K> acc(sig);
    std::vector<int> wt(n);
    for (int i = 1; i <= n; ++i) wt[i - 1] = np1 - i;
    auto mus = weighted_tuples(wt, dw);
    auto nus = weighted_tuples(wt, dz);
    for (const auto& mu : mus) {
        K mscal = one;
        for (int i = 1; i <= n; ++i)
            mscal = mscal * qpoch(t, q, mu[i - 1]) / qpoch(q, q, mu[i - 1]);
        Series<K> xpart(sig, mscal);
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Mono mz = ratio_mono_z(sig, i, j);
                K c = pow_i(q, -long(mu[j - 1]));
                xpart *= poch_series(sig, t, mz, q, mu[i - 1]);
                xpart *= poch_series(sig, q, mz, q, mu[i - 1]).inverse();
                xpart *= poch_series(sig, c * q / t, mz, q, mu[i - 1]);
                xpart *= poch_series(sig, c, mz, q, mu[i - 1]).inverse();
            }
        Mono mgrad = Mono::unit(sig.slots());
        K mg = one;
        for (int i = 1; i <= n; ++i)
            for (int k = 0; k < mu[i - 1]; ++k) {
                mgrad = mgrad * ratio_mono_w(sig, i, np1);
                mg = mg * q / t;
            }
        if (mgrad.wdeg() > dw) continue;
        xpart = Series<K>::monomial(sig, mgrad, mg) * xpart;

        for (const auto& nu : nus) {
            K nscal = one;
            long coup = 0;
            for (int i = 1; i <= n; ++i) {
                nscal = nscal * qpoch(q / t, q, nu[i - 1]) / qpoch(q, q, nu[i - 1]);
                coup += long(mu[i - 1]) * nu[i - 1];
            }
            nscal = nscal * pow_i(q, coup);
            Series<K> term = xpart.scaled(nscal);
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Mono mw = ratio_mono_w(sig, i, j);
                    K c = pow_i(q, -long(nu[j - 1]));
                    term *= poch_series(sig, q / t, mw, q, nu[i - 1]);
                    term *= poch_series(sig, q, mw, q, nu[i - 1]).inverse();
                    term *= poch_series(sig, c * t, mw, q, nu[i - 1]);
                    term *= poch_series(sig, c, mw, q, nu[i - 1]).inverse();
                }
            Mono ngrad = Mono::unit(sig.slots());
            K ng = one;
            for (int i = 1; i <= n; ++i)
                for (int k = 0; k < nu[i - 1]; ++k) {
                    ngrad = ngrad * ratio_mono_z(sig, i, np1);
                    ng = ng * t;
                }
            if (ngrad.zdeg() > dz) continue;
            term = Series<K>::monomial(sig, ngrad, ng) * term;
            std::vector<int> zshift(np1, 0), wshift(np1, 0);
            for (int i = 0; i < n; ++i) {
                zshift[i] = -mu[i];
                wshift[i] = -nu[i];
            }
            term *= psi_emb.qshift(true, zshift, q).qshift(false, wshift, q);
            acc += term;
        }
    }
    return pre * acc;
}

/** Pointwise function of a full variable vector, used by the row/column operators. */
template <class K>
using PointFn = std::function<K(const std::vector<K>&)>;

/**
 * Column operator of order r applied to a function at a point:
 *   (D_r f)(x) = t^{r(r-1)/2} sum_{|I|=r} prod_{i in I, j notin I}
 *                (t x_i - x_j)/(x_i - x_j) * f(q^{eps_I} x).
 */
template <class K>
K d_r_point(int r, const std::vector<K>& x, const Params<K>& pr, const PointFn<K>& f) {
    const int n = int(x.size());
    const K one = ring_traits<K>::one();
    K acc = ring_traits<K>::zero();
    for (const auto& I : subsets(n, r)) {
        std::vector<bool> in(n + 1, false);
        for (int v : I) in[v] = true;
        K coef = one;
        for (int i = 1; i <= n; ++i) {
            if (!in[i]) continue;
            for (int j = 1; j <= n; ++j) {
                if (in[j]) continue;
                coef = coef * (pr.t * x[i - 1] - x[j - 1]) / (x[i - 1] - x[j - 1]);
            }
        }
        std::vector<K> xs = x;
        for (int v : I) xs[v - 1] = xs[v - 1] * pr.q;
        acc = acc + coef * f(xs);
    }
    return acc * pow_i(pr.t, long(r) * (r - 1) / 2);
}

/**
 * Row operator of degree l applied to a function at a point:
 *   (H_l f)(x) = sum_{|nu|=l} prod_{i<j} (q^{nu_i}x_i - q^{nu_j}x_j)/(x_i-x_j)
 *                * prod_{i,j} (t x_i/x_j;q)_{nu_i}/(q x_i/x_j;q)_{nu_i}
 *                * f(q^{nu} x).
 */
template <class K>
K h_l_point(int l, const std::vector<K>& x, const Params<K>& pr, const PointFn<K>& f) {
    const int n = int(x.size());
    K acc = ring_traits<K>::zero();
    const K one = ring_traits<K>::one();
    std::vector<int> nu(n, 0);
    std::function<void(int, int)> rec = [&](int k, int rem) {
        if (k == n - 1) {
            nu[k] = rem;
            K coef = one;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    coef = coef * (pow_i(pr.q, nu[i - 1]) * x[i - 1] - pow_i(pr.q, nu[j - 1]) * x[j - 1])
                         / (x[i - 1] - x[j - 1]);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    K ratio = x[i - 1] / x[j - 1];
                    coef = coef * qpoch(pr.t * ratio, pr.q, nu[i - 1])
                                / qpoch(pr.q * ratio, pr.q, nu[i - 1]);
                }
            std::vector<K> xs = x;
            for (int i = 0; i < n; ++i) xs[i] = xs[i] * pow_i(pr.q, nu[i]);
            acc = acc + coef * f(xs);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            nu[k] = v;
            rec(k + 1, rem - v);
        }
    };
    rec(0, l);
    return acc;
}

/**
 * Wronski combination sum_{i+j=k} (-1)^i (1 - t^i q^j) (D_i H_j f)(x);
 * vanishes identically for every k >= 1.
 */
template <class K>
K wronski_residual(int k, const std::vector<K>& x, const Params<K>& pr, const PointFn<K>& f) {
    const int n = int(x.size());
    K acc = ring_traits<K>::zero();
    const K one = ring_traits<K>::one();
    for (int i = 0; i <= k && i <= n; ++i) {
        int j = k - i;
        PointFn<K> hjf = [&, j](const std::vector<K>& y) { return h_l_point(j, y, pr, f); };
        K v = d_r_point(i, x, pr, hjf);
        K w = (one - pow_i(pr.t, i) * pow_i(pr.q, j)) * v;
        acc = i % 2 == 0 ? acc + w : acc - w;
    }
    return acc;
}

/**
 * Both sides of the generating-function identity D(u)H(u) = D(tu)H(qu)
 * applied to f at x, as u-polynomials truncated at degree udeg:
 * returns {lhs coefficients, rhs coefficients}.
 */
template <class K>
std::pair<std::vector<K>, std::vector<K>>
du_hu_pointwise(int udeg, const std::vector<K>& x, const Params<K>& pr, const PointFn<K>& f) {
    const int n = int(x.size());
    std::vector<K> lhs(udeg + 1, ring_traits<K>::zero()), rhs = lhs;
    for (int i = 0; i <= udeg && i <= n; ++i) {
        for (int j = 0; i + j <= udeg; ++j) {
            PointFn<K> hjf = [&, j](const std::vector<K>& y) { return h_l_point(j, y, pr, f); };
            K v = d_r_point(i, x, pr, hjf);
            if (i % 2 == 1) v = ring_traits<K>::zero() - v;
            lhs[i + j] = lhs[i + j] + v;
            rhs[i + j] = rhs[i + j] + v * pow_i(pr.t, i) * pow_i(pr.q, j);
        }
    }
    return {lhs, rhs};
}

/**
 * Coefficients h_0..h_L of the row-operator eigenvalue generating function
 * prod_i (t u s_i;q)_inf/(u s_i;q)_inf expanded in u.
 */
template <class K>
std::vector<K> h_eigen_coeffs(const std::vector<K>& s, const Params<K>& pr, int L) {
    const K one = ring_traits<K>::one();
    std::vector<K> acc(L + 1, ring_traits<K>::zero());
    acc[0] = one;
    for (const K& si : s) {
        std::vector<K> fac(L + 1);
        K p = one;
        for (int k = 0; k <= L; ++k) {
            fac[k] = qpoch(pr.t, pr.q, k) / qpoch(pr.q, pr.q, k) * p;
            p = p * si;
        }
        std::vector<K> nxt(L + 1, ring_traits<K>::zero());
        for (int a = 0; a <= L; ++a)
            for (int b = 0; a + b <= L; ++b) nxt[a + b] = nxt[a + b] + acc[a] * fac[b];
        acc = nxt;
    }
    return acc;
}

} // namespace rmb
