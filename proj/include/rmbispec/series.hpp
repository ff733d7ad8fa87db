#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qseries.hpp"
#include "ring.hpp"

namespace rmb {

/**
 * Signature of the series ring: number of base variables n and per-block
 * total-degree caps.  The z-block holds the n-1 consecutive ratios
 * z_m = x_{m+1}/x_m and the w-block the ratios w_m = s_{m+1}/s_m.
 */
struct VarSig {
    int n = 2;
    int dz = 0;
    int dw = 0;

    int slots() const { return n - 1; }
    bool operator==(const VarSig& o) const { return n == o.n && dz == o.dz && dw == o.dw; }
};

/** Exponent pair (z-block, w-block); each vector has n-1 entries >= 0. */
struct Mono {
    std::vector<int> ze, we;

    static Mono unit(int slots) { return Mono{std::vector<int>(slots, 0), std::vector<int>(slots, 0)}; }

    int zdeg() const { return std::accumulate(ze.begin(), ze.end(), 0); }
    int wdeg() const { return std::accumulate(we.begin(), we.end(), 0); }

    Mono operator*(const Mono& o) const {
        Mono r = *this;
        for (size_t i = 0; i < ze.size(); ++i) r.ze[i] += o.ze[i];
        for (size_t i = 0; i < we.size(); ++i) r.we[i] += o.we[i];
        return r;
    }

    bool operator==(const Mono& o) const { return ze == o.ze && we == o.we; }
};

/** Graded-lexicographic order, z-block before w-block. */
struct MonoCmp {
    bool operator()(const Mono& a, const Mono& b) const {
        int za = a.zdeg(), zb = b.zdeg();
        if (za != zb) return za < zb;
        if (a.ze != b.ze) return a.ze < b.ze;
        int wa = a.wdeg(), wb = b.wdeg();
        if (wa != wb) return wa < wb;
        return a.we < b.we;
    }
};

/**
 * Truncated formal power series in the two ratio blocks with coefficients in
 * a scalar field K.  Terms beyond either per-block cap are dropped on every
 * operation, so the object represents its class in the quotient by the
 * degree ideal.
 */
template <class K>
class Series {
public:
    using Map = std::map<Mono, K, MonoCmp>;

    Series() = default;
    explicit Series(VarSig sig) : sig_(sig) {}

    Series(VarSig sig, const K& c) : sig_(sig) {
        if (!ring_traits<K>::is_zero(c)) terms_[Mono::unit(sig.slots())] = c;
    }

    static Series one(VarSig sig) { return Series(sig, ring_traits<K>::one()); }

    /** Single term c * z^ze * w^we (clipped by the caps). */
    static Series monomial(VarSig sig, const Mono& m, const K& c) {
        Series r(sig);
        r.add_term(m, c);
        return r;
    }

    const VarSig& sig() const { return sig_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    K coeff_at(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ring_traits<K>::zero() : it->second;
    }

    void add_term(const Mono& m, const K& c) {
        if (ring_traits<K>::is_zero(c)) return;
        if (m.zdeg() > sig_.dz || m.wdeg() > sig_.dw) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) terms_[m] = c;
        else {
            it->second = it->second + c;
            if (ring_traits<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    Series operator-() const {
        Series r(sig_);
        for (const auto& [m, c] : terms_) r.terms_[m] = ring_traits<K>::zero() - c;
        return r;
    }

    Series operator+(const Series& o) const {
        check_sig(o);
        Series r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Series operator-(const Series& o) const { return *this + (-o); }

    Series operator*(const Series& o) const {
        check_sig(o);
        Series r(sig_);
        for (const auto& [ma, ca] : terms_) {
            int za = ma.zdeg(), wa = ma.wdeg();
            for (const auto& [mb, cb] : o.terms_) {
                if (za + mb.zdeg() > sig_.dz || wa + mb.wdeg() > sig_.dw) continue;
                r.add_term(ma * mb, ca * cb);
            }
        }
        return r;
    }

    Series& operator+=(const Series& o) { *this = *this + o; return *this; }
    Series& operator-=(const Series& o) { *this = *this - o; return *this; }
    Series& operator*=(const Series& o) { *this = *this * o; return *this; }

    Series scaled(const K& c) const {
        Series r(sig_);
        if (ring_traits<K>::is_zero(c)) return r;
        for (const auto& [m, v] : terms_) {
            K cv = v * c;
            if (!ring_traits<K>::is_zero(cv)) r.terms_[m] = cv;
        }
        return r;
    }

    bool operator==(const Series& o) const { return sig_ == o.sig_ && terms_ == o.terms_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

    /**
     * Multiplicative inverse of a unit (nonzero constant term): Neumann
     * series in (1 - a/a_0), which is nilpotent modulo the degree ideal.
     */
    Series inverse() const {
        Mono u = Mono::unit(sig_.slots());
        K a0 = coeff_at(u);
        if (ring_traits<K>::is_zero(a0)) throw std::domain_error("Series::inverse: constant term is zero");
        K inv0 = ring_traits<K>::one() / a0;
        Series rest = scaled(inv0);
        rest.terms_.erase(u); // rest = a/a0 - 1, strictly positive total degree
        Series acc = one(sig_);
        Series pw = one(sig_);
        int maxit = sig_.dz + sig_.dw;
        for (int k = 1; k <= maxit; ++k) {
            pw = pw * rest;
            if (pw.is_zero()) break;
            if (k % 2 == 1) acc -= pw;
            else acc += pw;
        }
        return acc.scaled(inv0);
    }

    Series operator/(const Series& o) const { return *this * o.inverse(); }

    /**
     * Substitute x_i -> q^{shift_i} x_i (z-block) or s_i -> q^{shift_i} s_i
     * (w-block); `shift` has n entries.  A monomial with block exponents e
     * represents prod_i x_i^{p_i} with p_i = e_{i-1} - e_i (e_0 = e_n = 0),
     * so it picks up the factor q^{sum_i shift_i p_i}.
     */
    Series qshift(bool z_block, const std::vector<int>& shift, const K& q) const {
        if (int(shift.size()) != sig_.n) throw std::invalid_argument("qshift: shift length != n");
        Series r(sig_);
        for (const auto& [m, c] : terms_) {
            const std::vector<int>& e = z_block ? m.ze : m.we;
            long pw = 0;
            for (int i = 1; i <= sig_.n; ++i) {
                int p = (i >= 2 ? e[i - 2] : 0) - (i <= sig_.n - 1 ? e[i - 1] : 0);
                pw += long(shift[i - 1]) * p;
            }
            r.terms_[m] = pw == 0 ? c : c * pow_i(q, pw);
        }
        return r;
    }

    /** Exchange the two blocks (x <-> s); the caps swap along. */
    Series swap_blocks() const {
        Series r(VarSig{sig_.n, sig_.dw, sig_.dz});
        for (const auto& [m, c] : terms_) r.terms_[Mono{m.we, m.ze}] = c;
        return r;
    }

    /**
     * Restriction to the leading face z_1 = ... = z_{r-1} = 0: keeps terms
     * supported on the trailing n-r slots of both blocks and reindexes them
     * into an (n-r+1)-variable signature.  `clean` (when given) is set to
     * false if a surviving z-face term carried a dropped w-slot exponent,
     * i.e. if the restriction does not actually live on the smaller ring.
     */
    Series restrict_front(int r, bool* clean = nullptr) const {
        if (r < 1 || r > sig_.n) throw std::invalid_argument("restrict_front: bad index");
        int drop = r - 1;
        VarSig nsig{sig_.n - drop, sig_.dz, sig_.dw};
        Series out(nsig);
        if (clean) *clean = true;
        for (const auto& [m, c] : terms_) {
            bool zface = true;
            for (int i = 0; i < drop; ++i) zface = zface && m.ze[i] == 0;
            if (!zface) continue;
            bool wface = true;
            for (int i = 0; i < drop; ++i) wface = wface && m.we[i] == 0;
            if (!wface) {
                if (clean) *clean = false;
                continue;
            }
            Mono nm{std::vector<int>(m.ze.begin() + drop, m.ze.end()),
                    std::vector<int>(m.we.begin() + drop, m.we.end())};
            out.terms_[nm] = c;
        }
        return out;
    }

    /** Embed into a signature with more variables; old slots lead. */
    Series embed(VarSig big) const {
        if (big.n < sig_.n) throw std::invalid_argument("embed: target smaller");
        Series r(big);
        for (const auto& [m, c] : terms_) {
            if (m.zdeg() > big.dz || m.wdeg() > big.dw) continue;
            Mono nm = Mono::unit(big.slots());
            std::copy(m.ze.begin(), m.ze.end(), nm.ze.begin());
            std::copy(m.we.begin(), m.we.end(), nm.we.begin());
            r.terms_[nm] = c;
        }
        return r;
    }

    /** Evaluate at a numeric point (z- and w-values per slot). */
    template <class R>
    R eval(const std::vector<R>& zv, const std::vector<R>& wv) const {
        R acc = ring_traits<R>::zero();
        for (const auto& [m, c] : terms_) {
            R t = convert_coeff<R>(c);
            for (size_t i = 0; i < m.ze.size(); ++i)
                if (m.ze[i]) t = t * pow_i(zv[i], m.ze[i]);
            for (size_t i = 0; i < m.we.size(); ++i)
                if (m.we[i]) t = t * pow_i(wv[i], m.we[i]);
            acc = acc + t;
        }
        return acc;
    }

private:
    template <class R>
    static R convert_coeff(const K& c) {
        if constexpr (std::is_same_v<R, K>) return c;
        else return R(c);
    }

    void check_sig(const Series& o) const {
        if (!(sig_ == o.sig_)) throw std::invalid_argument("Series: signature mismatch");
    }

    VarSig sig_;
    Map terms_;
};

/** w-block monomial for the ratio s_j/s_i = w_i ... w_{j-1} (1-based, i<j). */
inline Mono ratio_mono_w(const VarSig& sig, int i, int j) {
    Mono m = Mono::unit(sig.slots());
    for (int k = i; k < j; ++k) m.we[k - 1] += 1;
    return m;
}

/** z-block monomial for the ratio x_j/x_i (1-based, i<j). */
inline Mono ratio_mono_z(const VarSig& sig, int i, int j) {
    Mono m = Mono::unit(sig.slots());
    for (int k = i; k < j; ++k) m.ze[k - 1] += 1;
    return m;
}

/**
 * Finite Pochhammer factor (c*m; q)_len as a series: the product of
 * (1 - c q^l m) over 0 <= l < len.  `m` must have positive total degree.
 */
template <class K>
Series<K> poch_series(const VarSig& sig, const K& c, const Mono& m, const K& q, long len) {
    Series<K> acc = Series<K>::one(sig);
    K cf = c;
    for (long l = 0; l < len; ++l) {
        Series<K> f = Series<K>::one(sig);
        f.add_term(m, ring_traits<K>::zero() - cf);
        acc *= f;
        cf = cf * q;
    }
    return acc;
}

/**
 * Infinite Pochhammer factor (c*m; q)_inf expanded by the Euler formula up
 * to the relevant cap; `m` must have positive total degree.
 */
template <class K>
Series<K> poch_inf_series(const VarSig& sig, const K& c, const Mono& m, const K& q) {
    int step = std::max(1, m.zdeg() + m.wdeg());
    int kmax = (m.zdeg() > 0 ? sig.dz / std::max(1, m.zdeg()) : sig.dz);
    if (m.wdeg() > 0) kmax = std::min(kmax, sig.dw / m.wdeg());
    if (m.zdeg() == 0 && m.wdeg() == 0) throw std::invalid_argument("poch_inf_series: constant monomial");
    (void)step;
    std::vector<K> e = euler_expand(c, q, kmax);
    Series<K> r(sig);
    Mono cur = Mono::unit(sig.slots());
    for (int k = 0; k <= kmax; ++k) {
        r.add_term(cur, e[k]);
        cur = cur * m;
    }
    return r;
}

/** Reciprocal 1/(c*m;q)_inf expanded likewise. */
template <class K>
Series<K> poch_inf_series_recip(const VarSig& sig, const K& c, const Mono& m, const K& q) {
    int kmax = (m.zdeg() > 0 ? sig.dz / std::max(1, m.zdeg()) : sig.dz);
    if (m.wdeg() > 0) kmax = std::min(kmax, sig.dw / m.wdeg());
    if (m.zdeg() == 0 && m.wdeg() == 0) throw std::invalid_argument("poch_inf_series_recip: constant monomial");
    std::vector<K> e = euler_expand_recip(c, q, kmax);
    Series<K> r(sig);
    Mono cur = Mono::unit(sig.slots());
    for (int k = 0; k <= kmax; ++k) {
        r.add_term(cur, e[k]);
        cur = cur * m;
    }
    return r;
}

/** Canonical text form (deterministic term order) for debugging and JSON. */
template <class K>
std::string series_str(const Series<K>& s) {
    std::ostringstream os;
    os << "Series(n=" << s.sig().n << ", dz=" << s.sig().dz << ", dw=" << s.sig().dw << ")";
    return os.str();
}

} // namespace rmb
