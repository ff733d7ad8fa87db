#pragma once

#include <climits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace rmb {

/**
 * Outcome of a pole-order query on a truncated Laurent value.
 *
 * `Zero` means every retained coefficient vanishes.  `Confirmed` carries the
 * pole order (positive for a pole, non-positive for a regular value, read
 * off the lowest nonzero exponent).  `FloorSaturated` means the value
 * touched or crossed the bottom of the exponent window, so only
 * "order >= window floor" can be asserted.
 */
struct PoleOrder {
    enum class Kind { Zero, Confirmed, FloorSaturated };
    Kind kind = Kind::Zero;
    int order = 0; // valid when kind == Confirmed; -valuation

    bool confirmed(int k) const { return kind == Kind::Confirmed && order == k; }
};

/**
 * Truncated Laurent polynomial in a probe variable eps with exact rational
 * coefficients, supported on a fixed exponent window [lo, hi].
 *
 * Multiplication drops exponents above `hi` (ordinary truncation, tracked by
 * a certified-precision bound) and below `lo` (tracked by a sticky
 * `saturated` flag: once mass falls off the bottom of the window, no pole
 * order can be certified any more).  Division by a value of valuation d
 * costs 2d exponents of certified precision, as in standard Laurent-series
 * long division.
 */
class EpsLaurent {
public:
    static constexpr int kExact = INT_MAX;

    EpsLaurent() : EpsLaurent(0, -4, 4) {}

    explicit EpsLaurent(const Rational& c, int lo = -4, int hi = 4)
        : lo_(lo), hi_(hi), prec_(kExact) {
        if (lo > 0 || hi < 0 || lo > hi) throw std::invalid_argument("EpsLaurent: window must contain 0");
        if (c != 0) coeff_[0] = c;
    }

    EpsLaurent(long c, int lo, int hi) : EpsLaurent(Rational(c), lo, hi) {}

    /** The probe variable eps itself. */
    static EpsLaurent eps(int lo = -4, int hi = 4) {
        EpsLaurent v(0, lo, hi);
        v.coeff_[1] = 1;
        return v;
    }

    /** Generic pinch perturbation 1 + eps. */
    static EpsLaurent one_plus_eps(int lo = -4, int hi = 4) {
        EpsLaurent v(1, lo, hi);
        v.coeff_[1] = 1;
        return v;
    }

    int window_lo() const { return lo_; }
    int window_hi() const { return hi_; }
    bool saturated() const { return saturated_; }
    bool is_zero() const { return coeff_.empty() && !saturated_; }

    /** Coefficient of eps^k (zero if absent or outside the window). */
    Rational coeff(int k) const {
        auto it = coeff_.find(k);
        return it == coeff_.end() ? Rational(0) : it->second;
    }

    /** Lowest exponent carrying a nonzero coefficient; nullopt for zero. */
    std::optional<int> valuation() const {
        if (coeff_.empty()) return std::nullopt;
        return coeff_.begin()->first;
    }

    PoleOrder pole_order() const {
        PoleOrder p;
        if (saturated_) { p.kind = PoleOrder::Kind::FloorSaturated; return p; }
        if (coeff_.empty()) { p.kind = PoleOrder::Kind::Zero; return p; }
        int v = coeff_.begin()->first;
        if (v <= lo_) { p.kind = PoleOrder::Kind::FloorSaturated; return p; }
        p.kind = PoleOrder::Kind::Confirmed;
        p.order = -v;
        return p;
    }

    EpsLaurent operator-() const {
        EpsLaurent r = *this;
        for (auto& [e, c] : r.coeff_) c = -c;
        return r;
    }

    EpsLaurent& operator+=(const EpsLaurent& o) {
        check_window(o);
        saturated_ = saturated_ || o.saturated_;
        prec_ = std::min(prec_, o.prec_);
        for (const auto& [e, c] : o.coeff_) {
            auto it = coeff_.find(e);
            if (it == coeff_.end()) coeff_[e] = c;
            else {
                it->second += c;
                if (it->second == 0) coeff_.erase(it);
            }
        }
        clip();
        return *this;
    }

    EpsLaurent& operator-=(const EpsLaurent& o) { return *this += -o; }

    EpsLaurent operator+(const EpsLaurent& o) const { EpsLaurent r = *this; r += o; return r; }
    EpsLaurent operator-(const EpsLaurent& o) const { EpsLaurent r = *this; r -= o; return r; }

    EpsLaurent operator*(const EpsLaurent& o) const {
        check_window(o);
        EpsLaurent r(0, lo_, hi_);
        r.saturated_ = saturated_ || o.saturated_;
        r.prec_ = mul_prec(*this, o);
        for (const auto& [ea, ca] : coeff_)
            for (const auto& [eb, cb] : o.coeff_) {
                long e = long(ea) + long(eb);
                if (e > hi_ || e >= r.prec_) continue; // high truncation, counted by prec_
                if (e < lo_) { r.saturated_ = true; continue; }
                auto it = r.coeff_.find(int(e));
                if (it == r.coeff_.end()) r.coeff_[int(e)] = ca * cb;
                else {
                    it->second += ca * cb;
                    if (it->second == 0) r.coeff_.erase(it);
                }
            }
        r.clip();
        return r;
    }

    EpsLaurent& operator*=(const EpsLaurent& o) { *this = *this * o; return *this; }

    /**
     * Multiplicative inverse.  Requires a nonzero, non-saturated value whose
     * valuation is certified (strictly below the precision bound).
     */
    EpsLaurent inverse() const {
        if (saturated_) throw std::domain_error("EpsLaurent::inverse: floor-saturated operand");
        if (coeff_.empty()) throw std::domain_error("EpsLaurent::inverse: division by zero");
        int d = coeff_.begin()->first;
        if (-d < lo_) {
            EpsLaurent r(0, lo_, hi_);
            r.saturated_ = true;
            return r;
        }
        // b = eps^d * u with u a unit known mod eps^(in_prec - d); then
        // 1/b = eps^(-d) * u^{-1} is known mod eps^(in_prec - 2d).  Exact
        // (untruncated) inputs can be inverted to the full window.
        bool exact_in = (prec_ == kExact);
        long out_prec = exact_in ? long(hi_) + 1 : long(prec_) - 2L * d;
        long u_terms = exact_in ? long(hi_) + 1 + d : long(prec_) - 2L * d + d;
        if (u_terms <= 0 || out_prec <= -d)
            throw std::domain_error("EpsLaurent::inverse: no certified coefficients survive");
        // u_k = coeff(d + k); standard power-series long division for u^{-1}.
        std::map<long, Rational> inv;
        Rational u0 = coeff_.begin()->second;
        inv[0] = 1 / u0;
        for (long k = 1; k < u_terms; ++k) {
            Rational acc = 0;
            for (long j = 0; j < k; ++j) {
                auto it = coeff_.find(int(d + (k - j)));
                if (it != coeff_.end()) acc += it->second * inv[j];
            }
            Rational v = -acc / u0;
            if (v != 0) inv[k] = v;
        }
        EpsLaurent r(0, lo_, hi_);
        r.prec_ = int(std::min(out_prec, long(hi_) + 1));
        if (exact_in && coeff_.size() == 1) r.prec_ = kExact; // monomial inverse is exact
        for (const auto& [k, c] : inv) {
            long e = k - d;
            if (e > hi_ || e >= r.prec_) continue;
            if (e < lo_) { r.saturated_ = true; continue; }
            r.coeff_[int(e)] = c;
        }
        r.clip();
        return r;
    }

    EpsLaurent operator/(const EpsLaurent& o) const { return *this * o.inverse(); }
    EpsLaurent& operator/=(const EpsLaurent& o) { *this = *this / o; return *this; }

    bool operator==(const EpsLaurent& o) const {
        return lo_ == o.lo_ && hi_ == o.hi_ && coeff_ == o.coeff_;
    }
    bool operator!=(const EpsLaurent& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream os;
        if (coeff_.empty()) os << "0";
        bool first = true;
        for (const auto& [e, c] : coeff_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            if (e != 0) os << "*eps^" << e;
        }
        if (saturated_) os << " [floor-saturated]";
        return os.str();
    }

private:
    void check_window(const EpsLaurent& o) const {
        if (lo_ != o.lo_ || hi_ != o.hi_)
            throw std::invalid_argument("EpsLaurent: mixed exponent windows");
    }

    static int mul_prec(const EpsLaurent& a, const EpsLaurent& b) {
        if (a.prec_ == kExact && b.prec_ == kExact) return kExact;
        long pa = (b.prec_ == kExact) ? long(kExact)
                                      : (a.coeff_.empty() ? long(kExact) : long(a.coeff_.begin()->first) + b.prec_);
        long pb = (a.prec_ == kExact) ? long(kExact)
                                      : (b.coeff_.empty() ? long(kExact) : long(b.coeff_.begin()->first) + a.prec_);
        long p = std::min(pa, pb);
        return int(std::min(p, long(kExact)));
    }

    void clip() {
        for (auto it = coeff_.begin(); it != coeff_.end();) {
            if (it->second == 0) it = coeff_.erase(it);
            else if (it->first < lo_) { saturated_ = true; it = coeff_.erase(it); }
            else if (it->first > hi_ || (prec_ != kExact && it->first >= prec_)) it = coeff_.erase(it);
            else ++it;
        }
    }

    std::map<int, Rational> coeff_;
    int lo_, hi_;
    int prec_;             // exponents >= prec_ are uncertified (kExact = all certified)
    bool saturated_ = false;
};

} // namespace rmb
