#pragma once

#include "eps_laurent.hpp"
#include "rational.hpp"
#include "real.hpp"

namespace rmb {

/**
 * Uniform access to field structure for the scalar types used as series and
 * operator coefficients: exact rationals, truncated eps-Laurent values, and
 * arbitrary-precision reals.
 */
template <class K>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& v) { return v == 0; }
    static Rational from_rational(const Rational& v) { return v; }
};

template <>
struct ring_traits<EpsLaurent> {
    static EpsLaurent zero() { return EpsLaurent(Rational(0)); }
    static EpsLaurent one() { return EpsLaurent(Rational(1)); }
    static bool is_zero(const EpsLaurent& v) { return v.is_zero(); }
    static EpsLaurent from_rational(const Rational& v) { return EpsLaurent(v); }
};

template <>
struct ring_traits<Real> {
    static Real zero() { return Real(0L); }
    static Real one() { return Real(1L); }
    static bool is_zero(const Real& v) { return v.is_zero(); }
    static Real from_rational(const Rational& v) { return Real(v); }
};

/** Integer power in any of the scalar fields (negative exponents divide). */
template <class K>
K pow_i(const K& base, long e) {
    K acc = ring_traits<K>::one();
    if (e >= 0) {
        for (long i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }
    K inv = acc / base;
    for (long i = 0; i < -e; ++i) acc = acc * inv;
    return acc;
}

template <>
inline Rational pow_i<Rational>(const Rational& base, long e) { return pow_int(base, e); }

} // namespace rmb
