#pragma once

#include <mpfr.h>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "rational.hpp"

namespace rmb {

/**
 * Arbitrary-precision binary floating-point scalar (MPFR backend).
 *
 * Each value carries its own working precision in bits; binary operations
 * compute at the larger of the two operand precisions, round-to-nearest.
 */
class Real {
public:
    static constexpr long kDefaultPrec = 256;

    Real() : Real(0L, kDefaultPrec) {}

    explicit Real(long v, long prec = kDefaultPrec) {
        mpfr_init2(v_, check_prec(prec));
        mpfr_set_si(v_, v, MPFR_RNDN);
    }

    explicit Real(double v, long prec = kDefaultPrec) {
        mpfr_init2(v_, check_prec(prec));
        mpfr_set_d(v_, v, MPFR_RNDN);
    }

    explicit Real(const Rational& v, long prec = kDefaultPrec) {
        mpfr_init2(v_, check_prec(prec));
        mpfr_set_q(v_, v.raw().get_mpq_t(), MPFR_RNDN);
    }

    explicit Real(const std::string& v, long prec = kDefaultPrec) {
        mpfr_init2(v_, check_prec(prec));
        if (mpfr_set_str(v_, v.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("Real: bad literal: " + v);
    }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~Real() { mpfr_clear(v_); }

    long precision() const { return mpfr_get_prec(v_); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    Real operator-() const {
        Real r = with_prec(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real operator+(const Real& o) const { return bin(o, mpfr_add); }
    Real operator-(const Real& o) const { return bin(o, mpfr_sub); }
    Real operator*(const Real& o) const { return bin(o, mpfr_mul); }

    Real operator/(const Real& o) const {
        if (o.is_zero()) throw std::domain_error("Real: division by zero");
        return bin(o, mpfr_div);
    }

    Real& operator+=(const Real& o) { *this = *this + o; return *this; }
    Real& operator-=(const Real& o) { *this = *this - o; return *this; }
    Real& operator*=(const Real& o) { *this = *this * o; return *this; }
    Real& operator/=(const Real& o) { *this = *this / o; return *this; }

    Real abs() const {
        Real r = with_prec(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real pow(long e) const {
        Real r = with_prec(precision());
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const Real& o) const { return cmp(o) < 0; }
    bool operator<=(const Real& o) const { return cmp(o) <= 0; }
    bool operator>(const Real& o) const { return cmp(o) > 0; }
    bool operator>=(const Real& o) const { return cmp(o) >= 0; }
    bool operator==(const Real& o) const { return cmp(o) == 0; }
    bool operator!=(const Real& o) const { return cmp(o) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string str(int digits = 20) const {
        char buf[256];
        std::string fmt = "%." + std::to_string(digits) + "Re";
        mpfr_snprintf(buf, sizeof(buf), fmt.c_str(), v_);
        return std::string(buf);
    }

    /** 2^-e with e = this value's precision; handy as a convergence target. */
    static Real ulp_threshold(long prec) {
        Real r(1L, prec);
        mpfr_div_2si(r.v_, r.v_, prec, MPFR_RNDN);
        return r;
    }

private:
    static long check_prec(long prec) {
        if (prec < 64) throw std::invalid_argument("Real: precision below 64 bits");
        return prec;
    }

    Real with_prec(long prec) const {
        Real r(0L, prec);
        return r;
    }

    template <class F>
    Real bin(const Real& o, F op) const {
        Real r(0L, std::max(precision(), o.precision()));
        op(r.v_, v_, o.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

} // namespace rmb
