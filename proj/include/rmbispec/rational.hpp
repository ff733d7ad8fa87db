#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rmb {

/**
 * Exact rational scalar: arbitrary-precision numerator/denominator kept in
 * lowest terms with positive denominator.  Thin value wrapper over the GMP
 * rational type with plain (non-expression-template) operators so it can be
 * used as a template scalar throughout.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}

    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /** Parse "p", "-p", or "p/q". */
    explicit Rational(const std::string& s) {
        if (v_.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal: " + s);
        if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator: " + s);
        v_.canonicalize();
    }

    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }

    Rational operator/(const Rational& o) const {
        if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator/(long a, const Rational& b) { return Rational(a) / b; }

inline Rational rational(long num, long den = 1) { return Rational(num, den); }
inline Rational rational_from_string(const std::string& s) { return Rational(s); }
inline std::string to_string(const Rational& r) { return r.str(); }
inline double to_double(const Rational& r) { return r.to_double(); }

/** Integer power with negative exponents allowed (base nonzero if e < 0). */
inline Rational pow_int(const Rational& base, long e) {
    if (e < 0) {
        if (base == Rational(0)) throw std::domain_error("pow_int: negative power of zero");
        return pow_int(Rational(1) / base, -e);
    }
    Rational acc(1), b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

} // namespace rmb
