#pragma once

#include "prym/rational.hpp"

#include <mpfr.h>

#include <complex>
#include <string>

namespace prym::detail {

/// RAII wrapper over mpfr_t. Results of binary operations take the precision
/// of the left operand.
class MpReal {
public:
    explicit MpReal(mpfr_prec_t precision = 64);
    MpReal(double value, mpfr_prec_t precision);
    MpReal(const Rational& value, mpfr_prec_t precision);
    MpReal(const MpReal& other);
    MpReal(MpReal&& other) noexcept;
    MpReal& operator=(const MpReal& other);
    MpReal& operator=(MpReal&& other) noexcept;
    ~MpReal();

    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    MpReal& operator+=(const MpReal& rhs);
    MpReal& operator-=(const MpReal& rhs);
    MpReal& operator*=(const MpReal& rhs);
    MpReal& operator/=(const MpReal& rhs);
    friend MpReal operator+(MpReal a, const MpReal& b) { return a += b; }
    friend MpReal operator-(MpReal a, const MpReal& b) { return a -= b; }
    friend MpReal operator*(MpReal a, const MpReal& b) { return a *= b; }
    friend MpReal operator/(MpReal a, const MpReal& b) { return a /= b; }
    MpReal operator-() const;

    friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.value_, b.value_) != 0; }

    MpReal abs() const;
    MpReal sqrt() const;

private:
    mpfr_t value_;
};

struct MpComplex {
    MpReal re;
    MpReal im;

    explicit MpComplex(mpfr_prec_t precision = 64) : re(precision), im(precision) {}
    MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}
    MpComplex(std::complex<double> z, mpfr_prec_t precision) : re(z.real(), precision), im(z.imag(), precision) {}

    mpfr_prec_t precision() const { return re.precision(); }
    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
    /// |z|^2
    MpReal norm() const { return re * re + im * im; }

    MpComplex& operator+=(const MpComplex& rhs);
    MpComplex& operator-=(const MpComplex& rhs);
    MpComplex& operator*=(const MpComplex& rhs);
    MpComplex& operator/=(const MpComplex& rhs);
    friend MpComplex operator+(MpComplex a, const MpComplex& b) { return a += b; }
    friend MpComplex operator-(MpComplex a, const MpComplex& b) { return a -= b; }
    friend MpComplex operator*(MpComplex a, const MpComplex& b) { return a *= b; }
    friend MpComplex operator/(MpComplex a, const MpComplex& b) { return a /= b; }
};

/// Best rational approximation of x with denominator <= bound (continued
/// fraction convergents computed at the precision of x).
/// 2^exponent at the given precision; exact for any exponent in MPFR's range.
MpReal power_of_two(long exponent, mpfr_prec_t precision);

Rational best_rational_approximation(const MpReal& x, const Integer& bound);

} // namespace prym::detail
