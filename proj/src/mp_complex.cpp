#include "prym/mp_complex.hpp"

#include <utility>

namespace prym::detail {

MpReal::MpReal(mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

MpReal::MpReal(double value, mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

MpReal::MpReal(const Rational& value, mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

MpReal::MpReal(const MpReal& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

MpReal::MpReal(MpReal&& other) noexcept {
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

MpReal& MpReal::operator=(const MpReal& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

MpReal& MpReal::operator=(MpReal&& other) noexcept {
    if (this != &other) {
        mpfr_swap(value_, other.value_);
    }
    return *this;
}

MpReal::~MpReal() {
    mpfr_clear(value_);
}

MpReal& MpReal::operator+=(const MpReal& rhs) {
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

MpReal& MpReal::operator-=(const MpReal& rhs) {
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

MpReal& MpReal::operator*=(const MpReal& rhs) {
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

MpReal& MpReal::operator/=(const MpReal& rhs) {
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

MpReal MpReal::operator-() const {
    MpReal r(precision());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

MpReal MpReal::abs() const {
    MpReal r(precision());
    mpfr_abs(r.value_, value_, MPFR_RNDN);
    return r;
}

MpReal MpReal::sqrt() const {
    MpReal r(precision());
    mpfr_sqrt(r.value_, value_, MPFR_RNDN);
    return r;
}

MpComplex& MpComplex::operator+=(const MpComplex& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

MpComplex& MpComplex::operator-=(const MpComplex& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

MpComplex& MpComplex::operator*=(const MpComplex& rhs) {
    MpReal r = re * rhs.re - im * rhs.im;
    MpReal i = re * rhs.im + im * rhs.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

MpComplex& MpComplex::operator/=(const MpComplex& rhs) {
    MpReal den = rhs.norm();
    MpReal r = (re * rhs.re + im * rhs.im) / den;
    MpReal i = (im * rhs.re - re * rhs.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

MpReal power_of_two(long exponent, mpfr_prec_t precision) {
    MpReal r(precision);
    mpfr_set_ui_2exp(r.get(), 1, exponent, MPFR_RNDN);
    return r;
}

Rational best_rational_approximation(const MpReal& x, const Integer& bound) {
    // Convergents h_k / k_k of the continued fraction of x.
    Integer h_prev = 1, h_prev2 = 0;
    Integer k_prev = 0, k_prev2 = 1;
    MpReal rest = x;
    Rational best = 0;
    bool have = false;
    for (int step = 0; step < 4096; ++step) {
        MpReal fl(rest.precision());
        mpfr_floor(fl.get(), rest.get());
        Integer a;
        mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
        Integer h = a * h_prev + h_prev2;
        Integer k = a * k_prev + k_prev2;
        if (k > bound) {
            break;
        }
        best = make_rational(h, k);
        have = true;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        MpReal frac = rest - fl;
        if (frac.is_zero()) {
            break;
        }
        // Stop once the remainder is at the rounding level of x.
        if (mpfr_get_exp(frac.get()) < -static_cast<mpfr_exp_t>(x.precision()) / 2) {
            break;
        }
        MpReal one(1.0, rest.precision());
        rest = one / frac;
    }
    if (!have) {
        MpReal fl(x.precision());
        mpfr_floor(fl.get(), x.get());
        Integer a;
        mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
        best = Rational(a);
    }
    return best;
}

} // namespace prym::detail
