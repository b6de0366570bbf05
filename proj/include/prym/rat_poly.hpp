#pragma once

#include "prym/rational.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prym {

/// Univariate polynomial over Q. Coefficients are stored low degree first and
/// trimmed so that the last stored coefficient is nonzero; the zero polynomial
/// has no coefficients and degree -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coefficients);
    RatPoly(std::initializer_list<Rational> coefficients);

    static RatPoly constant(const Rational& c);
    static RatPoly monomial(const Rational& c, std::size_t degree);
    static RatPoly x();
    /// Monic polynomial with the given rational roots.
    static RatPoly from_roots(const std::vector<Rational>& roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t i) const;
    /// Throws on the zero polynomial.
    const Rational& leading() const;

    RatPoly derivative() const;
    RatPoly monic() const;
    RatPoly compose(const RatPoly& inner) const;

    Rational evaluate(const Rational& x) const;
    std::complex<double> evaluate(std::complex<double> z) const;
    double max_abs_coefficient() const;

    /// Canonical text form, highest degree first, e.g. "x^8 - x - 1".
    std::string to_string(std::string_view var = "x") const;

    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const RatPoly& rhs);
    RatPoly& operator*=(const Rational& scalar);

    friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
    friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
    friend RatPoly operator*(RatPoly lhs, const RatPoly& rhs) { return lhs *= rhs; }
    friend RatPoly operator*(RatPoly lhs, const Rational& s) { return lhs *= s; }
    friend RatPoly operator*(const Rational& s, RatPoly rhs) { return rhs *= s; }
    RatPoly operator-() const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);

Rational resultant(const RatPoly& a, const RatPoly& b);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). Zero iff f has a repeated root.
Rational discriminant(const RatPoly& f);

bool is_squarefree(const RatPoly& f);

/// Integer coefficients of the primitive integer multiple of f with positive
/// leading coefficient.
std::vector<Integer> primitive_integer_coefficients(const RatPoly& f);

} // namespace prym
