#pragma once

#include "prym/rat_poly.hpp"
#include "prym/rational.hpp"

#include <optional>
#include <string>

namespace prym {

enum class CurveShape {
    /// f irreducible with Gal(f) = S_n.
    PlainSn,
    /// f = (x - a) h with a rational, h irreducible and Gal(h) = S_{n-1}.
    SplitLinear,
};

std::string to_string(CurveShape shape);

/// The curve y^2 = f(x) with n = deg f = 2g + 2.
struct CurveSpec {
    CurveShape shape = CurveShape::PlainSn;
    RatPoly f;
    int n = 0;
    int g = 0;
    std::optional<Rational> a;

    /// The polynomial whose Galois group must be symmetric: f or f / (x - a).
    RatPoly certified_factor() const;

    /// Validates f and detects a rational root; the smallest one becomes `a`.
    static CurveSpec from_polynomial(const RatPoly& f);
};

/// Rational roots of f in increasing order, found numerically and confirmed exactly.
std::vector<Rational> rational_roots(const RatPoly& f);

} // namespace prym
