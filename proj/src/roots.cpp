#include "prym/roots.hpp"

#include "prym/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace prym {

namespace {

using detail::MpComplex;
using detail::MpReal;

constexpr int kMaxIterations = 2000;
constexpr int kMaxPrecisionRaises = 8;

struct AberthRun {
    std::vector<MpComplex> roots;
    bool converged = false;
};

/// p(z), p'(z) and sum |a_k| |z|^k by Horner.
void horner(const std::vector<MpReal>& a, const MpComplex& z, MpComplex& value, MpComplex& deriv, MpReal& bound) {
    const mpfr_prec_t prec = z.precision();
    value = MpComplex(prec);
    deriv = MpComplex(prec);
    bound = MpReal(prec);
    MpReal modulus = z.norm().sqrt();
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        deriv = deriv * z + value;
        value = value * z;
        value.re += *it;
        bound = bound * modulus + it->abs();
    }
}

std::vector<MpComplex> initial_guesses(const RatPoly& f, mpfr_prec_t prec) {
    const int n = f.degree();
    double radius = 1.0;
    if (f.coefficient(0) != 0) {
        radius = std::pow(std::fabs(f.coefficient(0).get_d()) / std::fabs(f.leading().get_d()), 1.0 / n);
        if (!std::isfinite(radius) || radius == 0.0) {
            radius = 1.0;
        }
    }
    std::vector<MpComplex> z;
    z.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double angle = 2.0 * std::numbers::pi * k / n + kRootSeedAngle;
        z.emplace_back(std::polar(radius, angle), prec);
    }
    return z;
}

AberthRun aberth(const RatPoly& f, mpfr_prec_t prec) {
    std::vector<MpReal> a;
    for (const Rational& c : f.coefficients()) {
        a.emplace_back(c, prec);
    }
    const std::size_t n = static_cast<std::size_t>(f.degree());
    AberthRun run;
    run.roots = initial_guesses(f, prec);
    std::vector<bool> done(n, false);
    const MpReal eps = detail::power_of_two(-static_cast<long>(prec), prec);
    const MpReal rounding_slack(8.0 * static_cast<double>(n + 1), prec);
    MpComplex value(prec), deriv(prec);
    MpReal bound(prec);
    const MpComplex one(std::complex<double>(1.0, 0.0), prec);

    for (int iter = 0; iter < kMaxIterations; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) {
                continue;
            }
            MpComplex& zi = run.roots[i];
            horner(a, zi, value, deriv, bound);
            MpReal residual = value.norm().sqrt();
            if (!(rounding_slack * eps * bound < residual)) {
                done[i] = true;
                continue;
            }
            all_done = false;
            if (deriv.re.is_zero() && deriv.im.is_zero()) {
                // Step off a critical point.
                zi.re += MpReal(1e-3, prec);
                continue;
            }
            MpComplex w = value / deriv;
            MpComplex repulsion(prec);
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    repulsion += one / (zi - run.roots[j]);
                }
            }
            MpComplex delta = w / (one - w * repulsion);
            zi -= delta;
            MpReal step = delta.norm().sqrt();
            MpReal size = zi.norm().sqrt();
            if (!(MpReal(4.0, prec) * eps * size < step)) {
                done[i] = true;
            }
        }
        if (all_done) {
            run.converged = true;
            break;
        }
    }
    if (!run.converged) {
        run.converged = std::all_of(done.begin(), done.end(), [](bool d) { return d; });
    }
    return run;
}

/// max |f(r)| over roots given as doubles, evaluated with extra precision.
double max_residual(const RatPoly& f, const std::vector<MpComplex>& roots, mpfr_prec_t prec) {
    std::vector<MpReal> a;
    for (const Rational& c : f.coefficients()) {
        a.emplace_back(c, prec);
    }
    double worst = 0.0;
    MpComplex value(prec), deriv(prec);
    MpReal bound(prec);
    for (const auto& r : roots) {
        horner(a, r, value, deriv, bound);
        worst = std::max(worst, value.norm().sqrt().to_double());
    }
    return worst;
}

std::vector<std::complex<double>> canonical_order(std::vector<std::complex<double>> roots, double tol) {
    for (auto& r : roots) {
        if (std::fabs(r.imag()) <= 64.0 * tol * (1.0 + std::abs(r))) {
            r.imag(0.0);
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& x, const auto& y) { return x.real() < y.real(); });
    // Group runs of (numerically) equal real parts and order them by imaginary part.
    std::size_t start = 0;
    while (start < roots.size()) {
        std::size_t end = start + 1;
        const double anchor = roots[start].real();
        while (end < roots.size() &&
               roots[end].real() - anchor <= 1e3 * tol * (1.0 + std::fabs(anchor))) {
            ++end;
        }
        std::sort(roots.begin() + static_cast<std::ptrdiff_t>(start), roots.begin() + static_cast<std::ptrdiff_t>(end),
                  [](const auto& x, const auto& y) { return x.imag() < y.imag(); });
        start = end;
    }
    return roots;
}

} // namespace

std::vector<std::complex<double>> complex_roots(const RatPoly& f, double tol) {
    if (f.degree() < 1) {
        throw Error(ErrorKind::InvalidArgument, "root finding needs a nonconstant polynomial");
    }
    if (!(tol > 0.0) || !(tol < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "root tolerance must lie in (0, 1)");
    }
    if (!is_squarefree(f)) {
        throw Error(ErrorKind::InvalidArgument, "polynomial has a repeated root");
    }
    if (f.degree() == 1) {
        Rational r = -f.coefficient(0) / f.coefficient(1);
        return {std::complex<double>(r.get_d(), 0.0)};
    }
    const double target = tol * f.max_abs_coefficient();
    auto prec = static_cast<mpfr_prec_t>(std::max(24.0, std::ceil(std::log2(1.0 / tol)) + 8.0));
    double best = std::numeric_limits<double>::infinity();
    for (int attempt = 0; attempt <= kMaxPrecisionRaises; ++attempt, prec += 32) {
        AberthRun run = aberth(f, prec);
        std::vector<std::complex<double>> roots;
        roots.reserve(run.roots.size());
        for (const auto& z : run.roots) {
            roots.push_back(z.to_complex());
        }
        double residual = max_residual(f, run.roots, prec);
        best = std::min(best, residual);
        if (run.converged && residual <= target) {
            return canonical_order(std::move(roots), tol);
        }
    }
    throw ConvergenceError("root finder did not reach |f(r)| <= tol * max|coef|", best);
}

std::vector<detail::MpComplex> complex_roots_mp(const RatPoly& f, mpfr_prec_t precision) {
    if (f.degree() < 1) {
        throw Error(ErrorKind::InvalidArgument, "root finding needs a nonconstant polynomial");
    }
    if (!is_squarefree(f)) {
        throw Error(ErrorKind::InvalidArgument, "polynomial has a repeated root");
    }
    AberthRun run = aberth(f, precision);
    if (!run.converged) {
        throw ConvergenceError("high-precision root finder hit the iteration cap",
                               std::numeric_limits<double>::quiet_NaN());
    }
    return std::move(run.roots);
}

std::vector<std::complex<double>> expand_from_roots(const std::vector<std::complex<double>>& roots,
                                                    std::complex<double> leading) {
    std::vector<std::complex<double>> c{leading};
    for (const auto& r : roots) {
        std::vector<std::complex<double>> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return c;
}

} // namespace prym
