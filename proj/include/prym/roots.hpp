#pragma once

#include "prym/mp_complex.hpp"
#include "prym/rat_poly.hpp"

#include <complex>
#include <vector>

namespace prym {

/// Fixed angular offset of the initial Aberth guesses (radians). All root
/// computations are deterministic for a given polynomial and tolerance.
inline constexpr double kRootSeedAngle = 0.4;

/// Approximations of all deg(f) complex roots of a squarefree f.
///
/// Aberth-Ehrlich iteration in MPFR arithmetic. The working precision starts
/// at ceil(log2(1/tol)) + 8 bits and is raised until every working-precision
/// root r satisfies |f(r)| <= tol * max|coefficient|, so the accuracy of the
/// result tracks tol. The returned values are those roots rounded to double,
/// which adds up to |f'(r)| |r| 2^-53 to the residual. Output is sorted by (real, imaginary), with real parts that
/// agree to within the tolerance treated as ties.
///
/// Throws InvalidArgument for constant or non-squarefree input and
/// ConvergenceError (carrying the best residual) when the iteration cap is hit.
std::vector<std::complex<double>> complex_roots(const RatPoly& f, double tol);

/// Same iteration at a fixed binary precision, iterated to full working
/// accuracy; no sorting. Used for high-precision reference values.
std::vector<detail::MpComplex> complex_roots_mp(const RatPoly& f, mpfr_prec_t precision);

/// Coefficients of lc * prod (x - r), low degree first.
std::vector<std::complex<double>> expand_from_roots(const std::vector<std::complex<double>>& roots,
                                                    std::complex<double> leading = 1.0);

} // namespace prym
