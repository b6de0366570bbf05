#pragma once

#include "prym/fp_poly.hpp"
#include "prym/rat_poly.hpp"
#include "prym/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace prym {

/// Integer polynomial, coefficients low to high.
using IntPoly = std::vector<Integer>;

inline constexpr int kMaxFrobeniusGenus = 4;
/// Largest field F_q enumerated by count_points.
inline constexpr std::uint64_t kMaxCountFieldOrder = 50'000'000;
inline constexpr unsigned kDefaultTwistExponent = 24;
/// Hom-zero search skips primes with p^g above this.
inline constexpr std::uint64_t kMaxHomSearchFieldOrder = 1'000'000;

/// Points on the smooth projective model of y^2 = f(x) over F_{p^k}.
/// A root x of f contributes the single point (x, 0). At infinity there is one
/// point for odd degree; for even degree two points when lc(f) is a square in
/// F_{p^k} and none otherwise.
std::uint64_t count_points(const FpPoly& f, int k);

struct FrobeniusData {
    std::uint64_t p = 0;
    int genus = 0;
    /// counts[k-1] = N_k for k = 1..g.
    std::vector<Integer> counts;
    /// power_sums[k-1] = p^k + 1 - N_k.
    std::vector<Integer> power_sums;
    /// Monic of degree 2g.
    IntPoly charpoly;
};

/// Reduces the coefficients of f mod p without rescaling, so the model is not twisted.
FrobeniusData frobenius_charpoly(const RatPoly& f, std::uint64_t p);

/// Characteristic polynomial of the r-th power of Frobenius.
IntPoly power_charpoly(const IntPoly& charpoly, unsigned r);
IntPoly power_charpoly(const FrobeniusData& data, unsigned r);

Integer evaluate(const IntPoly& poly, const Integer& x);
RatPoly to_rat_poly(const IntPoly& poly);
std::string to_string(const IntPoly& poly, std::string_view var = "T");

enum class HomGrade { ProvedOverFpr, Evidence };

std::string to_string(HomGrade grade);

struct HomAttempt {
    std::uint64_t p = 0;
    /// Degree of gcd of the two r-power charpolys; 0 means coprime.
    int gcd_degree = 0;
};

struct HomZeroCertificate {
    RatPoly f1;
    RatPoly f2;
    unsigned r = kDefaultTwistExponent;
    HomGrade grade = HomGrade::Evidence;
    /// Witness prime when proved, else the last good prime examined (0 if none).
    std::uint64_t p = 0;
    IntPoly charpoly1;
    IntPoly charpoly2;
    RatPoly gcd;
    std::vector<HomAttempt> attempts;
    std::string statement;
};

HomZeroCertificate hom_zero_certificate(const RatPoly& f1, const RatPoly& f2, std::size_t prime_budget,
                                        unsigned r = kDefaultTwistExponent);

/// Whether the genus-one curve y^2 = f(x) has trace of Frobenius divisible by p (p >= 5).
bool supersingular_check(const RatPoly& f, std::uint64_t p);

} // namespace prym
