#pragma once

#include "prym/rat_poly.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prym {

/// Polynomial over F_p, p an odd prime, coefficients reduced to [0, p) and
/// stored low degree first with no trailing zeros.
class FpPoly {
public:
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coefficients);

    /// Coefficientwise reduction; throws BadPrime if p divides a denominator.
    static FpPoly reduce(const RatPoly& f, std::uint64_t p);
    static FpPoly reduce(const std::vector<Integer>& f, std::uint64_t p);
    static FpPoly x(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
    std::uint64_t coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint64_t leading() const;

    FpPoly derivative() const;
    FpPoly monic() const;
    std::uint64_t evaluate(std::uint64_t x) const;

    FpPoly& operator+=(const FpPoly& rhs);
    FpPoly& operator-=(const FpPoly& rhs);
    friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
    friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

private:
    void trim();

    std::uint64_t p_;
    std::vector<std::uint64_t> coeffs_;
};

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly gcd(FpPoly a, FpPoly b);
/// base^exponent mod m.
FpPoly pow_mod(const FpPoly& base, std::uint64_t exponent, const FpPoly& m);
bool is_squarefree(const FpPoly& f);

/// Degrees of the irreducible factors of a squarefree polynomial, largest
/// first. Comparison is lexicographic on that order.
struct DegreePattern {
    std::vector<int> parts;

    int total() const;
    std::string to_string() const;
    auto operator<=>(const DegreePattern&) const = default;
};

/// Distinct-degree factorization of a squarefree FpPoly (no splitting of the
/// equal-degree products).
DegreePattern distinct_degree_pattern(const FpPoly& f);

/// Monic of degree k with pattern {k}.
bool is_irreducible(const FpPoly& f);

/// Pattern of f mod p, or nullopt when f mod p is not squarefree. Scaling of f
/// is irrelevant; p must be an odd prime not dividing the leading coefficient
/// of the primitive integer form of f.
std::optional<DegreePattern> degree_pattern(const RatPoly& f, std::uint64_t p);

} // namespace prym
