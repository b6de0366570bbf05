#pragma once

#include "prym/fp_poly.hpp"

#include <array>
#include <cstdint>

namespace prym {

inline constexpr int kMaxExtensionDegree = 8;

/// Element of F_{p^k}: residue polynomial of degree < k, low degree first.
/// Arithmetic goes through the owning FqField.
struct FqElem {
    std::array<std::uint64_t, kMaxExtensionDegree> c{};

    friend bool operator==(const FqElem&, const FqElem&) = default;
};

/// F_{p^k} = F_p[t] / (m(t)) for a monic irreducible m of degree k.
/// p must be an odd prime below 2^32 so that products fit in 64 bits.
class FqField {
public:
    /// Finds m by a seeded random monic search checked with distinct-degree
    /// factorization. Deterministic for fixed (p, k).
    FqField(std::uint64_t p, int k);
    /// Uses the given defining polynomial after verifying irreducibility.
    explicit FqField(const FpPoly& defining);

    std::uint64_t characteristic() const { return p_; }
    int degree() const { return k_; }
    std::uint64_t order() const { return q_; }
    const FpPoly& defining_polynomial() const { return modulus_; }

    FqElem zero() const { return {}; }
    FqElem one() const;
    FqElem from_base(std::uint64_t a) const;
    /// Class of t (the primitive element of the power basis).
    FqElem generator() const;

    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem sub(const FqElem& a, const FqElem& b) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem pow(FqElem base, std::uint64_t exponent) const;
    FqElem frobenius(const FqElem& a) const { return pow(a, p_); }
    bool is_zero(const FqElem& a) const;

    /// Bijection F_q <-> [0, q) via base-p digits of the coefficients.
    std::uint64_t index(const FqElem& a) const;
    FqElem element(std::uint64_t index) const;

    /// Evaluate a polynomial with F_p coefficients at a point of F_q.
    FqElem evaluate(const FpPoly& f, const FqElem& x) const;

private:
    void init_tables();

    std::uint64_t p_;
    int k_;
    std::uint64_t q_;
    FpPoly modulus_;
    std::array<std::uint64_t, kMaxExtensionDegree> low_{}; // m = t^k + sum low_[i] t^i
};

} // namespace prym
