#pragma once

#include <cstdint>

namespace prym {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

/// Legendre symbol (a/p) for an odd prime p: 1, -1 or 0.
int legendre(std::uint64_t a, std::uint64_t p);

} // namespace prym
