#pragma once

#include "prym/fp_poly.hpp"
#include "prym/rat_poly.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prym {

enum class GaloisVerdict { CertifiedSymmetric, CertifiedIrreducible, Inconclusive };

std::string to_string(GaloisVerdict verdict);

/// Number of primes (good or bad, starting at 3) a certification run may try.
inline constexpr std::size_t kDefaultPrimeBudget = 500;

struct GaloisEvidence {
    /// Prime at which the possible-factor-degree set collapsed to {0, n}.
    std::optional<std::uint64_t> irreducibility_prime;
    /// Prime with pattern [n-1, 1].
    std::optional<std::uint64_t> long_cycle_prime;
    /// Prime whose pattern has exactly one part 2 and all other parts odd.
    std::optional<std::uint64_t> transposition_prime;

    bool complete() const {
        return irreducibility_prime && long_cycle_prime && transposition_prime;
    }
};

struct GaloisCertificate {
    RatPoly polynomial;
    std::vector<std::uint64_t> primes_inspected;
    /// Primes skipped because they divide the leading coefficient or the discriminant.
    std::vector<std::uint64_t> bad_primes;
    /// Each pattern observed, with the first prime that produced it.
    std::map<DegreePattern, std::uint64_t> patterns;
    GaloisVerdict verdict = GaloisVerdict::Inconclusive;
    GaloisEvidence evidence;
};

GaloisCertificate certify_irreducible(const RatPoly& f, std::size_t prime_budget = kDefaultPrimeBudget);

/// Dedekind patterns plus the classical criterion: transitive with an
/// (n-1)-cycle is 2-transitive hence primitive, and a primitive group
/// containing a transposition is S_n.
GaloisCertificate certify_symmetric(const RatPoly& f, std::size_t prime_budget = kDefaultPrimeBudget);

/// Frequency of each degree pattern over the good odd primes below `prime_bound`.
std::map<DegreePattern, std::size_t> pattern_census(const RatPoly& f, std::uint64_t prime_bound);

bool is_long_cycle_pattern(const DegreePattern& pattern);

/// An odd power of a Frobenius element with this cycle type is a transposition.
bool is_transposition_power_pattern(const DegreePattern& pattern);

} // namespace prym
