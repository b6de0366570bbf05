#include "prym/galois_cert.hpp"

#include "prym/error.hpp"
#include "prym/prime.hpp"

#include <vector>

namespace prym {

namespace {

using DegreeSet = std::vector<bool>;

DegreeSet subset_sums(const DegreePattern& pattern, int n) {
    DegreeSet sums(static_cast<std::size_t>(n) + 1, false);
    sums[0] = true;
    for (int part : pattern.parts) {
        for (int s = n - part; s >= 0; --s) {
            if (sums[s]) {
                sums[s + part] = true;
            }
        }
    }
    return sums;
}

bool only_trivial_degrees(const DegreeSet& d) {
    for (std::size_t i = 1; i + 1 < d.size(); ++i) {
        if (d[i]) {
            return false;
        }
    }
    return true;
}

void check_input(const RatPoly& f, std::size_t budget, int min_degree) {
    if (budget == 0) {
        throw Error(ErrorKind::InvalidArgument, "prime budget must be positive");
    }
    if (f.degree() < min_degree) {
        throw Error(ErrorKind::InvalidArgument,
                    "certification requires degree >= " + std::to_string(min_degree));
    }
    if (!is_squarefree(f)) {
        throw Error(ErrorKind::InvalidArgument, "polynomial has a repeated root");
    }
}

GaloisCertificate certify(const RatPoly& f, std::size_t budget, bool want_symmetric) {
    const int n = f.degree();
    GaloisCertificate cert;
    cert.polynomial = f;
    DegreeSet possible(static_cast<std::size_t>(n) + 1, true);

    std::uint64_t p = 3;
    for (std::size_t tried = 0; tried < budget; ++tried, p = next_prime(p + 1)) {
        cert.primes_inspected.push_back(p);
        std::optional<DegreePattern> pattern;
        try {
            pattern = degree_pattern(f, p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BadPrime) {
                throw;
            }
        }
        if (!pattern) {
            cert.bad_primes.push_back(p);
            continue;
        }
        cert.patterns.try_emplace(*pattern, p);

        if (!cert.evidence.irreducibility_prime) {
            DegreeSet sums = subset_sums(*pattern, n);
            for (std::size_t i = 0; i < possible.size(); ++i) {
                possible[i] = possible[i] && sums[i];
            }
            if (only_trivial_degrees(possible)) {
                cert.evidence.irreducibility_prime = p;
            }
        }
        if (want_symmetric) {
            if (!cert.evidence.long_cycle_prime && is_long_cycle_pattern(*pattern)) {
                cert.evidence.long_cycle_prime = p;
            }
            if (!cert.evidence.transposition_prime && is_transposition_power_pattern(*pattern)) {
                cert.evidence.transposition_prime = p;
            }
            if (cert.evidence.complete()) {
                break;
            }
        } else if (cert.evidence.irreducibility_prime) {
            break;
        }
    }

    if (want_symmetric && cert.evidence.complete()) {
        cert.verdict = GaloisVerdict::CertifiedSymmetric;
    } else if (cert.evidence.irreducibility_prime) {
        cert.verdict = GaloisVerdict::CertifiedIrreducible;
    }
    return cert;
}

} // namespace

std::string to_string(GaloisVerdict verdict) {
    switch (verdict) {
    case GaloisVerdict::CertifiedSymmetric:
        return "CertifiedSymmetric";
    case GaloisVerdict::CertifiedIrreducible:
        return "CertifiedIrreducible";
    case GaloisVerdict::Inconclusive:
        return "Inconclusive";
    }
    return "Inconclusive";
}

bool is_long_cycle_pattern(const DegreePattern& pattern) {
    const int n = pattern.total();
    return n >= 3 && pattern.parts.size() == 2 && pattern.parts[0] == n - 1 && pattern.parts[1] == 1;
}

bool is_transposition_power_pattern(const DegreePattern& pattern) {
    int twos = 0;
    for (int part : pattern.parts) {
        if (part == 2) {
            ++twos;
        } else if (part % 2 == 0) {
            return false;
        }
    }
    return twos == 1;
}

GaloisCertificate certify_irreducible(const RatPoly& f, std::size_t prime_budget) {
    check_input(f, prime_budget, 2);
    return certify(f, prime_budget, false);
}

GaloisCertificate certify_symmetric(const RatPoly& f, std::size_t prime_budget) {
    check_input(f, prime_budget, 3);
    return certify(f, prime_budget, true);
}

std::map<DegreePattern, std::size_t> pattern_census(const RatPoly& f, std::uint64_t prime_bound) {
    std::map<DegreePattern, std::size_t> census;
    for (std::uint64_t p = 3; p < prime_bound; p = next_prime(p + 1)) {
        try {
            if (auto pattern = degree_pattern(f, p)) {
                ++census[*pattern];
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BadPrime) {
                throw;
            }
        }
    }
    return census;
}

} // namespace prym
