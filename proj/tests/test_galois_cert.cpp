#include "oracles.hpp"

#include "prym/error.hpp"
#include "prym/galois_cert.hpp"
#include "prym/perm_groups.hpp"
#include "prym/prime.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace prym;

namespace {

RatPoly x_n_minus_x_minus_1(int n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = -1;
    c[1] = -1;
    c.back() = 1;
    return RatPoly(c);
}

std::uint64_t fact(std::uint64_t n) {
    return n <= 1 ? 1 : n * fact(n - 1);
}

} // namespace

TEST_CASE("irreducibility certificates") {
    GaloisCertificate c = certify_irreducible(RatPoly{-2, 0, 1}, 50);
    CHECK(c.verdict == GaloisVerdict::CertifiedIrreducible);
    REQUIRE(c.evidence.irreducibility_prime);
    // 2 is a non-residue mod 3, so x^2 - 2 stays irreducible there.
    CHECK(oracle::roots_mod_p(RatPoly{-2, 0, 1}, 3).empty());
    CHECK(*c.evidence.irreducibility_prime == 3);

    CHECK(certify_irreducible(RatPoly{-1, 0, 1}, 100).verdict == GaloisVerdict::Inconclusive);
    CHECK(certify_irreducible(RatPoly{1, 0, 0, 0, 1}, 200).verdict == GaloisVerdict::Inconclusive);
    CHECK_THROWS_AS(certify_irreducible(RatPoly{-2, 0, 1}, 0), Error);
}

TEST_CASE("x^4 + 1 only ever shows patterns {1,1,1,1}, {2,2}, {1,1,2}") {
    RatPoly f{1, 0, 0, 0, 1};
    std::set<std::vector<int>> allowed{{1, 1, 1, 1}, {2, 2}, {2, 1, 1}};
    for (std::uint64_t p = 3; p < 100; p = next_prime(p + 1)) {
        auto pattern = degree_pattern(f, p);
        REQUIRE(pattern);
        CHECK(allowed.count(pattern->parts) == 1);
        // Brute force: the number of linear parts equals the number of roots mod p.
        auto ones = static_cast<std::size_t>(std::count(pattern->parts.begin(), pattern->parts.end(), 1));
        CHECK(ones == oracle::roots_mod_p(f, p).size());
    }
    CHECK(certify_symmetric(f, 200).verdict == GaloisVerdict::Inconclusive);
}

TEST_CASE("x^n - x - 1 is certified symmetric") {
    for (int n : {8, 9}) {
        GaloisCertificate c = certify_symmetric(x_n_minus_x_minus_1(n), kDefaultPrimeBudget);
        CHECK(c.verdict == GaloisVerdict::CertifiedSymmetric);
        CHECK(c.evidence.complete());
        for (const auto& [pattern, prime] : c.patterns) {
            CHECK(pattern.total() == n);
            CHECK(std::find(c.bad_primes.begin(), c.bad_primes.end(), prime) == c.bad_primes.end());
        }
        REQUIRE(c.evidence.long_cycle_prime);
        CHECK(is_long_cycle_pattern(*degree_pattern(c.polynomial, *c.evidence.long_cycle_prime)));
        REQUIRE(c.evidence.transposition_prime);
        CHECK(is_transposition_power_pattern(*degree_pattern(c.polynomial, *c.evidence.transposition_prime)));
    }
    // x^8 - x - 1 has discriminant -11 * 1600069, so it is not squarefree mod 11.
    CHECK(oracle::sylvester_discriminant(x_n_minus_x_minus_1(8)) == -17600759);
    CHECK_FALSE(degree_pattern(x_n_minus_x_minus_1(8), 11).has_value());
}

TEST_CASE("bad primes are never recorded") {
    // Monic form x^5 + 3/5: p = 5 divides a denominator, and mod 3 it is x^5.
    RatPoly f{3, 0, 0, 0, 0, 5};
    GaloisCertificate c = certify_symmetric(f, 40);
    CHECK(std::find(c.bad_primes.begin(), c.bad_primes.end(), 3) != c.bad_primes.end());
    CHECK(std::find(c.bad_primes.begin(), c.bad_primes.end(), 5) != c.bad_primes.end());
    for (const auto& [pattern, prime] : c.patterns) {
        CHECK(prime != 3);
        CHECK(prime != 5);
    }
}

TEST_CASE("larger budgets never undo a certificate") {
    RatPoly f = x_n_minus_x_minus_1(7);
    GaloisVerdict previous = GaloisVerdict::Inconclusive;
    for (std::size_t budget = 1; budget <= 60; ++budget) {
        GaloisVerdict v = certify_symmetric(f, budget).verdict;
        if (previous == GaloisVerdict::CertifiedSymmetric) {
            CHECK(v == GaloisVerdict::CertifiedSymmetric);
        }
        if (previous == GaloisVerdict::CertifiedIrreducible) {
            CHECK(v != GaloisVerdict::Inconclusive);
        }
        previous = v;
    }
    CHECK(previous == GaloisVerdict::CertifiedSymmetric);
}

TEST_CASE("pattern census") {
    auto census = pattern_census(RatPoly{1, 0, 1}, 30);
    std::size_t split = 0, inert = 0;
    for (std::uint64_t p = 3; p < 30; p = next_prime(p + 1)) {
        (p % 4 == 1 ? split : inert) += 1;
    }
    CHECK(census[DegreePattern{{1, 1}}] == split);
    CHECK(census[DegreePattern{{2}}] == inert);
    CHECK(pattern_census(RatPoly{0, 0, 1}, 100).empty());
}

TEST_CASE("8-cycle frequency of x^8 - x - 1 is near 1/8") {
    // The S_8 class of 8-cycles has 7! elements; count them through the group engine.
    Subgroup s8 = Subgroup::symmetric(8);
    std::size_t eight_cycles = 0;
    for (const auto& g : s8.elements()) {
        eight_cycles += g.cycle_type() == std::vector<std::size_t>{8};
    }
    const double density = static_cast<double>(eight_cycles) / static_cast<double>(s8.order());
    CHECK(density == doctest::Approx(1.0 / 8));
    auto census = pattern_census(x_n_minus_x_minus_1(8), 10000);
    std::size_t total = 0;
    for (const auto& [pattern, count] : census) {
        total += count;
    }
    const double observed = static_cast<double>(census[DegreePattern{{8}}]) / static_cast<double>(total);
    CHECK(observed > density / 3);
    CHECK(observed < density * 3);
}

TEST_CASE("criterion soundness: exhaustive for n <= 6") {
    // Any transitive group containing an (n-1)-cycle and a transposition is S_n.
    // Conjugating, the cycle may be taken as (0 1 ... n-2).
    for (std::size_t n = 3; n <= 6; ++n) {
        std::vector<std::size_t> pts(n - 1);
        std::iota(pts.begin(), pts.end(), 0);
        Permutation c = Permutation::cycle(n, pts);
        Subgroup sn = Subgroup::symmetric(n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                Permutation t = Permutation::transposition(n, a, b);
                for (const auto& w : sn.elements()) {
                    Subgroup g = Subgroup::generated_by(n, {c, t, w});
                    if (is_k_transitive(g, 1)) {
                        CHECK(g.order() == fact(n));
                    }
                }
            }
        }
    }
}

TEST_CASE("criterion soundness: sampled for n = 7, 8") {
    std::mt19937_64 rng(21);
    for (std::size_t n : {7u, 8u}) {
        std::vector<std::size_t> pts(n - 1);
        std::iota(pts.begin(), pts.end(), 0);
        Permutation c = Permutation::cycle(n, pts);
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<std::size_t> img(n);
            std::iota(img.begin(), img.end(), 0);
            std::shuffle(img.begin(), img.end(), rng);
            Permutation w(img);
            std::size_t a = rng() % n, b = (a + 1 + rng() % (n - 1)) % n;
            Subgroup g = Subgroup::generated_by(n, {c, Permutation::transposition(n, a, b), w});
            if (is_k_transitive(g, 1)) {
                CHECK(g.order() == fact(n));
            }
        }
    }
}
