#include "prym/error.hpp"
#include "prym/prym_census.hpp"
#include "prym/roots.hpp"

#include <doctest.h>

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

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

CensusOptions quick_options() {
    CensusOptions o;
    o.verify = {false, false, false};
    return o;
}

} // namespace

TEST_CASE("genus from degree") {
    CHECK(genus_from_degree(8) == 3);
    CHECK(genus_from_degree(7) == 3);
    CHECK(genus_from_degree(2) == 0);
    CHECK_THROWS_AS(genus_from_degree(1), Error);
}

TEST_CASE("partition enumeration examples") {
    auto six = enumerate_partitions(6);
    CHECK(six.size() == 15);
    for (const auto& p : six) {
        CHECK(p.n1 == 4);
        CHECK(p.n2 == 2);
    }
    auto eight = enumerate_partitions(8);
    CHECK(eight.size() == 63);
    CHECK(std::count_if(eight.begin(), eight.end(), [](const auto& p) { return p.n2 == 2; }) == 28);
    CHECK(std::count_if(eight.begin(), eight.end(), [](const auto& p) { return p.n2 == 4; }) == 35);
    CHECK(enumerate_partitions(4).size() == 3);
    CHECK_THROWS_AS(enumerate_partitions(7), Error);
    CHECK_THROWS_AS(enumerate_partitions(2), Error);
}

TEST_CASE("partition counts and invariants for all even n <= 16") {
    for (int n = 4; n <= 16; n += 2) {
        auto parts = enumerate_partitions(n);
        CHECK(parts.size() == (std::size_t{1} << (n - 2)) - 1);
        const int g = genus_from_degree(n);
        std::size_t pairs = 0;
        std::set<std::vector<std::size_t>> seen;
        for (const auto& p : parts) {
            CHECK(p.n1 + p.n2 == n);
            CHECK(p.n1 >= p.n2);
            CHECK(p.n2 % 2 == 0);
            CHECK(p.n2 >= 2);
            CHECK(p.g1 + p.g2 == g - 1);
            pairs += p.n2 == 2;
            // Unordered: the smaller side (or the side with 0 when equal) is unique.
            CHECK(seen.insert(p.r2).second);
            if (p.n1 == p.n2) {
                CHECK(p.r2.front() == 0);
            }
        }
        // At n = 4 each (2, 2) split pairs two complementary 2-subsets.
        CHECK(pairs == (n == 4 ? 3 : binomial(static_cast<std::uint64_t>(n), 2)));
    }
}

TEST_CASE("partitions are ordered by n2 then R2") {
    auto parts = enumerate_partitions(10);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto& a = parts[i - 1];
        const auto& b = parts[i];
        CHECK((a.n2 < b.n2 || (a.n2 == b.n2 && a.r2 < b.r2)));
    }
}

TEST_CASE("classification follows the degree thresholds") {
    CurveSpec spec8 = CurveSpec::from_polynomial(x_n_minus_x_minus_1(8));
    GaloisCertificate cert8 = certify_symmetric(spec8.certified_factor());
    auto parts = enumerate_partitions(8);
    PrymPartition p62 = classify(spec8, cert8, parts.front());
    CHECK(p62.hypothesis_met);
    CHECK(p62.endo == EndoLabel::Z);
    CHECK(p62.hodge == HodgeLabel::Sp);
    CHECK(p62.property_d);
    PrymPartition p44 = classify(spec8, cert8, parts.back());
    CHECK(p44.endo == EndoLabel::ZxZ);
    CHECK(p44.hodge == HodgeLabel::SpxSp);
    CHECK(p44.property_d);

    CurveSpec spec6 = CurveSpec::from_polynomial(x_n_minus_x_minus_1(6));
    GaloisCertificate cert6 = certify_symmetric(spec6.certified_factor());
    PrymPartition p6 = classify(spec6, cert6, enumerate_partitions(6).front());
    CHECK_FALSE(p6.hypothesis_met);
    CHECK(p6.property_d);
    CHECK(p6.endo == EndoLabel::Unclassified);
    CHECK(to_string(p6.endo) == "unclassified by theorem");

    GaloisCertificate weak = certify_symmetric(RatPoly{1, 0, 0, 0, 0, 0, 0, 0, 1}, 5);
    CHECK_THROWS_AS(classify(spec8, weak, parts.front()), Error);
}

TEST_CASE("split-linear shape needs n >= 10") {
    CurveSpec s10 = CurveSpec::from_polynomial(RatPoly{0, 1} * x_n_minus_x_minus_1(9));
    CHECK(s10.shape == CurveShape::SplitLinear);
    CHECK(*s10.a == 0);
    CHECK(s10.certified_factor() == x_n_minus_x_minus_1(9));
    CHECK(hypothesis_degree_met(s10));
    CurveSpec s8 = CurveSpec::from_polynomial(RatPoly{-2, 1} * x_n_minus_x_minus_1(7));
    CHECK(s8.shape == CurveShape::SplitLinear);
    CHECK(*s8.a == 2);
    CHECK_FALSE(hypothesis_degree_met(s8));
    CHECK(CurveSpec::from_polynomial(RatPoly{-3, 2} * x_n_minus_x_minus_1(7)).a == make_rational(3, 2));
}

TEST_CASE("curve validation") {
    CHECK_THROWS_AS(CurveSpec::from_polynomial(x_n_minus_x_minus_1(7)), Error);
    CHECK_THROWS_AS(CurveSpec::from_polynomial(RatPoly{1, 0, 1}), Error);
    CHECK_THROWS_AS(CurveSpec::from_polynomial(RatPoly{1, 0, 1} * RatPoly{1, 0, 1}), Error);
}

TEST_CASE("instantiate factors") {
    CurveSpec spec = CurveSpec::from_polynomial(RatPoly{-1, 0, 0, 0, 1});
    auto roots = complex_roots(spec.f, 1e-12);
    // Canonical order: -1, -i, +i, 1.
    PrymPartition part = enumerate_partitions(4)[2];
    REQUIRE(part.r2 == std::vector<std::size_t>{0, 3});
    FactorPair pair = instantiate_factors(spec, part, 1e-12);
    CHECK(std::abs(pair.f2[0] - std::complex<double>(-1, 0)) < 1e-12);
    CHECK(std::abs(pair.f2[1]) < 1e-12);
    CHECK(std::abs(pair.f1[0] - std::complex<double>(1, 0)) < 1e-12);
    CHECK(std::abs(pair.f1[1]) < 1e-12);

    CurveSpec six = CurveSpec::from_polynomial(x_n_minus_x_minus_1(6));
    for (const auto& p : enumerate_partitions(6)) {
        FactorPair fp = instantiate_factors(six, p, 1e-12);
        CHECK(fp.reconstruction_error <= 10 * 1e-12);
    }
    CHECK_THROWS_AS(CurveSpec::from_polynomial(RatPoly{1, 0, 1} * RatPoly{1, 0, 1}), Error);
}

TEST_CASE("odd-degree model examples") {
    CHECK(odd_degree_model(0, RatPoly{-2, 0, 0, 1}) == RatPoly{1, 0, 0, -2});
    CHECK(odd_degree_model(1, RatPoly{-2, 0, 0, 1}) == RatPoly{1, 3, 3, -1});
    CHECK_THROWS_AS(odd_degree_model(1, RatPoly{-1, 0, 0, 1}), Error);
    CHECK_THROWS_AS(odd_degree_model(0, RatPoly{-2, 0, 1}), Error);
    // Roots of h are 1/(alpha - 1) for alpha^3 = 2.
    auto h_roots = complex_roots(RatPoly{1, 3, 3, -1}, 1e-13);
    for (auto alpha : complex_roots(RatPoly{-2, 0, 0, 1}, 1e-13)) {
        std::complex<double> want = 1.0 / (alpha - 1.0);
        double best = 1e9;
        for (auto r : h_roots) {
            best = std::min(best, std::abs(r - want));
        }
        CHECK(best < 1e-10);
    }
}

TEST_CASE("odd-degree model identity and leading coefficient") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 3 + 2 * (trial % 3);
        std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
        for (auto& x : c) {
            x = coeff(rng);
        }
        c.back() = coeff(rng) == 0 ? 1 : 2;
        RatPoly fs(c);
        Rational b = make_rational(coeff(rng), 1 + trial % 4);
        if (fs.evaluate(b) == 0) {
            continue;
        }
        RatPoly h = odd_degree_model(b, fs);
        CHECK(h.degree() == m);
        CHECK(h.leading() == fs.evaluate(b));
        // Check h(x) = x^m fS(b + 1/x) at several rational points.
        for (int k = 1; k <= 4; ++k) {
            Rational x = make_rational(k, 3);
            Rational lhs = h.evaluate(x);
            Rational rhs = power(x, static_cast<unsigned long>(m)) * fs.evaluate(b + 1 / x);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("census of x^8 - x - 1") {
    CensusReport r = build_census(CurveSpec::from_polynomial(x_n_minus_x_minus_1(8)), CensusOptions{});
    CHECK(r.hypothesis == Hypothesis::Certified);
    CHECK(r.summary.total == 63);
    CHECK(r.summary.end_z == 28);
    CHECK(r.summary.end_zz == 35);
    CHECK(r.summary.property_d == 63);
    CHECK(r.summary.failed == 0);
    CHECK(r.attachment_errors.empty());
    CHECK(r.lemma_key.size() == 2);
    for (const auto& l : r.lemma_key) {
        CHECK(l.all_hold());
    }
    CHECK(r.frobenius.size() == 2);
    REQUIRE(r.j_census);
    CHECK(r.j_census->records.size() == 70);
    CHECK(r.fully_classified());
}

TEST_CASE("census of x^6 - x - 1 is unclassified but has property D") {
    CensusReport r = build_census(CurveSpec::from_polynomial(x_n_minus_x_minus_1(6)), quick_options());
    CHECK(r.summary.total == 15);
    CHECK(r.summary.unclassified == 15);
    CHECK(r.summary.property_d == 15);
    for (const auto& row : r.rows) {
        CHECK_FALSE(row.partition.hypothesis_met);
    }
    CHECK_FALSE(r.fully_classified());
}

TEST_CASE("split-linear census at n = 10") {
    CensusReport r = build_census(CurveSpec::from_polynomial(RatPoly{0, 1} * x_n_minus_x_minus_1(9)), CensusOptions{});
    CHECK(r.certificate.verdict == GaloisVerdict::CertifiedSymmetric);
    CHECK(r.certificate.polynomial == x_n_minus_x_minus_1(9));
    CHECK(r.summary.total == 255);
    CHECK(r.summary.end_z == 45);
    CHECK(r.summary.end_zz == 210);
    REQUIRE(r.j_census);
    CHECK(r.j_census->records.size() == 84);
    for (const auto& l : r.lemma_key) {
        CHECK(l.n == 9);
        CHECK(l.all_hold());
    }
}

TEST_CASE("uncertified input yields unclassified rows, or assumed labels on request") {
    // (x^2 - 2)(x^2 - 3)(x^2 - 5)(x^2 - 7) has Galois group (Z/2)^4.
    RatPoly f = RatPoly{-2, 0, 1} * RatPoly{-3, 0, 1} * RatPoly{-5, 0, 1} * RatPoly{-7, 0, 1};
    CurveSpec spec = CurveSpec::from_polynomial(f);
    CensusOptions o = quick_options();
    o.prime_budget = 60;
    CensusReport r = build_census(spec, o);
    CHECK(r.hypothesis == Hypothesis::NotCertified);
    CHECK(r.summary.unclassified == 63);
    CHECK(r.summary.property_d == 63);
    o.assume_symmetric = true;
    CensusReport assumed = build_census(spec, o);
    CHECK(assumed.hypothesis == Hypothesis::AssumedUnverified);
    CHECK(assumed.summary.end_z == 28);
}
