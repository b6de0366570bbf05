#include "oracles.hpp"

#include "prym/elliptic.hpp"
#include "prym/error.hpp"
#include "prym/frobenius.hpp"
#include "prym/prime.hpp"
#include "prym/roots.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

using namespace prym;

namespace {

using C = std::complex<double>;

double rel(C a, C b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

std::vector<C> random_quadruple(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    while (true) {
        std::vector<C> q;
        for (int i = 0; i < 4; ++i) {
            q.emplace_back(u(rng), u(rng));
        }
        bool separated = true;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                separated = separated && std::abs(q[i] - q[j]) > 0.5;
            }
        }
        if (separated) {
            return q;
        }
    }
}

RatPoly x_n_minus_x_minus_1(int n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = -1;
    c[1] = -1;
    c.back() = 1;
    return RatPoly(c);
}

} // namespace

TEST_CASE("harmonic configuration has j = 1728") {
    // lambda = 2 for the roots (0, 1, -1, -1/3).
    std::vector<C> roots{0.0, 1.0, -1.0, -1.0 / 3.0};
    C lambda = (roots[0] - roots[2]) * (roots[1] - roots[3]) / ((roots[0] - roots[3]) * (roots[1] - roots[2]));
    CHECK(std::abs(lambda - 2.0) < 1e-12);
    C j = j_from_roots(roots[0], roots[1], roots[2], roots[3]);
    CHECK(rel(j, 1728.0) < 1e-12);
    CHECK(rel(oracle::invariant_j(roots), 1728.0) < 1e-12);
    CHECK(quartic_j_invariant(RatPoly::from_roots({0, 1, -1, make_rational(-1, 3)})) == 1728);
}

TEST_CASE("x^4 - 1 is lemniscatic") {
    C j = j_from_roots(1.0, -1.0, C(0, 1), C(0, -1));
    CHECK(rel(j, 1728.0) < 1e-12);
    CHECK(quartic_j_invariant(RatPoly{-1, 0, 0, 0, 1}) == 1728);
    CHECK(quartic_j_invariant(RatPoly{1, 0, 0, 1}) == 0);
    CHECK_THROWS_AS(j_from_roots(1.0, 1.0, 2.0, 3.0), Error);
}

TEST_CASE("j is invariant under reordering and Moebius maps") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<C> q = random_quadruple(rng);
        C base = j_from_roots(q[0], q[1], q[2], q[3]);
        CHECK(rel(base, oracle::invariant_j(q)) < 1e-9);
        std::vector<int> idx{0, 1, 2, 3};
        double worst = 0.0;
        do {
            worst = std::max(worst, rel(j_from_roots(q[idx[0]], q[idx[1]], q[idx[2]], q[idx[3]]), base));
        } while (std::next_permutation(idx.begin(), idx.end()));
        CHECK(worst < 1e-9);

        C a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng)), d(u(rng), u(rng));
        if (std::abs(a * d - b * c) < 0.5) {
            continue;
        }
        std::vector<C> m;
        bool finite = true;
        for (auto z : q) {
            C den = c * z + d;
            finite = finite && std::abs(den) > 0.2;
            m.push_back((a * z + b) / den);
        }
        if (finite) {
            CHECK(rel(j_from_roots(m[0], m[1], m[2], m[3]), base) < 1e-9);
        }
    }
}

TEST_CASE("exact j agrees with the lambda route on rational quartics") {
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<int> coeff(-7, 7);
    int checked = 0;
    while (checked < 25) {
        RatPoly q{coeff(rng), coeff(rng), coeff(rng), coeff(rng), 1 + std::abs(coeff(rng))};
        if (!is_squarefree(q)) {
            continue;
        }
        auto r = complex_roots(q, 1e-14);
        C numeric = j_from_roots(r[0], r[1], r[2], r[3]);
        double exact = quartic_j_invariant(q).get_d();
        CHECK(rel(numeric, exact) < 1e-6);
        ++checked;
    }
}

TEST_CASE("j-census record counts") {
    CHECK(j_census(CurveSpec::from_polynomial(x_n_minus_x_minus_1(8)), 1e-12).size() == 70);
    CHECK(j_census(CurveSpec::from_polynomial(x_n_minus_x_minus_1(10)), 1e-12).size() == 210);
    auto split6 = j_census(CurveSpec::from_polynomial(RatPoly{0, 1} * x_n_minus_x_minus_1(5)), 1e-12);
    CHECK(split6.size() == 10);
    for (const auto& r : split6) {
        CHECK(r.subset.size() == 3);
        REQUIRE(r.marked);
        CHECK(std::find(r.subset.begin(), r.subset.end(), *r.marked) == r.subset.end());
    }
    auto single = j_census(CurveSpec::from_polynomial(RatPoly{-1, 0, 0, 0, 1}), 1e-12);
    REQUIRE(single.size() == 1);
    CHECK(rel(single[0].j, 1728.0) < 1e-9);
    REQUIRE(single[0].exact_j);
    CHECK(*single[0].exact_j == 1728);
}

TEST_CASE("rationality evidence for x^8 - x - 1") {
    CurveSpec spec = CurveSpec::from_polynomial(x_n_minus_x_minus_1(8));
    RationalityEvidence ev = symmetric_rationality_evidence(spec, 1e-12);
    CHECK(ev.records == 70);
    CHECK(ev.pass);
    REQUIRE(ev.values[0].reference);
    CHECK(*ev.values[0].reference == make_rational(376758169088L, 1600069L));
    ShrinkageReport s = rationality_shrinkage(spec, 1e-10, 1e-14);
    CHECK(s.factor >= 100.0);
}

TEST_CASE("rationality evidence is order independent") {
    // The same curve with roots listed in another order: substitute x -> -x.
    CurveSpec a = CurveSpec::from_polynomial(x_n_minus_x_minus_1(8));
    CurveSpec b = CurveSpec::from_polynomial(RatPoly{-1, 1, 0, 0, 0, 0, 0, 0, 1});
    auto ea = symmetric_rationality_evidence(a, 1e-12);
    auto eb = symmetric_rationality_evidence(b, 1e-12);
    // x -> -x is a Moebius map, so the j multiset is unchanged.
    for (std::size_t i = 0; i < ea.values.size(); ++i) {
        CHECK(ea.values[i].reference == eb.values[i].reference);
    }
}

TEST_CASE("rational quartic factors give exact rational symmetric functions") {
    CurveSpec spec = CurveSpec::from_polynomial(RatPoly{-1, 0, 0, 0, 1});
    RationalityEvidence ev = symmetric_rationality_evidence(spec, 1e-12);
    REQUIRE(ev.values[0].reference);
    CHECK(*ev.values[0].reference == 1728);
    CHECK(ev.values[0].residual < 1e-12);
}

TEST_CASE("CM table loads and verifies") {
    CmTable table = CmTable::builtin();
    CHECK(table.entries().size() == 13);
    for (const auto& v : table.verify()) {
        CHECK_MESSAGE(v.ok, "discriminant " << v.discriminant);
        CHECK(v.primes.size() == 3);
    }
    if (const char* dir = std::getenv("PRYM_DATA_DIR")) {
        CmTable file = CmTable::from_file(std::string(dir) + "/cm_table.txt");
        REQUIRE(file.entries().size() == table.entries().size());
        for (std::size_t i = 0; i < file.entries().size(); ++i) {
            CHECK(file.entries()[i].discriminant == table.entries()[i].discriminant);
            CHECK(file.entries()[i].j == table.entries()[i].j);
        }
    }
    CHECK_THROWS_AS(CmTable::from_text("-3\n"), Error);
    CHECK_THROWS_AS(CmTable::from_text("3 0\n"), Error);
    CHECK_THROWS_AS(CmTable::from_text("# empty\n"), Error);
}

TEST_CASE("models have the requested j") {
    const CmTable table = CmTable::builtin();
    for (const auto& e : table.entries()) {
        CHECK(quartic_j_invariant(elliptic_model_with_j(Rational(e.j))) == Rational(e.j));
    }
}

TEST_CASE("CM screen examples") {
    CmTable table = CmTable::builtin();
    JRecord r;
    r.j = 1728.0;
    CHECK(cm_screen(r, table).discriminant == -4);
    r.j = 0.0;
    CHECK(cm_screen(r, table).discriminant == -3);
    r.j = 1729.0;
    CHECK_FALSE(cm_screen(r, table).matches());
    r.exact_j = 1728;
    CHECK(cm_screen(r, table).discriminant == -4);
    // j = 1728 is supersingular exactly at p = 3 mod 4.
    for (std::uint64_t p = 5; p < 60; p = next_prime(p + 1)) {
        CHECK(supersingular_check(elliptic_model_with_j(1728), p) == (p % 4 == 3));
    }
}
