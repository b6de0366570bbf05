#include "prym/error.hpp"
#include "prym/perm_groups.hpp"

#include <doctest.h>

#include <map>

using namespace prym;

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> out;
    for (std::size_t i = from; i < to; ++i) {
        out.push_back(i);
    }
    return out;
}

std::vector<Permutation> transpositions_of(std::size_t n, const std::vector<std::size_t>& set) {
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            gens.push_back(Permutation::transposition(n, set[i], set[j]));
        }
    }
    return gens;
}

std::uint64_t fact(std::uint64_t n) {
    return n <= 1 ? 1 : n * fact(n - 1);
}

} // namespace

TEST_CASE("permutation basics") {
    Permutation c = Permutation::cycle(5, {0, 1, 2});
    CHECK(c(0) == 1);
    CHECK(c(2) == 0);
    CHECK((c * c * c).is_identity());
    CHECK((c * c.inverse()).is_identity());
    CHECK(c.cycle_type() == std::vector<std::size_t>{3, 1, 1});
    CHECK(c.is_even());
    CHECK_FALSE(Permutation::transposition(5, 1, 4).is_even());
    CHECK_THROWS_AS(Permutation(std::vector<std::size_t>{0, 0, 1}), Error);
    CHECK(Permutation::identity(6).rank() == 0);
    CHECK(Permutation(std::vector<std::size_t>{3, 2, 1, 0}).rank() == 23);
}

TEST_CASE("ranks are a bijection onto [0, n!)") {
    Subgroup s5 = Subgroup::symmetric(5);
    std::vector<bool> hit(120, false);
    for (const auto& g : s5.elements()) {
        REQUIRE(g.rank() < 120);
        CHECK_FALSE(hit[g.rank()]);
        hit[g.rank()] = true;
    }
}

TEST_CASE("closure_order examples") {
    CHECK(closure_order({Permutation::identity(5)}, 5) == 1);
    CHECK(closure_order(transpositions_of(8, range(0, 4)), 8) == 24);
    auto gens = transpositions_of(8, range(0, 4));
    auto more = transpositions_of(8, range(4, 8));
    gens.insert(gens.end(), more.begin(), more.end());
    CHECK(closure_order(gens, 8) == 576);
    CHECK_THROWS_AS(closure_order({Permutation::identity(11)}, 11), Error);
}

TEST_CASE("symmetric and alternating orders") {
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(Subgroup::symmetric(n).order() == fact(n));
        CHECK(Subgroup::alternating(n).order() == (n < 2 ? 1 : fact(n) / 2));
    }
}

TEST_CASE("groups are closed under composition and inverse") {
    Subgroup g = Subgroup::young(6, {0, 1, 2}, {3, 4});
    CHECK(g.order() == 12);
    for (const auto& a : g.elements()) {
        CHECK(g.contains(a.inverse()));
        for (const auto& b : g.elements()) {
            CHECK(g.contains(a * b));
        }
    }
    CHECK(fact(6) % g.order() == 0);
}

TEST_CASE("pointwise stabilizer examples") {
    Subgroup s4 = Subgroup::symmetric(4);
    CHECK(pointwise_stabilizer_within(s4, range(0, 4)).is_trivial());
    Subgroup young = Subgroup::young(8, range(0, 4), range(4, 8));
    Subgroup stab_t = pointwise_stabilizer_within(young, range(0, 4));
    CHECK(stab_t.order() == 24);
    for (const auto& g : stab_t.elements()) {
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(g(i) == i);
        }
    }
    CHECK(pointwise_stabilizer_within(young, range(0, 8)).is_trivial());
    CHECK(pointwise_stabilizer_within(young, {}).order() == young.order());
}

TEST_CASE("restriction image examples") {
    Subgroup young = Subgroup::young(8, range(0, 4), range(4, 8));
    CHECK(restriction_image(young, range(0, 4)).order() == 24);
    CHECK(restriction_image(Subgroup::trivial(6), {1, 3}).is_trivial());
    CHECK(restriction_image(Subgroup::symmetric(8), range(0, 8)).order() == 40320);
    CHECK_THROWS_AS(restriction_image(young, {0, 4}), Error);
}

TEST_CASE("restriction orders multiply to the Young order") {
    for (auto [n, t, s] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{
             {6, 2, 2}, {7, 3, 2}, {8, 4, 4}, {8, 1, 5}, {9, 4, 5}}) {
        Subgroup young = Subgroup::young(n, range(0, t), range(t, t + s));
        CHECK(restriction_image(young, range(0, t)).order() * restriction_image(young, range(t, t + s)).order() ==
              young.order());
    }
}

TEST_CASE("lemma on two disjoint subsets") {
    for (auto [n, t, s] : std::vector<std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>>{
             {8, range(0, 4), range(4, 8)}, {6, range(0, 3), range(3, 6)}, {9, {8, 0}, {3, 5, 7}}}) {
        LemmaKeyReport r = verify_lemma_key(n, t, s);
        CHECK(r.galois_group_is_young);
        CHECK(r.coefficients_in_fixed_field);
        CHECK(r.restrictions_are_full);
        CHECK(r.linearly_disjoint);
        CHECK(r.compositum_is_splitting_field);
        CHECK(r.young_order == fact(t.size()) * fact(s.size()));
        CHECK(r.joint_stabilizer_order == 1);
    }
    CHECK_THROWS_AS(verify_lemma_key(5, {0, 1}, {1, 2}), Error);
    CHECK_THROWS_AS(verify_lemma_key(5, {}, {1, 2}), Error);
    CHECK_THROWS_AS(verify_lemma_key(5, {0, 7}, {1, 2}), Error);
    CHECK_THROWS_AS(verify_lemma_key(11, {0}, {1}), Error);
}

TEST_CASE("single-set remark") {
    CHECK(verify_single_set_remark(8, range(0, 4)));
    CHECK(verify_single_set_remark(6, {1, 3, 5}));
}

TEST_CASE("k-transitivity examples") {
    CHECK(is_k_transitive(Subgroup::alternating(8), 4));
    CHECK(is_k_transitive(Subgroup::alternating(6), 3));
    Subgroup c5 = Subgroup::generated_by(5, {Permutation::cycle(5, {0, 1, 2, 3, 4})});
    CHECK(is_k_transitive(c5, 1));
    CHECK_FALSE(is_k_transitive(c5, 2));
    // Orbits of C5 on ordered pairs of distinct points: 20 pairs / 5 = 4.
    std::map<std::pair<std::size_t, std::size_t>, int> orbit_of;
    int orbits = 0;
    for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = 0; b < 5; ++b) {
            if (a == b || orbit_of.count({a, b})) {
                continue;
            }
            ++orbits;
            for (const auto& g : c5.elements()) {
                orbit_of[{g(a), g(b)}] = orbits;
            }
        }
    }
    CHECK(orbits == 4);
}

TEST_CASE("A_n is (n-2)- but not (n-1)-transitive") {
    for (std::size_t n = 4; n <= 8; ++n) {
        Subgroup a = Subgroup::alternating(n);
        CHECK(is_k_transitive(a, n - 2));
        CHECK_FALSE(is_k_transitive(a, n - 1));
    }
}
