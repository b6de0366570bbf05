#include "prym/perm_groups.hpp"

#include "prym/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace prym {

namespace {

std::uint64_t factorial_u64(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

void check_closure_degree(std::size_t n) {
    if (n > kClosureDegreeCap) {
        throw Error(ErrorKind::DegreeCap,
                    "degree cap: closure supports n <= " + std::to_string(kClosureDegreeCap) + ", got " +
                        std::to_string(n));
    }
}

std::vector<Permutation> closure(std::size_t n, const std::vector<Permutation>& generators) {
    check_closure_degree(n);
    for (const auto& g : generators) {
        if (g.degree() != n) {
            throw Error(ErrorKind::InvalidArgument, "generator degree does not match group degree");
        }
    }
    std::vector<bool> seen(factorial_u64(n), false);
    std::vector<Permutation> elements;
    std::deque<std::size_t> frontier;
    Permutation id = Permutation::identity(n);
    seen[id.rank()] = true;
    elements.push_back(id);
    frontier.push_back(0);
    while (!frontier.empty()) {
        std::size_t idx = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            Permutation h = g * elements[idx];
            std::uint64_t r = h.rank();
            if (!seen[r]) {
                seen[r] = true;
                elements.push_back(h);
                frontier.push_back(elements.size() - 1);
            }
        }
    }
    std::sort(elements.begin(), elements.end());
    return elements;
}

void check_points(std::size_t n, const std::vector<std::size_t>& points, const char* name) {
    std::vector<bool> used(n, false);
    for (std::size_t p : points) {
        if (p >= n) {
            throw Error(ErrorKind::InvalidArgument, std::string(name) + " contains a point outside 0..n-1");
        }
        if (used[p]) {
            throw Error(ErrorKind::InvalidArgument, std::string(name) + " contains a repeated point");
        }
        used[p] = true;
    }
}

std::vector<Permutation> set_generators(std::size_t n, const std::vector<std::size_t>& points) {
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i < points.size(); ++i) {
        gens.push_back(Permutation::transposition(n, points[0], points[i]));
    }
    return gens;
}

} // namespace

Permutation::Permutation(const std::vector<std::size_t>& images) {
    if (images.size() > kMaxPermutationDegree) {
        throw Error(ErrorKind::DegreeCap, "permutation degree above 16");
    }
    degree_ = static_cast<std::uint8_t>(images.size());
    std::array<bool, kMaxPermutationDegree> hit{};
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] >= images.size() || hit[images[i]]) {
            throw Error(ErrorKind::InvalidArgument, "image array is not a bijection");
        }
        hit[images[i]] = true;
        images_[i] = static_cast<std::uint8_t>(images[i]);
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(img);
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
    return cycle(n, {a, b});
}

Permutation Permutation::cycle(std::size_t n, const std::vector<std::size_t>& points) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] >= n) {
            throw Error(ErrorKind::InvalidArgument, "cycle point outside 0..n-1");
        }
        img[points[i]] = points[(i + 1) % points.size()];
    }
    return Permutation(img);
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (degree_ != other.degree_) {
        throw Error(ErrorKind::InvalidArgument, "composing permutations of different degree");
    }
    Permutation r;
    r.degree_ = degree_;
    for (std::size_t i = 0; i < degree_; ++i) {
        r.images_[i] = images_[other.images_[i]];
    }
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.degree_ = degree_;
    for (std::size_t i = 0; i < degree_; ++i) {
        r.images_[images_[i]] = static_cast<std::uint8_t>(i);
    }
    return r;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < degree_; ++i) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
    std::vector<std::size_t> lengths;
    std::array<bool, kMaxPermutationDegree> seen{};
    for (std::size_t i = 0; i < degree_; ++i) {
        if (seen[i]) {
            continue;
        }
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

bool Permutation::is_even() const {
    std::size_t transpositions = 0;
    for (std::size_t len : cycle_type()) {
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

std::uint64_t Permutation::rank() const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
        std::uint64_t smaller = 0;
        for (std::size_t j = i + 1; j < degree_; ++j) {
            if (images_[j] < images_[i]) {
                ++smaller;
            }
        }
        r = r * (degree_ - i) + smaller;
    }
    return r;
}

Subgroup::Subgroup(std::size_t degree, std::vector<Permutation> generators, std::vector<Permutation> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {}

// `elements` must already be a sorted group.
Subgroup from_closed_set(std::size_t degree, std::vector<Permutation> elements) {
    return Subgroup(degree, {}, std::move(elements));
}

Subgroup Subgroup::generated_by(std::size_t degree, const std::vector<Permutation>& generators) {
    return Subgroup(degree, generators, closure(degree, generators));
}

Subgroup Subgroup::trivial(std::size_t degree) {
    return generated_by(degree, {});
}

Subgroup Subgroup::symmetric(std::size_t degree) {
    std::vector<Permutation> gens;
    if (degree >= 2) {
        std::vector<std::size_t> all(degree);
        std::iota(all.begin(), all.end(), 0);
        gens.push_back(Permutation::transposition(degree, 0, 1));
        gens.push_back(Permutation::cycle(degree, all));
    }
    return generated_by(degree, gens);
}

Subgroup Subgroup::alternating(std::size_t degree) {
    std::vector<Permutation> gens;
    for (std::size_t k = 2; k < degree; ++k) {
        gens.push_back(Permutation::cycle(degree, {0, 1, k}));
    }
    return generated_by(degree, gens);
}

Subgroup Subgroup::young(std::size_t degree, const std::vector<std::size_t>& t, const std::vector<std::size_t>& s) {
    check_points(degree, t, "T");
    check_points(degree, s, "S");
    for (std::size_t a : t) {
        if (std::find(s.begin(), s.end(), a) != s.end()) {
            throw Error(ErrorKind::InvalidArgument, "T and S are not disjoint");
        }
    }
    std::vector<Permutation> gens = set_generators(degree, t);
    std::vector<Permutation> more = set_generators(degree, s);
    gens.insert(gens.end(), more.begin(), more.end());
    return generated_by(degree, gens);
}

bool Subgroup::contains(const Permutation& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::uint64_t closure_order(const std::vector<Permutation>& generators, std::size_t n) {
    return closure(n, generators).size();
}

Subgroup pointwise_stabilizer_within(const Subgroup& group, const std::vector<std::size_t>& points) {
    check_points(group.degree(), points, "A");
    std::vector<Permutation> kept;
    for (const auto& g : group.elements()) {
        bool fixes = std::all_of(points.begin(), points.end(), [&](std::size_t a) { return g(a) == a; });
        if (fixes) {
            kept.push_back(g);
        }
    }
    return from_closed_set(group.degree(), std::move(kept));
}

Subgroup restriction_image(const Subgroup& group, const std::vector<std::size_t>& points) {
    check_points(group.degree(), points, "A");
    std::vector<std::size_t> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> label(group.degree(), kMaxPermutationDegree);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        label[sorted[i]] = i;
    }
    std::vector<Permutation> images;
    images.reserve(group.elements().size());
    for (const auto& g : group.elements()) {
        std::vector<std::size_t> img(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            std::size_t target = label[g(sorted[i])];
            if (target == kMaxPermutationDegree) {
                throw Error(ErrorKind::InvalidArgument, "restriction set is not invariant under the group");
            }
            img[i] = target;
        }
        images.emplace_back(img);
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    // The image of a homomorphism is a group, so no closure is needed.
    return from_closed_set(sorted.size(), std::move(images));
}

bool is_k_transitive(const Subgroup& group, std::size_t k) {
    const std::size_t n = group.degree();
    if (k > n) {
        throw Error(ErrorKind::InvalidArgument, "k exceeds the degree");
    }
    check_closure_degree(n);
    if (k == 0) {
        return true;
    }
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < k; ++i) {
        expected *= n - i;
    }
    std::vector<std::uint64_t> orbit;
    orbit.reserve(group.elements().size());
    for (const auto& g : group.elements()) {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < k; ++i) {
            code = code * 16 + g(i);
        }
        orbit.push_back(code);
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit.size() == expected;
}

LemmaKeyReport verify_lemma_key(std::size_t n, const std::vector<std::size_t>& t,
                                const std::vector<std::size_t>& s) {
    if (t.empty() || s.empty()) {
        throw Error(ErrorKind::InvalidArgument, "T and S must be nonempty");
    }
    check_closure_degree(n);
    LemmaKeyReport rep;
    rep.n = n;
    rep.t = t;
    rep.s = s;
    std::sort(rep.t.begin(), rep.t.end());
    std::sort(rep.s.begin(), rep.s.end());

    Subgroup young = Subgroup::young(n, rep.t, rep.s);
    rep.young_order = young.order();
    rep.expected_young_order = factorial_u64(t.size()) * factorial_u64(s.size());

    std::vector<bool> in_t(n, false), in_s(n, false);
    for (std::size_t a : rep.t) {
        in_t[a] = true;
    }
    for (std::size_t a : rep.s) {
        in_s[a] = true;
    }
    bool preserves_sets = true;
    bool fixes_outside = true;
    for (const auto& g : young.elements()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (in_t[i] && !in_t[g(i)]) {
                preserves_sets = false;
            }
            if (in_s[i] && !in_s[g(i)]) {
                preserves_sets = false;
            }
            if (!in_t[i] && !in_s[i] && g(i) != i) {
                fixes_outside = false;
            }
        }
    }
    rep.galois_group_is_young = rep.young_order == rep.expected_young_order && fixes_outside && preserves_sets;
    rep.coefficients_in_fixed_field = preserves_sets;

    Subgroup stab_t = pointwise_stabilizer_within(young, rep.t);
    Subgroup stab_s = pointwise_stabilizer_within(young, rep.s);
    rep.stabilizer_t_order = stab_t.order();
    rep.stabilizer_s_order = stab_s.order();
    Subgroup res_t = restriction_image(young, rep.t);
    Subgroup res_s = restriction_image(young, rep.s);
    rep.restriction_t_order = res_t.order();
    rep.restriction_s_order = res_s.order();
    rep.restrictions_are_full = res_t.order() == factorial_u64(t.size()) &&
                                res_s.order() == factorial_u64(s.size()) &&
                                stab_t.order() == factorial_u64(s.size()) &&
                                stab_s.order() == factorial_u64(t.size()) &&
                                res_t.order() * stab_t.order() == young.order() &&
                                res_s.order() * stab_s.order() == young.order();

    std::vector<std::size_t> both = rep.t;
    both.insert(both.end(), rep.s.begin(), rep.s.end());
    Subgroup joint = pointwise_stabilizer_within(young, both);
    rep.joint_stabilizer_order = joint.order();
    rep.linearly_disjoint = young.order() == res_t.order() * res_s.order() && joint.is_trivial();
    rep.compositum_is_splitting_field = joint.is_trivial();
    return rep;
}

bool verify_single_set_remark(std::size_t n, const std::vector<std::size_t>& t) {
    check_closure_degree(n);
    check_points(n, t, "T");
    Subgroup perm_t = Subgroup::generated_by(n, set_generators(n, t));
    Subgroup stab = pointwise_stabilizer_within(perm_t, t);
    Subgroup image = restriction_image(perm_t, t);
    return stab.is_trivial() && image.order() == factorial_u64(t.size()) && perm_t.order() == image.order();
}

} // namespace prym
