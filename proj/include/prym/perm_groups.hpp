#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace prym {

inline constexpr std::size_t kMaxPermutationDegree = 16;
/// Groups are materialized by breadth-first closure up to this degree.
inline constexpr std::size_t kClosureDegreeCap = 10;

/// Bijection of {0, ..., n-1}.
class Permutation {
public:
    /// Throws unless images is a bijection of {0..n-1}, n <= 16.
    explicit Permutation(const std::vector<std::size_t>& images);

    static Permutation identity(std::size_t n);
    static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
    /// Cycle (c0 c1 ... ck) sending c_i to c_{i+1}.
    static Permutation cycle(std::size_t n, const std::vector<std::size_t>& points);

    std::size_t degree() const { return degree_; }
    std::size_t operator()(std::size_t i) const { return images_[i]; }

    /// (this * other)(i) = this(other(i)).
    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;
    /// Cycle lengths (including fixed points), largest first.
    std::vector<std::size_t> cycle_type() const;
    bool is_even() const;

    /// Lexicographic rank in [0, n!).
    std::uint64_t rank() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    Permutation() = default;

    std::uint8_t degree_ = 0;
    std::array<std::uint8_t, kMaxPermutationDegree> images_{};
};

/// Materialized permutation group: every element is stored, sorted.
class Subgroup {
public:
    /// Breadth-first closure; throws DegreeCap when degree > 10.
    static Subgroup generated_by(std::size_t degree, const std::vector<Permutation>& generators);
    static Subgroup trivial(std::size_t degree);
    static Subgroup symmetric(std::size_t degree);
    static Subgroup alternating(std::size_t degree);
    /// Perm(T) x Perm(S): permutations preserving T and S and fixing the rest.
    static Subgroup young(std::size_t degree, const std::vector<std::size_t>& t, const std::vector<std::size_t>& s);

    std::size_t degree() const { return degree_; }
    std::uint64_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    /// Empty for groups obtained by filtering or restricting another group.
    const std::vector<Permutation>& generators() const { return generators_; }
    bool contains(const Permutation& g) const;
    bool is_trivial() const { return elements_.size() == 1; }

private:
    Subgroup(std::size_t degree, std::vector<Permutation> generators, std::vector<Permutation> elements);
    friend Subgroup from_closed_set(std::size_t degree, std::vector<Permutation> elements);

    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

/// Exact order of the group generated by `generators` inside S_n.
std::uint64_t closure_order(const std::vector<Permutation>& generators, std::size_t n);

/// {g in G : g(a) = a for all a in A}.
Subgroup pointwise_stabilizer_within(const Subgroup& group, const std::vector<std::size_t>& points);

/// Image of G -> Perm(A) for a G-invariant A; A is relabelled 0..|A|-1 in
/// increasing order. Throws if A is not invariant.
Subgroup restriction_image(const Subgroup& group, const std::vector<std::size_t>& points);

/// True iff G acts transitively on ordered k-tuples of distinct points.
bool is_k_transitive(const Subgroup& group, std::size_t k);

/// Group-level translation of the five-part lemma on two disjoint root sets
/// T, S: E is the fixed field of the Young subgroup Y = Perm(T) x Perm(S),
/// E(T), E(S) correspond to the pointwise stabilizers of T and S in Y.
struct LemmaKeyReport {
    std::size_t n = 0;
    std::vector<std::size_t> t;
    std::vector<std::size_t> s;

    std::uint64_t young_order = 0;           ///< |Y| by closure
    std::uint64_t expected_young_order = 0;  ///< |T|! |S|!
    std::uint64_t restriction_t_order = 0;   ///< |Gal(E(T)/E)| = |Y restricted to T|
    std::uint64_t restriction_s_order = 0;
    std::uint64_t stabilizer_t_order = 0;    ///< |Gal(K(R)/E(T))|, should equal |S|!
    std::uint64_t stabilizer_s_order = 0;
    std::uint64_t joint_stabilizer_order = 0;///< |Gal(K(R)/E(T)E(S))|

    bool galois_group_is_young = false;      ///< (i)
    bool coefficients_in_fixed_field = false;///< (ii) Y preserves T and S setwise
    bool restrictions_are_full = false;      ///< (iii)
    bool linearly_disjoint = false;          ///< (iv)
    bool compositum_is_splitting_field = false; ///< (v)

    bool all_hold() const {
        return galois_group_is_young && coefficients_in_fixed_field && restrictions_are_full &&
               linearly_disjoint && compositum_is_splitting_field;
    }
};

/// Throws InvalidArgument for empty or overlapping sets or points >= n, and
/// DegreeCap for n > 10.
LemmaKeyReport verify_lemma_key(std::size_t n, const std::vector<std::size_t>& t,
                                const std::vector<std::size_t>& s);

} // namespace prym

namespace prym {

/// Single-set version: with E0 the fixed field of Perm(T), the pointwise
/// stabilizer of T in Perm(T) is trivial, i.e. E0(T) is the whole splitting
/// field and Gal(E0(T)/E0) = Perm(T).
bool verify_single_set_remark(std::size_t n, const std::vector<std::size_t>& t);

} // namespace prym
