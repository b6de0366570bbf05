#pragma once

#include "prym/curve_spec.hpp"
#include "prym/mp_complex.hpp"
#include "prym/rat_poly.hpp"
#include "prym/rational.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prym {

/// j-invariant of the elliptic curve y^2 = prod (x - r_i) via the Legendre
/// parameter lambda = (r1-r3)(r2-r4) / ((r1-r4)(r2-r3)).
std::complex<double> j_from_roots(std::complex<double> r1, std::complex<double> r2, std::complex<double> r3,
                                  std::complex<double> r4);
detail::MpComplex j_from_roots(const detail::MpComplex& r1, const detail::MpComplex& r2,
                               const detail::MpComplex& r3, const detail::MpComplex& r4);

/// Exact j of y^2 = q(x) for a cubic or quartic q, from the binary quartic
/// invariants I and J: j = 6912 I^3 / (4 I^3 - J^2).
Rational quartic_j_invariant(const RatPoly& q);

struct JRecord {
    /// Root indices of the factor f_T (4 of them, or 3 when a root is marked).
    std::vector<std::size_t> subset;
    /// Index of the rational root a joined to a 3-subset.
    std::optional<std::size_t> marked;
    std::complex<double> j;
    /// Set when the quartic is f itself and so has rational coefficients.
    std::optional<Rational> exact_j;
};

/// Records for all 4-subsets of the roots (PlainSn) or all 3-subsets of the
/// roots other than a, each joined with a (SplitLinear), in lexicographic order.
std::vector<JRecord> j_census(const CurveSpec& spec, double tol);

/// Index of the root of `roots` closest to a.
std::size_t marked_root_index(const std::vector<std::complex<double>>& roots, const Rational& a);

struct SymmetricValue {
    std::string name;
    /// Rational reference confirmed at two consecutive high precisions.
    std::optional<Rational> reference;
    /// Value computed at working precision.
    double approx = 0.0;
    /// |approx - reference| / max(1, |reference|), working precision.
    double residual = 0.0;
};

/// Floating-point evidence that e_1, e_2 and the product of all j_T are rational.
struct RationalityEvidence {
    double tol = 0.0;
    long working_precision_bits = 0;
    std::size_t records = 0;
    std::vector<SymmetricValue> values;
    /// Some value had no stable rational reference and is omitted from the verdict.
    bool partial = false;
    bool pass = false;
    std::string note;

    /// Largest residual over values with a reference.
    double max_residual() const;
};

inline constexpr double kRationalityThreshold = 1e-6;

RationalityEvidence symmetric_rationality_evidence(const CurveSpec& spec, double tol);

struct ShrinkageReport {
    RationalityEvidence coarse;
    RationalityEvidence fine;
    /// coarse residual / fine residual.
    double factor = 0.0;
};

ShrinkageReport rationality_shrinkage(const CurveSpec& spec, double coarse_tol, double fine_tol);

struct CmEntry {
    long discriminant = 0;
    Integer j;
};

struct CmVerification {
    long discriminant = 0;
    std::vector<std::uint64_t> primes;
    bool ok = false;
};

/// The rational CM j-invariants, one "discriminant j" pair per line.
class CmTable {
public:
    static CmTable builtin();
    static CmTable from_text(const std::string& text);
    static CmTable from_file(const std::string& path);

    const std::vector<CmEntry>& entries() const { return entries_; }
    /// Checks a_p = 0 on a model of each j at three primes inert in Q(sqrt(D)).
    std::vector<CmVerification> verify() const;
    std::optional<long> match(const Rational& j) const;
    std::optional<long> match(std::complex<double> j, double rel_tol) const;

private:
    std::vector<CmEntry> entries_;
};

/// y^2 = x^3 + 3k x + 2k with k = j / (1728 - j); x^3 + 1 and x^3 + x for j = 0, 1728.
RatPoly elliptic_model_with_j(const Rational& j);

struct CmScreen {
    std::optional<long> discriminant;
    bool matches() const { return discriminant.has_value(); }
};

CmScreen cm_screen(const JRecord& record, const CmTable& table);

} // namespace prym
