#pragma once

#include "prym/curve_spec.hpp"
#include "prym/elliptic.hpp"
#include "prym/frobenius.hpp"
#include "prym/galois_cert.hpp"
#include "prym/perm_groups.hpp"
#include "prym/rat_poly.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace prym {

/// g = floor((n - 1) / 2). The jacobian is trivial exactly when n = 2.
int genus_from_degree(int n);

enum class EndoLabel { Z, ZxZ, Unclassified };
enum class HodgeLabel { Sp, SpxSp, Unclassified };

std::string to_string(EndoLabel label);
std::string to_string(HodgeLabel label);

/// An unordered split of the root indices into two even parts, n1 >= n2.
/// The Prym variety of the corresponding double cover is J(C_f1) x J(C_f2).
struct PrymPartition {
    std::vector<std::size_t> r1;
    std::vector<std::size_t> r2;
    int n1 = 0;
    int n2 = 0;
    int g1 = 0;
    int g2 = 0;
    EndoLabel endo = EndoLabel::Unclassified;
    HodgeLabel hodge = HodgeLabel::Unclassified;
    bool property_d = false;
    bool hypothesis_met = false;
};

/// All 2^(n-2) - 1 splits, ordered by n2 then lexicographically on R2. When
/// n1 = n2, R2 is the half containing index 0.
std::vector<PrymPartition> enumerate_partitions(int n);

/// Whether n reaches the degree threshold of the classification for this shape.
bool hypothesis_degree_met(const CurveSpec& spec);

/// Labels a partition; requires a CertifiedSymmetric certificate for
/// spec.certified_factor().
PrymPartition classify(const CurveSpec& spec, const GaloisCertificate& cert, PrymPartition part);

/// Labels a partition as if Gal were symmetric; used for asserted, unverified hypotheses.
PrymPartition classify_assuming_symmetric(const CurveSpec& spec, PrymPartition part);

/// Labels available without any Galois hypothesis: only property (D) in dimension <= 3.
PrymPartition classify_unconditional(const CurveSpec& spec, PrymPartition part);

struct FactorPair {
    /// Monic, coefficients low to high.
    std::vector<std::complex<double>> f1;
    std::vector<std::complex<double>> f2;
    /// ||lc f1 f2 - f||_inf / ||f||_inf.
    double reconstruction_error = 0.0;
};

FactorPair instantiate_factors(const CurveSpec& spec, const PrymPartition& part, double tol);
FactorPair instantiate_factors(const RatPoly& f, const std::vector<std::complex<double>>& roots,
                               const PrymPartition& part, double tol);

/// h(x) = x^m fS(b + 1/x), the model of y^2 = (x - b) fS(x) after x1 = 1/(x - b).
/// deg h = m and lc(h) = fS(b); roots of h are 1/(alpha - b).
RatPoly odd_degree_model(const Rational& b, const RatPoly& fs);

struct VerificationPlan {
    bool lemma_key = true;
    bool frobenius = true;
    bool j_census = true;
};

struct CensusOptions {
    std::size_t prime_budget = kDefaultPrimeBudget;
    double tol = 1e-12;
    VerificationPlan verify;
    /// Treat Gal = S_n as given when certification is inconclusive.
    bool assume_symmetric = false;
    CmTable cm_table = CmTable::builtin();
    std::size_t frobenius_primes = 2;
};

enum class Hypothesis { Certified, AssumedUnverified, NotCertified };

std::string to_string(Hypothesis h);

struct CensusRow {
    PrymPartition partition;
    double reconstruction_error = 0.0;
    bool failed = false;
    std::string error;
};

struct CensusSummary {
    std::size_t total = 0;
    std::size_t end_z = 0;
    std::size_t end_zz = 0;
    std::size_t unclassified = 0;
    std::size_t property_d = 0;
    std::size_t failed = 0;
};

struct JCensusAttachment {
    std::vector<JRecord> records;
    std::vector<CmScreen> screens;
    ShrinkageReport rationality;
};

struct CensusReport {
    CurveSpec spec;
    GaloisCertificate certificate;
    Hypothesis hypothesis = Hypothesis::NotCertified;
    std::vector<std::complex<double>> roots;
    std::vector<CensusRow> rows;
    CensusSummary summary;
    std::vector<LemmaKeyReport> lemma_key;
    std::vector<FrobeniusData> frobenius;
    std::optional<JCensusAttachment> j_census;
    std::vector<std::string> notes;
    /// Failures of individual verification attachments.
    std::vector<std::string> attachment_errors;

    /// Every row carries theorem labels.
    bool fully_classified() const;
};

CensusReport build_census(const CurveSpec& spec, const CensusOptions& options);

} // namespace prym
