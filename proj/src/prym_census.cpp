#include "prym/prym_census.hpp"

#include "prym/error.hpp"
#include "prym/prime.hpp"
#include "prym/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace prym {

namespace {

constexpr int kPlainSnMinDegree = 8;
constexpr int kSplitLinearMinDegree = 10;
constexpr int kPropertyDMaxDimension = 3;

// Subsets of {0..n-1} of size k in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

PrymPartition apply_theorem_labels(PrymPartition part) {
    part.hypothesis_met = true;
    part.property_d = true;
    if (part.n2 == 2) {
        part.endo = EndoLabel::Z;
        part.hodge = HodgeLabel::Sp;
    } else {
        part.endo = EndoLabel::ZxZ;
        part.hodge = HodgeLabel::SpxSp;
    }
    return part;
}

std::vector<std::complex<double>> product_of_linear(const std::vector<std::complex<double>>& roots,
                                                    const std::vector<std::size_t>& subset) {
    std::vector<std::complex<double>> picked;
    for (std::size_t i : subset) {
        picked.push_back(roots.at(i));
    }
    return expand_from_roots(picked);
}

// T, S for the lemma: the two halves, or for a marked root a the half without a
// and the half with a removed, relabelled to the roots of h.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> lemma_sets(const PrymPartition& part,
                                                                         std::optional<std::size_t> marked) {
    if (!marked) {
        return {part.r1, part.r2};
    }
    auto relabel = [&](const std::vector<std::size_t>& set) {
        std::vector<std::size_t> out;
        for (std::size_t i : set) {
            if (i != *marked) {
                out.push_back(i > *marked ? i - 1 : i);
            }
        }
        return out;
    };
    bool a_in_r1 = std::find(part.r1.begin(), part.r1.end(), *marked) != part.r1.end();
    const auto& without = a_in_r1 ? part.r2 : part.r1;
    const auto& with = a_in_r1 ? part.r1 : part.r2;
    return {relabel(without), relabel(with)};
}

} // namespace

int genus_from_degree(int n) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "degree must be at least 2");
    }
    return (n - 1) / 2;
}

std::string to_string(EndoLabel label) {
    switch (label) {
    case EndoLabel::Z:
        return "Z";
    case EndoLabel::ZxZ:
        return "Z⊕Z";
    case EndoLabel::Unclassified:
        break;
    }
    return "unclassified by theorem";
}

std::string to_string(HodgeLabel label) {
    switch (label) {
    case HodgeLabel::Sp:
        return "Sp(H1)";
    case HodgeLabel::SpxSp:
        return "Sp(H1)×Sp(H1)";
    case HodgeLabel::Unclassified:
        break;
    }
    return "unclassified by theorem";
}

std::string to_string(Hypothesis h) {
    switch (h) {
    case Hypothesis::Certified:
        return "certified";
    case Hypothesis::AssumedUnverified:
        return "unverified hypothesis";
    case Hypothesis::NotCertified:
        break;
    }
    return "not certified";
}

std::vector<PrymPartition> enumerate_partitions(int n) {
    if (n % 2 != 0) {
        throw Error(ErrorKind::InvalidArgument, "Prym decomposition requires even degree n = 2g+2");
    }
    if (n < 4) {
        throw Error(ErrorKind::InvalidArgument, "Prym decomposition requires n >= 4");
    }
    const auto un = static_cast<std::size_t>(n);
    std::vector<PrymPartition> parts;
    for (std::size_t k = 2; 2 * k <= un; k += 2) {
        for_each_subset(un, k, [&](const std::vector<std::size_t>& r2) {
            if (2 * k == un && r2.front() != 0) {
                return;
            }
            PrymPartition part;
            part.r2 = r2;
            for (std::size_t i = 0, j = 0; i < un; ++i) {
                if (j < r2.size() && r2[j] == i) {
                    ++j;
                } else {
                    part.r1.push_back(i);
                }
            }
            part.n1 = static_cast<int>(part.r1.size());
            part.n2 = static_cast<int>(k);
            part.g1 = (part.n1 - 2) / 2;
            part.g2 = (part.n2 - 2) / 2;
            parts.push_back(std::move(part));
        });
    }
    return parts;
}

bool hypothesis_degree_met(const CurveSpec& spec) {
    return spec.shape == CurveShape::PlainSn ? spec.n >= kPlainSnMinDegree : spec.n >= kSplitLinearMinDegree;
}

PrymPartition classify_unconditional(const CurveSpec& spec, PrymPartition part) {
    part.hypothesis_met = false;
    part.endo = EndoLabel::Unclassified;
    part.hodge = HodgeLabel::Unclassified;
    part.property_d = spec.g - 1 <= kPropertyDMaxDimension;
    return part;
}

PrymPartition classify_assuming_symmetric(const CurveSpec& spec, PrymPartition part) {
    if (!hypothesis_degree_met(spec)) {
        return classify_unconditional(spec, std::move(part));
    }
    return apply_theorem_labels(std::move(part));
}

PrymPartition classify(const CurveSpec& spec, const GaloisCertificate& cert, PrymPartition part) {
    if (cert.verdict != GaloisVerdict::CertifiedSymmetric || !(cert.polynomial == spec.certified_factor())) {
        throw Error(ErrorKind::InvalidArgument, "hypothesis not certified");
    }
    return classify_assuming_symmetric(spec, std::move(part));
}

FactorPair instantiate_factors(const RatPoly& f, const std::vector<std::complex<double>>& roots,
                               const PrymPartition& part, double tol) {
    if (roots.size() != static_cast<std::size_t>(f.degree())) {
        throw Error(ErrorKind::InvalidArgument, "root count does not match the degree");
    }
    FactorPair pair;
    pair.f1 = product_of_linear(roots, part.r1);
    pair.f2 = product_of_linear(roots, part.r2);
    std::vector<std::complex<double>> both(f.degree() + 1, 0.0);
    const double lead = f.leading().get_d();
    for (std::size_t i = 0; i < pair.f1.size(); ++i) {
        for (std::size_t j = 0; j < pair.f2.size(); ++j) {
            both[i + j] += lead * pair.f1[i] * pair.f2[j];
        }
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < both.size(); ++i) {
        worst = std::max(worst, std::abs(both[i] - f.coefficient(i).get_d()));
    }
    pair.reconstruction_error = worst / f.max_abs_coefficient();
    if (pair.reconstruction_error > 10.0 * tol) {
        throw Error(ErrorKind::Convergence, "factor reconstruction error " +
                                                std::to_string(pair.reconstruction_error) + " exceeds 10*tol");
    }
    return pair;
}

FactorPair instantiate_factors(const CurveSpec& spec, const PrymPartition& part, double tol) {
    return instantiate_factors(spec.f, complex_roots(spec.f, tol), part, tol);
}

RatPoly odd_degree_model(const Rational& b, const RatPoly& fs) {
    const int m = fs.degree();
    if (m < 1 || m % 2 == 0) {
        throw Error(ErrorKind::InvalidArgument, "odd-degree model requires deg fS odd");
    }
    if (fs.evaluate(b) == 0) {
        throw Error(ErrorKind::Degenerate, "b is a root; model degenerates");
    }
    const RatPoly shifted{1, b}; // b x + 1
    RatPoly h;
    RatPoly power = RatPoly::constant(1);
    for (int i = 0; i <= m; ++i) {
        h += fs.coefficient(static_cast<std::size_t>(i)) * power * RatPoly::monomial(1, static_cast<std::size_t>(m - i));
        power *= shifted;
    }
    return h;
}

bool CensusReport::fully_classified() const {
    return summary.total > 0 && summary.unclassified == 0 && summary.failed == 0;
}

CensusReport build_census(const CurveSpec& spec, const CensusOptions& options) {
    CensusReport report;
    report.spec = spec;
    report.certificate = certify_symmetric(spec.certified_factor(), options.prime_budget);
    if (report.certificate.verdict == GaloisVerdict::CertifiedSymmetric) {
        report.hypothesis = Hypothesis::Certified;
    } else if (options.assume_symmetric) {
        report.hypothesis = Hypothesis::AssumedUnverified;
    }
    report.roots = complex_roots(spec.f, options.tol);

    std::optional<std::size_t> marked;
    if (spec.shape == CurveShape::SplitLinear) {
        marked = marked_root_index(report.roots, *spec.a);
    }

    for (auto& part : enumerate_partitions(spec.n)) {
        CensusRow row;
        try {
            switch (report.hypothesis) {
            case Hypothesis::Certified:
                row.partition = classify(spec, report.certificate, part);
                break;
            case Hypothesis::AssumedUnverified:
                row.partition = classify_assuming_symmetric(spec, part);
                break;
            case Hypothesis::NotCertified:
                row.partition = classify_unconditional(spec, part);
                break;
            }
            row.reconstruction_error = instantiate_factors(spec.f, report.roots, part, options.tol).reconstruction_error;
        } catch (const Error& e) {
            row.partition = std::move(part);
            row.failed = true;
            row.error = e.what();
        }
        report.rows.push_back(std::move(row));
    }

    CensusSummary& s = report.summary;
    for (const auto& row : report.rows) {
        ++s.total;
        if (row.failed) {
            ++s.failed;
            continue;
        }
        const auto& p = row.partition;
        s.end_z += p.endo == EndoLabel::Z;
        s.end_zz += p.endo == EndoLabel::ZxZ;
        s.unclassified += p.endo == EndoLabel::Unclassified;
        s.property_d += p.property_d;
    }

    if (options.verify.lemma_key) {
        std::set<int> seen;
        const std::size_t degree = static_cast<std::size_t>(marked ? spec.n - 1 : spec.n);
        for (const auto& row : report.rows) {
            if (!seen.insert(row.partition.n2).second) {
                continue;
            }
            auto [t, s_set] = lemma_sets(row.partition, marked);
            try {
                report.lemma_key.push_back(verify_lemma_key(degree, t, s_set));
            } catch (const Error& e) {
                report.attachment_errors.push_back(std::string("lemma-key: ") + e.what());
            }
        }
    }

    if (options.verify.frobenius) {
        try {
            for (std::uint64_t p = 3; report.frobenius.size() < options.frobenius_primes && p < 1000;
                 p = next_prime(p + 1)) {
                try {
                    report.frobenius.push_back(frobenius_charpoly(spec.f, p));
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::BadPrime) {
                        throw;
                    }
                }
            }
        } catch (const Error& e) {
            report.attachment_errors.push_back(std::string("frobenius: ") + e.what());
        }
    }

    if (options.verify.j_census) {
        try {
            JCensusAttachment att;
            att.records = j_census(spec, options.tol);
            for (const auto& rec : att.records) {
                att.screens.push_back(cm_screen(rec, options.cm_table));
            }
            att.rationality = rationality_shrinkage(spec, options.tol, options.tol * 1e-4);
            report.j_census = std::move(att);
        } catch (const Error& e) {
            report.attachment_errors.push_back(std::string("j-census: ") + e.what());
        }
    }

    if (report.hypothesis == Hypothesis::AssumedUnverified) {
        report.notes.push_back("Gal = S_n was asserted, not certified; labels rest on an unverified hypothesis.");
    }
    if (!hypothesis_degree_met(spec)) {
        report.notes.push_back(spec.shape == CurveShape::PlainSn
                                   ? "End/Hodge labels need n >= 8 for irreducible f with Gal(f) = S_n."
                                   : "End/Hodge labels need n >= 10 for f = (x - a) h with Gal(h) = S_{n-1}.");
    }
    if (spec.g - 1 <= kPropertyDMaxDimension) {
        report.notes.push_back("Property (D) holds for every complex abelian variety of dimension <= 3, "
                               "so it is recorded for all rows with dim P = g - 1 <= 3.");
    }
    report.notes.push_back("Frobenius data are reductions of a characteristic-zero curve. A supersingular "
                           "reduction is an analogue of the positive-characteristic branch, not an instance of it.");
    return report;
}

} // namespace prym
