#include "prym/elliptic.hpp"

#include "prym/error.hpp"
#include "prym/frobenius.hpp"
#include "prym/prime.hpp"
#include "prym/roots.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace prym {

namespace {

using detail::MpComplex;
using detail::MpReal;

constexpr double kDegenerateSeparation = 1e-9;

constexpr const char* kBuiltinCmTable = R"(# discriminant j
-3 0
-4 1728
-7 -3375
-8 8000
-11 -32768
-12 54000
-16 287496
-19 -884736
-27 -12288000
-28 16581375
-43 -884736000
-67 -147197952000
-163 -262537412640768000
)";

void check_separation(const std::vector<std::complex<double>>& r) {
    double scale = 1.0;
    for (auto z : r) {
        scale = std::max(scale, std::abs(z));
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            if (std::abs(r[i] - r[j]) <= kDegenerateSeparation * scale) {
                throw Error(ErrorKind::Degenerate, "degenerate quartic: two roots coincide");
            }
        }
    }
}

std::complex<double> constant_like(double v, std::complex<double>) {
    return v;
}

MpComplex constant_like(double v, const MpComplex& like) {
    return MpComplex(std::complex<double>(v, 0.0), like.precision());
}

template <class C>
C lambda_j(const C& r1, const C& r2, const C& r3, const C& r4) {
    C lambda = (r1 - r3) * (r2 - r4) / ((r1 - r4) * (r2 - r3));
    C one = constant_like(1.0, r1);
    C lm1 = lambda - one;
    C num = lambda * lambda - lambda + one;
    return constant_like(256.0, r1) * num * num * num / (lambda * lambda * lm1 * lm1);
}

std::vector<std::vector<std::size_t>> combinations(const std::vector<std::size_t>& pool, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > pool.size()) {
        return out;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    while (true) {
        std::vector<std::size_t> pick;
        for (std::size_t i : idx) {
            pick.push_back(pool[i]);
        }
        out.push_back(std::move(pick));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

// Elementary symmetric functions e_1, e_2 and e_m of the values.
std::vector<MpComplex> symmetric_functions(const std::vector<MpComplex>& values, mpfr_prec_t prec) {
    MpComplex e1(prec), e2(prec);
    MpComplex prod(std::complex<double>(1.0, 0.0), prec);
    for (const auto& v : values) {
        e2 += e1 * v;
        e1 += v;
        prod *= v;
    }
    return {e1, e2, prod};
}

std::vector<MpComplex> census_j_values(const CurveSpec& spec, const std::vector<MpComplex>& roots) {
    std::vector<std::complex<double>> approx;
    for (const auto& r : roots) {
        approx.push_back(r.to_complex());
    }
    const mpfr_prec_t prec = roots.front().precision();
    std::vector<MpComplex> values;
    if (spec.shape == CurveShape::PlainSn) {
        std::vector<std::size_t> pool(roots.size());
        for (std::size_t i = 0; i < pool.size(); ++i) {
            pool[i] = i;
        }
        for (const auto& t : combinations(pool, 4)) {
            values.push_back(j_from_roots(roots[t[0]], roots[t[1]], roots[t[2]], roots[t[3]]));
        }
    } else {
        MpComplex a(MpReal(*spec.a, prec), MpReal(prec));
        std::size_t skip = marked_root_index(approx, *spec.a);
        std::vector<std::size_t> pool;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (i != skip) {
                pool.push_back(i);
            }
        }
        for (const auto& t : combinations(pool, 3)) {
            values.push_back(j_from_roots(a, roots[t[0]], roots[t[1]], roots[t[2]]));
        }
    }
    return values;
}

mpfr_prec_t working_precision(double tol) {
    return static_cast<mpfr_prec_t>(std::max(24.0, std::ceil(std::log2(1.0 / tol)) + 8.0));
}

// Rational reference for each symmetric function, confirmed at two consecutive precisions.
std::vector<std::optional<Rational>> rational_references(const CurveSpec& spec) {
    constexpr mpfr_prec_t kStart = 256;
    constexpr mpfr_prec_t kStop = 4096;
    std::vector<std::optional<Rational>> previous(3), confirmed(3);
    for (mpfr_prec_t prec = kStart; prec <= kStop; prec *= 2) {
        std::vector<MpComplex> e = symmetric_functions(census_j_values(spec, complex_roots_mp(spec.f, prec)), prec);
        Integer bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), 2, static_cast<unsigned long>(prec / 4));
        bool all_confirmed = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (confirmed[i]) {
                continue;
            }
            // A rational value has vanishing imaginary part up to rounding.
            MpReal scale = e[i].re.abs() + MpReal(1.0, prec);
            MpReal im_bound = scale * detail::power_of_two(-static_cast<long>(prec / 2), prec);
            std::optional<Rational> current;
            if (e[i].im.abs() < im_bound) {
                current = best_rational_approximation(e[i].re, bound);
            }
            if (current && previous[i] && *current == *previous[i]) {
                confirmed[i] = current;
            } else {
                all_confirmed = false;
            }
            previous[i] = current;
        }
        if (all_confirmed) {
            break;
        }
    }
    return confirmed;
}

double relative_residual(const MpComplex& value, const Rational& reference) {
    const mpfr_prec_t prec = value.precision() + 64;
    MpReal q(reference, prec);
    MpReal dre = value.re - q;
    MpReal diff = (dre * dre + value.im * value.im).sqrt();
    MpReal scale = q.abs();
    MpReal one(1.0, prec);
    if (scale < one) {
        scale = one;
    }
    return (diff / scale).to_double();
}

Integer integer_from_text(const std::string& token, std::size_t line) {
    Integer value;
    if (token.empty() || value.set_str(token, 10) != 0) {
        throw Error(ErrorKind::Parse, "CM table: bad integer '" + token + "' on line " + std::to_string(line));
    }
    return value;
}

} // namespace

std::complex<double> j_from_roots(std::complex<double> r1, std::complex<double> r2, std::complex<double> r3,
                                  std::complex<double> r4) {
    check_separation({r1, r2, r3, r4});
    return lambda_j(r1, r2, r3, r4);
}

MpComplex j_from_roots(const MpComplex& r1, const MpComplex& r2, const MpComplex& r3, const MpComplex& r4) {
    check_separation({r1.to_complex(), r2.to_complex(), r3.to_complex(), r4.to_complex()});
    return lambda_j(r1, r2, r3, r4);
}

Rational quartic_j_invariant(const RatPoly& q) {
    if (q.degree() != 3 && q.degree() != 4) {
        throw Error(ErrorKind::InvalidArgument, "j-invariant needs a cubic or quartic");
    }
    const Rational a = q.coefficient(4), b = q.coefficient(3), c = q.coefficient(2), d = q.coefficient(1),
                   e = q.coefficient(0);
    Rational i = 12 * a * e - 3 * b * d + c * c;
    Rational j = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
    Rational i3 = i * i * i;
    Rational den = 4 * i3 - j * j;
    if (den == 0) {
        throw Error(ErrorKind::Degenerate, "degenerate quartic: discriminant vanishes");
    }
    return Rational(6912 * i3 / den);
}

std::size_t marked_root_index(const std::vector<std::complex<double>>& roots, const Rational& a) {
    if (roots.empty()) {
        throw Error(ErrorKind::InvalidArgument, "no roots to mark");
    }
    const double target = a.get_d();
    std::size_t best = 0;
    for (std::size_t i = 1; i < roots.size(); ++i) {
        if (std::abs(roots[i] - target) < std::abs(roots[best] - target)) {
            best = i;
        }
    }
    return best;
}

std::vector<JRecord> j_census(const CurveSpec& spec, double tol) {
    std::vector<std::complex<double>> roots = complex_roots(spec.f, tol);
    std::vector<JRecord> records;
    std::vector<std::size_t> pool;
    std::optional<std::size_t> marked;
    if (spec.shape == CurveShape::SplitLinear) {
        marked = marked_root_index(roots, *spec.a);
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i != marked) {
            pool.push_back(i);
        }
    }
    const std::size_t k = marked ? 3 : 4;
    for (auto& t : combinations(pool, k)) {
        JRecord rec;
        rec.marked = marked;
        if (marked) {
            rec.j = j_from_roots(std::complex<double>(spec.a->get_d(), 0.0), roots[t[0]], roots[t[1]], roots[t[2]]);
        } else {
            rec.j = j_from_roots(roots[t[0]], roots[t[1]], roots[t[2]], roots[t[3]]);
        }
        if (spec.n == 4) {
            rec.exact_j = quartic_j_invariant(spec.f);
        }
        rec.subset = std::move(t);
        records.push_back(std::move(rec));
    }
    return records;
}

double RationalityEvidence::max_residual() const {
    double worst = 0.0;
    for (const auto& v : values) {
        if (v.reference) {
            worst = std::max(worst, v.residual);
        }
    }
    return worst;
}

namespace {

RationalityEvidence evidence_against(const CurveSpec& spec, double tol,
                                     const std::vector<std::optional<Rational>>& refs) {
    if (!(tol > 0.0 && tol < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "tolerance must lie in (0, 1)");
    }
    RationalityEvidence ev;
    ev.tol = tol;
    const mpfr_prec_t prec = working_precision(tol);
    ev.working_precision_bits = static_cast<long>(prec);
    std::vector<MpComplex> js = census_j_values(spec, complex_roots_mp(spec.f, prec));
    ev.records = js.size();
    std::vector<MpComplex> e = symmetric_functions(js, prec);
    const char* names[] = {"e_1", "e_2", "e_last"};
    bool pass = true;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        SymmetricValue v;
        v.name = names[i];
        v.approx = e[i].re.to_double();
        v.reference = refs[i];
        if (v.reference) {
            v.residual = relative_residual(e[i], *v.reference);
            pass = pass && v.residual < kRationalityThreshold;
            ++checked;
        } else {
            ev.partial = true;
        }
        ev.values.push_back(std::move(v));
    }
    ev.pass = pass && checked > 0 && ev.values[0].reference.has_value();
    ev.note = "Evidence grade: floating-point comparison against rational values that stabilize under "
              "increasing precision. Only the symmetric-function shadow of the Galois equivariance of "
              "j_T is testable this way.";
    return ev;
}

} // namespace

RationalityEvidence symmetric_rationality_evidence(const CurveSpec& spec, double tol) {
    return evidence_against(spec, tol, rational_references(spec));
}

ShrinkageReport rationality_shrinkage(const CurveSpec& spec, double coarse_tol, double fine_tol) {
    const std::vector<std::optional<Rational>> refs = rational_references(spec);
    ShrinkageReport rep{evidence_against(spec, coarse_tol, refs), evidence_against(spec, fine_tol, refs), 0.0};
    const double floor = 1e-300;
    rep.factor = std::max(rep.coarse.max_residual(), floor) / std::max(rep.fine.max_residual(), floor);
    return rep;
}

CmTable CmTable::builtin() {
    return from_text(kBuiltinCmTable);
}

CmTable CmTable::from_text(const std::string& text) {
    CmTable table;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string disc, j, extra;
        if (!(fields >> disc)) {
            continue;
        }
        if (!(fields >> j) || (fields >> extra)) {
            throw Error(ErrorKind::Parse, "CM table: expected 'discriminant j' on line " + std::to_string(number));
        }
        Integer d = integer_from_text(disc, number);
        if (d >= 0 || !d.fits_slong_p()) {
            throw Error(ErrorKind::Parse, "CM table: discriminant must be a negative integer");
        }
        table.entries_.push_back({d.get_si(), integer_from_text(j, number)});
    }
    if (table.entries_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "CM table is empty");
    }
    return table;
}

CmTable CmTable::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::InvalidArgument, "cannot open CM table '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return from_text(text.str());
}

RatPoly elliptic_model_with_j(const Rational& j) {
    if (j == 0) {
        return RatPoly{1, 0, 0, 1};
    }
    if (j == 1728) {
        return RatPoly{0, 1, 0, 1};
    }
    Rational k = j / (1728 - j);
    return RatPoly{2 * k, 3 * k, 0, 1};
}

std::vector<CmVerification> CmTable::verify() const {
    constexpr std::size_t kPrimesPerEntry = 3;
    constexpr std::uint64_t kSearchLimit = 2000;
    std::vector<CmVerification> out;
    for (const auto& entry : entries_) {
        CmVerification v;
        v.discriminant = entry.discriminant;
        RatPoly model = elliptic_model_with_j(Rational(entry.j));
        bool all_zero = true;
        for (std::uint64_t p = 5; p < kSearchLimit && v.primes.size() < kPrimesPerEntry; p = next_prime(p + 1)) {
            long residue = entry.discriminant % static_cast<long>(p);
            if (residue < 0) {
                residue += static_cast<long>(p);
            }
            if (legendre(static_cast<std::uint64_t>(residue), p) != -1) {
                continue;
            }
            try {
                FrobeniusData data = frobenius_charpoly(model, p);
                v.primes.push_back(p);
                all_zero = all_zero && data.power_sums[0] == 0;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::BadPrime) {
                    throw;
                }
            }
        }
        v.ok = all_zero && v.primes.size() == kPrimesPerEntry;
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<long> CmTable::match(const Rational& j) const {
    for (const auto& entry : entries_) {
        if (j == Rational(entry.j)) {
            return entry.discriminant;
        }
    }
    return std::nullopt;
}

std::optional<long> CmTable::match(std::complex<double> j, double rel_tol) const {
    for (const auto& entry : entries_) {
        const double target = entry.j.get_d();
        const double scale = std::max(1.0, std::abs(target));
        if (std::abs(j.imag()) <= rel_tol * scale && std::abs(j.real() - target) <= rel_tol * scale) {
            return entry.discriminant;
        }
    }
    return std::nullopt;
}

CmScreen cm_screen(const JRecord& record, const CmTable& table) {
    constexpr double kMatchTolerance = 1e-9;
    if (record.exact_j) {
        return {table.match(*record.exact_j)};
    }
    return {table.match(record.j, kMatchTolerance)};
}

} // namespace prym
