#include "prym/frobenius.hpp"

#include "prym/error.hpp"
#include "prym/fq_field.hpp"
#include "prym/prime.hpp"

#include <sstream>

namespace prym {

namespace {

std::uint64_t field_order(std::uint64_t p, int k) {
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > kMaxCountFieldOrder / p) {
            throw Error(ErrorKind::DegreeCap, "field F_" + std::to_string(p) + "^" + std::to_string(k) +
                                                  " exceeds the point-counting cap");
        }
        q *= p;
    }
    return q;
}

std::uint64_t infinity_points(const FpPoly& f, int k) {
    if (f.degree() % 2 != 0) {
        return 1;
    }
    if (k % 2 == 0) {
        return 2;
    }
    return legendre(f.leading(), f.modulus()) == 1 ? 2 : 0;
}

std::uint64_t count_prime_field(const FpPoly& f) {
    const std::uint64_t p = f.modulus();
    std::vector<std::uint8_t> square(p, 0);
    for (std::uint64_t y = 1; y < p; ++y) {
        square[mul_mod(y, y, p)] = 1;
    }
    std::uint64_t affine = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = f.evaluate(x);
        affine += v == 0 ? 1 : (square[v] ? 2 : 0);
    }
    return affine;
}

std::uint64_t count_extension(const FpPoly& f, int k) {
    FqField field(f.modulus(), k);
    const std::uint64_t q = field.order();
    std::vector<std::uint8_t> square(q, 0);
    for (std::uint64_t i = 1; i < q; ++i) {
        FqElem y = field.element(i);
        square[field.index(field.mul(y, y))] = 1;
    }
    std::vector<FqElem> coeffs;
    for (int i = 0; i <= f.degree(); ++i) {
        coeffs.push_back(field.from_base(f.coefficient(static_cast<std::size_t>(i))));
    }
    std::uint64_t affine = 0;
    for (std::uint64_t i = 0; i < q; ++i) {
        FqElem x = field.element(i);
        FqElem v = coeffs.back();
        for (int j = f.degree() - 1; j >= 0; --j) {
            v = field.add(field.mul(v, x), coeffs[static_cast<std::size_t>(j)]);
        }
        std::uint64_t vi = field.index(v);
        affine += vi == 0 ? 1 : (square[vi] ? 2 : 0);
    }
    return affine;
}

// Power sums p_1..p_m of the roots of a monic polynomial, by Newton's identities.
std::vector<Integer> power_sums_of(const IntPoly& monic, std::size_t m) {
    const std::size_t d = monic.size() - 1;
    // e_i = (-1)^i c_{d-i}
    std::vector<Integer> e(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        e[i] = (i % 2 == 0) ? monic[d - i] : Integer(-monic[d - i]);
    }
    std::vector<Integer> s(m + 1, 0);
    for (std::size_t k = 1; k <= m; ++k) {
        Integer acc = 0;
        for (std::size_t i = 1; i < k && i <= d; ++i) {
            Integer term = e[i] * s[k - i];
            acc += (i % 2 == 1) ? term : Integer(-term);
        }
        if (k <= d) {
            Integer term = Integer(static_cast<unsigned long>(k)) * e[k];
            acc += (k % 2 == 1) ? term : Integer(-term);
        }
        s[k] = acc;
    }
    return s;
}

// Monic polynomial of degree d whose roots have power sums s[1..d].
IntPoly monic_from_power_sums(const std::vector<Integer>& s, std::size_t d) {
    std::vector<Integer> e(d + 1, 0);
    e[0] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        Integer acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            Integer term = e[k - i] * s[i];
            acc += (i % 2 == 1) ? term : Integer(-term);
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(k))) {
            throw Error(ErrorKind::Internal, "Newton identity produced a non-integral coefficient");
        }
        e[k] = acc / static_cast<unsigned long>(k);
    }
    IntPoly poly(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        poly[d - i] = (i % 2 == 0) ? e[i] : Integer(-e[i]);
    }
    return poly;
}

int genus_of_degree(int n) {
    return (n - 1) / 2;
}

} // namespace

std::uint64_t count_points(const FpPoly& f, int k) {
    const std::uint64_t p = f.modulus();
    if (p == 2 || !is_prime(p)) {
        throw Error(ErrorKind::InvalidArgument, "count_points requires an odd prime");
    }
    if (k < 1 || k > kMaxExtensionDegree) {
        throw Error(ErrorKind::InvalidArgument, "extension degree out of range");
    }
    if (f.degree() < 1) {
        throw Error(ErrorKind::InvalidArgument, "curve polynomial must have positive degree");
    }
    if (!is_squarefree(f)) {
        throw Error(ErrorKind::BadPrime, "bad prime " + std::to_string(p) + ": reduction has a repeated root");
    }
    field_order(p, k);
    std::uint64_t affine = k == 1 ? count_prime_field(f) : count_extension(f, k);
    return affine + infinity_points(f, k);
}

FrobeniusData frobenius_charpoly(const RatPoly& f, std::uint64_t p) {
    const int g = genus_of_degree(f.degree());
    if (g < 1 || g > kMaxFrobeniusGenus) {
        throw Error(ErrorKind::DegreeCap, "Frobenius data supports genus 1..4");
    }
    if (p == 2 || !is_prime(p)) {
        throw Error(ErrorKind::InvalidArgument, "Frobenius data requires an odd prime");
    }
    FpPoly fp = FpPoly::reduce(f, p);
    if (fp.degree() != f.degree()) {
        throw Error(ErrorKind::BadPrime, "bad prime " + std::to_string(p) + ": divides the leading coefficient");
    }

    FrobeniusData data;
    data.p = p;
    data.genus = g;
    Integer pk = 1;
    for (int k = 1; k <= g; ++k) {
        pk *= static_cast<unsigned long>(p);
        Integer n_k(static_cast<unsigned long>(count_points(fp, k)));
        Integer s_k = pk + 1 - n_k;
        if (s_k * s_k > Integer(4 * g * g) * pk) {
            throw Error(ErrorKind::Internal, "Weil bound violated at p = " + std::to_string(p) +
                                                 ", k = " + std::to_string(k));
        }
        data.counts.push_back(n_k);
        data.power_sums.push_back(s_k);
    }

    // e_1..e_g from the power sums, then e_{2g-i} = p^{g-i} e_i.
    std::vector<Integer> s(static_cast<std::size_t>(g) + 1, 0);
    for (int k = 1; k <= g; ++k) {
        s[static_cast<std::size_t>(k)] = data.power_sums[static_cast<std::size_t>(k - 1)];
    }
    IntPoly low = monic_from_power_sums(s, static_cast<std::size_t>(g));
    std::vector<Integer> e(2 * static_cast<std::size_t>(g) + 1, 0);
    for (int i = 0; i <= g; ++i) {
        Integer ei = low[static_cast<std::size_t>(g - i)];
        e[static_cast<std::size_t>(i)] = (i % 2 == 0) ? ei : Integer(-ei);
    }
    for (int i = 0; i < g; ++i) {
        e[static_cast<std::size_t>(2 * g - i)] = power(Integer(static_cast<unsigned long>(p)),
                                                       static_cast<unsigned long>(g - i)) *
                                                 e[static_cast<std::size_t>(i)];
    }
    const std::size_t d = 2 * static_cast<std::size_t>(g);
    data.charpoly.assign(d + 1, 0);
    for (std::size_t i = 0; i <= d; ++i) {
        data.charpoly[d - i] = (i % 2 == 0) ? e[i] : Integer(-e[i]);
    }
    if (evaluate(data.charpoly, 1) <= 0) {
        throw Error(ErrorKind::Internal, "#J(F_p) is not positive at p = " + std::to_string(p));
    }
    return data;
}

IntPoly power_charpoly(const IntPoly& charpoly, unsigned r) {
    if (r == 0) {
        throw Error(ErrorKind::InvalidArgument, "power exponent must be positive");
    }
    if (charpoly.empty() || charpoly.back() != 1) {
        throw Error(ErrorKind::InvalidArgument, "power_charpoly expects a monic polynomial");
    }
    const std::size_t d = charpoly.size() - 1;
    std::vector<Integer> s = power_sums_of(charpoly, d * r);
    std::vector<Integer> sr(d + 1, 0);
    for (std::size_t k = 1; k <= d; ++k) {
        sr[k] = s[k * r];
    }
    return monic_from_power_sums(sr, d);
}

IntPoly power_charpoly(const FrobeniusData& data, unsigned r) {
    return power_charpoly(data.charpoly, r);
}

Integer evaluate(const IntPoly& poly, const Integer& x) {
    Integer acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RatPoly to_rat_poly(const IntPoly& poly) {
    std::vector<Rational> coeffs(poly.begin(), poly.end());
    return RatPoly(std::move(coeffs));
}

std::string to_string(const IntPoly& poly, std::string_view var) {
    return to_rat_poly(poly).to_string(var);
}

std::string to_string(HomGrade grade) {
    return grade == HomGrade::ProvedOverFpr ? "ProvedOverFpr" : "Evidence";
}

HomZeroCertificate hom_zero_certificate(const RatPoly& f1, const RatPoly& f2, std::size_t prime_budget,
                                        unsigned r) {
    if (prime_budget == 0) {
        throw Error(ErrorKind::InvalidArgument, "prime budget must be positive");
    }
    if (r == 0) {
        throw Error(ErrorKind::InvalidArgument, "twist exponent must be positive");
    }
    for (const RatPoly* f : {&f1, &f2}) {
        int g = genus_of_degree(f->degree());
        if (g < 1 || g > kMaxFrobeniusGenus) {
            throw Error(ErrorKind::DegreeCap, "hom-zero certificates support genus 1..4");
        }
        if (!is_squarefree(*f)) {
            throw Error(ErrorKind::InvalidArgument, "polynomial has a repeated root");
        }
    }
    RatPoly common = gcd(f1, f2);
    const bool self_case = common.degree() == f1.degree() && common.degree() == f2.degree();
    if (common.degree() > 0 && !self_case) {
        throw Error(ErrorKind::InvalidArgument, "polynomials are not disjoint: they share a root");
    }

    HomZeroCertificate cert;
    cert.f1 = f1;
    cert.f2 = f2;
    cert.r = r;
    const int max_genus = std::max(genus_of_degree(f1.degree()), genus_of_degree(f2.degree()));
    std::uint64_t p = 3;
    for (std::size_t tried = 0; tried < prime_budget; ++tried, p = next_prime(p + 1)) {
        Integer q = power(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(max_genus));
        if (q > Integer(static_cast<unsigned long>(kMaxHomSearchFieldOrder))) {
            break;
        }
        FrobeniusData d1, d2;
        try {
            d1 = frobenius_charpoly(f1, p);
            d2 = frobenius_charpoly(f2, p);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::BadPrime) {
                continue;
            }
            throw;
        }
        IntPoly c1 = power_charpoly(d1, r);
        IntPoly c2 = power_charpoly(d2, r);
        RatPoly h = gcd(to_rat_poly(c1), to_rat_poly(c2));
        cert.attempts.push_back({p, h.degree()});
        cert.p = p;
        cert.charpoly1 = std::move(c1);
        cert.charpoly2 = std::move(c2);
        cert.gcd = h;
        if (h.degree() == 0) {
            cert.grade = HomGrade::ProvedOverFpr;
            break;
        }
    }

    std::ostringstream text;
    if (cert.grade == HomGrade::ProvedOverFpr) {
        text << "Every homomorphism J(C_f1) -> J(C_f2) defined over F_" << cert.p << "^" << r
             << " is zero: the characteristic polynomials of Frobenius^" << r
             << " are coprime. This covers homomorphisms over C only if they are defined over a field"
             << " whose reduction lies in F_" << cert.p << "^" << r << "; otherwise it is strong evidence.";
    } else if (cert.attempts.empty()) {
        text << "No usable prime within the budget; nothing is proved.";
    } else {
        text << "No prime within the budget gave coprime characteristic polynomials of Frobenius^" << r
             << "; Hom = 0 is not certified. The last gcd has degree " << cert.gcd.degree() << ".";
    }
    cert.statement = text.str();
    return cert;
}

bool supersingular_check(const RatPoly& f, std::uint64_t p) {
    if (f.degree() != 3 && f.degree() != 4) {
        throw Error(ErrorKind::InvalidArgument, "supersingular check expects a cubic or quartic model");
    }
    if (p < 5) {
        throw Error(ErrorKind::InvalidArgument, "supersingular check requires p >= 5");
    }
    FrobeniusData data = frobenius_charpoly(f, p);
    return mpz_divisible_ui_p(data.power_sums[0].get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

} // namespace prym
