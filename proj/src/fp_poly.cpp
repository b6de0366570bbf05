#include "prym/fp_poly.hpp"

#include "prym/error.hpp"
#include "prym/prime.hpp"

#include <algorithm>

namespace prym {

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coefficients)
    : p_(p), coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) {
        c %= p_;
    }
    trim();
}

FpPoly FpPoly::reduce(const RatPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> coeffs;
    coeffs.reserve(f.coefficients().size());
    for (const Rational& c : f.coefficients()) {
        coeffs.push_back(reduce_mod(c, p));
    }
    return FpPoly(p, std::move(coeffs));
}

FpPoly FpPoly::reduce(const std::vector<Integer>& f, std::uint64_t p) {
    std::vector<std::uint64_t> coeffs;
    coeffs.reserve(f.size());
    for (const Integer& c : f) {
        coeffs.push_back(reduce_mod(Rational(c), p));
    }
    return FpPoly(p, std::move(coeffs));
}

FpPoly FpPoly::x(std::uint64_t p) {
    return FpPoly(p, {0, 1});
}

void FpPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

std::uint64_t FpPoly::leading() const {
    if (coeffs_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
}

FpPoly FpPoly::derivative() const {
    std::vector<std::uint64_t> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(mul_mod(coeffs_[i], i % p_, p_));
    }
    return FpPoly(p_, std::move(d));
}

FpPoly FpPoly::monic() const {
    if (is_zero()) {
        return *this;
    }
    std::uint64_t inv = inv_mod(leading(), p_);
    std::vector<std::uint64_t> c = coeffs_;
    for (auto& v : c) {
        v = mul_mod(v, inv, p_);
    }
    return FpPoly(p_, std::move(c));
}

std::uint64_t FpPoly::evaluate(std::uint64_t x) const {
    std::uint64_t acc = 0;
    x %= p_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = (mul_mod(acc, x, p_) + *it) % p_;
    }
    return acc;
}

FpPoly& FpPoly::operator+=(const FpPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        std::uint64_t s = coeffs_[i] + rhs.coeffs_[i];
        coeffs_[i] = s >= p_ ? s - p_ : s;
    }
    trim();
    return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] = coeffs_[i] >= rhs.coeffs_[i] ? coeffs_[i] - rhs.coeffs_[i]
                                                   : coeffs_[i] + (p_ - rhs.coeffs_[i]);
    }
    trim();
    return *this;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return FpPoly(a.p_, {});
    }
    const std::uint64_t p = a.p_;
    std::vector<std::uint64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] = (out[i + j] + mul_mod(a.coeffs_[i], b.coeffs_[j], p)) % p;
        }
    }
    return FpPoly(p, std::move(out));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    }
    const std::uint64_t p = a.modulus();
    if (a.degree() < b.degree()) {
        return {FpPoly(p, {}), a};
    }
    std::vector<std::uint64_t> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<std::uint64_t> quot(rem.size() - db, 0);
    const std::uint64_t inv_lc = inv_mod(b.leading(), p);
    for (std::size_t k = quot.size(); k-- > 0;) {
        std::uint64_t t = mul_mod(rem[k + db], inv_lc, p);
        quot[k] = t;
        if (t == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            std::uint64_t sub = mul_mod(t, bc[j], p);
            rem[k + j] = rem[k + j] >= sub ? rem[k + j] - sub : rem[k + j] + (p - sub);
        }
    }
    rem.resize(db);
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly pow_mod(const FpPoly& base, std::uint64_t exponent, const FpPoly& m) {
    const std::uint64_t p = m.modulus();
    FpPoly result = divmod(FpPoly(p, {1}), m).second;
    FpPoly b = divmod(base, m).second;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = divmod(result * b, m).second;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            b = divmod(b * b, m).second;
        }
    }
    return result;
}

bool is_squarefree(const FpPoly& f) {
    if (f.is_zero()) {
        return false;
    }
    return gcd(f, f.derivative()).degree() == 0;
}

int DegreePattern::total() const {
    int s = 0;
    for (int d : parts) {
        s += d;
    }
    return s;
}

std::string DegreePattern::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(parts[i]);
    }
    return out + "]";
}

DegreePattern distinct_degree_pattern(const FpPoly& f_in) {
    if (f_in.degree() < 1) {
        return {};
    }
    const std::uint64_t p = f_in.modulus();
    FpPoly f = f_in.monic();
    const FpPoly x = FpPoly::x(p);
    FpPoly h = divmod(x, f).second;
    DegreePattern pattern;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        // h = x^(p^d) mod f
        h = pow_mod(h, p, f);
        FpPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            for (int i = 0; i < g.degree() / d; ++i) {
                pattern.parts.push_back(d);
            }
            f = divmod(f, g).first;
            h = divmod(h, f).second;
        }
    }
    if (f.degree() > 0) {
        pattern.parts.push_back(f.degree());
    }
    std::sort(pattern.parts.begin(), pattern.parts.end(), std::greater<>());
    return pattern;
}

bool is_irreducible(const FpPoly& f) {
    if (f.degree() < 1) {
        return false;
    }
    if (!is_squarefree(f)) {
        return false;
    }
    DegreePattern pat = distinct_degree_pattern(f);
    return pat.parts.size() == 1;
}

std::optional<DegreePattern> degree_pattern(const RatPoly& f, std::uint64_t p) {
    if (f.degree() < 1) {
        throw Error(ErrorKind::InvalidArgument, "degree pattern needs a nonconstant polynomial");
    }
    if (p == 2 || !is_prime(p)) {
        throw Error(ErrorKind::InvalidArgument, "degree pattern needs an odd prime, got " + std::to_string(p));
    }
    std::vector<Integer> z = primitive_integer_coefficients(f);
    FpPoly fp = FpPoly::reduce(z, p);
    if (fp.degree() != f.degree()) {
        throw Error(ErrorKind::BadPrime, "bad prime " + std::to_string(p) + ": divides the leading coefficient");
    }
    if (!is_squarefree(fp)) {
        return std::nullopt;
    }
    return distinct_degree_pattern(fp);
}

} // namespace prym
