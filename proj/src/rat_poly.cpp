#include "prym/rat_poly.hpp"

#include "prym/error.hpp"

#include <algorithm>
#include <cmath>

namespace prym {

RatPoly::RatPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

RatPoly::RatPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
    trim();
}

RatPoly RatPoly::constant(const Rational& c) {
    return RatPoly(std::vector<Rational>{c});
}

RatPoly RatPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return RatPoly(std::move(coeffs));
}

RatPoly RatPoly::x() {
    return monomial(1, 1);
}

RatPoly RatPoly::from_roots(const std::vector<Rational>& roots) {
    RatPoly result = constant(1);
    for (const Rational& r : roots) {
        result *= RatPoly{-r, 1};
    }
    return result;
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational RatPoly::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& RatPoly::leading() const {
    if (coeffs_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    }
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) {
        return {};
    }
    Rational inv = 1 / leading();
    RatPoly result = *this;
    result *= inv;
    return result;
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
    RatPoly result;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        result *= inner;
        result += constant(*it);
    }
    return result;
}

Rational RatPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::complex<double> RatPoly::evaluate(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + it->get_d();
    }
    return acc;
}

double RatPoly::max_abs_coefficient() const {
    double m = 0.0;
    for (const Rational& c : coeffs_) {
        m = std::max(m, std::fabs(c.get_d()));
    }
    return m;
}

std::string RatPoly::to_string(std::string_view var) const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) {
            continue;
        }
        bool negative = c < 0;
        if (out.empty()) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        Rational magnitude = abs(c);
        if (d == 0) {
            out += prym::to_string(magnitude);
            continue;
        }
        if (magnitude != 1) {
            out += prym::to_string(magnitude);
            out += "*";
        }
        out += var;
        if (d > 1) {
            out += "^" + std::to_string(d);
        }
    }
    return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> product(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            product[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(product);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& scalar) {
    for (Rational& c : coeffs_) {
        c *= scalar;
    }
    trim();
    return *this;
}

RatPoly RatPoly::operator-() const {
    RatPoly result = *this;
    for (Rational& c : result.coeffs_) {
        c = -c;
    }
    return result;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {RatPoly{}, a};
    }
    std::vector<Rational> rem = a.coefficients();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> quot(rem.size() - db);
    Rational inv_lc = 1 / b.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational t = rem[k + db] * inv_lc;
        quot[k] = t;
        if (t == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k + j] -= t * b.coefficients()[j];
        }
    }
    rem.resize(db);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Rational resultant(const RatPoly& a_in, const RatPoly& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) {
        return 0;
    }
    RatPoly a = a_in;
    RatPoly b = b_in;
    Rational acc = 1;
    while (true) {
        const int m = a.degree();
        const int n = b.degree();
        if (n == 0) {
            return acc * power(b.leading(), static_cast<unsigned long>(m));
        }
        RatPoly r = divmod(a, b).second;
        if (r.is_zero()) {
            return 0;
        }
        const int k = r.degree();
        // Res(a, b) = (-1)^(mn) lc(b)^(m-k) Res(b, a mod b)
        if ((m * n) % 2 != 0) {
            acc = -acc;
        }
        acc *= power(b.leading(), static_cast<unsigned long>(m - k));
        a = std::move(b);
        b = std::move(r);
    }
}

Rational discriminant(const RatPoly& f) {
    if (f.degree() < 1) {
        throw Error(ErrorKind::InvalidArgument, "discriminant undefined for constant or zero polynomial");
    }
    const long n = f.degree();
    Rational d = resultant(f, f.derivative()) / f.leading();
    if ((n * (n - 1) / 2) % 2 != 0) {
        d = -d;
    }
    return d;
}

bool is_squarefree(const RatPoly& f) {
    if (f.is_zero()) {
        return false;
    }
    return gcd(f, f.derivative()).degree() <= 0;
}

std::vector<Integer> primitive_integer_coefficients(const RatPoly& f) {
    if (f.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "zero polynomial");
    }
    Integer lcm_den = 1;
    for (const Rational& c : f.coefficients()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    std::vector<Integer> out;
    out.reserve(f.coefficients().size());
    Integer content = 0;
    for (const Rational& c : f.coefficients()) {
        Integer v = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    if (out.back() < 0) {
        content = -content;
    }
    for (Integer& v : out) {
        v /= content;
    }
    return out;
}

} // namespace prym
