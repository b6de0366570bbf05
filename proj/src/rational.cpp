#include "prym/rational.hpp"

#include "prym/error.hpp"
#include "prym/prime.hpp"

namespace prym {

static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected for GMP interop");

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::BadPrime: return "bad_prime";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::DegreeCap: return "degree_cap";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

Rational make_rational(long numerator, long denominator) {
    return make_rational(Integer(numerator), Integer(denominator));
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
        throw Error(ErrorKind::InvalidArgument, "zero denominator");
    }
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

std::string to_string(const Integer& value) {
    return value.get_str();
}

Rational parse_rational(std::string_view text) {
    std::size_t slash = text.find('/');
    auto parse_int = [&](std::string_view part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) {
            i = 1;
        }
        if (i == part.size()) {
            throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
        }
        for (std::size_t k = i; k < part.size(); ++k) {
            if (part[k] < '0' || part[k] > '9') {
                throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
            }
        }
        std::string digits(part);
        if (digits[0] == '+') {
            digits.erase(0, 1);
        }
        return Integer(digits, 10);
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text, true));
    }
    return make_rational(parse_int(text.substr(0, slash), true), parse_int(text.substr(slash + 1), false));
}

Integer factorial(unsigned n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Integer power(const Integer& base, unsigned long exponent) {
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

Rational power(const Rational& base, unsigned long exponent) {
    Rational result(power(base.get_num(), exponent), power(base.get_den(), exponent));
    result.canonicalize();
    return result;
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
    Integer modulus(static_cast<unsigned long>(p));
    Integer den = q.get_den() % modulus;
    if (den == 0) {
        throw Error(ErrorKind::BadPrime, std::to_string(p) + " divides a denominator");
    }
    Integer num = q.get_num() % modulus;
    if (num < 0) {
        num += modulus;
    }
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    Integer r = (num * inv) % modulus;
    return r.get_ui();
}

} // namespace prym
