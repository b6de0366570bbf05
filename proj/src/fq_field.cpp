#include "prym/fq_field.hpp"

#include "prym/error.hpp"
#include "prym/prime.hpp"

#include <random>

namespace prym {

namespace {

constexpr std::uint64_t kFieldSearchSeed = 0x9E3779B97F4A7C15ULL;

void check_base(std::uint64_t p, int k) {
    if (p < 3 || p >= (1ULL << 32) || !is_prime(p)) {
        throw Error(ErrorKind::InvalidArgument, "F_q needs an odd prime below 2^32, got " + std::to_string(p));
    }
    if (k < 1 || k > kMaxExtensionDegree) {
        throw Error(ErrorKind::InvalidArgument, "extension degree must be in [1, 8]");
    }
}

std::uint64_t checked_power(std::uint64_t p, int k) {
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > UINT64_MAX / p) {
            throw Error(ErrorKind::InvalidArgument, "field order overflows 64 bits");
        }
        q *= p;
    }
    return q;
}

} // namespace

FqField::FqField(std::uint64_t p, int k) : p_(p), k_(k), q_(0), modulus_(p, {}) {
    check_base(p, k);
    q_ = checked_power(p, k);
    if (k == 1) {
        modulus_ = FpPoly::x(p);
    } else {
        std::mt19937_64 rng(kFieldSearchSeed ^ (p * 0x100000001B3ULL) ^ static_cast<std::uint64_t>(k));
        std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
        while (true) {
            std::vector<std::uint64_t> c(static_cast<std::size_t>(k) + 1);
            for (int i = 0; i < k; ++i) {
                c[static_cast<std::size_t>(i)] = dist(rng);
            }
            c[static_cast<std::size_t>(k)] = 1;
            FpPoly candidate(p, std::move(c));
            if (is_irreducible(candidate)) {
                modulus_ = candidate;
                break;
            }
        }
    }
    init_tables();
}

FqField::FqField(const FpPoly& defining)
    : p_(defining.modulus()), k_(defining.degree()), q_(0), modulus_(defining.monic()) {
    check_base(p_, k_);
    if (!is_irreducible(modulus_)) {
        throw Error(ErrorKind::InvalidArgument, "defining polynomial is not irreducible");
    }
    q_ = checked_power(p_, k_);
    init_tables();
}

void FqField::init_tables() {
    for (int i = 0; i < k_; ++i) {
        low_[static_cast<std::size_t>(i)] = modulus_.coefficient(static_cast<std::size_t>(i));
    }
}

FqElem FqField::one() const {
    return from_base(1);
}

FqElem FqField::from_base(std::uint64_t a) const {
    FqElem e;
    e.c[0] = a % p_;
    return e;
}

FqElem FqField::generator() const {
    if (k_ == 1) {
        // m = t, so the class of t is 0.
        return zero();
    }
    FqElem e;
    e.c[1] = 1;
    return e;
}

FqElem FqField::add(const FqElem& a, const FqElem& b) const {
    FqElem r;
    for (int i = 0; i < k_; ++i) {
        std::uint64_t s = a.c[i] + b.c[i];
        r.c[i] = s >= p_ ? s - p_ : s;
    }
    return r;
}

FqElem FqField::sub(const FqElem& a, const FqElem& b) const {
    FqElem r;
    for (int i = 0; i < k_; ++i) {
        r.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : a.c[i] + (p_ - b.c[i]);
    }
    return r;
}

FqElem FqField::mul(const FqElem& a, const FqElem& b) const {
    if (k_ == 1) {
        FqElem r;
        r.c[0] = a.c[0] * b.c[0] % p_;
        return r;
    }
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
    for (int i = 0; i < k_; ++i) {
        if (a.c[i] == 0) {
            continue;
        }
        for (int j = 0; j < k_; ++j) {
            prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % p_;
        }
    }
    // t^k = -sum low_[i] t^i
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        std::uint64_t t = prod[d];
        if (t == 0) {
            continue;
        }
        prod[d] = 0;
        for (int i = 0; i < k_; ++i) {
            std::uint64_t sub = t * low_[i] % p_;
            std::uint64_t& slot = prod[d - k_ + i];
            slot = slot >= sub ? slot - sub : slot + (p_ - sub);
        }
    }
    FqElem r;
    for (int i = 0; i < k_; ++i) {
        r.c[i] = prod[i];
    }
    return r;
}

FqElem FqField::pow(FqElem base, std::uint64_t exponent) const {
    FqElem result = one();
    while (exponent > 0) {
        if (exponent & 1U) {
            result = mul(result, base);
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

bool FqField::is_zero(const FqElem& a) const {
    for (int i = 0; i < k_; ++i) {
        if (a.c[i] != 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t FqField::index(const FqElem& a) const {
    std::uint64_t idx = 0;
    for (int i = k_ - 1; i >= 0; --i) {
        idx = idx * p_ + a.c[i];
    }
    return idx;
}

FqElem FqField::element(std::uint64_t index) const {
    if (index >= q_) {
        throw Error(ErrorKind::InvalidArgument, "field index out of range");
    }
    FqElem e;
    for (int i = 0; i < k_; ++i) {
        e.c[i] = index % p_;
        index /= p_;
    }
    return e;
}

FqElem FqField::evaluate(const FpPoly& f, const FqElem& x) const {
    FqElem acc;
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = mul(acc, x);
        std::uint64_t s = acc.c[0] + *it;
        acc.c[0] = s >= p_ ? s - p_ : s;
    }
    return acc;
}

} // namespace prym
