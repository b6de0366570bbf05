#include "prym/prime.hpp"

#include "prym/error.hpp"

#include <array>

namespace prym {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exponent >>= 1U;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) {
        throw Error(ErrorKind::InvalidArgument, "zero has no inverse");
    }
    return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t b : bases) {
        if (n % b == 0) {
            return n == b;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : bases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    if (n <= 2) {
        return 2;
    }
    if ((n & 1U) == 0) {
        ++n;
    }
    while (!is_prime(n)) {
        n += 2;
    }
    return n;
}

int legendre(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) {
        return 0;
    }
    return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

} // namespace prym
