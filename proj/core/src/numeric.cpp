#include "specht/numeric.hpp"

#include <stdexcept>
#include <string>

namespace specht {

bool is_prime(long long n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

void require_prime(long long p) {
    if (!is_prime(p))
        throw std::invalid_argument("expected a prime, got " + std::to_string(p));
}

long long ipow(long long base, int exp) {
    if (exp < 0)
        throw std::invalid_argument("negative exponent");
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > (1LL << 62) / base)
            throw std::overflow_error("ipow overflow");
        r *= base;
    }
    return r;
}

}  // namespace specht
