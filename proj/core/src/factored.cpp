#include "specht/factored.hpp"

#include <stdexcept>
#include <vector>

namespace specht {

FactoredNat FactoredNat::from_integer(long long v) {
    if (v < 1)
        throw std::invalid_argument("FactoredNat represents positive integers");
    FactoredNat r;
    for (long long d = 2; d * d <= v; ++d) {
        while (v % d == 0) {
            ++r.exp_[d];
            v /= d;
        }
    }
    if (v > 1)
        ++r.exp_[v];
    return r;
}

FactoredNat FactoredNat::factorial(long long n) {
    if (n < 0)
        throw std::invalid_argument("factorial of a negative number");
    FactoredNat r;
    for (long long p = 2; p <= n; ++p) {
        bool prime = true;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (!prime)
            continue;
        long long e = 0;
        for (long long q = p; q <= n; q *= p) {
            e += n / q;
            if (q > n / p)
                break;
        }
        r.exp_[p] = e;
    }
    return r;
}

FactoredNat& FactoredNat::operator*=(const FactoredNat& o) {
    for (const auto& [p, e] : o.exp_)
        exp_[p] += e;
    return *this;
}

FactoredNat& FactoredNat::divide_exact(const FactoredNat& o) {
    for (const auto& [p, e] : o.exp_) {
        auto it = exp_.find(p);
        long long have = it == exp_.end() ? 0 : it->second;
        if (have < e)
            throw std::domain_error("FactoredNat::divide_exact: not divisible");
        if (have == e)
            exp_.erase(p);
        else
            it->second = have - e;
    }
    return *this;
}

long long FactoredNat::exponent(long long prime) const {
    auto it = exp_.find(prime);
    return it == exp_.end() ? 0 : it->second;
}

FactoredNat FactoredNat::p_part(long long p) const {
    FactoredNat r;
    long long e = exponent(p);
    if (e > 0)
        r.exp_[p] = e;
    return r;
}

std::uint64_t FactoredNat::value_u64() const {
    std::uint64_t v = 1;
    for (const auto& [p, e] : exp_)
        for (long long i = 0; i < e; ++i) {
            if (v > UINT64_MAX / static_cast<std::uint64_t>(p))
                throw std::overflow_error("FactoredNat value exceeds 64 bits");
            v *= static_cast<std::uint64_t>(p);
        }
    return v;
}

std::string FactoredNat::decimal_string() const {
    // Schoolbook limbs, base 1e9.
    std::vector<std::uint32_t> limbs{1};
    auto mul_small = [&limbs](std::uint64_t m) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs) {
            std::uint64_t cur = limb * m + carry;
            limb = static_cast<std::uint32_t>(cur % 1000000000u);
            carry = cur / 1000000000u;
        }
        while (carry) {
            limbs.push_back(static_cast<std::uint32_t>(carry % 1000000000u));
            carry /= 1000000000u;
        }
    };
    for (const auto& [p, e] : exp_)
        for (long long i = 0; i < e; ++i)
            mul_small(static_cast<std::uint64_t>(p));
    std::string s = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
        std::string part = std::to_string(*it);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

std::string FactoredNat::factored_string() const {
    if (exp_.empty())
        return "1";
    std::string s;
    for (const auto& [p, e] : exp_) {
        if (!s.empty())
            s += "*";
        s += std::to_string(p);
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace specht
