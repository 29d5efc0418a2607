#include "specht/subgroups.hpp"

#include <algorithm>
#include <stdexcept>

#include "specht/numeric.hpp"

namespace specht {

long long legendre_valuation(long long n, long long p) {
    if (n < 0)
        throw std::invalid_argument("negative argument");
    require_prime(p);
    long long v = 0;
    for (long long q = p; q <= n; q *= p) {
        v += n / q;
        if (q > n / p)
            break;
    }
    return v;
}

long long AbelianPType::exponent_sum() const {
    long long s = 0;
    for (int e : exponents)
        s += e;
    return s;
}

long long AbelianPType::orbit_points() const {
    long long s = 0;
    for (int e : exponents)
        s += ipow(p, e);
    return s;
}

std::string AbelianPType::to_string() const {
    if (exponents.empty())
        return "1";
    std::string s;
    for (int e : exponents) {
        if (!s.empty())
            s += " x ";
        s += "Z_" + std::to_string(ipow(p, e));
    }
    return s;
}

AbelianPType make_abelian_type(int p, std::vector<int> exponents) {
    require_prime(p);
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 1)
            throw std::invalid_argument("abelian type exponents must be positive");
        if (i > 0 && exponents[i] > exponents[i - 1])
            throw std::invalid_argument("abelian type exponents must be weakly decreasing");
    }
    return AbelianPType{p, std::move(exponents)};
}

bool abelian_type_embeds(const AbelianPType& type, long long m) {
    return type.orbit_points() <= m;
}

namespace {

void collect_types(int p, long long budget, int max_exp, std::vector<int>& stack,
                   std::vector<AbelianPType>& out) {
    out.push_back(AbelianPType{p, stack});
    for (int e = max_exp; e >= 1; --e) {
        long long cost = ipow(p, e);
        if (cost > budget)
            continue;
        stack.push_back(e);
        collect_types(p, budget - cost, e, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<AbelianPType> enumerate_abelian_types(int p, long long m) {
    require_prime(p);
    if (m < 1)
        throw std::invalid_argument("m must be positive");
    int max_exp = 0;
    while (ipow(p, max_exp + 1) <= m)
        ++max_exp;
    std::vector<AbelianPType> out;
    std::vector<int> stack;
    collect_types(p, m, max_exp, stack, out);
    std::sort(out.begin(), out.end());
    return out;
}

long long MaxElemAbelianClass::p_rank() const {
    long long rank = 0;
    for (std::size_t j = 1; j < coeffs.size(); ++j)
        rank += static_cast<long long>(j) * coeffs[j];
    return rank;
}

AbelianPType MaxElemAbelianClass::orbit_type() const {
    std::vector<int> exps;
    for (std::size_t j = coeffs.size(); j-- > 1;)
        for (long long c = 0; c < coeffs[j]; ++c)
            exps.push_back(static_cast<int>(j));
    return AbelianPType{p, std::move(exps)};
}

std::string MaxElemAbelianClass::description() const {
    std::string s;
    for (std::size_t j = 1; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0)
            continue;
        if (!s.empty())
            s += " x ";
        s += "V_" + std::to_string(j) + "(" + std::to_string(p) + ")";
        if (coeffs[j] > 1)
            s += "^" + std::to_string(coeffs[j]);
    }
    return s.empty() ? "trivial" : s;
}

std::string MaxElemAbelianClass::to_json() const {
    std::string s = "{\"p\":" + std::to_string(p) + ",\"n\":" + std::to_string(n) + ",\"i\":[";
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (j > 0)
            s += ",";
        s += std::to_string(coeffs[j]);
    }
    return s + "]}";
}

namespace {

void collect_classes(int p, long long n, long long remaining, int j,
                     std::vector<long long>& digits, std::vector<MaxElemAbelianClass>& out) {
    if (j == 0) {
        if (remaining > p - 1)
            return;
        MaxElemAbelianClass cls;
        cls.p = p;
        cls.n = n;
        cls.coeffs = digits;
        cls.coeffs[0] = remaining;
        while (cls.coeffs.size() > 1 && cls.coeffs.back() == 0)
            cls.coeffs.pop_back();
        out.push_back(std::move(cls));
        return;
    }
    long long power = ipow(p, j);
    for (long long i = 0; i * power <= remaining; ++i) {
        digits[static_cast<std::size_t>(j)] = i;
        collect_classes(p, n, remaining - i * power, j - 1, digits, out);
    }
    digits[static_cast<std::size_t>(j)] = 0;
}

}  // namespace

std::vector<MaxElemAbelianClass> max_elem_abelian_classes(long long n, int p) {
    require_prime(p);
    if (n < 1)
        throw std::invalid_argument("degree must be positive");
    int r_max = 0;
    while (ipow(p, r_max + 1) <= n)
        ++r_max;
    std::vector<long long> digits(static_cast<std::size_t>(r_max) + 1, 0);
    std::vector<MaxElemAbelianClass> out;
    collect_classes(p, n, n, r_max, digits, out);
    std::sort(out.begin(), out.end(), [](const MaxElemAbelianClass& a,
                                         const MaxElemAbelianClass& b) {
        if (a.coeffs.size() != b.coeffs.size())
            return a.coeffs.size() < b.coeffs.size();
        for (std::size_t j = a.coeffs.size(); j-- > 0;)
            if (a.coeffs[j] != b.coeffs[j])
                return a.coeffs[j] < b.coeffs[j];
        return false;
    });
    return out;
}

long long p_rank(const MaxElemAbelianClass& cls) {
    return cls.p_rank();
}

}  // namespace specht
