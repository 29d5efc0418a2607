#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace specht {

/* A positive integer kept as a map prime -> exponent.  Multiplication is
 * exponent addition, so p-parts and prime valuations are exact with no
 * factorization step even when the value itself does not fit a machine
 * word (n! for n around 40 already overflows 64 bits).
 */
class FactoredNat {
public:
    FactoredNat() = default;  // the integer 1

    static FactoredNat from_integer(long long v);  // v >= 1, trial division
    static FactoredNat factorial(long long n);     // exponents via Legendre's formula

    FactoredNat& operator*=(const FactoredNat& o);
    friend FactoredNat operator*(FactoredNat a, const FactoredNat& b) {
        a *= b;
        return a;
    }

    // Exact division; throws std::domain_error if o does not divide *this.
    FactoredNat& divide_exact(const FactoredNat& o);

    long long exponent(long long prime) const;
    FactoredNat p_part(long long p) const;  // p^{exponent(p)}

    bool is_one() const { return exp_.empty(); }
    const std::map<long long, long long>& exponents() const { return exp_; }

    // Exact value as u64; throws std::overflow_error if it does not fit.
    std::uint64_t value_u64() const;

    std::string decimal_string() const;   // exact, arbitrary size
    std::string factored_string() const;  // e.g. "2^2*3*7", "1"

    friend bool operator==(const FactoredNat&, const FactoredNat&) = default;

private:
    std::map<long long, long long> exp_;  // prime -> exponent > 0
};

}  // namespace specht
