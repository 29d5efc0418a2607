#pragma once

namespace specht {

bool is_prime(long long n);

// Throws std::invalid_argument unless p is prime.
void require_prime(long long p);

// base^exp for small arguments; throws std::overflow_error on overflow.
long long ipow(long long base, int exp);

}  // namespace specht
