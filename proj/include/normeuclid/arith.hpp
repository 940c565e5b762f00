#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace normeuclid::cyclo {

struct PrimePower {
  long prime;
  int exponent;
};

/// Prime factorisation by trial division, primes ascending.
std::vector<PrimePower> factorize(long m);

long euler_phi(long m);

bool is_prime(long n);

long pow_mod(long base, long exp, long mod);

/// Multiplicative order of a modulo m (gcd(a, m) = 1); 1 when m == 1.
long multiplicative_order(long a, long m);

/// m with every factor of p removed.
long strip_prime(long m, long p);

/// All positive divisors of m, ascending.
std::vector<long> divisors(long m);

/// Primes <= limit (sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

/// p^e, or UINT64_MAX when the result does not fit.
std::uint64_t saturating_pow(std::uint64_t p, long e);

}  // namespace normeuclid::cyclo
