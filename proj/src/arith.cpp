#include "normeuclid/arith.hpp"

#include <limits>
#include <numeric>

#include "normeuclid/errors.hpp"

namespace normeuclid::cyclo {

std::vector<PrimePower> factorize(long m) {
  if (m < 1) throw DomainError("factorize: requires m >= 1");
  std::vector<PrimePower> out;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

long euler_phi(long m) {
  long phi = m;
  for (const auto& [p, e] : factorize(m)) {
    phi = phi / p * (p - 1);
  }
  return phi;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long pow_mod(long base, long exp, long mod) {
  if (mod < 1 || mod > (1L << 31)) throw DomainError("pow_mod: modulus out of range");
  if (mod == 1) return 0;
  const auto um = static_cast<std::uint64_t>(mod);
  std::uint64_t result = 1;
  std::uint64_t b = static_cast<std::uint64_t>(((base % mod) + mod) % mod);
  while (exp > 0) {
    if (exp & 1) result = result * b % um;
    b = b * b % um;
    exp >>= 1;
  }
  return static_cast<long>(result);
}

long multiplicative_order(long a, long m) {
  if (m < 1) throw DomainError("multiplicative_order: requires m >= 1");
  if (m == 1) return 1;
  if (std::gcd(a, m) != 1) throw DomainError("multiplicative_order: a is not a unit mod m");
  // The order divides phi(m); strip prime factors while the power stays 1.
  long order = euler_phi(m);
  for (const auto& [q, e] : factorize(order)) {
    for (int i = 0; i < e && order % q == 0; ++i) {
      if (pow_mod(a, order / q, m) != 1) break;
      order /= q;
    }
  }
  return order;
}

long strip_prime(long m, long p) {
  while (m % p == 0) m /= p;
  return m;
}

std::vector<long> divisors(long m) {
  if (m < 1) throw DomainError("divisors: requires m >= 1");
  std::vector<long> small;
  std::vector<long> large;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  if (limit > std::numeric_limits<std::uint32_t>::max()) {
    throw DomainError("primes_up_to: limit too large");
  }
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t saturating_pow(std::uint64_t p, long e) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (long i = 0; i < e; ++i) {
    if (result > kMax / p) return kMax;
    result *= p;
  }
  return result;
}

}  // namespace normeuclid::cyclo
