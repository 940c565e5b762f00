#include "normeuclid/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "normeuclid/arith.hpp"
#include "normeuclid/constants.hpp"
#include "normeuclid/errors.hpp"

namespace normeuclid::cyclo {
namespace {

// Largest modulus for which the dense discrete-log table is built.
constexpr long kMaxModulus = 1L << 22;

long mod_inverse(long a, long m) {
  long t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    const long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DomainError("mod_inverse: not invertible");
  return ((t % m) + m) % m;
}

// x mod m with x = g (mod q) and x = 1 (mod m/q).
long crt_lift(long g, long q, long m) {
  const long rest = m / q;
  if (rest == 1) return g % m;
  const long k = ((g - 1) % q + q) % q * mod_inverse(rest % q, q) % q;
  return (1 + rest * k) % m;
}

long smallest_primitive_root(long p, int k) {
  const long q = static_cast<long>(saturating_pow(static_cast<std::uint64_t>(p), k));
  const long phi = q / p * (p - 1);
  for (long g = 2; g < q; ++g) {
    if (g % p == 0) continue;
    if (multiplicative_order(g, q) == phi) return g;
  }
  return 1;  // only reached for q = 2
}

int log2_exact(long x) {
  int e = 0;
  while (x > 1) {
    x >>= 1;
    ++e;
  }
  return e;
}

}  // namespace

UnitGroupStructure::UnitGroupStructure(long m) : m_(m) {
  if (m < 1) throw DomainError("unit_group: requires m >= 1");
  if (m > kMaxModulus) throw DomainError("unit_group: modulus too large");

  for (const auto& [p, k] : factorize(m)) {
    const long q = static_cast<long>(saturating_pow(static_cast<std::uint64_t>(p), k));
    if (p == 2) {
      if (k == 2) gens_.push_back({crt_lift(3, q, m), 2, q});
      if (k >= 3) {
        gens_.push_back({crt_lift(q - 1, q, m), 2, q});
        gens_.push_back({crt_lift(5, q, m), q / 4, q});
      }
      continue;
    }
    gens_.push_back({crt_lift(smallest_primitive_root(p, k), q, m), q / p * (p - 1), q});
  }

  for (const auto& g : gens_) {
    order_ *= g.order;
    exponent_ = std::lcm(exponent_, g.order);
  }

  const std::size_t stride = gens_.size();
  unit_.assign(static_cast<std::size_t>(m), 0);
  dlog_.assign(static_cast<std::size_t>(m) * stride, 0);

  // Walk the exponent vectors in mixed radix and record where each lands.
  std::vector<int> e(stride, 0);
  for (long count = 0; count < order_; ++count) {
    const long a = exponentiate(e);
    unit_[static_cast<std::size_t>(a)] = 1;
    std::copy(e.begin(), e.end(), dlog_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(a) * stride));
    for (std::size_t i = 0; i < stride; ++i) {
      if (++e[i] < gens_[i].order) break;
      e[i] = 0;
    }
  }
}

bool UnitGroupStructure::is_unit(long a) const {
  return unit_[static_cast<std::size_t>(((a % m_) + m_) % m_)] != 0;
}

std::span<const int> UnitGroupStructure::dlog(long a) const {
  if (!is_unit(a)) throw DomainError("dlog: argument is not a unit");
  const std::size_t stride = gens_.size();
  const auto r = static_cast<std::size_t>(((a % m_) + m_) % m_);
  return std::span<const int>(dlog_.data() + r * stride, stride);
}

long UnitGroupStructure::exponentiate(std::span<const int> exponents) const {
  long x = 1 % m_;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    x = x * pow_mod(gens_[i].residue, exponents[i], m_) % m_;
  }
  return x;
}

UnitGroupStructure unit_group(long m) { return UnitGroupStructure(m); }

bool DirichletCharacter::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

CharacterGroup::CharacterGroup(long m) : units_(m) {
  const auto gens = units_.generators();
  const long big_e = units_.exponent();

  roots_.resize(static_cast<std::size_t>(big_e));
  for (long k = 0; k < big_e; ++k) {
    const double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(big_e);
    roots_[static_cast<std::size_t>(k)] = {std::cos(angle), std::sin(angle)};
  }

  std::vector<int> e(gens.size(), 0);
  chars_.reserve(static_cast<std::size_t>(units_.order()));
  for (long count = 0; count < units_.order(); ++count) {
    chars_.push_back({m, e, conductor_of(e)});
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (++e[i] < gens[i].order) break;
      e[i] = 0;
    }
  }

  for (const auto& chi : chars_) lift_divisors_.push_back(chi.conductor);
  std::sort(lift_divisors_.begin(), lift_divisors_.end());
  lift_divisors_.erase(std::unique(lift_divisors_.begin(), lift_divisors_.end()), lift_divisors_.end());
  for (long d : lift_divisors_) {
    std::vector<long> table(static_cast<std::size_t>(d), 0);
    for (long a = 1; a <= m; ++a) {
      if (!units_.is_unit(a)) continue;
      auto& slot = table[static_cast<std::size_t>(a % d)];
      if (slot == 0) slot = a;
    }
    lifts_.push_back(std::move(table));
  }
}

long CharacterGroup::conductor_of(std::span<const int> exponents) const {
  const auto gens = units_.generators();
  long conductor = 1;
  std::size_t i = 0;
  while (i < gens.size()) {
    const long q = gens[i].component;
    if (q % 2 == 0) {
      if (q == 4) {
        if (exponents[i] != 0) conductor *= 4;
        ++i;
        continue;
      }
      // 2^k with k >= 3: generators -1 then 5.
      const long o1 = gens[i + 1].order / std::gcd(static_cast<long>(exponents[i + 1]), gens[i + 1].order);
      if (o1 > 1) {
        conductor <<= 2 + log2_exact(o1);
      } else if (exponents[i] != 0) {
        conductor *= 4;
      }
      i += 2;
      continue;
    }
    const long o = gens[i].order / std::gcd(static_cast<long>(exponents[i]), gens[i].order);
    if (o > 1) {
      long p = 3;
      while (q % p != 0) p += 2;
      long pk = p;
      for (long t = o; t % p == 0; t /= p) pk *= p;
      conductor *= pk;
    }
    ++i;
  }
  return conductor;
}

long CharacterGroup::rotation_index(const DirichletCharacter& chi, long a) const {
  if (!units_.is_unit(a)) return -1;
  const auto gens = units_.generators();
  const auto d = units_.dlog(a);
  const long big_e = units_.exponent();
  long k = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    k = (k + static_cast<long>(chi.exponents[i]) * d[i] % gens[i].order * (big_e / gens[i].order)) % big_e;
  }
  return k;
}

std::optional<Rotation> CharacterGroup::value(const DirichletCharacter& chi, long a) const {
  const long k = rotation_index(chi, a);
  if (k < 0) return std::nullopt;
  const long big_e = units_.exponent();
  const long g = std::gcd(k, big_e);
  return Rotation{k / g, big_e / g};
}

std::complex<double> CharacterGroup::complex_value(const DirichletCharacter& chi, long a) const {
  const long k = rotation_index(chi, a);
  return k < 0 ? std::complex<double>{} : root_of_unity(k);
}

long CharacterGroup::lift(long b, long d) const {
  const auto it = std::lower_bound(lift_divisors_.begin(), lift_divisors_.end(), d);
  if (it != lift_divisors_.end() && *it == d) {
    const auto& table = lifts_[static_cast<std::size_t>(it - lift_divisors_.begin())];
    return table[static_cast<std::size_t>(((b % d) + d) % d)];
  }
  const long m = modulus();
  if (d < 1 || m % d != 0) throw DomainError("lift: d must divide the modulus");
  for (long a = ((b % d) + d) % d; a <= m; a += d) {
    if (a > 0 && units_.is_unit(a)) return a;
  }
  return 0;
}

std::complex<double> CharacterGroup::primitive_value(const DirichletCharacter& chi, long b) const {
  const long d = chi.conductor;
  if (std::gcd(((b % d) + d) % d, d) != 1) return {};
  return complex_value(chi, lift(b, d));
}

std::size_t CharacterGroup::conjugate_index(std::size_t i) const {
  const auto gens = units_.generators();
  const auto& e = chars_.at(i).exponents;
  std::size_t index = 0;
  std::size_t stride = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const long c = (gens[k].order - e[k]) % gens[k].order;
    index += static_cast<std::size_t>(c) * stride;
    stride *= static_cast<std::size_t>(gens[k].order);
  }
  return index;
}

CharacterGroup characters(long m) { return CharacterGroup(m); }

}  // namespace normeuclid::cyclo
