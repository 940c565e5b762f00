#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace normeuclid::cyclo {

/// One cyclic factor of (Z/mZ)*: a generator (as a residue mod m) and its
/// order. `component` is the prime power of the CRT component it lives in.
struct UnitGenerator {
  long residue;
  long order;
  long component;
};

/// CRT decomposition of (Z/mZ)* with a discrete-log table over the
/// generators. Odd prime powers contribute their smallest primitive root,
/// 4 contributes 3, and 2^k (k >= 3) contributes -1 and 5.
class UnitGroupStructure {
 public:
  explicit UnitGroupStructure(long m);

  long modulus() const { return m_; }
  std::span<const UnitGenerator> generators() const { return gens_; }
  long order() const { return order_; }
  long exponent() const { return exponent_; }  // lcm of generator orders
  bool is_unit(long a) const;

  /// Exponent vector of a over the generators; a must be a unit.
  std::span<const int> dlog(long a) const;

  /// prod g_i^{e_i} mod m.
  long exponentiate(std::span<const int> exponents) const;

 private:
  long m_;
  long order_ = 1;
  long exponent_ = 1;
  std::vector<UnitGenerator> gens_;
  std::vector<char> unit_;
  std::vector<int> dlog_;  // stride gens_.size(), indexed by residue
};

UnitGroupStructure unit_group(long m);

/// exp(2 pi i num/den) with 0 <= num < den and gcd(num, den) = 1.
struct Rotation {
  long num;
  long den;
  bool operator==(const Rotation&) const = default;
};

struct DirichletCharacter {
  long modulus;
  std::vector<int> exponents;  // one per generator, reduced mod its order
  long conductor;

  bool is_trivial() const;
};

/// All phi(m) Dirichlet characters mod m, with values, conjugates and the
/// inducing primitive characters.
class CharacterGroup {
 public:
  explicit CharacterGroup(long m);

  long modulus() const { return units_.modulus(); }
  const UnitGroupStructure& units() const { return units_; }
  const std::vector<DirichletCharacter>& characters() const { return chars_; }

  /// chi(a) as a root-of-unity index, or std::nullopt when gcd(a, m) > 1.
  std::optional<Rotation> value(const DirichletCharacter& chi, long a) const;

  /// chi(a) as k in exp(2 pi i k / exponent()); -1 for non-units.
  long rotation_index(const DirichletCharacter& chi, long a) const;

  std::complex<double> complex_value(const DirichletCharacter& chi, long a) const;

  /// chi*(b) for the primitive character inducing chi, b taken mod the
  /// conductor; zero when gcd(b, conductor) > 1.
  std::complex<double> primitive_value(const DirichletCharacter& chi, long b) const;

  /// Index of the complex-conjugate character.
  std::size_t conjugate_index(std::size_t i) const;

  /// exp(2 pi i k / exponent()) from a precomputed table.
  std::complex<double> root_of_unity(long k) const { return roots_[static_cast<std::size_t>(k)]; }

  /// A residue mod m that is a unit and is congruent to b mod d (d | m).
  long lift(long b, long d) const;

 private:
  long conductor_of(std::span<const int> exponents) const;

  UnitGroupStructure units_;
  std::vector<DirichletCharacter> chars_;
  std::vector<std::complex<double>> roots_;
  std::vector<long> lift_divisors_;
  std::vector<std::vector<long>> lifts_;  // per divisor d: b -> lift (0 if not a unit mod d)
};

CharacterGroup characters(long m);

}  // namespace normeuclid::cyclo
