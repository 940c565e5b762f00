#include "normeuclid/cyclozeta.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "normeuclid/arith.hpp"
#include "normeuclid/errors.hpp"
#include "normeuclid/specfun.hpp"

namespace normeuclid::cyclo {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kPrimeBlock = 8192;

void check_s(double s, const char* what) {
  if (!(s > 1.0) || !std::isfinite(s)) throw PoleError(std::string(what) + ": requires finite s > 1");
}

void check_m(long m, const char* what) {
  if (m < 1) throw DomainError(std::string(what) + ": requires m >= 1");
}

// Hurwitz values zeta(s, a/d) (or their s-derivatives) for the units a mod d.
struct HurwitzRow {
  std::vector<double> value;  // indexed by a in [0, d); zero for non-units
  std::vector<double> err;
  double abs_sum = 0.0;
  double err_sum = 0.0;
  std::int64_t terms = 0;
};

HurwitzRow hurwitz_row(double s, long d, bool derivative) {
  HurwitzRow row;
  row.value.assign(static_cast<std::size_t>(d), 0.0);
  row.err.assign(static_cast<std::size_t>(d), 0.0);
  for (long a = 1; a <= d; ++a) {
    if (std::gcd(a, d) != 1) continue;
    const double x = static_cast<double>(a) / static_cast<double>(d);
    const Evaluation e = derivative ? specfun::hurwitz_zeta_ds(s, x) : specfun::hurwitz_zeta(s, x);
    const auto idx = static_cast<std::size_t>(a % d);
    row.value[idx] = e.value;
    row.err[idx] = e.err_estimate;
    row.abs_sum += std::fabs(e.value);
    row.err_sum += e.err_estimate;
    row.terms += e.terms_used;
  }
  return row;
}

// sum_a chi(a) row[a] over a mod q, using values of chi (primitive or not).
std::complex<double> twisted_sum(const CharacterGroup& group, const DirichletCharacter& chi, long q,
                                 const HurwitzRow& row, bool primitive) {
  KahanSum re;
  KahanSum im;
  for (long a = 1; a <= q; ++a) {
    const double h = row.value[static_cast<std::size_t>(a % q)];
    if (h == 0.0) continue;
    const std::complex<double> c = primitive ? group.primitive_value(chi, a) : group.complex_value(chi, a);
    re.add(c.real() * h);
    im.add(c.imag() * h);
  }
  return {re.value(), im.value()};
}

struct LPair {
  ComplexEvaluation l;
  ComplexEvaluation dl;
};

// L and (optionally) L' for one character from precomputed Hurwitz rows.
LPair l_from_rows(double s, const CharacterGroup& group, const DirichletCharacter& chi, long q,
                  const HurwitzRow& z, const HurwitzRow* dz, bool primitive) {
  const double lq = std::log(static_cast<double>(q));
  const double scale = std::exp(-s * lq);
  LPair out;
  const std::complex<double> sum = twisted_sum(group, chi, q, z, primitive);
  out.l.value = scale * sum;
  out.l.err_estimate = scale * (z.err_sum + 4.0 * kEps * static_cast<double>(q) * z.abs_sum);
  out.l.terms_used = z.terms;
  if (dz != nullptr) {
    const std::complex<double> dsum = twisted_sum(group, chi, q, *dz, primitive);
    out.dl.value = scale * dsum - lq * out.l.value;
    out.dl.err_estimate =
        scale * (dz->err_sum + 4.0 * kEps * static_cast<double>(q) * dz->abs_sum) + lq * out.l.err_estimate;
    out.dl.terms_used = dz->terms;
  }
  return out;
}

// Per-conductor Hurwitz rows shared by every character of the group.
class RowCache {
 public:
  RowCache(double s, bool derivative) : s_(s), derivative_(derivative) {}
  const HurwitzRow& get(long d) {
    auto it = rows_.find(d);
    if (it == rows_.end()) it = rows_.emplace(d, hurwitz_row(s_, d, derivative_)).first;
    return it->second;
  }

 private:
  double s_;
  bool derivative_;
  std::map<long, HurwitzRow> rows_;
};

void check_self_conjugate(const std::complex<double>& v, const char* what) {
  if (std::fabs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v))) {
    throw ConvergenceError(std::string(what) + ": real character produced a complex value");
  }
}

Evaluation zeta_hurwitz_route(long m, double s) {
  const CharacterGroup group(m);
  RowCache rows(s, false);
  const auto& chars = group.characters();
  KahanSum log_sum;
  double rel_err = 0.0;
  std::int64_t terms = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const std::size_t j = group.conjugate_index(i);
    if (j < i) continue;
    const long d = chars[i].conductor;
    const LPair lp = l_from_rows(s, group, chars[i], d, rows.get(d), nullptr, true);
    const double mag = std::abs(lp.l.value);
    if (j == i) {
      check_self_conjugate(lp.l.value, "zeta_cyclotomic");
      log_sum.add(std::log(lp.l.value.real()));
      rel_err += lp.l.err_estimate / mag;
    } else {
      log_sum.add(2.0 * std::log(mag));
      rel_err += 2.0 * lp.l.err_estimate / mag;
    }
    terms += lp.l.terms_used;
  }
  const double value = std::exp(log_sum.value());
  const double err = value * (std::expm1(rel_err) + 4.0 * kEps * static_cast<double>(chars.size()));
  return Evaluation::checked(value, err, terms, "zeta_cyclotomic");
}

std::shared_ptr<const std::vector<std::uint32_t>> cached_primes(std::uint64_t limit) {
  static std::mutex mutex;
  static std::shared_ptr<const std::vector<std::uint32_t>> cache;
  static std::uint64_t cached_limit = 0;
  std::lock_guard<std::mutex> lock(mutex);
  if (!cache || cached_limit != limit) {
    cache = std::make_shared<const std::vector<std::uint32_t>>(primes_up_to(limit));
    cached_limit = limit;
  }
  return cache;
}

// Residue degree data for the unramified primes, tabulated by p mod m.
struct SplittingTable {
  long m;
  long phi;
  std::vector<long> order;  // multiplicative order of a mod m, 0 for non-units

  explicit SplittingTable(long modulus) : m(modulus), phi(euler_phi(modulus)) {
    order.assign(static_cast<std::size_t>(m), 0);
    for (long a = 0; a < m; ++a) {
      if (std::gcd(a, m) == 1) order[static_cast<std::size_t>(a)] = multiplicative_order(a, m);
    }
  }

  // (f_p, g_p) for the prime p.
  std::pair<long, long> degrees(long p) const {
    if (m % p != 0) {
      const long f = order[static_cast<std::size_t>(p % m)];
      return {f, phi / f};
    }
    const long rest = strip_prime(m, p);
    const long f = rest == 1 ? 1 : multiplicative_order(p % rest, rest);
    return {f, euler_phi(rest) / f};
  }
};

double block_sum(const SplittingTable& table, const std::vector<std::uint32_t>& primes, std::size_t block,
                 double s) {
  KahanSum acc;
  const std::size_t lo = block * kPrimeBlock;
  const std::size_t hi = std::min(primes.size(), lo + kPrimeBlock);
  for (std::size_t i = lo; i < hi; ++i) {
    const long p = primes[i];
    const auto [f, g] = table.degrees(p);
    const double x = std::exp(-static_cast<double>(f) * s * std::log(static_cast<double>(p)));
    acc.add(-static_cast<double>(g) * std::log1p(-x));
  }
  return acc.value();
}

double combine_blocks(const std::vector<double>& blocks) {
  KahanSum total;
  for (double b : blocks) total.add(b);
  return total.value();
}

void check_euler_args(long m, double s, std::uint64_t prime_limit) {
  check_m(m, "euler_log_sum");
  check_s(s, "euler_log_sum");
  if (prime_limit < 2) throw DomainError("euler_log_sum: prime_limit must be >= 2");
}

}  // namespace

long canonical_modulus(long m) {
  check_m(m, "canonical_modulus");
  return m % 4 == 2 ? m / 2 : m;
}

long cyclo_degree(long m) { return euler_phi(canonical_modulus(m)); }

double cyclo_disc_log(long m) {
  const long mc = canonical_modulus(m);
  const double phi = static_cast<double>(euler_phi(mc));
  KahanSum acc;
  acc.add(phi * std::log(static_cast<double>(mc)));
  for (const auto& [p, e] : factorize(mc)) {
    acc.add(-phi / static_cast<double>(p - 1) * std::log(static_cast<double>(p)));
  }
  return std::max(0.0, acc.value());
}

std::pair<long, long> cyclo_signature(long m) {
  const long mc = canonical_modulus(m);
  if (mc <= 2) return {1, 0};
  return {0, euler_phi(mc) / 2};
}

std::uint64_t min_proper_ideal_norm(long m) {
  const long mc = canonical_modulus(m);
  auto norm_of = [mc](long p) {
    const long rest = strip_prime(mc, p);
    const long f = rest == 1 ? 1 : multiplicative_order(p % rest, rest);
    return saturating_pow(static_cast<std::uint64_t>(p), f);
  };
  std::uint64_t best = norm_of(2);
  for (long p = 3; static_cast<std::uint64_t>(p) <= best; p += 2) {
    if (!is_prime(p)) continue;
    best = std::min(best, norm_of(p));
  }
  return best;
}

ComplexEvaluation dirichlet_l(double s, const CharacterGroup& group, const DirichletCharacter& chi, LMode mode) {
  check_s(s, "dirichlet_l");
  const bool primitive = mode == LMode::primitive;
  const long q = primitive ? chi.conductor : chi.modulus;
  const HurwitzRow z = hurwitz_row(s, q, false);
  return l_from_rows(s, group, chi, q, z, nullptr, primitive).l;
}

ComplexEvaluation dirichlet_l_ds(double s, const CharacterGroup& group, const DirichletCharacter& chi,
                                 LMode mode) {
  check_s(s, "dirichlet_l_ds");
  const bool primitive = mode == LMode::primitive;
  const long q = primitive ? chi.conductor : chi.modulus;
  const HurwitzRow z = hurwitz_row(s, q, false);
  const HurwitzRow dz = hurwitz_row(s, q, true);
  return l_from_rows(s, group, chi, q, z, &dz, primitive).dl;
}

double euler_log_sum(long m, double s, std::uint64_t prime_limit, int jobs) {
  check_euler_args(m, s, prime_limit);
  const SplittingTable table(canonical_modulus(m));
  const auto primes = cached_primes(prime_limit);
  const std::size_t nblocks = (primes->size() + kPrimeBlock - 1) / kPrimeBlock;
  std::vector<double> blocks(nblocks, 0.0);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::exception_ptr failure;

#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::size_t b = 0; b < nblocks; ++b) {
    try {
      blocks[b] = block_sum(table, *primes, b, s);
    } catch (...) {
#pragma omp critical(normeuclid_euler_sum)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return combine_blocks(blocks);
}

double euler_log_sum_serial(long m, double s, std::uint64_t prime_limit) {
  check_euler_args(m, s, prime_limit);
  const SplittingTable table(canonical_modulus(m));
  const auto primes = cached_primes(prime_limit);
  const std::size_t nblocks = (primes->size() + kPrimeBlock - 1) / kPrimeBlock;
  std::vector<double> blocks;
  blocks.reserve(nblocks);
  for (std::size_t b = 0; b < nblocks; ++b) blocks.push_back(block_sum(table, *primes, b, s));
  return combine_blocks(blocks);
}

Evaluation zeta_cyclotomic(long m, double s, const ZetaOptions& options) {
  check_m(m, "zeta_cyclotomic");
  check_s(s, "zeta_cyclotomic");
  const long mc = canonical_modulus(m);
  if (options.method == ZetaMethod::hurwitz) return zeta_hurwitz_route(mc, s);

  // Ideals of norm above P contribute about li-type mass E1((s-1) ln P);
  // it is added as a correction and bounded in the error term.
  const double log_sum = euler_log_sum(mc, s, options.prime_limit, options.jobs);
  const double tail = -std::expint(-(s - 1.0) * std::log(static_cast<double>(options.prime_limit)));
  const double value = std::exp(log_sum + tail);
  const double spread = std::max(1.0, static_cast<double>(euler_phi(mc) - 1));
  const double err = value * (std::expm1(spread * tail) + 1e-14);
  if (err > options.err_target) {
    throw ConvergenceError("zeta_cyclotomic: Euler tail error " + std::to_string(err) +
                           " exceeds the target at prime_limit " + std::to_string(options.prime_limit));
  }
  return Evaluation::checked(value, err, static_cast<std::int64_t>(cached_primes(options.prime_limit)->size()),
                             "zeta_cyclotomic");
}

Evaluation zeta_cyclotomic_logderiv(long m, double s) {
  check_m(m, "zeta_cyclotomic_logderiv");
  check_s(s, "zeta_cyclotomic_logderiv");
  const CharacterGroup group(canonical_modulus(m));
  RowCache rows(s, false);
  RowCache drows(s, true);
  const auto& chars = group.characters();
  KahanSum acc;
  double err = 0.0;
  std::int64_t terms = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const std::size_t j = group.conjugate_index(i);
    if (j < i) continue;
    const long d = chars[i].conductor;
    const LPair lp = l_from_rows(s, group, chars[i], d, rows.get(d), &drows.get(d), true);
    const std::complex<double> ratio = lp.dl.value / lp.l.value;
    const double mag = std::abs(lp.l.value);
    const double e = lp.dl.err_estimate / mag + std::abs(ratio) * lp.l.err_estimate / mag;
    if (j == i) {
      check_self_conjugate(lp.l.value, "zeta_cyclotomic_logderiv");
      acc.add(ratio.real());
      err += e;
    } else {
      acc.add(2.0 * ratio.real());
      err += 2.0 * e;
    }
    terms += lp.l.terms_used + lp.dl.terms_used;
  }
  const double value = acc.value();
  return Evaluation::checked(value, err + 4.0 * kEps * std::fabs(value), terms, "zeta_cyclotomic_logderiv");
}

bool threshold_check(const ScanRow& row, double bound) { return row.zeta_value >= bound; }

}  // namespace normeuclid::cyclo
