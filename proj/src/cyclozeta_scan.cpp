#include <omp.h>

#include <cmath>
#include <exception>

#include "normeuclid/arith.hpp"
#include "normeuclid/cyclozeta.hpp"
#include "normeuclid/errors.hpp"

namespace normeuclid::cyclo {
namespace {

void check_scan(long m_max, double epsilon) {
  if (m_max < 1) throw DomainError("scan: requires m_max >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("scan: epsilon must lie in (0, 1)");
}

std::vector<long> scan_moduli(long m_max, bool keep_duplicates) {
  std::vector<long> ms;
  for (long m = 1; m <= m_max; ++m) {
    if (!keep_duplicates && m % 4 == 2) continue;
    ms.push_back(m);
  }
  return ms;
}

ScanRow scan_row(long m, double epsilon) {
  ScanRow row;
  row.m = m;
  row.phi = euler_phi(m);
  row.epsilon = epsilon;
  row.s = 1.0 + std::pow(static_cast<double>(row.phi), -epsilon);
  const Evaluation z = zeta_cyclotomic(m, row.s);
  row.zeta_value = z.value;
  row.err_estimate = z.err_estimate;
  return row;
}

}  // namespace

std::vector<ScanRow> scan(long m_max, double epsilon, const ScanOptions& options) {
  check_scan(m_max, epsilon);
  const std::vector<long> ms = scan_moduli(m_max, options.keep_duplicates);
  std::vector<ScanRow> rows(ms.size());
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
  const auto count = static_cast<long>(ms.size());
  std::exception_ptr failure;

  // Large m are the expensive rows; walk from the top so they start first.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long k = count - 1; k >= 0; --k) {
    try {
      rows[static_cast<std::size_t>(k)] = scan_row(ms[static_cast<std::size_t>(k)], epsilon);
    } catch (...) {
#pragma omp critical(normeuclid_scan)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<ScanRow> scan_serial(long m_max, double epsilon, bool keep_duplicates) {
  check_scan(m_max, epsilon);
  std::vector<ScanRow> rows;
  for (long m : scan_moduli(m_max, keep_duplicates)) rows.push_back(scan_row(m, epsilon));
  return rows;
}

}  // namespace normeuclid::cyclo
