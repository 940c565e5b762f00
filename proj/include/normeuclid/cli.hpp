#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "normeuclid/cyclozeta.hpp"

namespace normeuclid::cli {

enum class OutputFormat { csv, json };

/// Settings shared by every subcommand.
struct RunConfig {
  double tol = 1e-10;
  long prime_limit = 1'000'000;
  double theta = 0.1;
  OutputFormat format = OutputFormat::csv;
  std::string output_path;
  int jobs = 0;
};

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 on domain or convergence errors (and on failed `reproduce`
/// criteria), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CSV text for scan rows: header `m,phi,epsilon,s,zeta_value,err_estimate`,
/// LF line endings.
std::string scan_csv(const std::vector<cyclo::ScanRow>& rows);

/// JSON array of scan rows with the CSV field names.
std::string scan_json(const std::vector<cyclo::ScanRow>& rows);

/// 800x600 SVG scatter of (phi, zeta_value) with a dashed line at `bound`.
std::string scan_svg(const std::vector<cyclo::ScanRow>& rows, double bound);

}  // namespace normeuclid::cli
