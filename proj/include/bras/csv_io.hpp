#pragma once

#include <iosfwd>
#include <string>

#include "bras/scenarios.hpp"

namespace bras {

// CSV layout, fixed:
//   # bras-sim v<semver>; params: <key=value,...>
//   abscissa,im_chi_plus_fwd,im_chi_minus_fwd,im_chi_plus_rev,im_chi_minus_rev,T_fwd,T_rev,ratio
//   <rows in scientific notation, '.' decimal separator, newline terminated>
// precision is the number of significant digits per value (default 12).
// Identical tables produce byte-identical output.

void emit_csv(const ScanTable& table, std::ostream& out, int precision = 12);

std::string csv_to_string(const ScanTable& table, int precision = 12);

/// Writes the table to a file; throws std::runtime_error naming the path on
/// I/O failure.
void write_csv_file(const ScanTable& table, const std::string& path,
                    int precision = 12);

/// One value formatted the way CSV rows format it.
std::string format_csv_value(double value, int precision);

}  // namespace bras
