#include "bras/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bras/version.hpp"

namespace bras {

namespace {

constexpr const char* kColumns =
    "abscissa,im_chi_plus_fwd,im_chi_minus_fwd,im_chi_plus_rev,"
    "im_chi_minus_rev,T_fwd,T_rev,ratio";

void validate_precision(int precision) {
  if (precision < 1 || precision > 17) {
    throw std::invalid_argument("csv precision must be in [1, 17]");
  }
}

std::string header_line(const ScanTable& table) {
  std::string line = "# bras-sim v";
  line += kVersion;
  line += "; params: ";
  bool first = true;
  for (const auto& [key, value] : table.metadata) {
    if (!first) line += ',';
    line += key;
    line += '=';
    line += value;
    first = false;
  }
  int clamped = 0;
  for (const ScanRow& row : table.rows) {
    if (row.reversed_clamped) ++clamped;
  }
  if (clamped > 0) {
    if (!first) line += ',';
    line += "clamped_rows=" + std::to_string(clamped);
  }
  return line;
}

}  // namespace

std::string format_csv_value(double value, int precision) {
  validate_precision(precision);
  if (value == 0.0) value = 0.0;  // fold -0 into +0
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*e", precision - 1, value);
  return buf;
}

void emit_csv(const ScanTable& table, std::ostream& out, int precision) {
  validate_precision(precision);
  out << header_line(table) << '\n' << kColumns << '\n';
  for (const ScanRow& row : table.rows) {
    out << format_csv_value(row.abscissa, precision) << ','
        << format_csv_value(row.im_chi_plus_fwd, precision) << ','
        << format_csv_value(row.im_chi_minus_fwd, precision) << ','
        << format_csv_value(row.im_chi_plus_rev, precision) << ','
        << format_csv_value(row.im_chi_minus_rev, precision) << ','
        << format_csv_value(row.t_forward, precision) << ','
        << format_csv_value(row.t_reversed, precision) << ','
        << format_csv_value(row.ratio, precision) << '\n';
  }
}

std::string csv_to_string(const ScanTable& table, int precision) {
  std::ostringstream out;
  emit_csv(table, out, precision);
  return out.str();
}

void write_csv_file(const ScanTable& table, const std::string& path,
                    int precision) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  emit_csv(table, out, precision);
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed for '" + path + "'");
  }
}

}  // namespace bras
