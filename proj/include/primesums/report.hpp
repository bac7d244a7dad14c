#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primesums/analysis.hpp"
#include "primesums/explicit_formula.hpp"

namespace primesums {

/// Shortest round-trip form with 17 significant digits ("%.17g").
std::string format_number(double v);

/// A header plus rows of already formatted cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// RFC 4180 text with CRLF-free "\n" line ends; cells containing a comma,
  /// quote or newline are quoted.
  std::string str() const;
};

CsvTable formula_table(std::span<const FormulaReport> reports);
CsvTable meansquare_table(std::span<const MeanSquareReport> reports);

/// Inverse of CsvTable::str(): the first record becomes the header.
CsvTable parse_csv(std::string_view text);

/// Writes to a sibling temporary file and renames it over `path`, so a
/// failed run never leaves a partial file. Throws IoError.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace primesums
