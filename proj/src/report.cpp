#include "primesums/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include "primesums/errors.hpp"

namespace primesums {

namespace {

void append_cell(std::string& out, const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) {
    out += cell;
    return;
  }
  out += '"';
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void append_record(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    append_cell(out, cells[i]);
  }
  out += '\n';
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string CsvTable::str() const {
  std::string out;
  append_record(out, header);
  for (const auto& row : rows) append_record(out, row);
  return out;
}

CsvTable formula_table(std::span<const FormulaReport> reports) {
  CsvTable t;
  t.header = {"problem", "N", "k", "H", "T", "lhs"};
  for (const char* name : kTermNames) t.header.emplace_back(name);
  t.header.insert(t.header.end(), {"residual", "reference_bound", "ratio"});
  for (const auto& r : reports) {
    std::vector<std::string> row;
    row.emplace_back(to_string(r.problem));
    row.push_back(std::to_string(r.N));
    row.push_back(r.k ? format_number(*r.k) : "");
    row.push_back(r.H ? std::to_string(*r.H) : "");
    row.push_back(r.T ? format_number(*r.T) : "");
    row.push_back(format_number(r.lhs));
    for (const char* name : kTermNames) {
      const auto it = r.terms.find(name);
      row.push_back(it == r.terms.end() ? "" : format_number(it->second));
    }
    row.push_back(format_number(r.residual));
    row.push_back(format_number(r.reference_bound));
    row.push_back(format_number(r.ratio));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable meansquare_table(std::span<const MeanSquareReport> reports) {
  CsvTable t;
  t.header = {"N", "ell", "xi", "integral", "bound", "ratio", "bound_kind"};
  for (const auto& r : reports) {
    t.rows.push_back({std::to_string(r.N), std::to_string(r.ell), format_number(r.xi),
                      format_number(r.integral), format_number(r.bound), format_number(r.ratio),
                      std::string(to_string(r.bound_kind))});
  }
  return t;
}

CsvTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string cell;
  bool quoted = false;
  bool any = false;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        cell += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      if (!cell.empty()) throw FormatError("stray quote inside a CSV cell", line);
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(cell));
      cell.clear();
    } else if (c == '\n') {
      record.push_back(std::move(cell));
      cell.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
      ++line;
    } else if (c != '\r') {
      cell += c;
    }
  }
  if (quoted) throw FormatError("unterminated quoted CSV cell", line);
  if (any) {
    record.push_back(std::move(cell));
    records.push_back(std::move(record));
  }
  CsvTable t;
  if (records.empty()) return t;
  t.header = std::move(records.front());
  t.rows.assign(std::make_move_iterator(records.begin() + 1),
                std::make_move_iterator(records.end()));
  return t;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

}  // namespace primesums
