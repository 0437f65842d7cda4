#include "tpwave/csv.hpp"

#include <limits>

#include "tpwave/errors.hpp"
#include "tpwave/field_io.hpp"

namespace tpwave {

CsvTable::CsvTable(std::vector<std::string> header) : columns_(header.size()) {
  body_.precision(std::numeric_limits<double>::max_digits10);
  for (std::size_t c = 0; c < header.size(); ++c) body_ << (c ? "," : "") << header[c];
  body_ << '\n';
  in_row_ = columns_;
}

CsvTable& CsvTable::row() {
  if (in_row_ != columns_) throw Error(ErrorKind::InvalidArgument, "CSV row has the wrong number of cells");
  in_row_ = 0;
  return *this;
}

void CsvTable::sep() {
  if (in_row_ >= columns_) throw Error(ErrorKind::InvalidArgument, "CSV row has too many cells");
  if (in_row_) body_ << ',';
  ++in_row_;
}

CsvTable& CsvTable::operator<<(double v) {
  sep();
  body_ << v;
  if (in_row_ == columns_) body_ << '\n';
  return *this;
}

CsvTable& CsvTable::operator<<(long long v) {
  sep();
  body_ << v;
  if (in_row_ == columns_) body_ << '\n';
  return *this;
}

CsvTable& CsvTable::operator<<(const std::string& v) {
  sep();
  body_ << v;
  if (in_row_ == columns_) body_ << '\n';
  return *this;
}

std::string CsvTable::str() const { return body_.str(); }

void CsvTable::save(const std::string& path) const { write_file_atomic(path, str()); }

}  // namespace tpwave
