#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace tpwave {

/// Small CSV builder: one header line, then rows; numbers at full precision.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  CsvTable& row();
  CsvTable& operator<<(double v);
  CsvTable& operator<<(long long v);
  CsvTable& operator<<(int v) { return *this << static_cast<long long>(v); }
  CsvTable& operator<<(const std::string& v);

  std::string str() const;
  /// Atomic write (temporary file plus rename).
  void save(const std::string& path) const;

 private:
  void sep();
  std::size_t columns_;
  std::size_t in_row_ = 0;
  std::ostringstream body_;
};

}  // namespace tpwave
