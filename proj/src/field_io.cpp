#include "tpwave/field_io.hpp"

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tpwave/errors.hpp"

namespace tpwave {

namespace {

template <class T>
void put_le(std::string& out, T v) {
  using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
  U u;
  std::memcpy(&u, &v, sizeof u);
  for (std::size_t b = 0; b < sizeof u; ++b) out.push_back(static_cast<char>((u >> (8 * b)) & 0xff));
}

template <class T>
T get_le(const std::string& in, std::size_t& pos) {
  using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
  if (pos + sizeof(U) > in.size()) throw Error(ErrorKind::Io, "truncated field file");
  U u = 0;
  for (std::size_t b = 0; b < sizeof u; ++b) u |= U(static_cast<unsigned char>(in[pos + b])) << (8 * b);
  pos += sizeof u;
  T v;
  std::memcpy(&v, &u, sizeof v);
  return v;
}

}  // namespace

std::string encode_field(const Field& f) {
  const GridSpec& g = f.grid();
  std::string out = "TPWF";
  out.reserve(32 + 8 * f.size());
  put_le<std::uint32_t>(out, kFieldFormatVersion);
  put_le<std::uint32_t>(out, std::uint32_t(g.n_t));
  put_le<std::uint32_t>(out, std::uint32_t(g.n_x));
  put_le<double>(out, g.box_len);
  put_le<double>(out, g.period);
  for (double v : f.samples()) put_le<double>(out, v);
  return out;
}

Field decode_field(const std::string& bytes) {
  if (bytes.size() < 4 || bytes.compare(0, 4, "TPWF") != 0) throw Error(ErrorKind::Io, "not a TPWF file");
  std::size_t pos = 4;
  const auto version = get_le<std::uint32_t>(bytes, pos);
  if (version != kFieldFormatVersion) throw Error(ErrorKind::Io, "unsupported TPWF version " + std::to_string(version));
  GridSpec g;
  g.n_t = int(get_le<std::uint32_t>(bytes, pos));
  g.n_x = int(get_le<std::uint32_t>(bytes, pos));
  g.box_len = get_le<double>(bytes, pos);
  g.period = get_le<double>(bytes, pos);
  g.validate();
  if (bytes.size() - pos != 8 * g.size()) throw Error(ErrorKind::Io, "TPWF sample count does not match header");
  std::vector<double> s(g.size());
  for (auto& v : s) v = get_le<double>(bytes, pos);
  return Field(g, std::move(s));
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
    out.write(bytes.data(), std::streamsize(bytes.size()));
    if (!out) throw Error(ErrorKind::Io, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot rename " + tmp.string() + ": " + ec.message());
}

void write_field(const std::string& path, const Field& f) { write_file_atomic(path, encode_field(f)); }

Field read_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return decode_field(ss.str());
}

}  // namespace tpwave
