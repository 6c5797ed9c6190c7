#include "grouptest/table_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "grouptest/errors.hpp"

namespace grouptest {

namespace {

constexpr std::string_view kMagic = "magma v1";

}  // namespace

void write_table(std::ostream& os, const MagmaTable& t) {
  os << kMagic << '\n' << t.size() << '\n';
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) os << (y ? " " : "") << t(x, y);
    os << '\n';
  }
}

MagmaTable read_table(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty magma file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kMagic) throw ParseError("expected header 'magma v1', got '" + line + "'");

  long long n = 0;
  if (!(is >> n) || n <= 0) throw ParseError("missing or non-positive size line");
  const auto size = static_cast<std::size_t>(n);
  if (size > 65536) throw ParseError("table size too large");

  std::vector<Element> entries;
  entries.reserve(size * size);
  for (std::size_t i = 0; i < size * size; ++i) {
    long long v = 0;
    if (!(is >> v)) {
      throw ParseError("expected " + std::to_string(size * size) + " entries, read " +
                       std::to_string(i));
    }
    if (v < 0 || static_cast<std::size_t>(v) >= size) {
      throw ParseError("entry " + std::to_string(v) + " at cell " + std::to_string(i) +
                       " is outside [0, " + std::to_string(size) + ")");
    }
    entries.push_back(static_cast<Element>(v));
  }
  std::string rest;
  if (is >> rest) throw ParseError("trailing data after table: '" + rest + "'");
  return MagmaTable(size, std::move(entries));
}

MagmaTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_table(in);
}

void save_table(const std::filesystem::path& path, const MagmaTable& t) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_table(out, t);
}

}  // namespace grouptest
