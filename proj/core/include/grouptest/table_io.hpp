#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "grouptest/magma.hpp"

namespace grouptest {

// Text format:
//   magma v1
//   <n>
//   n lines of n space-separated entries
void write_table(std::ostream& os, const MagmaTable& t);
MagmaTable read_table(std::istream& is);  // throws ParseError
MagmaTable load_table(const std::filesystem::path& path);
void save_table(const std::filesystem::path& path, const MagmaTable& t);

}  // namespace grouptest
