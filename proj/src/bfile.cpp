#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "trimobius/error.hpp"
#include "trimobius/io.hpp"

namespace trimobius::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view token, std::size_t line_no) {
  std::int64_t v = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec == std::errc::result_out_of_range) {
    throw FormatError("b-file line " + std::to_string(line_no) + ": value out of 64-bit range");
  }
  if (ec != std::errc() || ptr != end) {
    throw FormatError("b-file line " + std::to_string(line_no) + ": not an integer: '" +
                      std::string(token) + "'");
  }
  return v;
}

}  // namespace

void write_file(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

void write_bfile(std::ostream& out, std::span<const std::int64_t> values, std::int64_t offset) {
  if (values.empty()) throw std::invalid_argument("refusing to write an empty b-file");
  std::string buf;
  for (std::size_t k = 0; k < values.size(); ++k) {
    buf += std::to_string(offset + static_cast<std::int64_t>(k));
    buf += ' ';
    buf += std::to_string(values[k]);
    buf += '\n';
  }
  out << buf;
}

BFile parse_bfile(std::istream& in) {
  BFile bfile;
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::int64_t> expected;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw FormatError("b-file line " + std::to_string(line_no) + ": expected 'n a(n)'");
    }
    const std::int64_t index = parse_int(line.substr(0, sep), line_no);
    const std::int64_t value = parse_int(trim(line.substr(sep)), line_no);
    if (!expected) {
      bfile.offset = index;
    } else if (index != *expected) {
      throw FormatError("b-file line " + std::to_string(line_no) + ": index " +
                        std::to_string(index) + " where " + std::to_string(*expected) +
                        " was expected");
    }
    expected = index + 1;
    bfile.values.push_back(value);
  }
  return bfile;
}

BFile read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_bfile(in);
}

}  // namespace trimobius::io
