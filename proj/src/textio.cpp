#include "seqtag/textio.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "seqtag/error.hpp"

namespace seqtag::textio {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = nl + 1;
  }
  return lines;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(std::string_view s, std::size_t line) {
  std::string tmp(trim(s));
  if (tmp.empty()) throw ParseError("expected a number, got empty field", line);
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(tmp.c_str(), &end);
  if (end != tmp.c_str() + tmp.size() || errno == ERANGE)
    throw ParseError("malformed number '" + tmp + "'", line);
  return v;
}

long long parse_int(std::string_view s, std::size_t line) {
  std::string tmp(trim(s));
  if (tmp.empty()) throw ParseError("expected an integer, got empty field", line);
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(tmp.c_str(), &end, 10);
  if (end != tmp.c_str() + tmp.size() || errno == ERANGE)
    throw ParseError("malformed integer '" + tmp + "'", line);
  return v;
}

std::uint64_t parse_u64(std::string_view s, std::size_t line) {
  std::string tmp(trim(s));
  if (tmp.empty()) throw ParseError("expected an integer, got empty field", line);
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(tmp.c_str(), &end, 10);
  if (end != tmp.c_str() + tmp.size() || errno == ERANGE)
    throw ParseError("malformed integer '" + tmp + "'", line);
  return v;
}

std::string format_percent(double fraction) {
  return format_fixed(fraction * 100.0, 3);
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

std::pair<std::string, std::string> split_kv(std::string_view s,
                                             std::size_t line) {
  std::size_t eq = s.find('=');
  if (eq == std::string_view::npos)
    throw ParseError("expected key=value", line);
  return {std::string(trim(s.substr(0, eq))),
          std::string(trim(s.substr(eq + 1)))};
}

}  // namespace seqtag::textio
