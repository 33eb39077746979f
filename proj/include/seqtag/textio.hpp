#ifndef SEQTAG_TEXTIO_HPP
#define SEQTAG_TEXTIO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seqtag::textio {

// Whole-file I/O. Throws IoError with the path on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Splits on '\n'; a trailing newline does not produce an empty last line.
std::vector<std::string> split_lines(std::string_view text);

// Formats a double with 17 significant digits so that parsing the result
// recovers the identical bits.
std::string format_double(double v);

// Strict numeric parsers; throw ParseError carrying the line number.
double parse_double(std::string_view s, std::size_t line = 0);
long long parse_int(std::string_view s, std::size_t line = 0);
std::uint64_t parse_u64(std::string_view s, std::size_t line = 0);

// Fixed-point percentage with three decimals, e.g. 86.442.
std::string format_percent(double fraction);

// Fixed-point with a given number of decimals.
std::string format_fixed(double v, int decimals);

std::string_view trim(std::string_view s);

// Splits "key=value" at the first '='; throws ParseError if absent.
std::pair<std::string, std::string> split_kv(std::string_view s,
                                             std::size_t line = 0);

}  // namespace seqtag::textio

#endif  // SEQTAG_TEXTIO_HPP
