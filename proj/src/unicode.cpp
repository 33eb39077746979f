#include "seqtag/unicode.hpp"

#include "seqtag/error.hpp"

namespace seqtag::unicode {

namespace {

// Decodes one codepoint starting at utf8[i]; advances i past it.
// Rejects overlong forms, surrogates and values above U+10FFFF.
char32_t decode_one(std::string_view utf8, std::size_t& i, std::size_t line) {
  auto fail = [&](const char* what) -> char32_t {
    throw ParseError(std::string("invalid UTF-8 (") + what + ")", line, i + 1);
  };
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(utf8[k]);
  };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return fail("bad leading byte");
  }
  if (i + len > utf8.size()) return fail("truncated sequence");
  for (int k = 1; k < len; ++k) {
    unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) return fail("bad continuation byte");
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len]) return fail("overlong encoding");
  if (cp >= 0xD800 && cp <= 0xDFFF) return fail("surrogate codepoint");
  if (cp > 0x10FFFF) return fail("codepoint out of range");
  i += len;
  return cp;
}

}  // namespace

std::vector<char32_t> decode(std::string_view utf8, std::size_t line) {
  std::vector<char32_t> out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) out.push_back(decode_one(utf8, i, line));
  return out;
}

std::string encode(const char32_t* data, std::size_t size) {
  std::string out;
  out.reserve(size * 3);
  for (std::size_t k = 0; k < size; ++k) {
    char32_t cp = data[k];
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::string encode(const std::vector<char32_t>& cps) {
  return encode(cps.data(), cps.size());
}

std::size_t length(std::string_view utf8) {
  std::size_t n = 0, i = 0;
  while (i < utf8.size()) {
    decode_one(utf8, i, 0);
    ++n;
  }
  return n;
}

std::string prefix(std::string_view utf8, std::size_t n) {
  std::size_t i = 0;
  for (std::size_t k = 0; k < n; ++k) decode_one(utf8, i, 0);
  return std::string(utf8.substr(0, i));
}

std::string suffix(std::string_view utf8, std::size_t n) {
  std::vector<char32_t> cps = decode(utf8);
  return encode(cps.data() + (cps.size() - n), n);
}

bool valid(std::string_view utf8) {
  try {
    std::size_t i = 0;
    while (i < utf8.size()) decode_one(utf8, i, 0);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace seqtag::unicode
