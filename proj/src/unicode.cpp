#include "hunlemma/unicode.hpp"

#include <algorithm>
#include <array>

namespace hunlemma {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

struct Range {
  char32_t lo;
  char32_t hi;
};

// Unicode Nd ranges (decimal digits of every script).
constexpr std::array<Range, 62> kDecimalDigitRanges{{
    {0x0030, 0x0039},   {0x0660, 0x0669},   {0x06F0, 0x06F9},
    {0x07C0, 0x07C9},   {0x0966, 0x096F},   {0x09E6, 0x09EF},
    {0x0A66, 0x0A6F},   {0x0AE6, 0x0AEF},   {0x0B66, 0x0B6F},
    {0x0BE6, 0x0BEF},   {0x0C66, 0x0C6F},   {0x0CE6, 0x0CEF},
    {0x0D66, 0x0D6F},   {0x0DE6, 0x0DEF},   {0x0E50, 0x0E59},
    {0x0ED0, 0x0ED9},   {0x0F20, 0x0F29},   {0x1040, 0x1049},
    {0x1090, 0x1099},   {0x17E0, 0x17E9},   {0x1810, 0x1819},
    {0x1946, 0x194F},   {0x19D0, 0x19D9},   {0x1A80, 0x1A89},
    {0x1A90, 0x1A99},   {0x1B50, 0x1B59},   {0x1BB0, 0x1BB9},
    {0x1C40, 0x1C49},   {0x1C50, 0x1C59},   {0xA620, 0xA629},
    {0xA8D0, 0xA8D9},   {0xA900, 0xA909},   {0xA9D0, 0xA9D9},
    {0xA9F0, 0xA9F9},   {0xAA50, 0xAA59},   {0xABF0, 0xABF9},
    {0xFF10, 0xFF19},   {0x104A0, 0x104A9}, {0x10D30, 0x10D39},
    {0x11066, 0x1106F}, {0x110F0, 0x110F9}, {0x11136, 0x1113F},
    {0x111D0, 0x111D9}, {0x112F0, 0x112F9}, {0x11450, 0x11459},
    {0x114D0, 0x114D9}, {0x11650, 0x11659}, {0x116C0, 0x116C9},
    {0x11730, 0x11739}, {0x118E0, 0x118E9}, {0x11950, 0x11959},
    {0x11C50, 0x11C59}, {0x11D50, 0x11D59}, {0x11DA0, 0x11DA9},
    {0x16A60, 0x16A69}, {0x16AC0, 0x16AC9}, {0x16B50, 0x16B59},
    {0x1D7CE, 0x1D7FF}, {0x1E140, 0x1E149}, {0x1E2F0, 0x1E2F9},
    {0x1E950, 0x1E959}, {0x1FBF0, 0x1FBF9},
}};

// Letter ranges for the scripts the tool is expected to meet. Coarse on
// purpose; only trim_number_suffix and a few sanity checks consume this.
constexpr std::array<Range, 20> kLetterRanges{{
    {0x0041, 0x005A}, {0x0061, 0x007A}, {0x00C0, 0x00D6},
    {0x00D8, 0x00F6}, {0x00F8, 0x02AF}, {0x0370, 0x0373},
    {0x0376, 0x0377}, {0x037B, 0x037D}, {0x0386, 0x0386},
    {0x0388, 0x03FF}, {0x0400, 0x0481}, {0x048A, 0x052F},
    {0x0531, 0x0556}, {0x0561, 0x0587}, {0x05D0, 0x05EA},
    {0x0620, 0x064A}, {0x1E00, 0x1EFF}, {0x2C60, 0x2C7F},
    {0xA720, 0xA7CA}, {0xFB00, 0xFB06},
}};

bool in_ranges(char32_t c, const Range* first, const Range* last) {
  auto it = std::upper_bound(first, last, c, [](char32_t v, const Range& r) {
    return v < r.lo;
  });
  return it != first && c <= (it - 1)->hi;
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > n) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    if (ok) {
      if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
          (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
          (cp >= 0xD800 && cp <= 0xDFFF)) {
        ok = false;
      }
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t c) {
  if (c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) c = kReplacement;
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) append_utf8(out, c);
  return out;
}

char32_t to_lower_char(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 0x20;
  if (c < 0x80) return c;
  // Latin-1 Supplement (0xD7 is the multiplication sign).
  if (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) return c + 0x20;
  // Latin Extended-A: alternating upper/lower pairs.
  if ((c >= 0x0100 && c <= 0x0137) || (c >= 0x014A && c <= 0x0177)) {
    return (c % 2 == 0) ? c + 1 : c;
  }
  if (c >= 0x0139 && c <= 0x0148) {
    return (c % 2 == 1) ? c + 1 : c;
  }
  if (c == 0x0178) return 0x00FF;
  if (c >= 0x0179 && c <= 0x017E) {
    return (c % 2 == 1) ? c + 1 : c;
  }
  // Greek capitals (0x3A2 is unassigned).
  if (c >= 0x0391 && c <= 0x03AB && c != 0x03A2) return c + 0x20;
  // Cyrillic.
  if (c >= 0x0410 && c <= 0x042F) return c + 0x20;
  if (c >= 0x0400 && c <= 0x040F) return c + 0x50;
  return c;
}

bool is_upper_char(char32_t c) { return to_lower_char(c) != c; }

bool is_decimal_digit(char32_t c) {
  return in_ranges(c, kDecimalDigitRanges.data(),
                   kDecimalDigitRanges.data() + kDecimalDigitRanges.size());
}

bool is_alphabetic(char32_t c) {
  return in_ranges(c, kLetterRanges.data(),
                   kLetterRanges.data() + kLetterRanges.size());
}

std::string lowercase_first(std::string_view text) {
  if (text.empty()) return std::string(text);
  std::u32string scalars = decode_utf8(text);
  const char32_t lowered = to_lower_char(scalars[0]);
  if (lowered == scalars[0]) return std::string(text);
  scalars[0] = lowered;
  return encode_utf8(scalars);
}

bool contains_digit(std::string_view utf8) {
  for (char32_t c : decode_utf8(utf8)) {
    if (is_decimal_digit(c)) return true;
  }
  return false;
}

}  // namespace hunlemma
