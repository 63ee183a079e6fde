#ifndef HUNLEMMA_UNICODE_HPP
#define HUNLEMMA_UNICODE_HPP

#include <cstdint>
#include <string>
#include <string_view>

// Minimal Unicode support for the lemmatizer. All offset and length
// arithmetic in this project counts Unicode scalar values, never bytes.
// The case and category tables below are simplified: they cover Latin
// (incl. Extended-A/B and Extended Additional), Greek and Cyrillic, which
// is sufficient for the treebank text this tool processes.

namespace hunlemma {

// Invalid byte sequences decode to U+FFFD, one replacement per bad byte.
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t c);

char32_t to_lower_char(char32_t c);
bool is_upper_char(char32_t c);

// Unicode Nd (decimal digit) category.
bool is_decimal_digit(char32_t c);

bool is_alphabetic(char32_t c);

// Lowercases only the first scalar value of a UTF-8 string.
std::string lowercase_first(std::string_view text);

bool contains_digit(std::string_view utf8);

}  // namespace hunlemma

#endif
