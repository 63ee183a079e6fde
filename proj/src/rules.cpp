#include "hunlemma/rules.hpp"

#include "hunlemma/unicode.hpp"

namespace hunlemma {

namespace {

constexpr std::string_view kProperNoun = "PROPN";

bool is_core_separator(char32_t c) {
  return c == U'.' || c == U',' || c == U':' || c == U'/' || c == 0x2013 ||
         c == 0x2014;  // en dash, em dash
}

}  // namespace

std::pair<std::string, std::string> case_normalize_training(
    std::string_view form, std::string_view lemma, std::string_view upos,
    bool /*is_sentence_initial*/) {
  if (upos == kProperNoun) {
    return {std::string(form), std::string(lemma)};
  }
  return {lowercase_first(form), lowercase_first(lemma)};
}

std::string case_normalize_form(std::string_view form, std::string_view upos) {
  if (upos == kProperNoun) return std::string(form);
  return lowercase_first(form);
}

std::string apply_casing(std::string_view lemma, std::string_view upos) {
  if (upos == kProperNoun) return std::string(lemma);
  return lowercase_first(lemma);
}

std::string strip_marks(std::string_view /*token_form*/,
                        std::string_view lemma) {
  std::string out;
  out.reserve(lemma.size());
  for (char c : lemma) {
    if (c != '!' && c != '?') out.push_back(c);
  }
  if (out.empty()) return std::string(lemma);
  return out;
}

std::string trim_number_suffix(std::string_view token_form,
                               std::string_view lemma) {
  const std::u32string form = decode_utf8(token_form);
  if (form.empty() || !is_decimal_digit(form[0])) return std::string(lemma);

  for (std::size_t i = 1; i < form.size(); ++i) {
    const char32_t c = form[i];
    if (is_decimal_digit(c) || is_core_separator(c)) continue;
    if (c != U'-') return std::string(lemma);
    // A hyphen stays in the core only when a digit follows; otherwise it
    // must delimit a purely alphabetic suffix.
    if (i + 1 < form.size() && is_decimal_digit(form[i + 1])) continue;
    std::u32string_view suffix = std::u32string_view(form).substr(i + 1);
    if (suffix.empty()) return std::string(lemma);
    for (char32_t s : suffix) {
      if (!is_alphabetic(s)) return std::string(lemma);
    }
    std::u32string core = form.substr(0, i);
    while (!core.empty() && is_core_separator(core.back())) core.pop_back();
    return encode_utf8(core);
  }
  return std::string(lemma);
}

std::string postprocess(const Token& token, std::string_view lemma,
                        const RuleConfig& config) {
  std::string out(lemma);
  if (config.enable_casing) out = apply_casing(out, token.upos);
  if (config.enable_mark_strip) out = strip_marks(token.form, out);
  if (config.enable_number_trim) out = trim_number_suffix(token.form, out);
  return out;
}

}  // namespace hunlemma
