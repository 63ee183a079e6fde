#ifndef HUNLEMMA_RULES_HPP
#define HUNLEMMA_RULES_HPP

#include <string>
#include <string_view>
#include <utility>

#include "hunlemma/corpus.hpp"

// Hand-crafted corrections: casing normalization plus post-processing of
// punctuation marks and number/date suffixes. All pure functions.

namespace hunlemma {

struct RuleConfig {
  bool enable_casing = true;
  bool enable_mark_strip = true;
  bool enable_number_trim = true;
};

// Training-time normalization, applied before edit-tree extraction and
// lookup-key construction: non-PROPN pairs get the first character of both
// form and lemma lowercased; proper nouns pass through unchanged.
std::pair<std::string, std::string> case_normalize_training(
    std::string_view form, std::string_view lemma, std::string_view upos,
    bool is_sentence_initial);

// Prediction-side counterpart for a bare form.
std::string case_normalize_form(std::string_view form, std::string_view upos);

// Lowercases the lemma's first character unless the token is a proper noun.
std::string apply_casing(std::string_view lemma, std::string_view upos);

// Removes '!' and '?' from the lemma unless that would empty it (protects
// punctuation tokens whose lemma is the mark itself).
std::string strip_marks(std::string_view token_form, std::string_view lemma);

// When the token is a numeric/date core followed by "-" and an alphabetic
// suffix (e.g. "4-6-os", "2020-ban"), returns the core with any trailing
// separator removed; otherwise returns the lemma unchanged. Keys on the
// original token, not the predicted lemma.
std::string trim_number_suffix(std::string_view token_form,
                               std::string_view lemma);

// apply_casing, strip_marks, trim_number_suffix in order, each gated by its
// config flag. Idempotent; never empties a non-empty lemma.
std::string postprocess(const Token& token, std::string_view lemma,
                        const RuleConfig& config);

}  // namespace hunlemma

#endif
