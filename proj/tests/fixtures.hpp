#ifndef HUNLEMMA_TESTS_FIXTURES_HPP
#define HUNLEMMA_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "hunlemma/corpus.hpp"

namespace fixtures {

// Two short sentences: regular noun/verb inflection, a masked numeral,
// punctuation. Every key is unambiguous.
hunlemma::Corpus toy();

// Deterministic generated corpus, >= 1000 tokens: noun/verb/adjective
// paradigms with Hungarian diacritics, proper nouns, numerals ("1000-ben",
// "25-kor", "4-6-os", ...), punctuation, capitalized sentence starts.
// Unambiguous (form, upos, feats) -> lemma mapping throughout.
hunlemma::Corpus hungarian_1k();

// Postprocessing regression table: (form, upos, raw lemma, expected output).
struct RuleCase {
  std::string form;
  std::string upos;
  std::string lemma;
  std::string expected;
};
std::vector<RuleCase> rule_cases();

// data/ud_hungarian paths, wired in by the build.
std::string ud_path(const std::string& filename);
bool ud_available();

}  // namespace fixtures

#endif
