#ifndef HUNLEMMA_CORPUS_HPP
#define HUNLEMMA_CORPUS_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// In-memory CoNLL-U model. Only the columns the lemmatizer reads are kept
// (FORM, LEMMA, UPOS, FEATS); everything else is emitted as `_` on output.

namespace hunlemma {

// Morphological attributes, sorted by key, no duplicate keys.
using FeatList = std::vector<std::pair<std::string, std::string>>;

struct Token {
  std::string form;
  std::string upos;
  FeatList feats;
  std::optional<std::string> lemma;
  bool is_sentence_initial = false;
};

struct Sentence {
  std::vector<Token> tokens;
};

struct Corpus {
  std::vector<Sentence> sentences;
  std::string source_name;

  std::size_t token_count() const;
  bool empty() const { return sentences.empty(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Accepts Unix or Windows line endings. Multiword-token ranges (`1-2`) and
// empty nodes (`1.1`) are skipped. `_` in LEMMA maps to an absent lemma,
// `_` in UPOS/FEATS to empty. FEATS are sorted by key and deduplicated.
Corpus parse_conllu(std::istream& in, std::string source_name = "");
Corpus parse_conllu_file(const std::string& path);

// Requires a lemma on every token. Emits Unix line endings.
void write_conllu(const Corpus& corpus, std::ostream& out);
void write_conllu_file(const Corpus& corpus, const std::string& path);

FeatList parse_feats(std::string_view column);
std::string feats_to_string(const FeatList& feats);

// Removes tokens without a lemma (real treebanks carry a few `_` fragments)
// and any sentence that becomes empty; recomputes is_sentence_initial.
Corpus drop_lemmaless_tokens(Corpus corpus);

}  // namespace hunlemma

#endif
