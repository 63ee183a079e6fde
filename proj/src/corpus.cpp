#include "hunlemma/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hunlemma {

namespace {

constexpr int kColumnCount = 10;

bool parse_word_id(std::string_view id, long& value) {
  const char* first = id.data();
  const char* last = id.data() + id.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last && value > 0;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

}  // namespace

std::size_t Corpus::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

FeatList parse_feats(std::string_view column) {
  FeatList feats;
  if (column.empty() || column == "_") return feats;
  std::size_t start = 0;
  while (start <= column.size()) {
    std::size_t bar = column.find('|', start);
    if (bar == std::string_view::npos) bar = column.size();
    std::string_view item = column.substr(start, bar - start);
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) {
        feats.emplace_back(std::string(item), std::string());
      } else {
        feats.emplace_back(std::string(item.substr(0, eq)),
                           std::string(item.substr(eq + 1)));
      }
    }
    start = bar + 1;
  }
  std::stable_sort(feats.begin(), feats.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  feats.erase(std::unique(feats.begin(), feats.end(),
                          [](const auto& a, const auto& b) {
                            return a.first == b.first;
                          }),
              feats.end());
  return feats;
}

std::string feats_to_string(const FeatList& feats) {
  std::string out;
  for (std::size_t i = 0; i < feats.size(); ++i) {
    if (i) out.push_back('|');
    out += feats[i].first;
    out.push_back('=');
    out += feats[i].second;
  }
  return out;
}

Corpus parse_conllu(std::istream& in, std::string source_name) {
  Corpus corpus;
  corpus.source_name = std::move(source_name);

  Sentence current;
  long last_word_id = 0;
  std::size_t line_no = 0;
  std::string line;

  auto flush_sentence = [&] {
    if (!current.tokens.empty()) {
      current.tokens.front().is_sentence_initial = true;
      corpus.sentences.push_back(std::move(current));
      current = Sentence{};
    }
    last_word_id = 0;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush_sentence();
      continue;
    }
    if (line[0] == '#') continue;

    const auto cols = split_tabs(line);
    if (cols.size() != kColumnCount) {
      throw ParseError(line_no, "expected 10 tab-separated columns, got " +
                                    std::to_string(cols.size()));
    }

    const std::string_view id = cols[0];
    // Multiword-token ranges and empty nodes carry no lemma of their own.
    if (id.find('-') != std::string_view::npos) continue;
    if (id.find('.') != std::string_view::npos) continue;

    long word_id = 0;
    if (!parse_word_id(id, word_id)) {
      throw ParseError(line_no, "malformed token ID '" + std::string(id) + "'");
    }
    if (word_id != last_word_id + 1) {
      throw ParseError(line_no, "non-monotone token ID " +
                                    std::to_string(word_id) + " (expected " +
                                    std::to_string(last_word_id + 1) + ")");
    }
    last_word_id = word_id;

    Token token;
    token.form = std::string(cols[1]);
    if (token.form.empty()) {
      throw ParseError(line_no, "empty FORM column");
    }
    if (cols[2] != "_") token.lemma = std::string(cols[2]);
    if (cols[3] != "_") token.upos = std::string(cols[3]);
    token.feats = parse_feats(cols[5]);
    current.tokens.push_back(std::move(token));
  }
  flush_sentence();
  return corpus;
}

Corpus parse_conllu_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open corpus file: " + path);
  }
  return parse_conllu(in, path);
}

void write_conllu(const Corpus& corpus, std::ostream& out) {
  for (std::size_t si = 0; si < corpus.sentences.size(); ++si) {
    const auto& sentence = corpus.sentences[si];
    for (std::size_t ti = 0; ti < sentence.tokens.size(); ++ti) {
      const Token& token = sentence.tokens[ti];
      if (!token.lemma.has_value() || token.lemma->empty()) {
        std::ostringstream msg;
        msg << "token " << (ti + 1) << " of sentence " << (si + 1) << " ('"
            << token.form << "') has no lemma";
        throw std::runtime_error(msg.str());
      }
      out << (ti + 1) << '\t' << token.form << '\t' << *token.lemma << '\t'
          << (token.upos.empty() ? "_" : token.upos) << '\t' << '_' << '\t'
          << (token.feats.empty() ? "_" : feats_to_string(token.feats))
          << "\t_\t_\t_\t_\n";
    }
    out << '\n';
  }
}

void write_conllu_file(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  write_conllu(corpus, out);
}

Corpus drop_lemmaless_tokens(Corpus corpus) {
  std::vector<Sentence> kept;
  kept.reserve(corpus.sentences.size());
  for (auto& sentence : corpus.sentences) {
    std::erase_if(sentence.tokens, [](const Token& t) {
      return !t.lemma.has_value() || t.lemma->empty();
    });
    if (sentence.tokens.empty()) continue;
    for (auto& token : sentence.tokens) token.is_sentence_initial = false;
    sentence.tokens.front().is_sentence_initial = true;
    kept.push_back(std::move(sentence));
  }
  corpus.sentences = std::move(kept);
  return corpus;
}

}  // namespace hunlemma
