#include "fixtures.hpp"

#include <filesystem>
#include <random>
#include <sstream>

#include "hunlemma/unicode.hpp"

namespace fixtures {

namespace {

struct Entry {
  const char* form;
  const char* lemma;
  const char* upos;
  const char* feats;
};

// Closed vocabulary; every (form, upos, feats) maps to exactly one lemma.
// "3000-ben" is deliberately absent (the masking tests need it unseen).
const Entry kVocab[] = {
    // nouns, five case cells each
    {"ház", "ház", "NOUN", "Case=Nom|Number=Sing"},
    {"házat", "ház", "NOUN", "Case=Acc|Number=Sing"},
    {"házban", "ház", "NOUN", "Case=Ine|Number=Sing"},
    {"háznak", "ház", "NOUN", "Case=Dat|Number=Sing"},
    {"házak", "ház", "NOUN", "Case=Nom|Number=Plur"},
    {"fal", "fal", "NOUN", "Case=Nom|Number=Sing"},
    {"falat", "fal", "NOUN", "Case=Acc|Number=Sing"},
    {"falban", "fal", "NOUN", "Case=Ine|Number=Sing"},
    {"falnak", "fal", "NOUN", "Case=Dat|Number=Sing"},
    {"falak", "fal", "NOUN", "Case=Nom|Number=Plur"},
    {"kert", "kert", "NOUN", "Case=Nom|Number=Sing"},
    {"kertet", "kert", "NOUN", "Case=Acc|Number=Sing"},
    {"kertben", "kert", "NOUN", "Case=Ine|Number=Sing"},
    {"kertnek", "kert", "NOUN", "Case=Dat|Number=Sing"},
    {"kertek", "kert", "NOUN", "Case=Nom|Number=Plur"},
    {"ablak", "ablak", "NOUN", "Case=Nom|Number=Sing"},
    {"ablakot", "ablak", "NOUN", "Case=Acc|Number=Sing"},
    {"ablakban", "ablak", "NOUN", "Case=Ine|Number=Sing"},
    {"ablaknak", "ablak", "NOUN", "Case=Dat|Number=Sing"},
    {"ablakok", "ablak", "NOUN", "Case=Nom|Number=Plur"},
    {"város", "város", "NOUN", "Case=Nom|Number=Sing"},
    {"várost", "város", "NOUN", "Case=Acc|Number=Sing"},
    {"városban", "város", "NOUN", "Case=Ine|Number=Sing"},
    {"városnak", "város", "NOUN", "Case=Dat|Number=Sing"},
    {"városok", "város", "NOUN", "Case=Nom|Number=Plur"},
    {"ember", "ember", "NOUN", "Case=Nom|Number=Sing"},
    {"embert", "ember", "NOUN", "Case=Acc|Number=Sing"},
    {"emberben", "ember", "NOUN", "Case=Ine|Number=Sing"},
    {"embernek", "ember", "NOUN", "Case=Dat|Number=Sing"},
    {"emberek", "ember", "NOUN", "Case=Nom|Number=Plur"},
    {"könyv", "könyv", "NOUN", "Case=Nom|Number=Sing"},
    {"könyvet", "könyv", "NOUN", "Case=Acc|Number=Sing"},
    {"könyvben", "könyv", "NOUN", "Case=Ine|Number=Sing"},
    {"könyvnek", "könyv", "NOUN", "Case=Dat|Number=Sing"},
    {"könyvek", "könyv", "NOUN", "Case=Nom|Number=Plur"},
    // stem alternations
    {"út", "út", "NOUN", "Case=Nom|Number=Sing"},
    {"utat", "út", "NOUN", "Case=Acc|Number=Sing"},
    {"útban", "út", "NOUN", "Case=Ine|Number=Sing"},
    {"utak", "út", "NOUN", "Case=Nom|Number=Plur"},
    {"kéz", "kéz", "NOUN", "Case=Nom|Number=Sing"},
    {"kezet", "kéz", "NOUN", "Case=Acc|Number=Sing"},
    {"kézben", "kéz", "NOUN", "Case=Ine|Number=Sing"},
    {"kezek", "kéz", "NOUN", "Case=Nom|Number=Plur"},
    {"madár", "madár", "NOUN", "Case=Nom|Number=Sing"},
    {"madarat", "madár", "NOUN", "Case=Acc|Number=Sing"},
    {"madárban", "madár", "NOUN", "Case=Ine|Number=Sing"},
    {"madarak", "madár", "NOUN", "Case=Nom|Number=Plur"},
    // verbs
    {"látta", "lát", "VERB", "Definite=Def|Number=Sing|Person=3|Tense=Past"},
    {"látott", "lát", "VERB", "Definite=Ind|Number=Sing|Person=3|Tense=Past"},
    {"látom", "lát", "VERB", "Definite=Def|Number=Sing|Person=1|Tense=Pres"},
    {"látják", "lát", "VERB", "Definite=Def|Number=Plur|Person=3|Tense=Pres"},
    {"látni", "lát", "VERB", "VerbForm=Inf"},
    {"nézte", "néz", "VERB", "Definite=Def|Number=Sing|Person=3|Tense=Past"},
    {"nézett", "néz", "VERB", "Definite=Ind|Number=Sing|Person=3|Tense=Past"},
    {"nézem", "néz", "VERB", "Definite=Def|Number=Sing|Person=1|Tense=Pres"},
    {"nézik", "néz", "VERB", "Definite=Def|Number=Plur|Person=3|Tense=Pres"},
    {"nézni", "néz", "VERB", "VerbForm=Inf"},
    {"írta", "ír", "VERB", "Definite=Def|Number=Sing|Person=3|Tense=Past"},
    {"írt", "ír", "VERB", "Definite=Ind|Number=Sing|Person=3|Tense=Past"},
    {"írom", "ír", "VERB", "Definite=Def|Number=Sing|Person=1|Tense=Pres"},
    {"írják", "ír", "VERB", "Definite=Def|Number=Plur|Person=3|Tense=Pres"},
    {"írni", "ír", "VERB", "VerbForm=Inf"},
    {"olvasta", "olvas", "VERB", "Definite=Def|Number=Sing|Person=3|Tense=Past"},
    {"olvasott", "olvas", "VERB", "Definite=Ind|Number=Sing|Person=3|Tense=Past"},
    {"olvasom", "olvas", "VERB", "Definite=Def|Number=Sing|Person=1|Tense=Pres"},
    {"olvassák", "olvas", "VERB", "Definite=Def|Number=Plur|Person=3|Tense=Pres"},
    {"olvasni", "olvas", "VERB", "VerbForm=Inf"},
    {"mondta", "mond", "VERB", "Definite=Def|Number=Sing|Person=3|Tense=Past"},
    {"mondott", "mond", "VERB", "Definite=Ind|Number=Sing|Person=3|Tense=Past"},
    {"mondom", "mond", "VERB", "Definite=Def|Number=Sing|Person=1|Tense=Pres"},
    {"mondják", "mond", "VERB", "Definite=Def|Number=Plur|Person=3|Tense=Pres"},
    {"mondani", "mond", "VERB", "VerbForm=Inf"},
    {"futott", "fut", "VERB", "Definite=Ind|Number=Sing|Person=3|Tense=Past"},
    {"futok", "fut", "VERB", "Definite=Ind|Number=Sing|Person=1|Tense=Pres"},
    {"futnak", "fut", "VERB", "Definite=Ind|Number=Plur|Person=3|Tense=Pres"},
    {"futni", "fut", "VERB", "VerbForm=Inf"},
    {"ment", "megy", "VERB", "Definite=Ind|Number=Sing|Person=3|Tense=Past"},
    {"megyek", "megy", "VERB", "Definite=Ind|Number=Sing|Person=1|Tense=Pres"},
    {"mennek", "megy", "VERB", "Definite=Ind|Number=Plur|Person=3|Tense=Pres"},
    {"menni", "megy", "VERB", "VerbForm=Inf"},
    // adjectives across degrees
    {"hosszú", "hosszú", "ADJ", "Case=Nom|Degree=Pos"},
    {"hosszabb", "hosszú", "ADJ", "Case=Nom|Degree=Cmp"},
    {"leghosszabb", "hosszú", "ADJ", "Case=Nom|Degree=Sup"},
    {"vad", "vad", "ADJ", "Case=Nom|Degree=Pos"},
    {"vadabb", "vad", "ADJ", "Case=Nom|Degree=Cmp"},
    {"legvadabb", "vad", "ADJ", "Case=Nom|Degree=Sup"},
    {"fontos", "fontos", "ADJ", "Case=Nom|Degree=Pos"},
    {"fontosabb", "fontos", "ADJ", "Case=Nom|Degree=Cmp"},
    {"legfontosabb", "fontos", "ADJ", "Case=Nom|Degree=Sup"},
    {"gyors", "gyors", "ADJ", "Case=Nom|Degree=Pos"},
    {"gyorsabb", "gyors", "ADJ", "Case=Nom|Degree=Cmp"},
    {"leggyorsabb", "gyors", "ADJ", "Case=Nom|Degree=Sup"},
    {"szép", "szép", "ADJ", "Case=Nom|Degree=Pos"},
    {"szebb", "szép", "ADJ", "Case=Nom|Degree=Cmp"},
    {"legszebb", "szép", "ADJ", "Case=Nom|Degree=Sup"},
    {"zöld", "zöld", "ADJ", "Case=Nom|Degree=Pos"},
    {"zöldebb", "zöld", "ADJ", "Case=Nom|Degree=Cmp"},
    {"legzöldebb", "zöld", "ADJ", "Case=Nom|Degree=Sup"},
    // proper nouns keep their capitals
    {"Budapest", "Budapest", "PROPN", "Case=Nom|Number=Sing"},
    {"Budapesten", "Budapest", "PROPN", "Case=Sup|Number=Sing"},
    {"Budapestre", "Budapest", "PROPN", "Case=Sub|Number=Sing"},
    {"Magyarország", "Magyarország", "PROPN", "Case=Nom|Number=Sing"},
    {"Magyarországon", "Magyarország", "PROPN", "Case=Sup|Number=Sing"},
    {"Duna", "Duna", "PROPN", "Case=Nom|Number=Sing"},
    {"Dunán", "Duna", "PROPN", "Case=Sup|Number=Sing"},
    {"Péter", "Péter", "PROPN", "Case=Nom|Number=Sing"},
    {"Pétert", "Péter", "PROPN", "Case=Acc|Number=Sing"},
    // numerals; two share the masked shape 0000-ben
    {"1000-ben", "1000", "NUM", "Case=Ine|NumType=Card"},
    {"2500-ben", "2500", "NUM", "Case=Ine|NumType=Card"},
    {"2020-ban", "2020", "NUM", "Case=Ine|NumType=Card"},
    {"25-kor", "25", "NUM", "Case=Tem|NumType=Card"},
    {"10", "10", "NUM", "Case=Nom|NumType=Card"},
    {"12", "12", "NUM", "Case=Nom|NumType=Card"},
    {"3,5", "3,5", "NUM", "Case=Nom|NumType=Card"},
    {"4-6-os", "4-6", "ADJ", "Case=Nom|Degree=Pos"},
    // function words
    {"a", "a", "DET", "Definite=Def|PronType=Art"},
    {"az", "az", "DET", "Definite=Def|PronType=Art"},
    {"egy", "egy", "DET", "Definite=Ind|PronType=Art"},
    {"és", "és", "CCONJ", "_"},
    {"de", "de", "CCONJ", "_"},
    {"vagy", "vagy", "CCONJ", "_"},
    {"nem", "nem", "PART", "_"},
    {"is", "is", "PART", "_"},
    {"meg", "meg", "PART", "_"},
    {"hogy", "hogy", "SCONJ", "_"},
    {"mert", "mert", "SCONJ", "_"},
    {"nagyon", "nagyon", "ADV", "_"},
    {"már", "már", "ADV", "_"},
    {"még", "még", "ADV", "_"},
    {"itt", "itt", "ADV", "_"},
    {"ott", "ott", "ADV", "_"},
    {"ez", "ez", "PRON", "Case=Nom|Number=Sing|PronType=Dem"},
    {",", ",", "PUNCT", "_"},
    {":", ":", "PUNCT", "_"},
};

const Entry kFinals[] = {
    {".", ".", "PUNCT", "_"},
    {"!", "!", "PUNCT", "_"},
    {"?", "?", "PUNCT", "_"},
};

// Inverse of the lemmatizer's first-character lowercasing, for building
// capitalized sentence starts. Test-only.
std::string uppercase_first(const std::string& text) {
  std::u32string chars = hunlemma::decode_utf8(text);
  if (chars.empty()) return text;
  char32_t& c = chars[0];
  if (c >= U'a' && c <= U'z') {
    c -= 0x20;
  } else if (c >= 0x00E0 && c <= 0x00FE && c != 0x00F7) {
    c -= 0x20;
  } else if (c >= 0x0101 && c <= 0x0177 && (c % 2) == 1) {
    c -= 1;
  } else if (c == 0x00FF) {
    c = 0x0178;
  }
  return hunlemma::encode_utf8(chars);
}

void emit(std::ostream& out, int id, const Entry& entry, bool capitalize) {
  const std::string form =
      capitalize ? uppercase_first(entry.form) : std::string(entry.form);
  out << id << '\t' << form << '\t' << entry.lemma << '\t' << entry.upos
      << "\t_\t" << entry.feats << "\t_\t_\t_\t_\n";
}

}  // namespace

hunlemma::Corpus toy() {
  std::stringstream text;
  text << "1\tHázat\tház\tNOUN\t_\tCase=Acc|Number=Sing\t_\t_\t_\t_\n"
          "2\tlátta\tlát\tVERB\t_\tDefinite=Def|Number=Sing|Person=3|Tense=Past"
          "\t_\t_\t_\t_\n"
          "3\t.\t.\tPUNCT\t_\t_\t_\t_\t_\t_\n"
          "\n"
          "1\tFalat\tfal\tNOUN\t_\tCase=Acc|Number=Sing\t_\t_\t_\t_\n"
          "2\tlátta\tlát\tVERB\t_\tDefinite=Def|Number=Sing|Person=3|Tense=Past"
          "\t_\t_\t_\t_\n"
          "3\t1000-ben\t1000\tNUM\t_\tCase=Ine|NumType=Card\t_\t_\t_\t_\n"
          "4\t!\t!\tPUNCT\t_\t_\t_\t_\t_\t_\n";
  return hunlemma::parse_conllu(text, "toy");
}

hunlemma::Corpus hungarian_1k() {
  std::mt19937_64 rng(20240917ull);
  std::stringstream text;
  std::size_t tokens = 0;
  while (tokens < 1100) {
    const std::size_t length = 5 + rng() % 7;
    int id = 1;
    for (std::size_t i = 0; i < length; ++i, ++id) {
      const Entry& entry = kVocab[rng() % std::size(kVocab)];
      const bool capitalize = (i == 0);
      emit(text, id, entry, capitalize);
      ++tokens;
    }
    emit(text, id, kFinals[rng() % std::size(kFinals)], false);
    ++tokens;
    text << '\n';
  }
  return hunlemma::parse_conllu(text, "hungarian_1k");
}

std::vector<RuleCase> rule_cases() {
  return {
      {"4-6-os", "ADJ", "4-6-", "4-6"},
      {"4-6-os", "ADJ", "4-6-os", "4-6"},
      {"!", "PUNCT", "!", "!"},
      {"?", "PUNCT", "?", "?"},
      {"!!", "PUNCT", "!!", "!!"},
      {".", "PUNCT", ".", "."},
      {"2020-ban", "NUM", "2020", "2020"},
      {"2020-ban", "NUM", "2020-ban", "2020"},
      {"25-kor", "NUM", "25-kor", "25"},
      {"10:30-kor", "NUM", "10:30-kor", "10:30"},
      {"1848/49-es", "ADJ", "1848/49-es", "1848/49"},
      {"3,5-ös", "ADJ", "3,5-ös", "3,5"},
      {"alma-fa", "NOUN", "alma-fa", "alma-fa"},
      {"A4-es", "NOUN", "A4-es", "a4-es"},
      {"jaj!", "INTJ", "jaj!", "jaj"},
      {"alma!?", "NOUN", "alma!", "alma"},
      {"Kutya", "NOUN", "Kutya", "kutya"},
      {"Budapest", "PROPN", "Budapest", "Budapest"},
      {"MÁV", "PROPN", "MÁV", "MÁV"},
      {"Írország", "PROPN", "Írország", "Írország"},
      {"Órákat", "NOUN", "Órákat", "órákat"},
  };
}

std::string ud_path(const std::string& filename) {
#ifdef UD_DATA_DIR
  return std::string(UD_DATA_DIR) + "/" + filename;
#else
  return "data/ud_hungarian/" + filename;
#endif
}

bool ud_available() {
  return std::filesystem::exists(ud_path("hu_szeged-ud-train.conllu"));
}

}  // namespace fixtures
