#include "hunlemma/lookup.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hunlemma/rules.hpp"
#include "hunlemma/unicode.hpp"

namespace hunlemma {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv_mix(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char b : bytes) {
    h ^= b;
    h *= kFnvPrime;
  }
  h ^= 0x1F;  // length-free field separator
  h *= kFnvPrime;
}

}  // namespace

std::string mask_digits(std::string_view text) {
  std::u32string scalars = decode_utf8(text);
  for (char32_t& c : scalars) {
    if (is_decimal_digit(c)) c = U'0';
  }
  return encode_utf8(scalars);
}

std::size_t LookupKeyHash::operator()(const LookupKey& key) const {
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, key.masked_form);
  fnv_mix(h, key.upos);
  for (const auto& [k, v] : key.feats) {
    fnv_mix(h, k);
    fnv_mix(h, v);
  }
  return static_cast<std::size_t>(h);
}

void LookupTable::insert(LookupKey key, LookupEntry entry) {
  entries_[std::move(key)] = entry;
}

const LookupEntry* LookupTable::find(const LookupKey& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<const LookupTable::Map::value_type*> LookupTable::sorted_entries()
    const {
  std::vector<const Map::value_type*> out;
  out.reserve(entries_.size());
  for (const auto& item : entries_) out.push_back(&item);
  std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) {
    if (a->first.masked_form != b->first.masked_form)
      return a->first.masked_form < b->first.masked_form;
    if (a->first.upos != b->first.upos) return a->first.upos < b->first.upos;
    return a->first.feats < b->first.feats;
  });
  return out;
}

LookupTable train_lookup(const Corpus& corpus, TreeInventory& inventory) {
  // Per key: candidate tree -> count, in first-seen order via std::map on id.
  std::unordered_map<LookupKey, std::map<std::uint32_t, std::uint64_t>,
                     LookupKeyHash>
      candidates;

  for (std::size_t si = 0; si < corpus.sentences.size(); ++si) {
    const auto& sentence = corpus.sentences[si];
    for (std::size_t ti = 0; ti < sentence.tokens.size(); ++ti) {
      const Token& token = sentence.tokens[ti];
      if (!token.lemma.has_value() || token.lemma->empty()) {
        std::ostringstream msg;
        msg << "lookup training: token " << (ti + 1) << " of sentence "
            << (si + 1) << " ('" << token.form << "') has no lemma";
        throw std::runtime_error(msg.str());
      }
      const auto [form, lemma] = case_normalize_training(
          token.form, *token.lemma, token.upos, token.is_sentence_initial);
      const std::string masked_form = mask_digits(form);
      const std::string masked_lemma = mask_digits(lemma);
      const auto tree = build_edit_tree_utf8(masked_form, masked_lemma);
      const std::uint32_t id = inventory.intern(tree);
      candidates[LookupKey{masked_form, token.upos, token.feats}][id] += 1;
    }
  }

  LookupTable table;
  for (auto& [key, counts] : candidates) {
    LookupEntry entry;
    for (const auto& [id, count] : counts) {
      entry.total += count;
      // std::map iterates ids ascending, so a strict comparison keeps the
      // smallest id among equally frequent transformations.
      if (count > entry.count) {
        entry.count = count;
        entry.tree_id = id;
      }
    }
    table.insert(key, entry);
  }
  return table;
}

std::optional<std::string> lookup_apply(const LookupTable& table,
                                        const TreeInventory& inventory,
                                        const Token& token) {
  const std::string normalized = case_normalize_form(token.form, token.upos);
  const LookupKey key{mask_digits(normalized), token.upos, token.feats};
  const LookupEntry* entry = table.find(key);
  if (entry == nullptr) return std::nullopt;
  const auto lemma =
      apply_edit_tree_utf8(inventory.tree(entry->tree_id), normalized);
  if (!lemma.has_value() || lemma->empty()) return std::nullopt;
  return lemma;
}

}  // namespace hunlemma
