#ifndef HUNLEMMA_LOOKUP_HPP
#define HUNLEMMA_LOOKUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hunlemma/corpus.hpp"
#include "hunlemma/edit_tree.hpp"

// Dictionary lemmatizer: memorizes (digit-masked form, UPOS, FEATS) keys and
// serves their most frequent transformation at prediction time. Storing an
// edit tree instead of a literal lemma lets the original digits flow through
// the tree's common segments, so "0000-ben" learned from "1000-ben" also
// lemmatizes "3000-ben".

namespace hunlemma {

// Every decimal digit becomes '0'; everything else is unchanged.
std::string mask_digits(std::string_view text);

struct LookupKey {
  std::string masked_form;
  std::string upos;
  FeatList feats;

  bool operator==(const LookupKey&) const = default;
};

struct LookupKeyHash {
  std::size_t operator()(const LookupKey& key) const;
};

struct LookupEntry {
  std::uint32_t tree_id = 0;  // winning transformation
  std::uint64_t count = 0;    // occurrences of the winner
  std::uint64_t total = 0;    // occurrences of the key
};

class LookupTable {
 public:
  using Map = std::unordered_map<LookupKey, LookupEntry, LookupKeyHash>;

  void insert(LookupKey key, LookupEntry entry);
  const LookupEntry* find(const LookupKey& key) const;
  std::size_t size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }

  // Entries in (masked_form, upos, feats) order, for serialization and dumps.
  std::vector<const Map::value_type*> sorted_entries() const;

 private:
  Map entries_;
};

// Memorizes the most frequent transformation per key; ties go to the smaller
// tree id. Requires a gold lemma on every token.
LookupTable train_lookup(const Corpus& corpus, TreeInventory& inventory);

// Exact-key hit: applies the stored tree to the case-normalized, unmasked
// form. Absent on key miss or when the tree does not apply.
std::optional<std::string> lookup_apply(const LookupTable& table,
                                        const TreeInventory& inventory,
                                        const Token& token);

}  // namespace hunlemma

#endif
