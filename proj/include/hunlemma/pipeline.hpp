#ifndef HUNLEMMA_PIPELINE_HPP
#define HUNLEMMA_PIPELINE_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "hunlemma/corpus.hpp"
#include "hunlemma/lookup.hpp"
#include "hunlemma/rules.hpp"
#include "hunlemma/selector.hpp"

// Three-step hybrid: dictionary lookup first, the statistical selector for
// everything the dictionary misses, hand-crafted rules on every output.
// A lookup hit bypasses the selector entirely.

namespace hunlemma {

struct LemmatizerModel {
  std::shared_ptr<const TreeInventory> inventory;
  LookupTable lookup;
  SelectorModel selector;
  RuleConfig rules;
  std::uint32_t format_version = 1;
  std::string training_metadata;
};

// Case-normalizes the training pairs, builds the shared tree inventory,
// then trains the selector and the lookup table on the same pairs. The
// selector's label space is fixed before lookup training interns its
// digit-masked trees, so min_tree_freq counts each pair exactly once.
LemmatizerModel train(const Corpus& corpus, const SelectorConfig& config,
                      const RuleConfig& rules);

// One lemma per token, in token order.
std::vector<std::string> lemmatize(const LemmatizerModel& model,
                                   const Sentence& sentence);

// Lemmas per sentence, input order preserved regardless of thread count.
std::vector<std::vector<std::string>> lemmatize_corpus(
    const LemmatizerModel& model, const Corpus& corpus, unsigned threads = 1);

// load(save(m)) lemmatizes identically to m. Corrupted archives throw
// ModelFormatError without yielding a partial model.
void save_model(const LemmatizerModel& model, std::ostream& out);
LemmatizerModel load_model(std::istream& in);
void save_model_file(const LemmatizerModel& model, const std::string& path);
LemmatizerModel load_model_file(const std::string& path);

}  // namespace hunlemma

#endif
