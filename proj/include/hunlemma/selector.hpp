#ifndef HUNLEMMA_SELECTOR_HPP
#define HUNLEMMA_SELECTOR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hunlemma/corpus.hpp"
#include "hunlemma/edit_tree.hpp"

// Statistical stage: a multinomial linear classifier over hashed context
// features scores the edit-tree inventory and yields a ranked top-k
// candidate list per token.

namespace hunlemma {

struct SelectorConfig {
  std::uint32_t top_k = 3;
  std::uint32_t feature_space_size = 1u << 20;  // power of two
  std::uint32_t epochs = 30;
  float learning_rate = 0.5f;
  std::uint64_t seed = 42;
  std::uint32_t min_tree_freq = 3;  // rarer trees leave the label space

  void validate() const;  // throws std::invalid_argument
};

// Sorted, deduplicated hashed feature indices in [0, feature_space_size).
struct FeatureVector {
  std::vector<std::uint32_t> indices;
};

// Hash of one (template, value) pair; exposed so tests can name features.
std::uint32_t feature_hash(std::string_view template_name,
                           std::string_view value,
                           std::uint32_t feature_space_size);

// Fixed templates: case-normalized form, its suffixes (1-5) and prefixes
// (1-3), UPOS, FEATS pairs, neighbor UPOS and suffixes (1-3) with <BOS>/<EOS>
// sentinels at the edges, and a digit flag.
FeatureVector extract_features(const Sentence& sentence, std::size_t position,
                               std::uint32_t feature_space_size);

namespace detail {

// Softmax cross-entropy SGD over sparse binary features. Weights live in
// double precision while training and are frozen to float32 afterwards.
class SoftmaxTrainer {
 public:
  explicit SoftmaxTrainer(std::size_t n_labels) : n_labels_(n_labels) {}

  void step(const FeatureVector& features, std::uint32_t label, double lr);
  double loss(const FeatureVector& features, std::uint32_t label) const;
  std::vector<double> scores(const FeatureVector& features) const;

  double weight(std::uint32_t feature, std::uint32_t label) const;
  void set_weight(std::uint32_t feature, std::uint32_t label, double value);

  std::size_t n_labels() const { return n_labels_; }

  // (sorted feature ids, row-major float32 rows in the same order)
  std::pair<std::vector<std::uint32_t>, std::vector<float>> freeze() const;

 private:
  double* row(std::uint32_t feature);
  const double* row(std::uint32_t feature) const;

  std::size_t n_labels_;
  std::unordered_map<std::uint32_t, std::uint32_t> slots_;
  std::vector<double> weights_;  // slot-major rows of n_labels_
};

}  // namespace detail

class SelectorModel {
 public:
  SelectorModel() = default;
  SelectorModel(SelectorConfig config,
                std::shared_ptr<const TreeInventory> inventory,
                std::vector<std::uint32_t> label_tree_ids,
                std::vector<std::uint32_t> feature_ids,
                std::vector<float> weights);

  const SelectorConfig& config() const { return config_; }
  const TreeInventory& inventory() const { return *inventory_; }
  std::shared_ptr<const TreeInventory> inventory_ptr() const {
    return inventory_;
  }
  const std::vector<std::uint32_t>& label_tree_ids() const {
    return label_tree_ids_;
  }
  const std::vector<std::uint32_t>& feature_ids() const { return feature_ids_; }
  const std::vector<float>& weights() const { return weights_; }

  // config().top_k highest-scoring (tree_id, score) pairs, score-descending,
  // ties to the smaller tree id. Pure; safe to call concurrently.
  std::vector<std::pair<std::uint32_t, double>> predict_topk(
      const Sentence& sentence, std::size_t position) const;

  // First applicable candidate's output on the case-normalized form, or the
  // case-normalized form itself when all k candidates fail.
  std::string lemmatize_statistical(const Sentence& sentence,
                                    std::size_t position) const;

 private:
  SelectorConfig config_;
  std::shared_ptr<const TreeInventory> inventory_;
  std::vector<std::uint32_t> label_tree_ids_;  // label -> tree id, ascending
  std::vector<std::uint32_t> feature_ids_;     // sorted
  std::vector<float> weights_;  // feature-major rows of label count
};

// Requires gold lemmas and an inventory pre-populated with the normalized
// (form, lemma) trees of every token. Reproducible: same corpus and config
// give bitwise-identical weights.
SelectorModel train_selector(const Corpus& corpus,
                             std::shared_ptr<const TreeInventory> inventory,
                             const SelectorConfig& config);

}  // namespace hunlemma

#endif
