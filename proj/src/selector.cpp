#include "hunlemma/selector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "hunlemma/rules.hpp"
#include "hunlemma/unicode.hpp"

namespace hunlemma {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv1a(std::string_view a, std::string_view b) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : a) {
    h ^= c;
    h *= kFnvPrime;
  }
  h ^= 0x1F;
  h *= kFnvPrime;
  for (unsigned char c : b) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

// Unbiased-enough bounded draw; fixed algorithm so shuffles reproduce
// across standard library implementations.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

void shuffle_order(std::vector<std::uint32_t>& order, std::mt19937_64& rng) {
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::uint64_t j = bounded_draw(rng, i);
    std::swap(order[i - 1], order[j]);
  }
}

void add_feature(std::vector<std::uint32_t>& indices, std::string_view tmpl,
                 std::string_view value, std::uint32_t space) {
  indices.push_back(feature_hash(tmpl, value, space));
}

void add_affix_features(std::vector<std::uint32_t>& indices,
                        const std::u32string& form, std::string_view tag,
                        std::size_t max_suffix, std::size_t max_prefix,
                        std::uint32_t space) {
  char name[8];
  for (std::size_t k = 1; k <= max_suffix && k <= form.size(); ++k) {
    const auto len = static_cast<std::size_t>(
        std::snprintf(name, sizeof name, "%.*ss%zu", int(tag.size()),
                      tag.data(), k));
    add_feature(indices, std::string_view(name, len),
                encode_utf8(std::u32string_view(form).substr(form.size() - k)),
                space);
  }
  for (std::size_t k = 1; k <= max_prefix && k <= form.size(); ++k) {
    const auto len = static_cast<std::size_t>(
        std::snprintf(name, sizeof name, "%.*sp%zu", int(tag.size()),
                      tag.data(), k));
    add_feature(indices, std::string_view(name, len),
                encode_utf8(std::u32string_view(form).substr(0, k)), space);
  }
}

}  // namespace

void SelectorConfig::validate() const {
  if (top_k < 1) throw std::invalid_argument("selector: top_k must be >= 1");
  if (feature_space_size < (1u << 10) ||
      (feature_space_size & (feature_space_size - 1)) != 0) {
    throw std::invalid_argument(
        "selector: feature_space_size must be a power of two >= 1024");
  }
  if (epochs < 1) throw std::invalid_argument("selector: epochs must be >= 1");
  if (!(learning_rate > 0.0f)) {
    throw std::invalid_argument("selector: learning_rate must be positive");
  }
}

std::uint32_t feature_hash(std::string_view template_name,
                           std::string_view value,
                           std::uint32_t feature_space_size) {
  return static_cast<std::uint32_t>(fnv1a(template_name, value) &
                                    (feature_space_size - 1));
}

FeatureVector extract_features(const Sentence& sentence, std::size_t position,
                               std::uint32_t feature_space_size) {
  const Token& token = sentence.tokens.at(position);
  const std::string normalized = case_normalize_form(token.form, token.upos);
  const std::u32string form = decode_utf8(normalized);

  std::vector<std::uint32_t> indices;
  indices.reserve(24);

  add_feature(indices, "w", normalized, feature_space_size);
  add_affix_features(indices, form, "", 5, 3, feature_space_size);
  add_feature(indices, "t", token.upos, feature_space_size);
  for (const auto& [key, value] : token.feats) {
    add_feature(indices, "f", key + "=" + value, feature_space_size);
  }

  if (position > 0) {
    const Token& prev = sentence.tokens[position - 1];
    add_feature(indices, "pt", prev.upos, feature_space_size);
    const std::u32string prev_form =
        decode_utf8(case_normalize_form(prev.form, prev.upos));
    add_affix_features(indices, prev_form, "p", 3, 0, feature_space_size);
  } else {
    add_feature(indices, "pt", "<BOS>", feature_space_size);
  }

  if (position + 1 < sentence.tokens.size()) {
    const Token& next = sentence.tokens[position + 1];
    add_feature(indices, "nt", next.upos, feature_space_size);
    const std::u32string next_form =
        decode_utf8(case_normalize_form(next.form, next.upos));
    add_affix_features(indices, next_form, "n", 3, 0, feature_space_size);
  } else {
    add_feature(indices, "nt", "<EOS>", feature_space_size);
  }

  bool has_digit = false;
  for (char32_t c : form) {
    if (is_decimal_digit(c)) {
      has_digit = true;
      break;
    }
  }
  if (has_digit) add_feature(indices, "d", "1", feature_space_size);

  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return FeatureVector{std::move(indices)};
}

namespace detail {

double* SoftmaxTrainer::row(std::uint32_t feature) {
  const auto [it, inserted] =
      slots_.try_emplace(feature, static_cast<std::uint32_t>(slots_.size()));
  if (inserted) weights_.resize(weights_.size() + n_labels_, 0.0);
  return weights_.data() + static_cast<std::size_t>(it->second) * n_labels_;
}

const double* SoftmaxTrainer::row(std::uint32_t feature) const {
  const auto it = slots_.find(feature);
  if (it == slots_.end()) return nullptr;
  return weights_.data() + static_cast<std::size_t>(it->second) * n_labels_;
}

std::vector<double> SoftmaxTrainer::scores(const FeatureVector& features) const {
  std::vector<double> s(n_labels_, 0.0);
  for (const std::uint32_t f : features.indices) {
    if (const double* r = row(f)) {
      for (std::size_t c = 0; c < n_labels_; ++c) s[c] += r[c];
    }
  }
  return s;
}

double SoftmaxTrainer::loss(const FeatureVector& features,
                            std::uint32_t label) const {
  const std::vector<double> s = scores(features);
  const double max = *std::max_element(s.begin(), s.end());
  double sum = 0.0;
  for (const double v : s) sum += std::exp(v - max);
  return std::log(sum) - (s[label] - max);
}

void SoftmaxTrainer::step(const FeatureVector& features, std::uint32_t label,
                          double lr) {
  std::vector<double> p = scores(features);
  const double max = *std::max_element(p.begin(), p.end());
  double sum = 0.0;
  for (double& v : p) {
    v = std::exp(v - max);
    sum += v;
  }
  for (double& v : p) v /= sum;
  p[label] -= 1.0;  // now the cross-entropy gradient per class
  for (const std::uint32_t f : features.indices) {
    double* r = row(f);
    for (std::size_t c = 0; c < n_labels_; ++c) r[c] -= lr * p[c];
  }
}

double SoftmaxTrainer::weight(std::uint32_t feature,
                              std::uint32_t label) const {
  const double* r = row(feature);
  return r == nullptr ? 0.0 : r[label];
}

void SoftmaxTrainer::set_weight(std::uint32_t feature, std::uint32_t label,
                                double value) {
  row(feature)[label] = value;
}

std::pair<std::vector<std::uint32_t>, std::vector<float>>
SoftmaxTrainer::freeze() const {
  std::vector<std::uint32_t> ids;
  ids.reserve(slots_.size());
  for (const auto& [feature, slot] : slots_) ids.push_back(feature);
  std::sort(ids.begin(), ids.end());

  std::vector<float> frozen(ids.size() * n_labels_, 0.0f);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const double* r = row(ids[i]);
    for (std::size_t c = 0; c < n_labels_; ++c) {
      frozen[i * n_labels_ + c] = static_cast<float>(r[c]);
    }
  }
  return {std::move(ids), std::move(frozen)};
}

}  // namespace detail

SelectorModel::SelectorModel(SelectorConfig config,
                             std::shared_ptr<const TreeInventory> inventory,
                             std::vector<std::uint32_t> label_tree_ids,
                             std::vector<std::uint32_t> feature_ids,
                             std::vector<float> weights)
    : config_(config),
      inventory_(std::move(inventory)),
      label_tree_ids_(std::move(label_tree_ids)),
      feature_ids_(std::move(feature_ids)),
      weights_(std::move(weights)) {}

std::vector<std::pair<std::uint32_t, double>> SelectorModel::predict_topk(
    const Sentence& sentence, std::size_t position) const {
  const std::size_t n = label_tree_ids_.size();
  const FeatureVector features =
      extract_features(sentence, position, config_.feature_space_size);

  std::vector<double> scores(n, 0.0);
  for (const std::uint32_t f : features.indices) {
    const auto it =
        std::lower_bound(feature_ids_.begin(), feature_ids_.end(), f);
    if (it == feature_ids_.end() || *it != f) continue;
    const std::size_t rowi =
        static_cast<std::size_t>(it - feature_ids_.begin()) * n;
    for (std::size_t c = 0; c < n; ++c) scores[c] += weights_[rowi + c];
  }

  std::vector<std::uint32_t> order(n);
  for (std::size_t c = 0; c < n; ++c) order[c] = static_cast<std::uint32_t>(c);
  const std::size_t k = std::min<std::size_t>(config_.top_k, n);
  std::partial_sort(order.begin(), order.begin() + k, order.end(),
                    [&](std::uint32_t a, std::uint32_t b) {
                      if (scores[a] != scores[b]) return scores[a] > scores[b];
                      return label_tree_ids_[a] < label_tree_ids_[b];
                    });

  std::vector<std::pair<std::uint32_t, double>> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.emplace_back(label_tree_ids_[order[i]], scores[order[i]]);
  }
  return out;
}

std::string SelectorModel::lemmatize_statistical(const Sentence& sentence,
                                                 std::size_t position) const {
  const Token& token = sentence.tokens.at(position);
  const std::string normalized = case_normalize_form(token.form, token.upos);
  const std::u32string form = decode_utf8(normalized);
  for (const auto& [tree_id, score] : predict_topk(sentence, position)) {
    const auto lemma = apply_edit_tree(inventory_->tree(tree_id), form);
    if (lemma.has_value() && !lemma->empty()) return encode_utf8(*lemma);
  }
  return normalized;
}

SelectorModel train_selector(const Corpus& corpus,
                             std::shared_ptr<const TreeInventory> inventory,
                             const SelectorConfig& config) {
  config.validate();
  if (corpus.token_count() == 0) {
    throw std::invalid_argument("selector training: empty corpus");
  }

  // Label space: inventory ids frequent enough to keep, in id order.
  std::vector<std::uint32_t> label_tree_ids;
  std::unordered_map<std::uint32_t, std::uint32_t> label_of;
  for (std::uint32_t id = 0; id < inventory->size(); ++id) {
    if (inventory->freq(id) >= config.min_tree_freq) {
      label_of.emplace(id, static_cast<std::uint32_t>(label_tree_ids.size()));
      label_tree_ids.push_back(id);
    }
  }

  struct Example {
    FeatureVector features;
    std::uint32_t label;
  };
  std::vector<Example> examples;
  for (const auto& sentence : corpus.sentences) {
    for (std::size_t pos = 0; pos < sentence.tokens.size(); ++pos) {
      const Token& token = sentence.tokens[pos];
      if (!token.lemma.has_value() || token.lemma->empty()) {
        throw std::runtime_error("selector training: token '" + token.form +
                                 "' has no lemma");
      }
      const auto [form, lemma] = case_normalize_training(
          token.form, *token.lemma, token.upos, token.is_sentence_initial);
      const auto tree = build_edit_tree_utf8(form, lemma);
      const auto id = inventory->find(*tree);
      if (!id.has_value()) {
        throw std::logic_error(
            "selector training: inventory not pre-populated for token '" +
            token.form + "'");
      }
      const auto label = label_of.find(*id);
      if (label == label_of.end()) continue;  // pruned tree, skip token
      examples.push_back(Example{
          extract_features(sentence, pos, config.feature_space_size),
          label->second});
    }
  }
  if (examples.empty()) {
    throw std::runtime_error(
        "selector training: every edit tree fell under min_tree_freq");
  }

  detail::SoftmaxTrainer trainer(label_tree_ids.size());
  std::vector<std::uint32_t> order(examples.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = static_cast<std::uint32_t>(i);
  }
  std::mt19937_64 rng(config.seed);
  for (std::uint32_t epoch = 0; epoch < config.epochs; ++epoch) {
    shuffle_order(order, rng);
    for (const std::uint32_t idx : order) {
      trainer.step(examples[idx].features, examples[idx].label,
                   static_cast<double>(config.learning_rate));
    }
  }

  auto [feature_ids, weights] = trainer.freeze();
  return SelectorModel(config, std::move(inventory), std::move(label_tree_ids),
                       std::move(feature_ids), std::move(weights));
}

}  // namespace hunlemma
