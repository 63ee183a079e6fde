#ifndef HUNLEMMA_EVALBENCH_HPP
#define HUNLEMMA_EVALBENCH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hunlemma/corpus.hpp"
#include "hunlemma/pipeline.hpp"

namespace hunlemma {

struct EvalError {
  std::string form;
  std::string gold;
  std::string predicted;
  std::string upos;
};

struct EvalReport {
  std::uint64_t total = 0;
  std::uint64_t correct = 0;
  double accuracy = 0.0;  // correct / total; 0 on an empty corpus
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>>
      per_upos;  // upos -> (correct, total)
  std::vector<EvalError> error_samples;  // first max_error_samples mismatches
};

// Compares predictions against the gold lemmas token by token. Exact match
// on Unicode scalar values; no normalization beyond what the pipeline did.
// Throws std::invalid_argument when the prediction layout does not align
// with the corpus or a gold lemma is missing.
EvalReport evaluate_predictions(
    const Corpus& gold, const std::vector<std::vector<std::string>>& predicted,
    std::size_t max_error_samples = 20);

// Same scoring over a lemmatized corpus; both sides must be token-aligned.
EvalReport lemma_accuracy(const Corpus& gold, const Corpus& predicted,
                          std::size_t max_error_samples = 20);

// Runs the model over the corpus, then scores it.
EvalReport evaluate_model(const LemmatizerModel& model, const Corpus& corpus,
                          unsigned threads = 1,
                          std::size_t max_error_samples = 20);

struct BenchReport {
  std::uint64_t tokens = 0;
  std::uint32_t runs = 0;
  std::uint32_t best_of = 0;        // equals runs; the report is best-of-runs
  double best_seconds = 0.0;
  double tokens_per_second = 0.0;
  std::vector<double> run_seconds;  // every timed run, in order
};

// One untimed warmup pass, then `runs` timed passes; reports the best run.
// Throws std::invalid_argument on an empty corpus or runs == 0.
BenchReport throughput_bench(const LemmatizerModel& model, const Corpus& corpus,
                             std::uint32_t runs = 3, unsigned threads = 1);

}  // namespace hunlemma

#endif
