#include "hunlemma/evalbench.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace hunlemma {

EvalReport evaluate_predictions(
    const Corpus& gold, const std::vector<std::vector<std::string>>& predicted,
    std::size_t max_error_samples) {
  if (predicted.size() != gold.sentences.size()) {
    std::ostringstream msg;
    msg << "evaluate: prediction has " << predicted.size()
        << " sentences, gold has " << gold.sentences.size();
    throw std::invalid_argument(msg.str());
  }

  EvalReport report;
  for (std::size_t si = 0; si < gold.sentences.size(); ++si) {
    const Sentence& sentence = gold.sentences[si];
    const auto& lemmas = predicted[si];
    if (lemmas.size() != sentence.tokens.size()) {
      std::ostringstream msg;
      msg << "evaluate: sentence " << (si + 1) << " has "
          << sentence.tokens.size() << " tokens but " << lemmas.size()
          << " predictions";
      throw std::invalid_argument(msg.str());
    }
    for (std::size_t ti = 0; ti < sentence.tokens.size(); ++ti) {
      const Token& token = sentence.tokens[ti];
      if (!token.lemma.has_value()) {
        std::ostringstream msg;
        msg << "evaluate: token " << (ti + 1) << " of sentence " << (si + 1)
            << " ('" << token.form << "') has no gold lemma";
        throw std::invalid_argument(msg.str());
      }
      ++report.total;
      auto& [upos_correct, upos_total] = report.per_upos[token.upos];
      ++upos_total;
      if (lemmas[ti] == *token.lemma) {
        ++report.correct;
        ++upos_correct;
      } else if (report.error_samples.size() < max_error_samples) {
        report.error_samples.push_back(
            {token.form, *token.lemma, lemmas[ti], token.upos});
      }
    }
  }
  if (report.total > 0) {
    report.accuracy =
        static_cast<double>(report.correct) / static_cast<double>(report.total);
  }
  return report;
}

EvalReport lemma_accuracy(const Corpus& gold, const Corpus& predicted,
                          std::size_t max_error_samples) {
  std::vector<std::vector<std::string>> lemmas;
  lemmas.reserve(predicted.sentences.size());
  for (std::size_t si = 0; si < predicted.sentences.size(); ++si) {
    const Sentence& sentence = predicted.sentences[si];
    auto& row = lemmas.emplace_back();
    row.reserve(sentence.tokens.size());
    for (std::size_t ti = 0; ti < sentence.tokens.size(); ++ti) {
      const Token& token = sentence.tokens[ti];
      if (!token.lemma.has_value()) {
        std::ostringstream msg;
        msg << "evaluate: predicted token " << (ti + 1) << " of sentence "
            << (si + 1) << " ('" << token.form << "') has no lemma";
        throw std::invalid_argument(msg.str());
      }
      row.push_back(*token.lemma);
    }
  }
  return evaluate_predictions(gold, lemmas, max_error_samples);
}

EvalReport evaluate_model(const LemmatizerModel& model, const Corpus& corpus,
                          unsigned threads, std::size_t max_error_samples) {
  return evaluate_predictions(corpus, lemmatize_corpus(model, corpus, threads),
                              max_error_samples);
}

BenchReport throughput_bench(const LemmatizerModel& model, const Corpus& corpus,
                             std::uint32_t runs, unsigned threads) {
  if (corpus.token_count() == 0) {
    throw std::invalid_argument("bench: empty corpus");
  }
  if (runs == 0) throw std::invalid_argument("bench: runs must be >= 1");

  using clock = std::chrono::steady_clock;
  // Keeps the optimizer from discarding the untimed pass.
  volatile std::size_t sink = 0;

  auto pass = [&] {
    std::size_t produced = 0;
    for (const auto& lemmas : lemmatize_corpus(model, corpus, threads)) {
      produced += lemmas.size();
    }
    return produced;
  };

  sink = pass();  // warmup

  BenchReport report;
  report.tokens = corpus.token_count();
  report.runs = runs;
  report.best_of = runs;
  report.run_seconds.reserve(runs);
  for (std::uint32_t i = 0; i < runs; ++i) {
    const auto start = clock::now();
    sink = pass();
    const std::chrono::duration<double> elapsed = clock::now() - start;
    report.run_seconds.push_back(elapsed.count());
  }
  (void)sink;

  report.best_seconds = report.run_seconds.front();
  for (const double s : report.run_seconds) {
    if (s < report.best_seconds) report.best_seconds = s;
  }
  report.tokens_per_second =
      report.best_seconds > 0.0
          ? static_cast<double>(report.tokens) / report.best_seconds
          : 0.0;
  return report;
}

}  // namespace hunlemma
