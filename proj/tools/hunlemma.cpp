#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hunlemma/corpus.hpp"
#include "hunlemma/evalbench.hpp"
#include "hunlemma/pipeline.hpp"

namespace {

using nlohmann::json;

hunlemma::Corpus read_corpus(const std::string& path) {
  if (path == "-") return hunlemma::parse_conllu(std::cin, "<stdin>");
  return hunlemma::parse_conllu_file(path);
}

hunlemma::LemmatizerModel read_model(const std::string& path) {
  if (path == "-") return hunlemma::load_model(std::cin);
  return hunlemma::load_model_file(path);
}

struct TrainArgs {
  std::string corpus;
  std::string out;
  hunlemma::SelectorConfig config;
  bool no_casing = false;
  bool no_mark_strip = false;
  bool no_number_trim = false;
  bool skip_missing = false;
  bool json_out = false;
};

int run_train(const TrainArgs& args) {
  auto corpus = read_corpus(args.corpus);
  if (args.skip_missing) {
    corpus = hunlemma::drop_lemmaless_tokens(std::move(corpus));
  }
  hunlemma::RuleConfig rules;
  rules.enable_casing = !args.no_casing;
  rules.enable_mark_strip = !args.no_mark_strip;
  rules.enable_number_trim = !args.no_number_trim;

  const auto start = std::chrono::steady_clock::now();
  const auto model = hunlemma::train(corpus, args.config, rules);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;

  if (args.out == "-") {
    hunlemma::save_model(model, std::cout);
  } else {
    hunlemma::save_model_file(model, args.out);
  }

  if (args.json_out) {
    json report{{"sentences", corpus.sentences.size()},
                {"tokens", corpus.token_count()},
                {"trees", model.inventory->size()},
                {"labels", model.selector.label_tree_ids().size()},
                {"lookup_entries", model.lookup.size()},
                {"train_seconds", elapsed.count()},
                {"model", args.out}};
    std::cout << report.dump() << '\n';
  } else {
    std::cerr << "trained on " << corpus.sentences.size() << " sentences, "
              << corpus.token_count() << " tokens: " << model.inventory->size()
              << " trees, " << model.selector.label_tree_ids().size()
              << " labels, " << model.lookup.size() << " lookup entries ("
              << elapsed.count() << " s)\n";
  }
  return 0;
}

struct LemmatizeArgs {
  std::string model;
  std::string input;
  std::string output;
  unsigned threads = 1;
  bool json_out = false;
};

int run_lemmatize(const LemmatizeArgs& args) {
  const auto model = read_model(args.model);
  auto corpus = read_corpus(args.input);
  const auto lemmas = hunlemma::lemmatize_corpus(model, corpus, args.threads);
  for (std::size_t si = 0; si < corpus.sentences.size(); ++si) {
    auto& tokens = corpus.sentences[si].tokens;
    for (std::size_t ti = 0; ti < tokens.size(); ++ti) {
      tokens[ti].lemma = lemmas[si][ti];
    }
  }
  if (args.output == "-") {
    hunlemma::write_conllu(corpus, std::cout);
  } else {
    hunlemma::write_conllu_file(corpus, args.output);
  }
  if (args.json_out) {
    // Report goes to stderr so the document keeps stdout to itself.
    json report{{"sentences", corpus.sentences.size()},
                {"tokens", corpus.token_count()}};
    std::cerr << report.dump() << '\n';
  }
  return 0;
}

struct EvaluateArgs {
  std::string model;
  std::string gold;
  unsigned threads = 1;
  bool skip_missing = false;
  bool json_out = false;
};

int run_evaluate(const EvaluateArgs& args) {
  const auto model = read_model(args.model);
  auto gold = read_corpus(args.gold);
  if (args.skip_missing) {
    gold = hunlemma::drop_lemmaless_tokens(std::move(gold));
  }
  const auto report = hunlemma::evaluate_model(model, gold, args.threads);
  if (args.json_out) {
    json per_upos = json::object();
    for (const auto& [upos, counts] : report.per_upos) {
      per_upos[upos] = {{"correct", counts.first},
                        {"total", counts.second},
                        {"accuracy", counts.second == 0
                                         ? 0.0
                                         : static_cast<double>(counts.first) /
                                               static_cast<double>(counts.second)}};
    }
    json errors = json::array();
    for (const auto& e : report.error_samples) {
      errors.push_back({{"form", e.form},
                        {"gold", e.gold},
                        {"predicted", e.predicted},
                        {"upos", e.upos}});
    }
    json out{{"total", report.total},
             {"correct", report.correct},
             {"accuracy", report.accuracy},
             {"per_upos", per_upos},
             {"errors", errors}};
    std::cout << out.dump() << '\n';
  } else {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", report.accuracy);
    std::cout << "accuracy " << buf << " (" << report.correct << "/"
              << report.total << ")\n";
  }
  return 0;
}

struct BenchArgs {
  std::string model;
  std::string corpus;
  std::uint32_t runs = 3;
  unsigned threads = 1;
  bool json_out = false;
};

int run_bench(const BenchArgs& args) {
  const auto model = read_model(args.model);
  const auto corpus = read_corpus(args.corpus);
  const auto report =
      hunlemma::throughput_bench(model, corpus, args.runs, args.threads);
  if (args.json_out) {
    json out{{"tokens", report.tokens},
             {"runs", report.runs},
             {"best_of", report.best_of},
             {"best_seconds", report.best_seconds},
             {"tokens_per_second", report.tokens_per_second},
             {"run_seconds", report.run_seconds}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "tokens_per_second " << report.tokens_per_second << " (best of "
              << report.runs << " runs, " << report.tokens << " tokens, best "
              << report.best_seconds << " s)\n";
  }
  return 0;
}

struct InspectArgs {
  std::string model;
  bool trees = false;
  bool lookup = false;
  bool json_out = false;
};

int run_inspect(const InspectArgs& args) {
  const auto model = read_model(args.model);
  if (args.json_out) {
    json out{{"format_version", model.format_version},
             {"metadata", model.training_metadata},
             {"trees", model.inventory->size()},
             {"labels", model.selector.label_tree_ids().size()},
             {"lookup_entries", model.lookup.size()}};
    if (args.trees) {
      json list = json::array();
      for (std::uint32_t id = 0; id < model.inventory->size(); ++id) {
        list.push_back({{"id", id},
                        {"freq", model.inventory->freq(id)},
                        {"tree", hunlemma::dump_edit_tree(model.inventory->tree(id))}});
      }
      out["tree_list"] = list;
    }
    if (args.lookup) {
      json list = json::array();
      for (const auto* item : model.lookup.sorted_entries()) {
        list.push_back(
            {{"masked_form", item->first.masked_form},
             {"upos", item->first.upos},
             {"feats", hunlemma::feats_to_string(item->first.feats)},
             {"tree", hunlemma::dump_edit_tree(
                          model.inventory->tree(item->second.tree_id))},
             {"count", item->second.count},
             {"total", item->second.total}});
      }
      out["lookup_list"] = list;
    }
    std::cout << out.dump() << '\n';
    return 0;
  }
  if (args.trees) {
    for (std::uint32_t id = 0; id < model.inventory->size(); ++id) {
      std::cout << id << '\t' << model.inventory->freq(id) << '\t'
                << hunlemma::dump_edit_tree(model.inventory->tree(id)) << '\n';
    }
    return 0;
  }
  if (args.lookup) {
    for (const auto* item : model.lookup.sorted_entries()) {
      const std::string feats = hunlemma::feats_to_string(item->first.feats);
      std::cout << item->first.masked_form << '\t' << item->first.upos << '\t'
                << (feats.empty() ? "_" : feats) << '\t'
                << hunlemma::dump_edit_tree(
                       model.inventory->tree(item->second.tree_id))
                << '\t' << item->second.count << '\t' << item->second.total
                << '\n';
    }
    return 0;
  }
  std::cout << "format_version " << model.format_version << '\n'
            << "metadata " << model.training_metadata << '\n'
            << "trees " << model.inventory->size() << '\n'
            << "labels " << model.selector.label_tree_ids().size() << '\n'
            << "lookup_entries " << model.lookup.size() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hybrid lemmatizer: dictionary lookup, edit-tree selector, rules"};
  app.require_subcommand(1);

  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "train a model on a CoNLL-U corpus");
  train->add_option("--corpus", train_args.corpus, "training corpus (CoNLL-U)")
      ->required();
  train->add_option("--out", train_args.out, "model file to write")->required();
  train->add_option("--top-k", train_args.config.top_k,
                    "ranked candidates tried per token");
  train->add_option("--epochs", train_args.config.epochs, "training epochs");
  train->add_option("--seed", train_args.config.seed, "shuffle seed");
  train->add_option("--min-tree-freq", train_args.config.min_tree_freq,
                    "drop rarer trees from the selector label space");
  train->add_flag("--no-casing", train_args.no_casing,
                  "disable the casing rule");
  train->add_flag("--no-mark-strip", train_args.no_mark_strip,
                  "disable exclamation/question mark stripping");
  train->add_flag("--no-number-trim", train_args.no_number_trim,
                  "disable numeral suffix trimming");
  train->add_flag("--skip-missing-lemmas", train_args.skip_missing,
                  "drop tokens whose LEMMA column is _");
  train->add_flag("--json", train_args.json_out, "machine-readable report");

  LemmatizeArgs lemmatize_args;
  auto* lemmatize =
      app.add_subcommand("lemmatize", "fill the LEMMA column of a CoNLL-U file");
  lemmatize->add_option("--model", lemmatize_args.model, "model file")
      ->required();
  lemmatize
      ->add_option("--input", lemmatize_args.input, "input CoNLL-U ('-' = stdin)")
      ->required();
  lemmatize
      ->add_option("--output", lemmatize_args.output,
                   "output CoNLL-U ('-' = stdout)")
      ->required();
  lemmatize->add_option("--threads", lemmatize_args.threads,
                        "worker threads (order-preserving)");
  lemmatize->add_flag("--json", lemmatize_args.json_out,
                      "machine-readable report on stderr");

  EvaluateArgs evaluate_args;
  auto* evaluate =
      app.add_subcommand("evaluate", "score a model against gold lemmas");
  evaluate->add_option("--model", evaluate_args.model, "model file")->required();
  evaluate->add_option("--gold", evaluate_args.gold, "gold corpus (CoNLL-U)")
      ->required();
  evaluate->add_option("--threads", evaluate_args.threads,
                       "worker threads (order-preserving)");
  evaluate->add_flag("--skip-missing-lemmas", evaluate_args.skip_missing,
                     "drop gold tokens whose LEMMA column is _");
  evaluate->add_flag("--json", evaluate_args.json_out,
                     "machine-readable report");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "measure lemmatization throughput");
  bench->add_option("--model", bench_args.model, "model file")->required();
  bench->add_option("--corpus", bench_args.corpus, "corpus to lemmatize")
      ->required();
  bench->add_option("--runs", bench_args.runs, "timed runs (best one reported)");
  bench->add_option("--threads", bench_args.threads,
                    "worker threads (order-preserving)");
  bench->add_flag("--json", bench_args.json_out, "machine-readable report");

  InspectArgs inspect_args;
  auto* inspect = app.add_subcommand("inspect", "describe a model archive");
  inspect->add_option("--model", inspect_args.model, "model file")->required();
  inspect->add_flag("--trees", inspect_args.trees, "dump the edit tree inventory");
  inspect->add_flag("--lookup", inspect_args.lookup, "dump the lookup table");
  inspect->add_flag("--json", inspect_args.json_out, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (train->parsed()) return run_train(train_args);
    if (lemmatize->parsed()) return run_lemmatize(lemmatize_args);
    if (evaluate->parsed()) return run_evaluate(evaluate_args);
    if (bench->parsed()) return run_bench(bench_args);
    if (inspect->parsed()) return run_inspect(inspect_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
