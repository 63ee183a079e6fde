#include "hunlemma/pipeline.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hunlemma/archive.hpp"
#include "hunlemma/unicode.hpp"

namespace hunlemma {

namespace {

const std::uint32_t kMetaTag = section_tag('M', 'E', 'T', 'A');
const std::uint32_t kTreeTag = section_tag('T', 'R', 'E', 'E');
const std::uint32_t kLookTag = section_tag('L', 'O', 'O', 'K');
const std::uint32_t kSelwTag = section_tag('S', 'E', 'L', 'W');

void write_tree(ByteWriter& w, const EditTree& tree) {
  if (tree.is_replace()) {
    const auto& r = tree.as_replace();
    w.u8(0);
    w.str(encode_utf8(r.source));
    w.str(encode_utf8(r.target));
  } else {
    const auto& m = tree.as_match();
    w.u8(1);
    w.u32(static_cast<std::uint32_t>(m.prefix_len));
    w.u32(static_cast<std::uint32_t>(m.suffix_len));
    write_tree(w, *m.left);
    write_tree(w, *m.right);
  }
}

EditTreePtr read_tree(ByteReader& r, std::size_t depth = 0) {
  if (depth > 512) {
    throw ModelFormatError(ArchiveError::truncated,
                           "model archive: edit tree nested too deeply");
  }
  const std::uint8_t kind = r.u8();
  if (kind == 0) {
    EditTree::ReplaceNode node;
    node.source = decode_utf8(r.str());
    node.target = decode_utf8(r.str());
    return std::make_shared<EditTree>(std::move(node));
  }
  if (kind != 1) {
    throw ModelFormatError(ArchiveError::truncated,
                           "model archive: unknown edit tree node kind");
  }
  EditTree::MatchNode node;
  node.prefix_len = r.u32();
  node.suffix_len = r.u32();
  node.left = read_tree(r, depth + 1);
  node.right = read_tree(r, depth + 1);
  return std::make_shared<EditTree>(std::move(node));
}

std::string encode_meta(const LemmatizerModel& model) {
  ByteWriter w;
  w.u8(model.rules.enable_casing ? 1 : 0);
  w.u8(model.rules.enable_mark_strip ? 1 : 0);
  w.u8(model.rules.enable_number_trim ? 1 : 0);
  const SelectorConfig& c = model.selector.config();
  w.u32(c.top_k);
  w.u32(c.feature_space_size);
  w.u32(c.epochs);
  w.f32(c.learning_rate);
  w.u64(c.seed);
  w.u32(c.min_tree_freq);
  w.str(model.training_metadata);
  return w.take();
}

std::string encode_trees(const TreeInventory& inventory) {
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(inventory.size()));
  for (std::uint32_t id = 0; id < inventory.size(); ++id) {
    w.u64(inventory.freq(id));
    write_tree(w, inventory.tree(id));
  }
  return w.take();
}

std::string encode_lookup(const LookupTable& table) {
  ByteWriter w;
  const auto entries = table.sorted_entries();
  w.u32(static_cast<std::uint32_t>(entries.size()));
  for (const auto* item : entries) {
    w.str(item->first.masked_form);
    w.str(item->first.upos);
    w.u32(static_cast<std::uint32_t>(item->first.feats.size()));
    for (const auto& [key, value] : item->first.feats) {
      w.str(key);
      w.str(value);
    }
    w.u32(item->second.tree_id);
    w.u64(item->second.count);
    w.u64(item->second.total);
  }
  return w.take();
}

std::string encode_selector(const SelectorModel& selector) {
  ByteWriter w;
  const auto& labels = selector.label_tree_ids();
  const auto& features = selector.feature_ids();
  const auto& weights = selector.weights();
  w.u32(static_cast<std::uint32_t>(features.size()));  // rows
  w.u32(static_cast<std::uint32_t>(labels.size()));    // cols
  for (const std::uint32_t id : labels) w.u32(id);
  for (const std::uint32_t id : features) w.u32(id);
  for (const float v : weights) w.f32(v);
  return w.take();
}

struct Section {
  std::uint32_t tag;
  std::string payload;
};

}  // namespace

LemmatizerModel train(const Corpus& corpus, const SelectorConfig& config,
                      const RuleConfig& rules) {
  config.validate();
  if (corpus.token_count() == 0) {
    throw std::invalid_argument("train: empty corpus");
  }

  auto inventory = std::make_shared<TreeInventory>();
  for (std::size_t si = 0; si < corpus.sentences.size(); ++si) {
    const auto& sentence = corpus.sentences[si];
    for (std::size_t ti = 0; ti < sentence.tokens.size(); ++ti) {
      const Token& token = sentence.tokens[ti];
      if (!token.lemma.has_value() || token.lemma->empty()) {
        std::ostringstream msg;
        msg << "train: token " << (ti + 1) << " of sentence " << (si + 1)
            << " ('" << token.form << "') has no lemma";
        throw std::runtime_error(msg.str());
      }
      const auto [form, lemma] = case_normalize_training(
          token.form, *token.lemma, token.upos, token.is_sentence_initial);
      inventory->intern(build_edit_tree_utf8(form, lemma));
    }
  }

  LemmatizerModel model;
  model.inventory = inventory;
  // Selector first: its label space must see per-pair frequencies before
  // lookup training interns the digit-masked variants.
  model.selector = train_selector(corpus, inventory, config);
  model.lookup = train_lookup(corpus, *inventory);
  model.rules = rules;
  model.format_version = kFormatVersion;

  std::ostringstream meta;
  meta << "corpus=" << (corpus.source_name.empty() ? "?" : corpus.source_name)
       << " sentences=" << corpus.sentences.size()
       << " tokens=" << corpus.token_count() << " trees=" << inventory->size()
       << " labels=" << model.selector.label_tree_ids().size()
       << " lookup_entries=" << model.lookup.size() << " top_k=" << config.top_k
       << " feature_space=" << config.feature_space_size
       << " epochs=" << config.epochs << " lr=" << config.learning_rate
       << " seed=" << config.seed << " min_tree_freq=" << config.min_tree_freq
       << " rules=" << (rules.enable_casing ? "casing," : "")
       << (rules.enable_mark_strip ? "marks," : "")
       << (rules.enable_number_trim ? "numtrim" : "");
  model.training_metadata = meta.str();
  return model;
}

std::vector<std::string> lemmatize(const LemmatizerModel& model,
                                   const Sentence& sentence) {
  std::vector<std::string> lemmas;
  lemmas.reserve(sentence.tokens.size());
  for (std::size_t pos = 0; pos < sentence.tokens.size(); ++pos) {
    const Token& token = sentence.tokens[pos];
    std::string candidate;
    if (auto hit = lookup_apply(model.lookup, *model.inventory, token)) {
      candidate = std::move(*hit);
    } else {
      candidate = model.selector.lemmatize_statistical(sentence, pos);
    }
    lemmas.push_back(postprocess(token, candidate, model.rules));
  }
  return lemmas;
}

std::vector<std::vector<std::string>> lemmatize_corpus(
    const LemmatizerModel& model, const Corpus& corpus, unsigned threads) {
  std::vector<std::vector<std::string>> out(corpus.sentences.size());
  if (threads <= 1 || corpus.sentences.size() < 2) {
    for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
      out[i] = lemmatize(model, corpus.sentences[i]);
    }
    return out;
  }
  const unsigned n =
      std::min<unsigned>(threads, static_cast<unsigned>(corpus.sentences.size()));
  std::vector<std::thread> workers;
  workers.reserve(n);
  for (unsigned w = 0; w < n; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < corpus.sentences.size(); i += n) {
        out[i] = lemmatize(model, corpus.sentences[i]);
      }
    });
  }
  for (auto& worker : workers) worker.join();
  return out;
}

void save_model(const LemmatizerModel& model, std::ostream& out) {
  const Section sections[] = {
      {kMetaTag, encode_meta(model)},
      {kTreeTag, encode_trees(*model.inventory)},
      {kLookTag, encode_lookup(model.lookup)},
      {kSelwTag, encode_selector(model.selector)},
  };

  ByteWriter header;
  header.u32(kFormatVersion);
  header.u32(static_cast<std::uint32_t>(std::size(sections)));
  std::uint64_t offset = kArchiveMagic.size() + 4 + 4 +
                         std::size(sections) * (4 + 8 + 8 + 8);
  for (const Section& s : sections) {
    header.u32(s.tag);
    header.u64(offset);
    header.u64(s.payload.size());
    header.u64(fnv1a64(s.payload));
    offset += s.payload.size();
  }

  out.write(kArchiveMagic.data(),
            static_cast<std::streamsize>(kArchiveMagic.size()));
  const std::string head = header.take();
  out.write(head.data(), static_cast<std::streamsize>(head.size()));
  for (const Section& s : sections) {
    out.write(s.payload.data(), static_cast<std::streamsize>(s.payload.size()));
  }
  if (!out) throw std::runtime_error("save_model: write failed");
}

LemmatizerModel load_model(std::istream& in) {
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());

  if (data.size() < kArchiveMagic.size() + 8 ||
      std::string_view(data).substr(0, kArchiveMagic.size()) != kArchiveMagic) {
    throw ModelFormatError(ArchiveError::bad_magic,
                           "model archive: bad magic bytes");
  }
  ByteReader head(std::string_view(data).substr(kArchiveMagic.size()));
  const std::uint32_t version = head.u32();
  if (version != kFormatVersion) {
    throw ModelFormatError(ArchiveError::bad_version,
                           "model archive: unsupported format version " +
                               std::to_string(version));
  }
  const std::uint32_t section_count = head.u32();
  struct Entry {
    std::uint32_t tag;
    std::uint64_t offset, size, checksum;
  };
  std::vector<Entry> entries;
  entries.reserve(section_count);
  for (std::uint32_t i = 0; i < section_count; ++i) {
    Entry e;
    e.tag = head.u32();
    e.offset = head.u64();
    e.size = head.u64();
    e.checksum = head.u64();
    entries.push_back(e);
  }

  auto section = [&](std::uint32_t tag) -> std::string_view {
    for (const Entry& e : entries) {
      if (e.tag != tag) continue;
      if (e.offset + e.size > data.size()) {
        throw ModelFormatError(ArchiveError::truncated,
                               "model archive: section exceeds file size");
      }
      const auto payload = std::string_view(data).substr(e.offset, e.size);
      if (fnv1a64(payload) != e.checksum) {
        throw ModelFormatError(ArchiveError::checksum_mismatch,
                               "model archive: section checksum mismatch");
      }
      return payload;
    }
    throw ModelFormatError(ArchiveError::missing_section,
                           "model archive: missing required section");
  };

  LemmatizerModel model;
  model.format_version = version;

  SelectorConfig config;
  {
    ByteReader r(section(kMetaTag));
    model.rules.enable_casing = r.u8() != 0;
    model.rules.enable_mark_strip = r.u8() != 0;
    model.rules.enable_number_trim = r.u8() != 0;
    config.top_k = r.u32();
    config.feature_space_size = r.u32();
    config.epochs = r.u32();
    config.learning_rate = r.f32();
    config.seed = r.u64();
    config.min_tree_freq = r.u32();
    model.training_metadata = r.str();
  }

  auto inventory = std::make_shared<TreeInventory>();
  {
    ByteReader r(section(kTreeTag));
    const std::uint32_t count = r.u32();
    for (std::uint32_t i = 0; i < count; ++i) {
      const std::uint64_t freq = r.u64();
      const EditTreePtr tree = read_tree(r);
      if (inventory->intern(tree, freq) != i) {
        throw ModelFormatError(ArchiveError::truncated,
                               "model archive: duplicate edit tree entry");
      }
    }
  }
  model.inventory = inventory;

  {
    ByteReader r(section(kLookTag));
    const std::uint32_t count = r.u32();
    for (std::uint32_t i = 0; i < count; ++i) {
      LookupKey key;
      key.masked_form = r.str();
      key.upos = r.str();
      const std::uint32_t nfeats = r.u32();
      key.feats.reserve(nfeats);
      for (std::uint32_t f = 0; f < nfeats; ++f) {
        std::string fk = r.str();
        std::string fv = r.str();
        key.feats.emplace_back(std::move(fk), std::move(fv));
      }
      LookupEntry entry;
      entry.tree_id = r.u32();
      entry.count = r.u64();
      entry.total = r.u64();
      if (entry.tree_id >= inventory->size()) {
        throw ModelFormatError(ArchiveError::truncated,
                               "model archive: lookup entry tree id out of range");
      }
      model.lookup.insert(std::move(key), entry);
    }
  }

  {
    ByteReader r(section(kSelwTag));
    const std::uint32_t rows = r.u32();
    const std::uint32_t cols = r.u32();
    std::vector<std::uint32_t> labels(cols);
    for (auto& id : labels) {
      id = r.u32();
      if (id >= inventory->size()) {
        throw ModelFormatError(ArchiveError::truncated,
                               "model archive: selector label out of range");
      }
    }
    std::vector<std::uint32_t> features(rows);
    for (auto& id : features) id = r.u32();
    std::vector<float> weights(static_cast<std::size_t>(rows) * cols);
    for (auto& v : weights) v = r.f32();
    model.selector = SelectorModel(config, inventory, std::move(labels),
                                   std::move(features), std::move(weights));
  }

  return model;
}

void save_model_file(const LemmatizerModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open model file for write: " + path);
  save_model(model, out);
}

LemmatizerModel load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  return load_model(in);
}

}  // namespace hunlemma
