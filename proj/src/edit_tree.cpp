#include "hunlemma/edit_tree.hpp"

#include <stdexcept>

#include "hunlemma/unicode.hpp"

namespace hunlemma {

namespace {

// Unambiguous structural encoding used as the interning key.
void canonical_key(const EditTree& tree, std::string& out) {
  if (tree.is_replace()) {
    const auto& r = tree.as_replace();
    const std::string source = encode_utf8(r.source);
    const std::string target = encode_utf8(r.target);
    out.push_back('R');
    out += std::to_string(source.size());
    out.push_back(':');
    out += source;
    out += std::to_string(target.size());
    out.push_back(':');
    out += target;
  } else {
    const auto& m = tree.as_match();
    out.push_back('M');
    out += std::to_string(m.prefix_len);
    out.push_back(',');
    out += std::to_string(m.suffix_len);
    out.push_back(';');
    canonical_key(*m.left, out);
    canonical_key(*m.right, out);
  }
}

EditTreePtr build_any(std::u32string_view form, std::u32string_view lemma) {
  const auto segment = longest_common_substring(form, lemma);
  if (!segment.has_value()) {
    return std::make_shared<EditTree>(EditTree::ReplaceNode{
        std::u32string(form), std::u32string(lemma)});
  }
  EditTree::MatchNode node;
  node.prefix_len = segment->start_a;
  node.suffix_len = form.size() - (segment->start_a + segment->length);
  node.left = build_any(form.substr(0, segment->start_a),
                        lemma.substr(0, segment->start_b));
  node.right = build_any(form.substr(segment->start_a + segment->length),
                         lemma.substr(segment->start_b + segment->length));
  return std::make_shared<EditTree>(std::move(node));
}

void quote_utf8(const std::u32string& text, std::string& out) {
  out.push_back('"');
  for (const char c : encode_utf8(text)) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
}

void dump(const EditTree& tree, std::string& out) {
  if (tree.is_replace()) {
    const auto& r = tree.as_replace();
    out += "Replace{";
    quote_utf8(r.source, out);
    out.push_back(',');
    quote_utf8(r.target, out);
    out.push_back('}');
  } else {
    const auto& m = tree.as_match();
    out += "Match{";
    out += std::to_string(m.prefix_len);
    out.push_back(',');
    out += std::to_string(m.suffix_len);
    out.push_back(',');
    dump(*m.left, out);
    out.push_back(',');
    dump(*m.right, out);
    out.push_back('}');
  }
}

}  // namespace

bool edit_trees_equal(const EditTree& a, const EditTree& b) {
  if (a.is_replace() != b.is_replace()) return false;
  if (a.is_replace()) {
    return a.as_replace().source == b.as_replace().source &&
           a.as_replace().target == b.as_replace().target;
  }
  const auto& ma = a.as_match();
  const auto& mb = b.as_match();
  return ma.prefix_len == mb.prefix_len && ma.suffix_len == mb.suffix_len &&
         edit_trees_equal(*ma.left, *mb.left) &&
         edit_trees_equal(*ma.right, *mb.right);
}

std::optional<LcsResult> longest_common_substring(std::u32string_view a,
                                                  std::u32string_view b) {
  if (a.empty() || b.empty()) return std::nullopt;
  // lengths[j] = length of the common suffix of a[..i) and b[..j).
  std::vector<std::size_t> lengths(b.size() + 1, 0);
  LcsResult best;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = 0;  // lengths[j-1] from the previous row
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = lengths[j];
      if (a[i - 1] == b[j - 1]) {
        const std::size_t len = diagonal + 1;
        lengths[j] = len;
        // Scanning i then j ascending visits equal-length candidates in
        // (start_a, start_b) order, so a strict improvement check realizes
        // the smallest-start tie-break.
        if (len > best.length) {
          best.length = len;
          best.start_a = i - len;
          best.start_b = j - len;
        }
      } else {
        lengths[j] = 0;
      }
      diagonal = above;
    }
  }
  if (best.length == 0) return std::nullopt;
  return best;
}

EditTreePtr build_edit_tree(std::u32string_view form, std::u32string_view lemma) {
  if (form.empty()) throw std::invalid_argument("edit tree: empty form");
  if (lemma.empty()) throw std::invalid_argument("edit tree: empty lemma");
  return build_any(form, lemma);
}

std::optional<std::u32string> apply_edit_tree(const EditTree& tree,
                                              std::u32string_view form) {
  if (tree.is_replace()) {
    const auto& r = tree.as_replace();
    if (form != r.source) return std::nullopt;
    return std::u32string(r.target);
  }
  const auto& m = tree.as_match();
  if (form.size() < m.prefix_len + m.suffix_len) return std::nullopt;
  const auto prefix = form.substr(0, m.prefix_len);
  const auto middle = form.substr(m.prefix_len,
                                  form.size() - m.prefix_len - m.suffix_len);
  const auto suffix = form.substr(form.size() - m.suffix_len);
  const auto left = apply_edit_tree(*m.left, prefix);
  if (!left.has_value()) return std::nullopt;
  const auto right = apply_edit_tree(*m.right, suffix);
  if (!right.has_value()) return std::nullopt;
  std::u32string out;
  out.reserve(left->size() + middle.size() + right->size());
  out += *left;
  out += middle;
  out += *right;
  return out;
}

EditTreePtr build_edit_tree_utf8(std::string_view form, std::string_view lemma) {
  return build_edit_tree(decode_utf8(form), decode_utf8(lemma));
}

std::optional<std::string> apply_edit_tree_utf8(const EditTree& tree,
                                                std::string_view form) {
  const auto result = apply_edit_tree(tree, decode_utf8(form));
  if (!result.has_value()) return std::nullopt;
  return encode_utf8(*result);
}

std::string dump_edit_tree(const EditTree& tree) {
  std::string out;
  dump(tree, out);
  return out;
}

std::uint32_t TreeInventory::intern(const EditTreePtr& tree,
                                    std::uint64_t count) {
  std::string key;
  canonical_key(*tree, key);
  const auto it = index_.find(key);
  if (it != index_.end()) {
    freq_[it->second] += count;
    return it->second;
  }
  const auto id = static_cast<std::uint32_t>(trees_.size());
  trees_.push_back(tree);
  freq_.push_back(count);
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<std::uint32_t> TreeInventory::find(const EditTree& tree) const {
  std::string key;
  canonical_key(tree, key);
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace hunlemma
