#ifndef HUNLEMMA_EDIT_TREE_HPP
#define HUNLEMMA_EDIT_TREE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

// Edit trees transform an inflected form into its lemma. Interior match
// nodes split the form around the longest common substring with the lemma;
// leaf replace nodes substitute one literal segment for another. All
// lengths count Unicode scalar values.

namespace hunlemma {

class EditTree;
using EditTreePtr = std::shared_ptr<const EditTree>;

class EditTree {
 public:
  struct ReplaceNode {
    std::u32string source;  // segment expected in the form (may be empty)
    std::u32string target;  // replacement (may be empty)
  };

  struct MatchNode {
    std::size_t prefix_len = 0;  // form-side characters before the common segment
    std::size_t suffix_len = 0;  // form-side characters after it
    EditTreePtr left;            // transforms the form prefix
    EditTreePtr right;           // transforms the form suffix
  };

  explicit EditTree(ReplaceNode node) : node_(std::move(node)) {}
  explicit EditTree(MatchNode node) : node_(std::move(node)) {}

  bool is_replace() const { return std::holds_alternative<ReplaceNode>(node_); }
  const ReplaceNode& as_replace() const { return std::get<ReplaceNode>(node_); }
  const MatchNode& as_match() const { return std::get<MatchNode>(node_); }

 private:
  std::variant<ReplaceNode, MatchNode> node_;
};

bool edit_trees_equal(const EditTree& a, const EditTree& b);

struct LcsResult {
  std::size_t start_a = 0;
  std::size_t start_b = 0;
  std::size_t length = 0;
};

// Longest contiguous common segment; ties broken by smallest start_a, then
// smallest start_b. Absent when the inputs share no character.
std::optional<LcsResult> longest_common_substring(std::u32string_view a,
                                                  std::u32string_view b);

// Throws std::invalid_argument on an empty form or lemma.
EditTreePtr build_edit_tree(std::u32string_view form, std::u32string_view lemma);

// Absent when the tree does not apply to the form; never throws.
std::optional<std::u32string> apply_edit_tree(const EditTree& tree,
                                              std::u32string_view form);

// UTF-8 convenience wrappers.
EditTreePtr build_edit_tree_utf8(std::string_view form, std::string_view lemma);
std::optional<std::string> apply_edit_tree_utf8(const EditTree& tree,
                                                std::string_view form);

// Bracketed rendering, e.g. Match{3,3,Replace{"leg",""},Replace{"abb","ú"}}.
std::string dump_edit_tree(const EditTree& tree);

// Interning pool shared by the lookup table and the selector. Ids are dense,
// structurally equal trees receive the same id, and freq counts how many
// times a tree was interned.
class TreeInventory {
 public:
  std::uint32_t intern(const EditTreePtr& tree) { return intern(tree, 1); }
  std::uint32_t intern(const EditTreePtr& tree, std::uint64_t count);

  std::optional<std::uint32_t> find(const EditTree& tree) const;
  const EditTree& tree(std::uint32_t id) const { return *trees_.at(id); }
  EditTreePtr tree_ptr(std::uint32_t id) const { return trees_.at(id); }
  std::uint64_t freq(std::uint32_t id) const { return freq_.at(id); }
  std::size_t size() const { return trees_.size(); }

 private:
  std::vector<EditTreePtr> trees_;
  std::vector<std::uint64_t> freq_;
  std::unordered_map<std::string, std::uint32_t> index_;  // canonical key -> id
};

}  // namespace hunlemma

#endif
