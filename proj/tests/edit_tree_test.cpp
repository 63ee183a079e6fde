#include "doctest.h"

#include <random>
#include <string>

#include "hunlemma/edit_tree.hpp"
#include "hunlemma/unicode.hpp"

using namespace hunlemma;

namespace {

// Quadratic reference implementation with the same tie-break.
std::optional<LcsResult> lcs_brute_force(std::u32string_view a,
                                         std::u32string_view b) {
  LcsResult best;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t len = 0;
      while (i + len < a.size() && j + len < b.size() &&
             a[i + len] == b[j + len]) {
        ++len;
      }
      if (len > best.length) best = {i, j, len};
    }
  }
  if (best.length == 0) return std::nullopt;
  return best;
}

const char32_t kAlphabet[] = {U'a', U'b', U'e', U'g', U'h', U'k', U'l',
                              U'm', U'n', U'o', U's', U't', U'z', U'á',
                              U'é', U'í', U'ó', U'ö', U'ő', U'ú', U'ü',
                              U'ű', U'0', U'1', U'9'};

std::u32string random_word(std::mt19937_64& rng, std::size_t min_len,
                           std::size_t max_len) {
  const std::size_t len = min_len + rng() % (max_len - min_len + 1);
  std::u32string word;
  word.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    word.push_back(kAlphabet[rng() % std::size(kAlphabet)]);
  }
  return word;
}

}  // namespace

TEST_CASE("longest common substring on the worked example") {
  const auto r = longest_common_substring(U"leghosszabb", U"hosszú");
  REQUIRE(r.has_value());
  CHECK(r->start_a == 3);
  CHECK(r->start_b == 0);
  CHECK(r->length == 5);
}

TEST_CASE("longest common substring tie-breaks and edges") {
  SUBCASE("no common character") {
    CHECK_FALSE(longest_common_substring(U"abc", U"xyz").has_value());
    CHECK_FALSE(longest_common_substring(U"", U"abc").has_value());
    CHECK_FALSE(longest_common_substring(U"abc", U"").has_value());
  }
  SUBCASE("earliest start in the first string wins ties") {
    const auto r = longest_common_substring(U"abxab", U"ab");
    REQUIRE(r.has_value());
    CHECK(r->start_a == 0);
    CHECK(r->start_b == 0);
    CHECK(r->length == 2);
  }
  SUBCASE("then earliest start in the second string") {
    const auto r = longest_common_substring(U"ab", U"xabyab");
    REQUIRE(r.has_value());
    CHECK(r->start_a == 0);
    CHECK(r->start_b == 1);
    CHECK(r->length == 2);
  }
  SUBCASE("contiguity: substring, not subsequence") {
    // A subsequence matcher would find "ab" here; the substring is length 1.
    const auto r = longest_common_substring(U"axb", U"ab");
    REQUIRE(r.has_value());
    CHECK(r->length == 1);
    CHECK(r->start_a == 0);
    CHECK(r->start_b == 0);
  }
}

TEST_CASE("longest common substring agrees with brute force") {
  std::mt19937_64 rng(1234);
  for (int round = 0; round < 3000; ++round) {
    const std::u32string a = random_word(rng, 1, 12);
    const std::u32string b = random_word(rng, 1, 12);
    const auto fast = longest_common_substring(a, b);
    const auto slow = lcs_brute_force(a, b);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast.has_value()) {
      CHECK(fast->start_a == slow->start_a);
      CHECK(fast->start_b == slow->start_b);
      CHECK(fast->length == slow->length);
    }
  }
}

TEST_CASE("build on the worked example produces the exact tree") {
  const EditTreePtr tree = build_edit_tree(U"leghosszabb", U"hosszú");
  REQUIRE_FALSE(tree->is_replace());
  const auto& m = tree->as_match();
  CHECK(m.prefix_len == 3);
  CHECK(m.suffix_len == 3);
  REQUIRE(m.left->is_replace());
  CHECK(m.left->as_replace().source == U"leg");
  CHECK(m.left->as_replace().target == U"");
  REQUIRE(m.right->is_replace());
  CHECK(m.right->as_replace().source == U"abb");
  CHECK(m.right->as_replace().target == U"ú");
  CHECK(dump_edit_tree(*tree) ==
        "Match{3,3,Replace{\"leg\",\"\"},Replace{\"abb\",\"ú\"}}");
}

TEST_CASE("worked-example tree applied elsewhere") {
  const EditTreePtr tree = build_edit_tree(U"leghosszabb", U"hosszú");
  const auto vad = apply_edit_tree(*tree, U"legvadabb");
  REQUIRE(vad.has_value());
  CHECK(*vad == U"vadú");
  CHECK_FALSE(apply_edit_tree(*tree, U"alma").has_value());
  CHECK_FALSE(apply_edit_tree(*tree, U"xxxhosszabb").has_value());
}

TEST_CASE("hand-derived tree shapes") {
  SUBCASE("suffix swap") {
    CHECK(dump_edit_tree(*build_edit_tree(U"ment", U"megy")) ==
          "Match{0,2,Replace{\"\",\"\"},Replace{\"nt\",\"gy\"}}");
  }
  SUBCASE("identity word") {
    CHECK(dump_edit_tree(*build_edit_tree(U"alma", U"alma")) ==
          "Match{0,0,Replace{\"\",\"\"},Replace{\"\",\"\"}}");
  }
  SUBCASE("plain suffix strip shares structure across stems") {
    const EditTreePtr a = build_edit_tree(U"házat", U"ház");
    const EditTreePtr b = build_edit_tree(U"falat", U"fal");
    CHECK(edit_trees_equal(*a, *b));
    CHECK(dump_edit_tree(*a) ==
          "Match{0,2,Replace{\"\",\"\"},Replace{\"at\",\"\"}}");
  }
  SUBCASE("disjoint strings collapse to a replace leaf") {
    const EditTreePtr tree = build_edit_tree(U"ő", U"a");
    REQUIRE(tree->is_replace());
    CHECK(tree->as_replace().source == U"ő");
    CHECK(tree->as_replace().target == U"a");
  }
}

TEST_CASE("build rejects empty inputs") {
  CHECK_THROWS_AS(build_edit_tree(U"", U"a"), std::invalid_argument);
  CHECK_THROWS_AS(build_edit_tree(U"a", U""), std::invalid_argument);
}

TEST_CASE("apply returns absent on inapplicable shapes") {
  const EditTreePtr strip = build_edit_tree(U"házat", U"ház");
  CHECK_FALSE(apply_edit_tree(*strip, U"xy").has_value());  // too short
  CHECK_FALSE(apply_edit_tree(*strip, U"házon").has_value());  // wrong suffix
  const EditTreePtr leaf = build_edit_tree(U"ő", U"a");
  CHECK_FALSE(apply_edit_tree(*leaf, U"b").has_value());
  CHECK(apply_edit_tree(*leaf, U"ő") == U"a");
}

TEST_CASE("apply can produce the empty string") {
  // "x" -> "" exists as a transformation; consumers treat it as a miss.
  EditTree::ReplaceNode node{U"x", U""};
  const EditTree tree(std::move(node));
  const auto out = apply_edit_tree(tree, U"x");
  REQUIRE(out.has_value());
  CHECK(out->empty());
}

TEST_CASE("roundtrip property over random pairs") {
  std::mt19937_64 rng(987654321);
  for (int round = 0; round < 4000; ++round) {
    const std::u32string form = random_word(rng, 1, 20);
    const std::u32string lemma = random_word(rng, 1, 20);
    const EditTreePtr tree = build_edit_tree(form, lemma);
    const auto back = apply_edit_tree(*tree, form);
    REQUIRE(back.has_value());
    CHECK(*back == lemma);
  }
}

TEST_CASE("roundtrip on related-word pairs") {
  std::mt19937_64 rng(5555);
  // lemma plus random affix edits, closer to real morphology
  for (int round = 0; round < 2000; ++round) {
    const std::u32string lemma = random_word(rng, 2, 10);
    std::u32string form = lemma;
    if (rng() % 2) form = random_word(rng, 0, 3) + form;
    form = form.substr(0, 2 + rng() % (form.size()));
    form += random_word(rng, 0, 4);
    if (form.empty()) form = U"x";
    const EditTreePtr tree = build_edit_tree(form, lemma);
    const auto back = apply_edit_tree(*tree, form);
    REQUIRE(back.has_value());
    CHECK(*back == lemma);
  }
}

TEST_CASE("utf8 wrappers count scalars") {
  const EditTreePtr tree = build_edit_tree_utf8("leghosszabb", "hosszú");
  const auto out = apply_edit_tree_utf8(*tree, "legvadabb");
  REQUIRE(out.has_value());
  CHECK(*out == "vadú");
}

TEST_CASE("dump escapes quotes and backslashes") {
  EditTree::ReplaceNode node{U"a\"b", U"c\\d"};
  const EditTree tree(std::move(node));
  CHECK(dump_edit_tree(tree) == "Replace{\"a\\\"b\",\"c\\\\d\"}");
}

TEST_CASE("inventory interns structurally equal trees once") {
  TreeInventory inventory;
  const auto a = inventory.intern(build_edit_tree(U"házat", U"ház"));
  const auto b = inventory.intern(build_edit_tree(U"falat", U"fal"));
  const auto c = inventory.intern(build_edit_tree(U"ment", U"megy"));
  CHECK(a == b);
  CHECK(a != c);
  CHECK(inventory.size() == 2);
  CHECK(inventory.freq(a) == 2);
  CHECK(inventory.freq(c) == 1);
  CHECK(inventory.find(*build_edit_tree(U"nyakat", U"nyak")) == a);
  CHECK_FALSE(inventory.find(*build_edit_tree(U"alma", U"alma")).has_value());
  CHECK(edit_trees_equal(inventory.tree(a), *build_edit_tree(U"házat", U"ház")));
}

TEST_CASE("inventory counted intern accumulates frequency") {
  TreeInventory inventory;
  const auto id = inventory.intern(build_edit_tree(U"alma", U"alma"), 5);
  CHECK(inventory.freq(id) == 5);
  inventory.intern(build_edit_tree(U"körte", U"körte"), 2);
  CHECK(inventory.freq(id) == 7);
  CHECK(inventory.size() == 1);
}

TEST_CASE("inventory ids are dense and stable") {
  TreeInventory inventory;
  for (std::uint32_t i = 0; i < 10; ++i) {
    const auto id = inventory.intern(
        build_edit_tree(std::u32string(1, U'a' + i) + U"xt", U"q"));
    CHECK(id == i);
  }
  CHECK(inventory.size() == 10);
}
