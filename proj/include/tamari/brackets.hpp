#pragma once

// Bracketed words, full binary trees with leaves x_0..x_n, and the transfer
// to bracketing functions through the right bracketing (every (AB) rewritten
// as A(B)).

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamari/bracketing_fn.hpp"

namespace tamari {

/// Full binary tree stored as a node arena. Leaves carry their index; the
/// root is the last node.
class BinaryTree {
 public:
  struct Node {
    int leaf = -1;  // >= 0 for leaves
    int left = -1;
    int right = -1;

    bool is_leaf() const { return leaf >= 0; }
    friend bool operator==(const Node&, const Node&) = default;
  };

  static BinaryTree leaf(int index) {
    BinaryTree t;
    t.nodes_.push_back({index, -1, -1});
    return t;
  }

  static BinaryTree node(const BinaryTree& left, const BinaryTree& right) {
    BinaryTree t;
    t.nodes_.reserve(left.nodes_.size() + right.nodes_.size() + 1);
    t.nodes_ = left.nodes_;
    const int shift = static_cast<int>(t.nodes_.size());
    for (Node n : right.nodes_) {
      if (!n.is_leaf()) {
        n.left += shift;
        n.right += shift;
      }
      t.nodes_.push_back(n);
    }
    t.nodes_.push_back({-1, shift - 1, static_cast<int>(t.nodes_.size()) - 1});
    return t;
  }

  int root() const { return static_cast<int>(nodes_.size()) - 1; }
  const Node& at(int id) const { return nodes_[id]; }

  std::size_t leaf_count() const { return (nodes_.size() + 1) / 2; }

  /// Leaf indices in left-to-right order.
  std::vector<int> leaves() const {
    std::vector<int> out;
    collect(root(), out);
    return out;
  }

  /// Trees compare structurally (same shape, same leaf labels).
  friend bool operator==(const BinaryTree& x, const BinaryTree& y) {
    return equal(x, x.root(), y, y.root());
  }

 private:
  BinaryTree() = default;

  void collect(int id, std::vector<int>& out) const {
    const Node& n = nodes_[id];
    if (n.is_leaf()) {
      out.push_back(n.leaf);
      return;
    }
    collect(n.left, out);
    collect(n.right, out);
  }

  static bool equal(const BinaryTree& x, int i, const BinaryTree& y, int j) {
    const Node& a = x.nodes_[i];
    const Node& b = y.nodes_[j];
    if (a.is_leaf() || b.is_leaf()) return a.leaf == b.leaf;
    return equal(x, a.left, y, b.left) && equal(x, a.right, y, b.right);
  }

  std::vector<Node> nodes_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Letters `a`..`z` stand for x_0..x_25; tokens `xK` for any x_K.
enum class LetterStyle { Auto, Alpha, Indexed };

namespace detail {

inline std::string letter(int index, LetterStyle style) {
  if (style == LetterStyle::Alpha) {
    if (index > 25) throw std::invalid_argument("letter index " + std::to_string(index) + " beyond z");
    return std::string(1, static_cast<char>('a' + index));
  }
  return "x" + std::to_string(index);
}

inline LetterStyle resolve(LetterStyle style, std::size_t leaves) {
  if (style != LetterStyle::Auto) return style;
  return leaves <= 26 ? LetterStyle::Alpha : LetterStyle::Indexed;
}

// word   := letter | '(' word word ')'
// letter := [a-z] | 'x' digits
class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  BinaryTree parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty input", pos_);
    const std::size_t start = pos_;
    BinaryTree t = word();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced parentheses: unexpected ')'", pos_);
      throw ParseError("trailing input after complete word", pos_);
    }
    if (t.leaf_count() > 1 && text_[start] != '(')
      throw ParseError("missing outermost parentheses", start);
    return t;
  }

 private:
  BinaryTree word() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unbalanced parentheses: unexpected end of input", pos_);
    if (text_[pos_] == '(') {
      const std::size_t open = pos_++;
      BinaryTree left = word();
      skip_space();
      if (peek_close()) throw ParseError("non-binary node: bracket holds a single word", pos_);
      BinaryTree right = word();
      skip_space();
      if (pos_ == text_.size())
        throw ParseError("unbalanced parentheses: '(' at offset " + std::to_string(open) + " never closed", pos_);
      if (text_[pos_] != ')') throw ParseError("non-binary node: bracket holds more than two words", pos_);
      ++pos_;
      return BinaryTree::node(left, right);
    }
    if (text_[pos_] == ')') throw ParseError("unbalanced parentheses: unexpected ')'", pos_);
    return BinaryTree::leaf(letter());
  }

  int letter() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    int index = -1;
    if (c == 'x' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      index = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        index = index * 10 + (text_[pos_++] - '0');
        if (index > 1'000'000) throw ParseError("letter index too large", start);
      }
    } else if (c >= 'a' && c <= 'z') {
      ++pos_;
      index = c - 'a';
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    if (index != next_letter_) {
      if (index < next_letter_) throw ParseError("repeated or out-of-order letter", start);
      throw ParseError("letters must be consecutive from x0; expected x" + std::to_string(next_letter_),
                       start);
    }
    ++next_letter_;
    return index;
  }

  bool peek_close() const { return pos_ < text_.size() && text_[pos_] == ')'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int next_letter_ = 0;
};

}  // namespace detail

/// Parses a fully parenthesised binary bracketing such as "((a((bc)d))e)"
/// or "((x0x1)(x2x3))". Throws ParseError.
inline BinaryTree parse_word(std::string_view text) { return detail::WordParser(text).parse(); }

/// Canonical bracketed word; `Auto` emits a-z for up to 26 leaves.
inline std::string to_word(const BinaryTree& t, LetterStyle style = LetterStyle::Auto) {
  style = detail::resolve(style, t.leaf_count());
  auto rec = [&](auto&& self, int id) -> std::string {
    const auto& node = t.at(id);
    if (node.is_leaf()) return detail::letter(node.leaf, style);
    return "(" + self(self, node.left) + self(self, node.right) + ")";
  };
  return rec(rec, t.root());
}

/// R(leaf) = letter, R(node(U,V)) = R(U) "(" R(V) ")".
inline std::string right_bracketing(const BinaryTree& t, LetterStyle style = LetterStyle::Auto) {
  style = detail::resolve(style, t.leaf_count());
  auto rec = [&](auto&& self, int id) -> std::string {
    const auto& node = t.at(id);
    if (node.is_leaf()) return detail::letter(node.leaf, style);
    return self(self, node.left) + "(" + self(self, node.right) + ")";
  };
  return rec(rec, t.root());
}

/// Debug rendering: node(leaf 0, node(leaf 1, leaf 2)).
inline std::string to_structure(const BinaryTree& t) {
  auto rec = [&](auto&& self, int id) -> std::string {
    const auto& node = t.at(id);
    if (node.is_leaf()) return "leaf " + std::to_string(node.leaf);
    return "node(" + self(self, node.left) + ", " + self(self, node.right) + ")";
  };
  return rec(rec, t.root());
}

/// In the right bracketing, the opening bracket of x_i wraps the whole right
/// subtree starting at x_i, so E(i) is the last leaf of that subtree.
inline BracketingFn to_bracketing_fn(const BinaryTree& t) {
  const int n = static_cast<int>(t.leaf_count()) - 1;
  if (n < 1) throw std::invalid_argument("a bracketing function needs at least two leaves");
  const std::vector<int> order = t.leaves();
  for (int i = 0; i <= n; ++i)
    if (order[i] != i) throw std::invalid_argument("tree leaves must be labelled 0..n left to right");
  std::vector<int> e(n, 0);
  // Returns the leaf span [first, last] of the subtree.
  auto rec = [&](auto&& self, int id) -> std::pair<int, int> {
    const auto& node = t.at(id);
    if (node.is_leaf()) return {node.leaf, node.leaf};
    const auto [lfirst, llast] = self(self, node.left);
    const auto [rfirst, rlast] = self(self, node.right);
    e[rfirst - 1] = rlast;
    return {lfirst, rlast};
  };
  rec(rec, t.root());
  return BracketingFn(std::move(e));
}

/// Inverse of to_bracketing_fn. The subtree on leaves [lo, hi] splits before
/// the smallest m in (lo, hi] with E(m) = hi: that m opens the right child.
inline BinaryTree from_bracketing_fn(const BracketingFn& e) {
  auto rec = [&](auto&& self, int lo, int hi) -> BinaryTree {
    if (lo == hi) return BinaryTree::leaf(lo);
    int split = lo + 1;
    while (e(split) != hi) ++split;
    return BinaryTree::node(self(self, lo, split - 1), self(self, split, hi));
  };
  return rec(rec, 0, e.n());
}

}  // namespace tamari
