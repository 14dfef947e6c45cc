#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace atree {

// Planar rooted tree; a Node has at least two children.
class Tree {
 public:
  Tree() = default;  // the leaf

  bool is_leaf() const { return kids_.empty(); }
  const std::vector<Tree>& children() const { return kids_; }
  int leaves() const;
  int degree() const { return leaves() - 1; }

  // canonical literal: "o" | "(" tree tree+ ")"
  std::string str() const;
  static Tree parse(std::string_view text);

  friend bool operator==(const Tree&, const Tree&) = default;
  // lexicographic on the canonical literal
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);

 private:
  std::vector<Tree> kids_;
  void write(std::string& out) const;
  friend Tree graft(std::vector<Tree> children);
};

Tree graft(std::vector<Tree> children);
Tree corolla(int p);  // p+1 leaves; corolla(0) is the leaf
Tree involution(const Tree& t);
Tree graft_on_leaf(const Tree& t, int i, const Tree& host);

inline constexpr int kDefaultEnumerationCap = 10;

// All of T_n in literal order. Results are cached per degree.
const std::vector<Tree>& trees_of_degree(int n, int cap = kDefaultEnumerationCap);
std::vector<Tree> enumerate_trees(int n, int cap = kDefaultEnumerationCap);

std::uint64_t super_catalan(int n);
// The displayed recurrence with the composition indexed by the product's factors.
std::uint64_t recurrence_value(int n);
// Same sum read literally, with i_j a free slack index.
std::uint64_t recurrence_value_literal(int n);
bool recurrence_check(int n);

std::uint64_t invariant_count(int n);

}  // namespace atree
