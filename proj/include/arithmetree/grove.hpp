#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "arithmetree/trialgebra.hpp"

namespace atree {

// Duplicate-free set of names of one degree. The empty grove absorbs everything.
class Grove {
 public:
  Grove() = default;  // the empty grove
  explicit Grove(std::set<Name> members);
  static Grove single(const Name& v) { return Grove({v}); }
  static Grove unit() { return Grove({Name{}}); }

  bool empty() const { return m_.empty(); }
  bool is_unit() const { return m_.size() == 1 && m_.begin()->is_unit(); }
  int degree() const;  // -1 for the empty grove
  const std::set<Name>& members() const { return m_; }
  std::size_t size() const { return m_.size(); }

  // tree literals in canonical (name literal) order joined by " ∪ ", or " u " in ascii mode
  std::string str(bool ascii = false) const;
  // tree or name literals separated by "∪", "u", "|" or ","
  static Grove parse(std::string_view text);

  friend bool operator==(const Grove&, const Grove&) = default;

 private:
  std::set<Name> m_;
};

enum class GroveOp { Left, Right, Mid };  // dashv, vdash, perp

Grove dend_add(const Grove& a, const Grove& b);
Grove grove_op(GroveOp op, const Grove& a, const Grove& b);
Grove total_grove(int n);
Grove involute(const Grove& g);

std::pair<Name, Name> decompose_pair(const Name& w, int n, int m);
std::pair<Name, Name> decompose_pair_brute(const Name& w, int n, int m);

Grove dend_mul(const Grove& a, const Grove& b);
OpTriple<Grove> grove_ops();

}  // namespace atree
