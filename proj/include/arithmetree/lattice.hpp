#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "arithmetree/name.hpp"

namespace atree {

const std::vector<Name>& names_of_degree(int n);

inline constexpr int kPosetCap = 6;

// T_n with the coordinatewise order, built by brute force.
class Poset {
 public:
  static const Poset& of_degree(int n);

  int degree() const { return n_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<Name>& names() const { return names_; }
  const Name& name(int i) const { return names_[i]; }
  int index(const Name& v) const;  // throws InvalidName

  bool le(int i, int j) const { return up_[i][j]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // least upper bound by exhaustion; throws if it does not exist
  int join(int i, int j) const;
  int meet(int i, int j) const;
  std::vector<int> upper_covers(int i) const;
  std::vector<int> lower_covers(int i) const;
  int moebius(int i) const;  // mu(bottom, i)
  int height(int i) const;   // longest chain from the bottom

 private:
  explicit Poset(int n);
  int n_;
  std::vector<Name> names_;
  std::map<Name, int> index_;
  std::vector<boost::dynamic_bitset<>> up_, down_;
  std::vector<int> down_count_;
  std::vector<int> mu_, height_;
  int bottom_ = 0, top_ = 0;
};

Name join(const Name& v, const Name& w);  // closed form
Name meet(const Name& v, const Name& w);  // closed form
Name join_brute(const Name& v, const Name& w);
Name meet_brute(const Name& v, const Name& w);

std::set<Name> covers(const Name& v);
std::set<Name> moves(const Name& v);
std::set<Name> moves_closure(const Name& v);  // reflexive-transitive
std::set<Name> up_set(const Name& v);

enum class MoebiusMode { Closed, Brute };
int moebius(const Name& v, MoebiusMode mode);

std::vector<Name> atoms(int n);

bool is_left_modular(const Poset& p, int x);
std::vector<Name> left_modular_chain(int n);

struct CharPoly {
  std::map<int, int> roots;  // a -> multiplicity of (x - a)
  std::string str() const;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};
CharPoly characteristic_polynomial(int n);
std::vector<int> atom_levels(const std::vector<Name>& chain);  // |A_i| along the chain
bool level_condition(const std::vector<Name>& chain);

std::string hasse_dot(int n);

}  // namespace atree
