#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "arithmetree/tree.hpp"

namespace atree {

// One coordinate of a name, a polynomial in h^-1:
//   OPEN(j)  = j
//   BARE(j)  = (j-1) + j h^-1
//   CLOSE(e) = e[0] + h^-e[0] + h^-e[1] + ...
struct Coordinate {
  enum class Kind { Open, Bare, Close };

  Kind kind = Kind::Open;
  int pos = 1;            // Open, Bare
  std::vector<int> exps;  // Close, strictly ascending

  static Coordinate open(int j);
  static Coordinate bare(int j);
  static Coordinate close(std::vector<int> e);

  // constant term first, then coefficients of h^-1, h^-2, ...
  int coefficient(int k) const;
  int length() const;  // number of coefficients before the zero tail
  std::vector<int> coefficients() const;

  std::string str() const;
  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

// The trivial order on coordinates: lexicographic on coefficient sequences.
std::strong_ordering compare(const Coordinate& a, const Coordinate& b);

class Name {
 public:
  Name() = default;  // the unit (0), name of the leaf
  explicit Name(std::vector<Coordinate> coords);

  bool is_unit() const { return c_.empty(); }
  int degree() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }
  // coordinate count; the unit counts as one leaf
  int size() const { return c_.empty() ? 1 : static_cast<int>(c_.size()); }
  const std::vector<Coordinate>& coords() const { return c_; }
  const Coordinate& operator[](int i) const { return c_[i]; }  // 0-based

  std::string str() const;
  static Name parse(std::string_view text);

  friend bool operator==(const Name&, const Name&) = default;
  // total order for containers (degree, then coordinates); not the lattice order
  friend std::strong_ordering operator<=>(const Name& a, const Name& b);

 private:
  std::vector<Coordinate> c_;
};

Name encode_name(const Tree& t);
// a tree literal, or a name literal (anything containing a digit), validated
Name parse_literal(std::string_view text);
Tree decode_name(const Name& v);  // throws InvalidName unless v is an exact name
void validate(const Name& v);

// coordinatewise order; throws DegreeMismatch across degrees
bool leq_name(const Name& v, const Name& w);
bool less_name(const Name& v, const Name& w);
// lexicographic over coordinates, each compared by the trivial order; a linear extension
bool name_literal_less(const Name& v, const Name& w);

enum class ShiftMode { Box, Tri };
Coordinate shift(int k, const Coordinate& c, ShiftMode mode);

Name graft_names(const std::vector<Name>& parts);
Name over(const Name& v, const Name& w);   // decode v on the first leaf of decode w
Name under(const Name& v, const Name& w);  // decode w on the last leaf of decode v
Name involute_name(const Name& v);
std::vector<int> project_binary(const Name& v);

// root children of decode(v), as names
std::vector<Name> name_children(const Name& v);

}  // namespace atree
