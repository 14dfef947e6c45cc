#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <boost/rational.hpp>

#include "arithmetree/name.hpp"

namespace atree {

using Rational = boost::rational<long long>;

std::string rational_str(const Rational& q);
// boost 1.74 recurses on rational == int under C++20 rewritten comparisons
inline bool is_zero(const Rational& q) { return q.numerator() == 0; }

// Finite formal sum over a basis with exact rational coefficients; zeros are never stored.
template <class Key>
class Combination {
 public:
  using Map = std::map<Key, Rational>;

  Combination() = default;
  explicit Combination(const Key& k, Rational c = 1) { add(k, c); }

  void add(const Key& k, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh && is_zero(it->second += c)) terms_.erase(it);
  }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Combination& operator+=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Rational& s, const Combination& a) {
    Combination out;
    for (const auto& [k, c] : a.terms_) out.add(k, s * c);
    return out;
  }
  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Map terms_;
};

using LinComb = Combination<Name>;  // the unit name stands for 1 = X^(0)
using TensorComb = Combination<std::pair<Name, Name>>;

// text forms: "c*t + ..." with tree literals; a coefficient of 1 is omitted
std::string to_text(const LinComb& x);
std::string to_text(const TensorComb& x);

// "t", "2*t - 1/2*s + ...", terms tree or name literals; "1" is the unit
LinComb parse_lincomb(std::string_view text);

}  // namespace atree
