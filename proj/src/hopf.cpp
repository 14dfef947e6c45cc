#include "arithmetree/hopf.hpp"

#include <mutex>

#include "arithmetree/errors.hpp"
#include "arithmetree/lattice.hpp"

namespace atree {

namespace {
std::mutex delta_mutex;
std::map<Name, TensorComb> delta_cache;
}  // namespace

const TensorComb& coproduct(const Name& v) {
  static const TensorComb one({Name{}, Name{}});
  if (v.is_unit()) return one;
  {
    std::lock_guard lock(delta_mutex);
    if (auto it = delta_cache.find(v); it != delta_cache.end()) return it->second;
  }
  // X^v (x) 1 + sum of (v_1(1) * ... * v_m(1)) (x) (v_1(2) v ... v v_m(2))
  const auto kids = name_children(v);
  std::vector<TensorComb> legs;
  for (const auto& k : kids) legs.push_back(coproduct(k));
  struct Partial {
    LinComb left;
    std::vector<Name> right;
    Rational c;
  };
  std::vector<Partial> acc{{LinComb(Name{}), {}, 1}};
  for (const auto& d : legs) {
    std::vector<Partial> next;
    for (const auto& p : acc)
      for (const auto& [pair, c] : d.terms()) {
        Partial q{star(p.left, LinComb(pair.first)), p.right, p.c * c};
        q.right.push_back(pair.second);
        next.push_back(std::move(q));
      }
    acc = std::move(next);
  }
  TensorComb out({v, Name{}});
  for (const auto& p : acc) {
    Name r = graft_names(p.right);
    for (const auto& [a, c] : p.left.terms()) out.add({a, r}, p.c * c);
  }
  std::lock_guard lock(delta_mutex);
  return delta_cache.emplace(v, std::move(out)).first->second;
}

TensorComb coproduct(const LinComb& x) {
  TensorComb out;
  for (const auto& [v, c] : x.terms()) out += c * coproduct(v);
  return out;
}

Rational counit(const LinComb& x) { return x.coefficient(Name{}); }

TensorComb tensor_op(Op op, const TensorComb& x, const TensorComb& y) {
  TensorComb out;
  for (const auto& [ab, c1] : x.terms())
    for (const auto& [ab2, c2] : y.terms()) {
      const auto& [a, b] = ab;
      const auto& [a2, b2] = ab2;
      if (b.is_unit() && b2.is_unit()) {
        for (const auto& u : tri_terms(op, a, a2)) out.add({u, Name{}}, c1 * c2);
        continue;
      }
      const auto& left = star_interval(a, a2);
      for (const auto& r : tri_terms(op, b, b2))
        for (const auto& l : left) out.add({l, r}, c1 * c2);
    }
  return out;
}

TripleComb coassoc_left(const Name& v) {
  TripleComb out;
  for (const auto& [ab, c] : coproduct(v).terms())
    for (const auto& [xy, d] : coproduct(ab.first).terms())
      out.add({xy.first, xy.second, ab.second}, c * d);
  return out;
}

TripleComb coassoc_right(const Name& v) {
  TripleComb out;
  for (const auto& [ab, c] : coproduct(v).terms())
    for (const auto& [xy, d] : coproduct(ab.second).terms())
      out.add({ab.first, xy.first, xy.second}, c * d);
  return out;
}

bool is_primitive(const LinComb& x) {
  TensorComb expect;
  for (const auto& [v, c] : x.terms()) {
    expect.add({v, Name{}}, c);
    expect.add({Name{}, v}, c);
  }
  return coproduct(x) == expect;
}

LinComb primitive_combination(const Name& v, int p, const std::vector<Rational>& lambda) {
  if (p < 1) throw PreconditionError("p must be >= 1");
  if (lambda.size() != static_cast<std::size_t>(2 * p))
    throw PreconditionError("need " + std::to_string(2 * p) + " coefficients");
  Rational s = 0;
  for (const auto& l : lambda) s += l;
  if (!is_zero(s)) throw PreconditionError("coefficients must sum to zero");
  if (v.is_unit() || !is_primitive(LinComb(v)))
    throw PreconditionError(v.str() + " is not primitive");
  const Tree host = corolla(2 * p - 1);
  const Tree t = decode_name(v);
  LinComb out;
  for (int i = 1; i <= 2 * p; ++i) out.add(encode_name(graft_on_leaf(t, i, host)), lambda[i - 1]);
  return out;
}

bool involutivity_holds(InvolutivityLaw law, const Name& v) {
  TensorComb mirrored;
  for (const auto& [ab, c] : coproduct(v).terms()) {
    Name a = involute_name(ab.first), b = involute_name(ab.second);
    if (law == InvolutivityLaw::Swapped) std::swap(a, b);
    mirrored.add({a, b}, c);
  }
  return coproduct(involute_name(v)) == mirrored;
}

InvolutivityReport determine_involutivity(int small_degree, int check_degree) {
  auto holds_up_to = [](InvolutivityLaw law, int lo, int hi) {
    for (int n = lo; n <= hi; ++n)
      for (const auto& v : names_of_degree(n))
        if (!involutivity_holds(law, v)) return false;
    return true;
  };
  InvolutivityReport r;
  r.plain_small = holds_up_to(InvolutivityLaw::Plain, 1, small_degree);
  r.swapped_small = holds_up_to(InvolutivityLaw::Swapped, 1, small_degree);
  if (r.plain_small && r.swapped_small) {
    r.chosen = "both";
    r.chosen_large = holds_up_to(InvolutivityLaw::Plain, check_degree, check_degree) &&
                     holds_up_to(InvolutivityLaw::Swapped, check_degree, check_degree);
  } else if (r.plain_small || r.swapped_small) {
    auto law = r.plain_small ? InvolutivityLaw::Plain : InvolutivityLaw::Swapped;
    r.chosen = r.plain_small ? "plain" : "swapped";
    r.chosen_large = holds_up_to(law, check_degree, check_degree);
  } else {
    r.chosen = "none";
  }
  return r;
}

IntElem int_add(const IntElem& a, const IntElem& b) {
  IntElem out;
  for (const auto& [n, c] : a.terms())
    for (const auto& [m, d] : b.terms()) out.add(n + m, c * d);
  return out;
}

IntTensor int_coproduct(const IntElem& a) {
  IntTensor out;
  for (const auto& [n, c] : a.terms()) {
    if (n == 0) {
      out.add({0u, 0u}, c);
      continue;
    }
    out.add({n, 0u}, c);
    out.add({0u, n}, c);
  }
  return out;
}

IntElem int_times(const IntElem& a, unsigned r) {
  IntElem out;
  for (const auto& [n, c] : a.terms()) out.add(n * r, c);
  return out;
}

IntTensor int_tensor_times(const IntTensor& a, unsigned r) {
  IntTensor out;
  for (const auto& [nm, c] : a.terms()) out.add({nm.first * r, nm.second * r}, c);
  return out;
}

IntTensor int_tensor_add(const IntTensor& a, const IntTensor& b) {
  IntTensor out;
  for (const auto& [nm, c] : a.terms())
    for (const auto& [pq, d] : b.terms()) {
      auto [n, m] = nm;
      auto [p, q] = pq;
      if (m != 0 && p != 0 && q == 0) continue;  // [n](x)[m] perp [p](x)[0]
      if (n != 0 && m == 0 && q != 0) continue;  // [n](x)[0] perp [p](x)[q]
      out.add({n + p, m + q}, c * d);
    }
  return out;
}

LinComb ext_map(const IntElem& a) {
  LinComb out;
  for (const auto& [p, c] : a.terms()) out.add(encode_name(corolla(static_cast<int>(p))), c);
  return out;
}

namespace {

std::string int_terms(const std::vector<std::pair<Rational, std::string>>& ts) {
  if (ts.empty()) return "0";
  std::string s;
  for (const auto& [c, b] : ts) {
    if (!s.empty()) s += " + ";
    if (c != Rational(1)) s += rational_str(c) + "*";
    s += b;
  }
  return s;
}

}  // namespace

std::string to_text(const IntElem& a) {
  std::vector<std::pair<Rational, std::string>> ts;
  for (const auto& [n, c] : a.terms()) ts.emplace_back(c, "[" + std::to_string(n) + "]");
  return int_terms(ts);
}

std::string to_text(const IntTensor& a) {
  std::vector<std::pair<Rational, std::string>> ts;
  for (const auto& [nm, c] : a.terms())
    ts.emplace_back(c, "[" + std::to_string(nm.first) + "] (x) [" + std::to_string(nm.second) + "]");
  return int_terms(ts);
}

}  // namespace atree
