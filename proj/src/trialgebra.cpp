#include "arithmetree/trialgebra.hpp"

#include <map>
#include <mutex>

#include "arithmetree/errors.hpp"
#include "arithmetree/lattice.hpp"

namespace atree {

namespace {
std::mutex star_mutex;
std::map<std::pair<Name, Name>, std::vector<Name>> star_cache;
std::mutex kids_mutex;
std::map<Name, std::vector<Name>> kids_cache;

const std::vector<Name>& kids(const Name& v) {
  {
    std::lock_guard lock(kids_mutex);
    if (auto it = kids_cache.find(v); it != kids_cache.end()) return it->second;
  }
  auto k = name_children(v);
  std::lock_guard lock(kids_mutex);
  return kids_cache.emplace(v, std::move(k)).first->second;
}
}  // namespace

const std::vector<Name>& star_interval(const Name& v, const Name& w) {
  auto key = std::make_pair(v, w);
  {
    std::lock_guard lock(star_mutex);
    if (auto it = star_cache.find(key); it != star_cache.end()) return it->second;
  }
  std::vector<Name> out;
  if (v.is_unit()) {
    out.push_back(w);
  } else if (w.is_unit()) {
    out.push_back(v);
  } else {
    Name lo = over(v, w), hi = under(v, w);
    const int n = v.degree() + w.degree();
    if (n <= kPosetCap) {
      const auto& p = Poset::of_degree(n);
      int a = p.index(lo), b = p.index(hi);
      for (int k = 0; k < p.size(); ++k)
        if (p.le(a, k) && p.le(k, b)) out.push_back(p.name(k));
    } else {
      for (const auto& u : names_of_degree(n))
        if (leq_name(lo, u) && leq_name(u, hi)) out.push_back(u);
    }
  }
  std::lock_guard lock(star_mutex);
  return star_cache.emplace(std::move(key), std::move(out)).first->second;
}

LinComb star(const Name& v, const Name& w) {
  LinComb out;
  for (const auto& u : star_interval(v, w)) out.add(u, 1);
  return out;
}

LinComb star(const LinComb& x, const LinComb& y) {
  LinComb out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      for (const auto& u : star_interval(a, b)) out.add(u, ca * cb);
  return out;
}

std::vector<Name> tri_terms(Op op, const Name& v, const Name& w) {
  if (v.is_unit() && w.is_unit()) throw UndefinedExpression("(0) op (0) is not defined");
  std::vector<Name> out;
  switch (op) {
    case Op::Prec: {
      if (v.is_unit()) return out;
      if (w.is_unit()) return {v};
      std::vector<Name> parts = kids(v);
      Name last = parts.back();
      for (const auto& u : star_interval(last, w)) {
        parts.back() = u;
        out.push_back(graft_names(parts));
      }
      return out;
    }
    case Op::Succ: {
      if (w.is_unit()) return out;
      if (v.is_unit()) return {w};
      std::vector<Name> parts = kids(w);
      Name first = parts.front();
      for (const auto& u : star_interval(v, first)) {
        parts.front() = u;
        out.push_back(graft_names(parts));
      }
      return out;
    }
    case Op::Bullet: {
      if (v.is_unit() || w.is_unit()) return out;
      const auto& a = kids(v);
      const auto& b = kids(w);
      std::vector<Name> parts(a.begin(), a.end() - 1);
      parts.push_back(Name{});
      parts.insert(parts.end(), b.begin() + 1, b.end());
      const std::size_t slot = a.size() - 1;
      for (const auto& u : star_interval(a.back(), b.front())) {
        parts[slot] = u;
        out.push_back(graft_names(parts));
      }
      return out;
    }
  }
  return out;
}

LinComb tri_op(Op op, const Name& v, const Name& w) {
  LinComb out;
  for (const auto& u : tri_terms(op, v, w)) out.add(u, 1);
  return out;
}

LinComb tri_op(Op op, const LinComb& x, const LinComb& y) {
  LinComb out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      for (const auto& u : tri_terms(op, a, b)) out.add(u, ca * cb);
  return out;
}

UniversalExpr UniversalExpr::gen() { return UniversalExpr{}; }

UniversalExpr UniversalExpr::node(Op op, UniversalExpr l, UniversalExpr r) {
  UniversalExpr e;
  e.node_ = std::make_shared<const Node>(Node{op, std::move(l), std::move(r)});
  return e;
}

int UniversalExpr::gen_count() const {
  return is_gen() ? 1 : left().gen_count() + right().gen_count();
}

std::string UniversalExpr::str() const {
  if (is_gen()) return "g";
  auto side = [](const UniversalExpr& e) { return e.is_gen() ? e.str() : "(" + e.str() + ")"; };
  const char* sym = op() == Op::Prec ? " < " : op() == Op::Succ ? " > " : " . ";
  return side(left()) + sym + side(right());
}

UniversalExpr universal_expression(const Tree& t) {
  if (t.is_leaf()) throw PreconditionError("the leaf has no universal expression");
  const auto& c = t.children();
  const std::size_t m = c.size();
  // w(t_1) > GEN < w(t_2) . GEN < w(t_3) ... . GEN < w(t_m), folded left to right.
  // an interior child hangs on the right leaf of the GEN before it
  UniversalExpr acc = UniversalExpr::gen();
  if (!c.front().is_leaf())
    acc = UniversalExpr::node(Op::Succ, universal_expression(c.front()), acc);
  for (std::size_t i = 1; i + 1 < m; ++i) {
    if (!c[i].is_leaf()) acc = UniversalExpr::node(Op::Prec, acc, universal_expression(c[i]));
    acc = UniversalExpr::node(Op::Bullet, acc, UniversalExpr::gen());
  }
  if (!c.back().is_leaf())
    acc = UniversalExpr::node(Op::Prec, acc, universal_expression(c.back()));
  return acc;
}

OpTriple<LinComb> trialgebra_ops() {
  return {[](const LinComb& a, const LinComb& b) { return tri_op(Op::Prec, a, b); },
          [](const LinComb& a, const LinComb& b) { return tri_op(Op::Succ, a, b); },
          [](const LinComb& a, const LinComb& b) { return tri_op(Op::Bullet, a, b); }};
}

}  // namespace atree
