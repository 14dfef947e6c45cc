#include "arithmetree/grove.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "arithmetree/errors.hpp"
#include "arithmetree/lattice.hpp"

namespace atree {

Grove::Grove(std::set<Name> members) : m_(std::move(members)) {
  if (m_.empty()) return;
  const int d = m_.begin()->degree();
  for (const auto& v : m_)
    if (v.degree() != d) throw DegreeMismatch("a grove mixes degrees " + std::to_string(d) +
                                              " and " + std::to_string(v.degree()));
}

int Grove::degree() const { return m_.empty() ? -1 : m_.begin()->degree(); }

std::string Grove::str(bool ascii) const {
  if (m_.empty()) return ascii ? "{}" : "∅";
  std::vector<Name> sorted(m_.begin(), m_.end());
  std::sort(sorted.begin(), sorted.end(), name_literal_less);
  std::string s;
  for (const auto& v : sorted) {
    if (!s.empty()) s += ascii ? " u " : " ∪ ";
    s += decode_name(v).str();
  }
  return s;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t')) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

Grove Grove::parse(std::string_view text) {
  std::string t = trim(text);
  if (t == "{}" || t == "∅") return Grove{};
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < t.size();) {
    if (t.compare(i, 3, "∪") == 0) {
      parts.push_back(cur);
      cur.clear();
      i += 3;
    } else if (t[i] == '|' || t[i] == 'u') {
      parts.push_back(cur);
      cur.clear();
      ++i;
    } else {
      cur += t[i++];
    }
  }
  parts.push_back(cur);
  std::set<Name> ms;
  for (const auto& p : parts) {
    std::string s = trim(p);
    if (s.empty()) throw SyntaxError("empty grove member", 0);
    const bool is_name = s.find_first_of("0123456789") != std::string::npos;
    Name v = is_name ? Name::parse(s) : encode_name(Tree::parse(s));
    if (is_name) validate(v);
    if (!ms.insert(v).second) throw InvalidName("grove member " + s + " repeated");
  }
  return Grove(std::move(ms));
}

Grove dend_add(const Grove& a, const Grove& b) {
  if (a.empty() || b.empty()) return Grove{};
  std::map<Name, std::pair<Name, Name>> from;
  for (const auto& v : a.members())
    for (const auto& w : b.members())
      for (const auto& u : star_interval(v, w)) {
        auto [it, fresh] = from.emplace(u, std::make_pair(v, w));
        if (!fresh) {
          auto lit = [](const Name& x) { return decode_name(x).str(); };
          throw Error("dendriform addition repeats " + lit(u) + ": it lies in " +
                      lit(it->second.first) + " * " + lit(it->second.second) + " and in " +
                      lit(v) + " * " + lit(w));
        }
      }
  std::set<Name> out;
  for (const auto& kv : from) out.insert(kv.first);
  return Grove(std::move(out));
}

Grove grove_op(GroveOp op, const Grove& a, const Grove& b) {
  if (a.empty() || b.empty()) return Grove{};
  const Op t = op == GroveOp::Left ? Op::Prec : op == GroveOp::Right ? Op::Succ : Op::Bullet;
  std::set<Name> out;
  for (const auto& v : a.members())
    for (const auto& w : b.members())
      for (auto& u : tri_terms(t, v, w)) out.insert(std::move(u));
  return Grove(std::move(out));
}

Grove total_grove(int n) {
  const auto& ns = names_of_degree(n);
  return Grove(std::set<Name>(ns.begin(), ns.end()));
}

Grove involute(const Grove& g) {
  std::set<Name> out;
  for (const auto& v : g.members()) out.insert(involute_name(v));
  return Grove(std::move(out));
}

std::pair<Name, Name> decompose_pair(const Name& w, int n, int m) {
  if (n < 1 || m < 1 || w.degree() != n + m)
    throw DegreeMismatch("cannot split degree " + std::to_string(w.degree()) + " as " +
                         std::to_string(n) + "+" + std::to_string(m));
  using K = Coordinate::Kind;
  // u: the first n coordinates, re-closing what is still open after them
  std::map<int, int> started, ended;
  for (int i = 1; i <= w.size(); ++i)
    if (w[i - 1].kind == K::Close)
      for (int e : w[i - 1].exps) {
        ++started[e];
        if (i <= n) ++ended[e];
      }
  std::vector<Coordinate> uc(w.coords().begin(), w.coords().begin() + n);
  std::vector<int> still_open;
  for (auto [p, c] : started)
    if (p <= n && c > ended[p]) still_open.push_back(p);
  uc.push_back(Coordinate::close(still_open));
  // v: the tail translated by -n, clamping starts left of the shared leaf to 1
  std::vector<Coordinate> vc{Coordinate::open(1)};
  for (int i = n + 2; i <= w.size(); ++i) {
    const auto& c = w[i - 1];
    if (c.kind == K::Close) {
      std::vector<int> e;
      for (int x : c.exps) e.push_back(std::max(x - n, 1));
      e.erase(std::unique(e.begin(), e.end()), e.end());
      vc.push_back(Coordinate::close(std::move(e)));
    } else {
      vc.push_back(shift(-n, c, ShiftMode::Box));
    }
  }
  Name u(std::move(uc)), v(std::move(vc));
  validate(u);
  validate(v);
  if (!(leq_name(over(u, v), w) && leq_name(w, under(u, v))))
    throw Error("sandwich construction failed for " + w.str());
  return {u, v};
}

std::pair<Name, Name> decompose_pair_brute(const Name& w, int n, int m) {
  if (n < 1 || m < 1 || w.degree() != n + m)
    throw DegreeMismatch("cannot split degree " + std::to_string(w.degree()));
  std::vector<std::pair<Name, Name>> found;
  for (const auto& u : names_of_degree(n))
    for (const auto& v : names_of_degree(m))
      if (leq_name(over(u, v), w) && leq_name(w, under(u, v))) found.emplace_back(u, v);
  if (found.size() != 1)
    throw Error(w.str() + " has " + std::to_string(found.size()) + " sandwich pairs");
  return found.front();
}

OpTriple<Grove> grove_ops() {
  return {[](const Grove& a, const Grove& b) { return grove_op(GroveOp::Left, a, b); },
          [](const Grove& a, const Grove& b) { return grove_op(GroveOp::Right, a, b); },
          [](const Grove& a, const Grove& b) { return grove_op(GroveOp::Mid, a, b); }};
}

Grove dend_mul(const Grove& a, const Grove& b) {
  if (a.empty() || b.empty()) return Grove{};
  if (a.is_unit() || b.is_unit()) return Grove::unit();
  std::set<Name> out;
  const auto ops = grove_ops();
  for (const auto& v : a.members()) {
    Grove r = eval_universal(universal_expression(decode_name(v)), ops, b);
    out.insert(r.members().begin(), r.members().end());
  }
  return Grove(std::move(out));
}

}  // namespace atree
