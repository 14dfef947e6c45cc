#include "arithmetree/lattice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <sstream>

#include "arithmetree/errors.hpp"

namespace atree {

namespace {
std::mutex names_mutex, poset_mutex;
std::map<int, std::vector<Name>> names_cache;
std::map<int, std::unique_ptr<Poset>> poset_cache;
}  // namespace

const std::vector<Name>& names_of_degree(int n) {
  {
    std::lock_guard lock(names_mutex);
    if (auto it = names_cache.find(n); it != names_cache.end()) return it->second;
  }
  std::vector<Name> out;
  for (const auto& t : trees_of_degree(n)) out.push_back(encode_name(t));
  std::lock_guard lock(names_mutex);
  return names_cache.emplace(n, std::move(out)).first->second;
}

const Poset& Poset::of_degree(int n) {
  if (n < 1) throw PreconditionError("posets start at degree 1");
  if (n > kPosetCap)
    throw ResourceError("degree " + std::to_string(n) + " exceeds the poset cap " +
                        std::to_string(kPosetCap));
  {
    std::lock_guard lock(poset_mutex);
    if (auto it = poset_cache.find(n); it != poset_cache.end()) return *it->second;
  }
  std::unique_ptr<Poset> p(new Poset(n));
  std::lock_guard lock(poset_mutex);
  return *poset_cache.emplace(n, std::move(p)).first->second;
}

Poset::Poset(int n) : n_(n), names_(names_of_degree(n)) {
  const int N = size();
  for (int i = 0; i < N; ++i) index_.emplace(names_[i], i);
  up_.assign(N, boost::dynamic_bitset<>(N));
  down_.assign(N, boost::dynamic_bitset<>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (leq_name(names_[i], names_[j])) {
        up_[i].set(j);
        down_[j].set(i);
      }
  down_count_.resize(N);
  for (int i = 0; i < N; ++i) down_count_[i] = static_cast<int>(down_[i].count());
  bottom_ = top_ = -1;
  for (int i = 0; i < N; ++i) {
    if (down_count_[i] == 1) bottom_ = i;
    if (up_[i].count() == 1) top_ = i;
  }
  if (bottom_ < 0 || top_ < 0 || static_cast<int>(up_[bottom_].count()) != N)
    throw Error("T_" + std::to_string(n) + " is not bounded");

  std::vector<int> order(N);
  for (int i = 0; i < N; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return down_count_[a] < down_count_[b]; });
  mu_.assign(N, 0);
  height_.assign(N, 0);
  for (int x : order) {
    if (x == bottom_) {
      mu_[x] = 1;
      continue;
    }
    int s = 0;
    for (auto y = down_[x].find_first(); y != boost::dynamic_bitset<>::npos;
         y = down_[x].find_next(y))
      if (static_cast<int>(y) != x) {
        s += mu_[y];
        height_[x] = std::max(height_[x], height_[y] + 1);
      }
    mu_[x] = -s;
  }
}

int Poset::index(const Name& v) const {
  auto it = index_.find(v);
  if (it == index_.end())
    throw InvalidName(v.str() + " is not a name of degree " + std::to_string(n_));
  return it->second;
}

int Poset::join(int i, int j) const {
  auto ub = up_[i] & up_[j];
  int best = -1;
  for (auto k = ub.find_first(); k != boost::dynamic_bitset<>::npos; k = ub.find_next(k))
    if (best < 0 || down_count_[k] < down_count_[best]) best = static_cast<int>(k);
  if (!ub.is_subset_of(up_[best]))
    throw Error("no least upper bound for " + names_[i].str() + " and " + names_[j].str());
  return best;
}

int Poset::meet(int i, int j) const {
  auto lb = down_[i] & down_[j];
  int best = -1;
  for (auto k = lb.find_first(); k != boost::dynamic_bitset<>::npos; k = lb.find_next(k))
    if (best < 0 || down_count_[k] > down_count_[best]) best = static_cast<int>(k);
  if (!lb.is_subset_of(down_[best]))
    throw Error("no greatest lower bound for " + names_[i].str() + " and " + names_[j].str());
  return best;
}

std::vector<int> Poset::upper_covers(int i) const {
  auto strict = up_[i];
  strict.reset(i);
  std::vector<int> out;
  for (auto k = strict.find_first(); k != boost::dynamic_bitset<>::npos; k = strict.find_next(k))
    if ((down_[k] & strict).count() == 1) out.push_back(static_cast<int>(k));
  return out;
}

std::vector<int> Poset::lower_covers(int i) const {
  auto strict = down_[i];
  strict.reset(i);
  std::vector<int> out;
  for (auto k = strict.find_first(); k != boost::dynamic_bitset<>::npos; k = strict.find_next(k))
    if ((up_[k] & strict).count() == 1) out.push_back(static_cast<int>(k));
  return out;
}

int Poset::moebius(int i) const { return mu_[i]; }
int Poset::height(int i) const { return height_[i]; }

namespace {

void require_same_degree(const Name& v, const Name& w) {
  if (v.size() != w.size())
    throw DegreeMismatch("names of degrees " + std::to_string(v.degree()) + " and " +
                         std::to_string(w.degree()));
}

// Result built so far: OPEN positions and closed intervals [s, e].
struct Partial {
  std::vector<int> opens;
  std::vector<std::pair<int, int>> ivs;

  bool has_interval(int p) const {
    for (auto [s, e] : ivs)
      if (s == p) return true;
    return false;
  }
  // inside some earlier interval without being its start
  bool enclosed(int p) const {
    for (auto [s, e] : ivs)
      if (s < p && p <= e) return true;
    return false;
  }
  void close(int i, const std::vector<int>& S) {
    for (int p : S) ivs.emplace_back(p, i);
  }
};

// Every admissible closing set {a0} u F u (subset of O) at coordinate i.
void closing_sets(const Partial& st, int a0, int i,
                  const std::function<void(std::vector<int>)>& visit) {
  std::vector<int> forced{a0}, optional;
  for (int p : st.opens) {
    if (p <= a0 || p >= i) continue;
    if (!st.has_interval(p))
      forced.push_back(p);
    else if (!st.enclosed(p))
      optional.push_back(p);
  }
  const std::size_t k = optional.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> S = forced;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1) S.push_back(optional[b]);
    std::sort(S.begin(), S.end());
    visit(std::move(S));
  }
}

}  // namespace

Name join(const Name& v, const Name& w) {
  require_same_degree(v, w);
  if (v.is_unit()) return v;
  using K = Coordinate::Kind;
  Partial st;
  std::vector<Coordinate> out;
  for (int i = 1; i <= v.size(); ++i) {
    const auto& a = v[i - 1];
    const auto& b = w[i - 1];
    if (a.kind == K::Open || b.kind == K::Open) {
      out.push_back(Coordinate::open(i));
      st.opens.push_back(i);
      continue;
    }
    if (a.kind == K::Bare || b.kind == K::Bare) {
      out.push_back(Coordinate::bare(i));
      continue;
    }
    const Coordinate& M = compare(a, b) >= 0 ? a : b;
    std::vector<int> best;
    closing_sets(st, M.exps.front(), i, [&](std::vector<int> S) {
      auto c = Coordinate::close(S);
      if (compare(c, M) < 0) return;
      if (best.empty() || compare(c, Coordinate::close(best)) < 0) best = std::move(S);
    });
    if (best.empty()) throw Error("join: no admissible closing set");
    st.close(i, best);
    out.push_back(Coordinate::close(std::move(best)));
  }
  return Name(std::move(out));
}

Name meet(const Name& v, const Name& w) {
  require_same_degree(v, w);
  if (v.is_unit()) return v;
  using K = Coordinate::Kind;
  Partial st;
  std::vector<Coordinate> out;
  for (int i = 1; i <= v.size(); ++i) {
    const auto& a = v[i - 1];
    const auto& b = w[i - 1];
    const Coordinate& m = compare(a, b) <= 0 ? a : b;
    if (m.kind == K::Open) {
      out.push_back(Coordinate::open(i));
      st.opens.push_back(i);
      continue;
    }
    if (m.kind == K::Bare) {
      out.push_back(Coordinate::bare(i));
      continue;
    }
    std::vector<int> best;
    for (int a0 : st.opens) {
      if (st.enclosed(a0)) continue;
      closing_sets(st, a0, i, [&](std::vector<int> S) {
        auto c = Coordinate::close(S);
        if (compare(c, m) > 0) return;
        if (best.empty() || compare(c, Coordinate::close(best)) > 0) best = std::move(S);
      });
    }
    if (best.empty()) throw Error("meet: no admissible closing set");
    st.close(i, best);
    out.push_back(Coordinate::close(std::move(best)));
  }
  return Name(std::move(out));
}

Name join_brute(const Name& v, const Name& w) {
  require_same_degree(v, w);
  if (v.is_unit()) return v;
  const auto& p = Poset::of_degree(v.degree());
  return p.name(p.join(p.index(v), p.index(w)));
}

Name meet_brute(const Name& v, const Name& w) {
  require_same_degree(v, w);
  if (v.is_unit()) return v;
  const auto& p = Poset::of_degree(v.degree());
  return p.name(p.meet(p.index(v), p.index(w)));
}

std::set<Name> covers(const Name& v) {
  std::set<Name> out;
  if (v.is_unit()) return out;
  const auto& p = Poset::of_degree(v.degree());
  for (int k : p.upper_covers(p.index(v))) out.insert(p.name(k));
  return out;
}

namespace {

// Items 1-3 applied once to t = t_1 v ... v t_m.
void tree_moves(const Tree& t, std::vector<Tree>& out) {
  if (t.is_leaf()) return;
  const auto& c = t.children();
  const std::size_t m = c.size();
  // Item 1: move inside one child
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Tree> sub;
    tree_moves(c[i], sub);
    for (auto& s : sub) {
      std::vector<Tree> kids = c;
      kids[i] = std::move(s);
      out.push_back(graft(std::move(kids)));
    }
  }
  // Item 2: (v_1 v ... v v_k) v w_2 ... < v_1 v ... v v_k v w_2 ...
  if (!c[0].is_leaf()) {
    std::vector<Tree> kids = c[0].children();
    kids.insert(kids.end(), c.begin() + 1, c.end());
    out.push_back(graft(std::move(kids)));
  }
  // Item 3: t_1 v ... v t_m < t_1 v ... v t_j v (t_{j+1} v ... v t_m)
  for (std::size_t j = 1; j + 2 <= m; ++j) {
    std::vector<Tree> kids(c.begin(), c.begin() + j);
    kids.push_back(graft(std::vector<Tree>(c.begin() + j, c.end())));
    out.push_back(graft(std::move(kids)));
  }
}

}  // namespace

std::set<Name> moves(const Name& v) {
  std::vector<Tree> out;
  tree_moves(decode_name(v), out);
  std::set<Name> names;
  for (const auto& t : out) names.insert(encode_name(t));
  return names;
}

std::set<Name> moves_closure(const Name& v) {
  std::set<Name> seen{v};
  std::deque<Name> todo{v};
  while (!todo.empty()) {
    Name x = std::move(todo.front());
    todo.pop_front();
    for (const auto& y : moves(x))
      if (seen.insert(y).second) todo.push_back(y);
  }
  return seen;
}

std::set<Name> up_set(const Name& v) {
  std::set<Name> out;
  if (v.is_unit()) return {v};
  for (const auto& w : names_of_degree(v.degree()))
    if (leq_name(v, w)) out.insert(w);
  return out;
}

int moebius(const Name& v, MoebiusMode mode) {
  if (v.is_unit()) throw PreconditionError("moebius needs degree >= 1");
  if (mode == MoebiusMode::Brute) {
    const auto& p = Poset::of_degree(v.degree());
    return p.moebius(p.index(v));
  }
  const int n = v.degree();
  const auto& last = v[n];
  if (!(last.kind == Coordinate::Kind::Close && last.exps == std::vector<int>{1})) return 0;
  int t = 0;
  for (int i = 2; i <= n; ++i) {
    const auto& c = v[i - 1];
    if (c.kind == Coordinate::Kind::Close && c.exps == std::vector<int>{1}) continue;
    if (c.kind == Coordinate::Kind::Bare && c.pos == i) {
      ++t;
      continue;
    }
    return 0;
  }
  return t % 2 ? -1 : 1;
}

std::vector<Name> atoms(int n) {
  if (n < 2) throw PreconditionError("atoms need degree >= 2");
  std::vector<Name> out;
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<Coordinate> cs{Coordinate::open(1)};
    for (int k = 2; k <= n + 1; ++k)
      cs.push_back(k == i + 1 ? Coordinate::bare(k) : Coordinate::close({1}));
    out.emplace_back(std::move(cs));
  }
  return out;
}

bool is_left_modular(const Poset& p, int x) {
  const int N = p.size();
  for (int y = 0; y < N; ++y)
    for (int z = 0; z < N; ++z)
      if (p.le(y, z) && p.join(y, p.meet(x, z)) != p.meet(p.join(y, x), z)) return false;
  return true;
}

std::vector<Name> left_modular_chain(int n) {
  if (n < 2) throw PreconditionError("left_modular_chain needs degree >= 2");
  const auto& p = Poset::of_degree(n);
  const std::size_t target = static_cast<std::size_t>((n - 1) * (n - 1) + (n - 1) + 1);

  std::map<int, bool> lm;
  auto left_modular = [&](int x) {
    auto it = lm.find(x);
    if (it == lm.end()) it = lm.emplace(x, is_left_modular(p, x)).first;
    return it->second;
  };

  std::vector<int> prefix;
  if (n == 2) {
    for (const char* s : {"((oo)o)", "(ooo)", "(o(oo))"})
      prefix.push_back(p.index(encode_name(Tree::parse(s))));
  } else {
    for (const auto& v : left_modular_chain(n - 1))
      prefix.push_back(p.index(encode_name(graft({decode_name(v), Tree{}}))));
    const auto& lower = Poset::of_degree(n - 2);
    Tree comb = decode_name(lower.name(lower.top()));
    prefix.push_back(p.index(encode_name(graft({Tree{}, comb, Tree{}}))));
  }
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    if (k > 0) {
      auto up = p.upper_covers(prefix[k - 1]);
      if (std::find(up.begin(), up.end(), prefix[k]) == up.end())
        throw SearchFailure("prescribed element " + p.name(prefix[k]).str() +
                            " does not cover " + p.name(prefix[k - 1]).str());
    }
    if (!left_modular(prefix[k]))
      throw SearchFailure("prescribed element " + decode_name(p.name(prefix[k])).str() + " " +
                          p.name(prefix[k]).str() + " is not left-modular in T_" +
                          std::to_string(n));
  }
  if (prefix.front() != p.bottom())
    throw SearchFailure("prescribed prefix does not start at the minimum");

  std::vector<int> chain = prefix;
  std::function<bool()> extend = [&]() -> bool {
    if (chain.size() == target) return chain.back() == p.top();
    if (chain.back() == p.top()) return false;
    auto up = p.upper_covers(chain.back());
    std::sort(up.begin(), up.end());  // literal order
    for (int c : up) {
      if (!left_modular(c)) continue;
      chain.push_back(c);
      if (extend()) return true;
      chain.pop_back();
    }
    return false;
  };
  if (!extend())
    throw SearchFailure("no left-modular maximal chain of " + std::to_string(target) +
                        " elements through the prescribed prefix in T_" + std::to_string(n));
  std::vector<Name> out;
  for (int k : chain) out.push_back(p.name(k));
  return out;
}

std::vector<int> atom_levels(const std::vector<Name>& chain) {
  const int n = chain.front().degree();
  auto as = atoms(n);
  std::vector<int> out;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    int c = 0;
    for (const auto& a : as)
      if (leq_name(a, chain[i]) && !leq_name(a, chain[i - 1])) ++c;
    out.push_back(c);
  }
  return out;
}

bool level_condition(const std::vector<Name>& chain) {
  const int n = chain.front().degree();
  const auto& p = Poset::of_degree(n);
  auto as = atoms(n);
  std::vector<int> level(as.size(), -1);
  for (std::size_t a = 0; a < as.size(); ++a)
    for (std::size_t i = 1; i < chain.size(); ++i)
      if (leq_name(as[a], chain[i]) && !leq_name(as[a], chain[i - 1])) level[a] = static_cast<int>(i);
  // a < b_1 < ... < b_k in level order forces a not below the join of the b's
  const std::size_t k = as.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      std::vector<int> lv;
      int j = -1;
      bool ok = true;
      for (std::size_t b = 0; b < k && ok; ++b) {
        if (!(mask >> b & 1)) continue;
        if (level[b] <= level[a]) ok = false;
        lv.push_back(level[b]);
        int ib = p.index(as[b]);
        j = j < 0 ? ib : p.join(j, ib);
      }
      if (!ok) continue;
      std::sort(lv.begin(), lv.end());
      if (std::adjacent_find(lv.begin(), lv.end()) != lv.end()) continue;
      if (p.le(p.index(as[a]), j)) return false;
    }
  return true;
}

std::string CharPoly::str() const {
  std::string s;
  for (auto [a, m] : roots) {
    if (m == 0) continue;
    if (!s.empty()) s += '*';
    std::string f = a == 0 ? "x" : "(x-" + std::to_string(a) + ")";
    s += f;
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

CharPoly characteristic_polynomial(int n) {
  auto chain = left_modular_chain(n);
  if (!level_condition(chain))
    throw SearchFailure("level condition fails along the chain of T_" + std::to_string(n));
  CharPoly cp;
  int singletons = 0;
  for (int s : atom_levels(chain)) {
    ++cp.roots[s];
    if (s == 1) ++singletons;
    else if (s != 0)
      throw SearchFailure("atom level of size " + std::to_string(s) + " in T_" + std::to_string(n));
  }
  if (singletons != n - 1)
    throw SearchFailure("expected " + std::to_string(n - 1) + " singleton levels, found " +
                        std::to_string(singletons));
  return cp;
}

std::string hasse_dot(int n) {
  const auto& p = Poset::of_degree(n);
  std::ostringstream os;
  os << "digraph T" << n << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::map<int, std::vector<int>> ranks;
  for (int i = 0; i < p.size(); ++i) {
    os << "  n" << i << " [label=\"" << decode_name(p.name(i)).str() << "\"];\n";
    ranks[p.height(i)].push_back(i);
  }
  for (int i = 0; i < p.size(); ++i)
    for (int k : p.upper_covers(i)) os << "  n" << i << " -> n" << k << ";\n";
  for (const auto& [h, xs] : ranks) {
    os << "  { rank=same;";
    for (int x : xs) os << " n" << x << ";";
    os << " }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace atree
