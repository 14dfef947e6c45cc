#include "arithmetree/tree.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "arithmetree/errors.hpp"

namespace atree {

int Tree::leaves() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& k : kids_) n += k.leaves();
  return n;
}

void Tree::write(std::string& out) const {
  if (is_leaf()) {
    out += 'o';
    return;
  }
  out += '(';
  for (const auto& k : kids_) k.write(out);
  out += ')';
}

std::string Tree::str() const {
  std::string s;
  write(s);
  return s;
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  return a.str() <=> b.str();
}

namespace {

struct TreeParser {
  std::string_view s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n')) ++i;
  }

  Tree node() {
    skip();
    if (i >= s.size()) throw SyntaxError("unexpected end of tree literal", i);
    if (s[i] == 'o') {
      ++i;
      return Tree{};
    }
    if (s[i] != '(') throw SyntaxError(std::string("unexpected '") + s[i] + "'", i);
    std::size_t open = i++;
    std::vector<Tree> kids;
    for (;;) {
      skip();
      if (i >= s.size()) throw SyntaxError("unclosed '('", open);
      if (s[i] == ')') {
        ++i;
        break;
      }
      kids.push_back(node());
    }
    if (kids.size() < 2)
      throw ArityError("vertex at position " + std::to_string(open) + " has " +
                       std::to_string(kids.size()) + " child(ren); at least 2 required");
    return graft(std::move(kids));
  }
};

}  // namespace

Tree Tree::parse(std::string_view text) {
  TreeParser p{text};
  Tree t = p.node();
  p.skip();
  if (p.i != text.size()) throw SyntaxError("trailing characters", p.i);
  return t;
}

Tree graft(std::vector<Tree> children) {
  if (children.size() < 2)
    throw ArityError("graft needs at least 2 children, got " + std::to_string(children.size()));
  Tree t;
  t.kids_ = std::move(children);
  return t;
}

Tree corolla(int p) {
  if (p < 0) throw PreconditionError("corolla of negative degree");
  if (p == 0) return Tree{};
  return graft(std::vector<Tree>(static_cast<std::size_t>(p) + 1));
}

Tree involution(const Tree& t) {
  if (t.is_leaf()) return t;
  std::vector<Tree> kids;
  kids.reserve(t.children().size());
  for (auto it = t.children().rbegin(); it != t.children().rend(); ++it)
    kids.push_back(involution(*it));
  return graft(std::move(kids));
}

namespace {

// i counts down as leaves are passed; replaces the leaf where it hits 1.
Tree substitute(const Tree& host, int& i, const Tree& t) {
  if (host.is_leaf()) return --i == 0 ? t : host;
  std::vector<Tree> kids;
  kids.reserve(host.children().size());
  for (const auto& k : host.children()) kids.push_back(i > 0 ? substitute(k, i, t) : k);
  return graft(std::move(kids));
}

// weak compositions of total into parts
void compositions(int total, int parts, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= total; ++a) {
    cur.push_back(a);
    compositions(total - a, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::mutex cache_mutex;
std::map<int, std::vector<Tree>> cache;

}  // namespace

Tree graft_on_leaf(const Tree& t, int i, const Tree& host) {
  if (i < 1 || i > host.leaves())
    throw IndexError("leaf index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(host.leaves()));
  int k = i;
  return substitute(host, k, t);
}

const std::vector<Tree>& trees_of_degree(int n, int cap) {
  if (n < 0) throw PreconditionError("negative degree");
  if (n > cap)
    throw ResourceError("degree " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(cap));
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Tree> out;
  if (n == 0) {
    out.emplace_back();
  } else {
    // a root with k+1 children, their degrees summing to n-k
    for (int k = 1; k <= n; ++k) {
      std::vector<std::vector<int>> comps;
      std::vector<int> cur;
      compositions(n - k, k + 1, cur, comps);
      for (const auto& c : comps) {
        std::vector<const std::vector<Tree>*> pools;
        for (int d : c) pools.push_back(&trees_of_degree(d, cap));
        std::vector<std::size_t> idx(c.size(), 0);
        for (;;) {
          std::vector<Tree> kids;
          for (std::size_t j = 0; j < c.size(); ++j) kids.push_back((*pools[j])[idx[j]]);
          out.push_back(graft(std::move(kids)));
          std::size_t j = c.size();
          while (j > 0) {
            --j;
            if (++idx[j] < pools[j]->size()) break;
            idx[j] = 0;
            if (j == 0) goto done;
          }
        }
      done:;
      }
    }
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(out.size());
    for (std::size_t j = 0; j < out.size(); ++j) keys.emplace_back(out[j].str(), j);
    std::sort(keys.begin(), keys.end());
    std::vector<Tree> sorted;
    sorted.reserve(out.size());
    for (auto& kv : keys) sorted.push_back(std::move(out[kv.second]));
    out = std::move(sorted);
  }
  std::lock_guard lock(cache_mutex);
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Tree> enumerate_trees(int n, int cap) { return trees_of_degree(n, cap); }

std::uint64_t super_catalan(int n) {
  if (n < 0) throw PreconditionError("negative degree");
  // a child of degree d has weight d+1; a root's children weigh n+1 in total.
  // one[s]: sequences of length >= 1 of weight s, two[s]: length >= 2.
  std::vector<std::uint64_t> c(n + 1, 0), one(n + 2, 0), two(n + 2, 0);
  c[0] = 1;
  one[1] = 1;
  for (int s = 2; s <= n + 1; ++s) {
    for (int d = 0; d + 1 < s; ++d) two[s] += c[d] * one[s - d - 1];
    c[s - 1] = two[s];
    one[s] = c[s - 1] + two[s];
  }
  return c[n];
}

namespace {

// coefficients of C(x)^j up to x^limit
std::vector<std::uint64_t> catalan_power(int j, int limit) {
  std::vector<std::uint64_t> c(limit + 1);
  for (int i = 0; i <= limit; ++i) c[i] = super_catalan(i);
  std::vector<std::uint64_t> p(limit + 1, 0);
  p[0] = 1;
  for (int r = 0; r < j; ++r) {
    std::vector<std::uint64_t> q(limit + 1, 0);
    for (int a = 0; a <= limit; ++a)
      for (int b = 0; a + b <= limit; ++b) q[a + b] += p[a] * c[b];
    p = std::move(q);
  }
  return p;
}

}  // namespace

std::uint64_t recurrence_value(int n) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (int k = 0; k <= n - 1; ++k)
    for (int j = 1; j <= n - k; ++j) {
      auto p = catalan_power(j, n - k - j);
      total += p[n - k - j] * super_catalan(k);
    }
  return total;
}

std::uint64_t recurrence_value_literal(int n) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (int k = 0; k <= n - 1; ++k)
    for (int j = 1; j <= n - k; ++j) {
      auto p = catalan_power(j, n - k - j);
      std::uint64_t inner = 0;
      for (int s = 0; s <= n - k - j; ++s) inner += p[s];  // i_j absorbs the rest
      total += inner * super_catalan(k);
    }
  return total;
}

bool recurrence_check(int n) {
  if (n < 1) return true;
  return recurrence_value(n) == super_catalan(n);
}

std::uint64_t invariant_count(int n) {
  if (n < 1) throw PreconditionError("invariant_count needs n >= 1");
  std::uint64_t c = 0;
  for (const auto& t : trees_of_degree(n))
    if (involution(t) == t) ++c;
  return c;
}

}  // namespace atree
