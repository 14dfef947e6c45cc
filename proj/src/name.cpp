#include "arithmetree/name.hpp"

#include <algorithm>
#include <map>

#include "arithmetree/errors.hpp"

namespace atree {

Coordinate Coordinate::open(int j) {
  if (j < 1) throw InvalidName("OPEN position must be >= 1");
  Coordinate c;
  c.kind = Kind::Open;
  c.pos = j;
  return c;
}

Coordinate Coordinate::bare(int j) {
  if (j < 2) throw InvalidName("BARE position must be >= 2");
  Coordinate c;
  c.kind = Kind::Bare;
  c.pos = j;
  return c;
}

Coordinate Coordinate::close(std::vector<int> e) {
  if (e.empty()) throw InvalidName("CLOSE needs at least one exponent");
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] < 1) throw InvalidName("CLOSE exponents must be >= 1");
    if (k > 0 && e[k] <= e[k - 1]) throw InvalidName("CLOSE exponents must strictly ascend");
  }
  Coordinate c;
  c.kind = Kind::Close;
  c.pos = 0;
  c.exps = std::move(e);
  return c;
}

int Coordinate::coefficient(int k) const {
  switch (kind) {
    case Kind::Open:
      return k == 0 ? pos : 0;
    case Kind::Bare:
      return k == 0 ? pos - 1 : (k == 1 ? pos : 0);
    case Kind::Close:
      if (k == 0) return exps.front();
      return std::binary_search(exps.begin(), exps.end(), k) ? 1 : 0;
  }
  return 0;
}

int Coordinate::length() const {
  switch (kind) {
    case Kind::Open:
      return 1;
    case Kind::Bare:
      return 2;
    case Kind::Close:
      return exps.back() + 1;
  }
  return 0;
}

std::vector<int> Coordinate::coefficients() const {
  std::vector<int> out(length());
  for (int k = 0; k < length(); ++k) out[k] = coefficient(k);
  return out;
}

std::string Coordinate::str() const {
  switch (kind) {
    case Kind::Open:
      return std::to_string(pos);
    case Kind::Bare:
      return std::to_string(pos - 1) + "+" + std::to_string(pos) + "h^-1";
    case Kind::Close: {
      std::string s = std::to_string(exps.front());
      for (int e : exps) s += "+h^-" + std::to_string(e);
      return s;
    }
  }
  return {};
}

std::strong_ordering compare(const Coordinate& a, const Coordinate& b) {
  int n = std::max(a.length(), b.length());
  for (int k = 0; k < n; ++k) {
    int x = a.coefficient(k), y = b.coefficient(k);
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

Name::Name(std::vector<Coordinate> coords) : c_(std::move(coords)) {
  if (c_.size() == 1) throw InvalidName("a name has either one coordinate (0) or at least two");
}

std::string Name::str() const {
  if (is_unit()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += c_[i].str();
  }
  return s + ")";
}

std::strong_ordering operator<=>(const Name& a, const Name& b) {
  if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const auto& x = a.c_[i];
    const auto& y = b.c_[i];
    if (auto c = x.kind <=> y.kind; c != 0) return c;
    if (auto c = x.pos <=> y.pos; c != 0) return c;
    if (auto c = x.exps <=> y.exps; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

struct NameParser {
  std::string_view s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, i); }

  void expect(char ch) {
    if (i >= s.size() || s[i] != ch) fail(std::string("expected '") + ch + "'");
    ++i;
  }

  bool peek(char ch) const { return i < s.size() && s[i] == ch; }

  int integer() {
    std::size_t start = i;
    long v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) throw SyntaxError("integer too large", start);
      ++i;
    }
    if (i == start) fail("expected integer");
    return static_cast<int>(v);
  }

  Coordinate coord() {
    std::size_t start = i;
    int c0 = integer();
    if (!peek('+')) {
      if (c0 < 1) throw InvalidName("OPEN coordinate must be >= 1 (position " +
                                    std::to_string(start) + ")");
      return Coordinate::open(c0);
    }
    ++i;
    if (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      int c1 = integer();
      for (char ch : std::string_view("h^-1")) expect(ch);
      if (c1 != c0 + 1)
        throw InvalidName("BARE coordinate " + std::string(s.substr(start, i - start)) +
                          " needs h^-1 coefficient = constant + 1");
      return Coordinate::bare(c1);
    }
    std::vector<int> e;
    for (;;) {
      for (char ch : std::string_view("h^-")) expect(ch);
      e.push_back(integer());
      if (!peek('+')) break;
      ++i;
    }
    if (e.front() != c0)
      throw InvalidName("CLOSE coordinate " + std::string(s.substr(start, i - start)) +
                        " needs first exponent = constant");
    return Coordinate::close(std::move(e));
  }
};

}  // namespace

Name Name::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  NameParser p{text};
  p.expect('(');
  if (p.peek('0')) {
    std::size_t save = p.i;
    ++p.i;
    if (p.peek(')')) {
      ++p.i;
      if (p.i != text.size()) p.fail("trailing characters");
      return Name{};
    }
    p.i = save;
  }
  std::vector<Coordinate> cs;
  cs.push_back(p.coord());
  while (p.peek(',')) {
    ++p.i;
    cs.push_back(p.coord());
  }
  p.expect(')');
  if (p.i != text.size()) p.fail("trailing characters");
  if (cs.size() == 1) throw InvalidName("a non-unit name has at least two coordinates");
  return Name(std::move(cs));
}

namespace {

struct Interval {
  int first, last;
};

int collect(const Tree& t, int& next, std::vector<Interval>& out) {
  if (t.is_leaf()) return ++next;
  int first = 0, last = 0;
  for (const auto& k : t.children()) {
    int before = next;
    collect(k, next, out);
    if (!first) first = before + 1;
    last = next;
  }
  out.push_back({first, last});
  return first;
}

Name from_intervals(int n_leaves, const std::vector<Interval>& ivs) {
  std::vector<int> starts(n_leaves + 1, 0);
  std::vector<std::vector<int>> ends(n_leaves + 1);
  for (const auto& iv : ivs) {
    ++starts[iv.first];
    ends[iv.last].push_back(iv.first);
  }
  std::vector<Coordinate> cs;
  for (int i = 1; i <= n_leaves; ++i) {
    if (starts[i]) {
      cs.push_back(Coordinate::open(i));
    } else if (!ends[i].empty()) {
      std::sort(ends[i].begin(), ends[i].end());
      cs.push_back(Coordinate::close(ends[i]));
    } else {
      cs.push_back(Coordinate::bare(i));
    }
  }
  return Name(std::move(cs));
}

}  // namespace

Name encode_name(const Tree& t) {
  if (t.is_leaf()) return Name{};
  std::vector<Interval> ivs;
  int next = 0;
  collect(t, next, ivs);
  return from_intervals(next, ivs);
}

Tree decode_name(const Name& v) {
  if (v.is_unit()) return Tree{};
  const int n = v.size();
  std::vector<int> opens(n + 2, 0);
  for (const auto& c : v.coords())
    if (c.kind == Coordinate::Kind::Close)
      for (int e : c.exps) {
        if (e > n) throw InvalidName(v.str() + ": exponent " + std::to_string(e) + " past the end");
        ++opens[e];
      }
  std::vector<std::vector<Tree>> stack;
  Tree result;
  bool done = false;
  for (int j = 1; j <= n; ++j) {
    if (done) throw InvalidName(v.str() + ": word closes before its last leaf");
    for (int k = 0; k < opens[j]; ++k) stack.emplace_back();
    if (stack.empty()) throw InvalidName(v.str() + ": leaf " + std::to_string(j) + " is outside every parenthesis");
    stack.back().emplace_back();
    const auto& c = v[j - 1];
    if (c.kind != Coordinate::Kind::Close) continue;
    for (std::size_t k = 0; k < c.exps.size(); ++k) {
      if (stack.empty()) throw InvalidName(v.str() + ": unbalanced parentheses");
      auto kids = std::move(stack.back());
      stack.pop_back();
      if (kids.size() < 2) throw InvalidName(v.str() + ": unary vertex");
      Tree node = graft(std::move(kids));
      if (stack.empty()) {
        result = std::move(node);
        done = true;
      } else {
        stack.back().push_back(std::move(node));
      }
    }
  }
  if (!done || !stack.empty()) throw InvalidName(v.str() + ": unbalanced parentheses");
  if (!(encode_name(result) == v)) throw InvalidName(v.str() + " is not the name of a tree");
  return result;
}

void validate(const Name& v) { (void)decode_name(v); }

bool leq_name(const Name& v, const Name& w) {
  if (v.size() != w.size())
    throw DegreeMismatch("cannot compare names of degrees " + std::to_string(v.degree()) +
                         " and " + std::to_string(w.degree()));
  if (v.is_unit()) return true;
  for (int i = 0; i < v.size(); ++i)
    if (compare(v[i], w[i]) > 0) return false;
  return true;
}

Name parse_literal(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.find_first_of("0123456789") == std::string_view::npos)
    return encode_name(Tree::parse(text));
  Name v = Name::parse(text);
  validate(v);
  return v;
}

bool name_literal_less(const Name& v, const Name& w) {
  if (v.size() != w.size()) return v.size() < w.size();
  for (int i = 0; i < static_cast<int>(v.coords().size()); ++i)
    if (auto c = compare(v[i], w[i]); c != 0) return c < 0;
  return false;
}

bool less_name(const Name& v, const Name& w) { return leq_name(v, w) && !(v == w); }

Coordinate shift(int k, const Coordinate& c, ShiftMode mode) {
  switch (c.kind) {
    case Coordinate::Kind::Open:
      return Coordinate::open(c.pos + k);
    case Coordinate::Kind::Bare:
      return Coordinate::bare(c.pos + k);
    case Coordinate::Kind::Close: {
      std::vector<int> e = c.exps;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (!(mode == ShiftMode::Tri && i == 0 && e[0] == 1)) e[i] += k;
      return Coordinate::close(std::move(e));
    }
  }
  return c;
}

namespace {

std::vector<int> merge_close(std::vector<int> a, const std::vector<int>& b, int offset) {
  for (int e : b) a.push_back(e + offset);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

Name graft_names(const std::vector<Name>& parts) {
  if (parts.size() < 2)
    throw ArityError("graft_names needs at least 2 parts, got " + std::to_string(parts.size()));
  std::vector<Coordinate> out;
  int offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Name& p = parts[i];
    const bool last = i + 1 == parts.size();
    if (p.is_unit()) {
      if (i == 0)
        out.push_back(Coordinate::open(1));
      else if (!last)
        out.push_back(Coordinate::bare(offset + 1));
      else
        out.push_back(Coordinate::close({1}));
    } else {
      for (int j = 0; j < p.size(); ++j) {
        Coordinate c = shift(offset, p[j], ShiftMode::Box);
        if (last && j + 1 == p.size()) c = Coordinate::close(merge_close({1}, p[j].exps, offset));
        out.push_back(std::move(c));
      }
    }
    offset += p.size();
  }
  return Name(std::move(out));
}

Name over(const Name& v, const Name& w) {
  if (v.is_unit()) return w;
  if (w.is_unit()) return v;
  std::vector<Coordinate> out = v.coords();
  const int k = v.size() - 1;
  for (int j = 1; j < w.size(); ++j) out.push_back(shift(k, w[j], ShiftMode::Tri));
  return Name(std::move(out));
}

Name under(const Name& v, const Name& w) {
  if (v.is_unit()) return w;
  if (w.is_unit()) return v;
  const int k = v.size() - 1;
  std::vector<Coordinate> out(v.coords().begin(), v.coords().end() - 1);
  for (int j = 0; j + 1 < w.size(); ++j) out.push_back(shift(k, w[j], ShiftMode::Box));
  out.push_back(Coordinate::close(merge_close(v.coords().back().exps, w.coords().back().exps, k)));
  return Name(std::move(out));
}

Name involute_name(const Name& v) {
  if (v.is_unit()) return v;
  const int n = v.size();
  std::vector<Coordinate> out;
  out.reserve(n);
  for (int i = n; i >= 1; --i) {
    const auto& c = v[i - 1];
    switch (c.kind) {
      case Coordinate::Kind::Close:
        out.push_back(Coordinate::open(n + 1 - i));
        break;
      case Coordinate::Kind::Bare:
        out.push_back(Coordinate::bare(n + 1 - i));
        break;
      case Coordinate::Kind::Open: {
        // every interval starting at i, read from the lists that close it
        std::vector<int> e;
        for (int j = n; j >= 1; --j) {
          const auto& d = v[j - 1];
          if (d.kind == Coordinate::Kind::Close &&
              std::binary_search(d.exps.begin(), d.exps.end(), i))
            e.push_back(n + 1 - j);
        }
        out.push_back(Coordinate::close(std::move(e)));
        break;
      }
    }
  }
  return Name(std::move(out));
}

std::vector<int> project_binary(const Name& v) {
  if (v.is_unit()) throw PreconditionError("project_binary needs degree >= 1");
  std::vector<int> out;
  for (int i = 0; i + 1 < v.size(); ++i) {
    const auto& c = v[i];
    out.push_back(c.kind == Coordinate::Kind::Close ? c.exps.front() : c.pos);
  }
  return out;
}

std::vector<Name> name_children(const Name& v) {
  Tree t = decode_name(v);
  std::vector<Name> out;
  for (const auto& k : t.children()) out.push_back(encode_name(k));
  return out;
}

}  // namespace atree
