#include "arithmetree/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "arithmetree/errors.hpp"
#include "arithmetree/grove.hpp"
#include "arithmetree/hopf.hpp"
#include "arithmetree/lattice.hpp"

namespace atree {

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

namespace check {

namespace {

CheckResult pass(std::string name, std::string detail = {}) {
  return {std::move(name), true, std::move(detail)};
}
CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

std::string lit(const Name& v) { return decode_name(v).str(); }

// all degree compositions (a, b) with a, b >= 1 and a + b <= max_total
std::vector<std::pair<int, int>> splits(int max_total) {
  std::vector<std::pair<int, int>> out;
  for (int s = 2; s <= max_total; ++s)
    for (int a = 1; a < s; ++a) out.emplace_back(a, s - a);
  return out;
}

std::vector<std::array<int, 3>> triples(int max_total) {
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a <= max_total; ++a)
    for (int b = 1; a + b <= max_total; ++b)
      for (int c = 1; a + b + c <= max_total; ++c) out.push_back({a, b, c});
  return out;
}

std::vector<Tree> binary_trees(int n) {
  std::vector<Tree> out;
  std::function<bool(const Tree&)> binary = [&](const Tree& t) {
    if (t.is_leaf()) return true;
    if (t.children().size() != 2) return false;
    return binary(t.children()[0]) && binary(t.children()[1]);
  };
  for (const auto& t : trees_of_degree(n))
    if (binary(t)) out.push_back(t);
  return out;
}

bool vec_leq(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace

CheckResult enumeration_counts(int max_n) {
  const std::vector<std::uint64_t> known{1, 1, 3, 11, 45, 197, 903, 4279};
  for (int n = 0; n <= max_n; ++n) {
    auto got = trees_of_degree(n).size();
    if (got != super_catalan(n))
      return fail("enumeration", "|T_" + std::to_string(n) + "| = " + std::to_string(got) +
                                     " but C_n = " + std::to_string(super_catalan(n)));
    if (n < static_cast<int>(known.size()) && got != known[n])
      return fail("enumeration", "|T_" + std::to_string(n) + "| = " + std::to_string(got));
    std::set<std::string> seen;
    for (const auto& t : trees_of_degree(n)) {
      if (t.degree() != n) return fail("enumeration", t.str() + " has wrong degree");
      seen.insert(t.str());
    }
    if (seen.size() != got) return fail("enumeration", "duplicates in T_" + std::to_string(n));
  }
  return pass("enumeration", "|T_n| = C_n for n <= " + std::to_string(max_n));
}

CheckResult involution_is_involution(int max_n) {
  for (int n = 0; n <= max_n; ++n)
    for (const auto& t : trees_of_degree(n)) {
      auto d = involution(t);
      if (d.degree() != n || !(involution(d) == t))
        return fail("involution", t.str());
    }
  return pass("involution");
}

CheckResult recurrence(int max_n) {
  for (int n = 1; n <= max_n; ++n)
    if (!recurrence_check(n))
      return fail("recurrence", "n = " + std::to_string(n) + ": " +
                                    std::to_string(recurrence_value(n)) + " vs " +
                                    std::to_string(super_catalan(n)));
  return pass("recurrence", "n <= " + std::to_string(max_n));
}

CheckResult invariant_counts(int max_n) {
  const std::vector<std::uint64_t> printed{1, 1, 3, 3, 11, 11};
  for (int n = 1; n <= max_n; ++n) {
    auto c = invariant_count(n);
    if (c != super_catalan((n + 1) / 2))
      return fail("invariants", "n = " + std::to_string(n) + ": " + std::to_string(c));
    if (n <= 6 && c != printed[n - 1])
      return fail("invariants", "n = " + std::to_string(n) + " differs from the printed value");
  }
  return pass("invariants", "n <= " + std::to_string(max_n));
}

CheckResult graft_on_leaf_mirror(int max_n) {
  for (int a = 0; a <= max_n; ++a)
    for (int b = 1; b <= max_n; ++b)
      for (const auto& t : trees_of_degree(a))
        for (const auto& h : trees_of_degree(b))
          for (int i = 1; i <= h.leaves(); ++i)
            if (!(involution(graft_on_leaf(t, i, h)) ==
                  graft_on_leaf(involution(t), h.leaves() + 1 - i, involution(h))))
              return fail("graft_on_leaf mirror", t.str() + " on leaf " + std::to_string(i) +
                                                      " of " + h.str());
  return pass("graft_on_leaf mirror");
}

CheckResult name_tables() {
  const std::vector<std::pair<const char*, const char*>> table{
      {"((oo)o)", "(1,1+h^-1,1+h^-1)"},
      {"(ooo)", "(1,1+2h^-1,1+h^-1)"},
      {"(o(oo))", "(1,2,1+h^-1+h^-2)"},
      {"(((oo)o)o)", "(1,1+h^-1,1+h^-1,1+h^-1)"},
      {"((oo)oo)", "(1,1+h^-1,2+3h^-1,1+h^-1)"},
      {"((ooo)o)", "(1,1+2h^-1,1+h^-1,1+h^-1)"},
      {"((o(oo))o)", "(1,2,1+h^-1+h^-2,1+h^-1)"},
      {"((oo)(oo))", "(1,1+h^-1,3,1+h^-1+h^-3)"},
      {"(oooo)", "(1,1+2h^-1,2+3h^-1,1+h^-1)"},
      {"(o(oo)o)", "(1,2,2+h^-2,1+h^-1)"},
      {"(oo(oo))", "(1,1+2h^-1,3,1+h^-1+h^-3)"},
      {"(o(ooo))", "(1,2,2+3h^-1,1+h^-1+h^-2)"},
      {"(o((oo)o))", "(1,2,2+h^-2,1+h^-1+h^-2)"},
      {"(o(o(oo)))", "(1,2,3,1+h^-1+h^-2+h^-3)"}};
  for (const auto& [t, v] : table) {
    auto got = encode_name(Tree::parse(t)).str();
    if (got != v) return fail("name tables", std::string(t) + " encodes to " + got);
  }
  return pass("name tables", "3 names of T_2 and 11 of T_3");
}

CheckResult name_round_trip(int max_n) {
  for (int n = 0; n <= max_n; ++n)
    for (const auto& t : trees_of_degree(n)) {
      auto v = encode_name(t);
      if (!(decode_name(v) == t)) return fail("round trip", t.str());
      if (!(Name::parse(v.str()) == v)) return fail("name literal round trip", v.str());
    }
  return pass("round trip");
}

CheckResult mirror_coherence(int max_n) {
  for (int n = 0; n <= max_n; ++n)
    for (const auto& t : trees_of_degree(n))
      if (!(involute_name(encode_name(t)) == encode_name(involution(t))))
        return fail("mirror coherence", t.str());
  return pass("mirror coherence");
}

CheckResult graft_formulas(int max_total) {
  for (int n = 1; n <= max_total; ++n)
    for (const auto& t : trees_of_degree(n)) {
      std::vector<Name> parts;
      for (const auto& k : t.children()) parts.push_back(encode_name(k));
      if (!(graft_names(parts) == encode_name(t))) return fail("graft_names", t.str());
    }
  for (int a = 0; a <= max_total; ++a)
    for (int b = 0; a + b <= max_total; ++b)
      for (const auto& s : trees_of_degree(a))
        for (const auto& t : trees_of_degree(b)) {
          auto v = encode_name(s), w = encode_name(t);
          if (!(over(v, w) == encode_name(graft_on_leaf(s, 1, t))))
            return fail("over", s.str() + " over " + t.str());
          if (!(under(v, w) == encode_name(graft_on_leaf(t, s.leaves(), s))))
            return fail("under", s.str() + " under " + t.str());
          if (a > 0 && b > 0 && !less_name(over(v, w), under(v, w)))
            return fail("over < under", s.str() + ", " + t.str());
        }
  return pass("graft formulas", "combined degree <= " + std::to_string(max_total));
}

CheckResult anti_automorphism(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const auto& ns = names_of_degree(n);
    std::vector<Name> dag;
    for (const auto& v : ns) dag.push_back(involute_name(v));
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = 0; j < ns.size(); ++j)
        if (less_name(ns[i], ns[j]) != less_name(dag[j], dag[i]))
          return fail("anti-automorphism", lit(ns[i]) + ", " + lit(ns[j]));
  }
  return pass("anti-automorphism");
}

CheckResult over_under_duality(int max_total) {
  for (int a = 0; a <= max_total; ++a)
    for (int b = 0; a + b <= max_total; ++b)
      for (const auto& v : names_of_degree(a))
        for (const auto& w : names_of_degree(b)) {
          auto vd = involute_name(v), wd = involute_name(w);
          if (!(involute_name(over(v, w)) == under(wd, vd)) ||
              !(involute_name(under(v, w)) == over(wd, vd)))
            return fail("over/under duality", lit(v) + ", " + lit(w));
        }
  return pass("over/under duality");
}

CheckResult projection(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const auto& ns = names_of_degree(n);
    auto bins = binary_trees(n);
    std::set<std::string> binset;
    for (const auto& t : bins) binset.insert(encode_name(t).str());
    std::vector<std::vector<int>> P;
    for (const auto& v : ns) P.push_back(project_binary(v));
    if (n <= 5) {
      for (std::size_t i = 0; i < ns.size(); ++i)
        for (std::size_t j = 0; j < ns.size(); ++j) {
          if (!less_name(ns[i], ns[j])) continue;
          if (!vec_leq(P[i], P[j])) return fail("projection monotone", lit(ns[i]) + " < " + lit(ns[j]));
          if (binset.count(ns[i].str()) && binset.count(ns[j].str()) && P[i] == P[j])
            return fail("projection strict on binary trees", lit(ns[i]) + " < " + lit(ns[j]));
        }
    }
    std::set<std::vector<int>> image, bimage;
    for (const auto& p : P) image.insert(p);
    for (const auto& t : bins) bimage.insert(project_binary(encode_name(t)));
    if (bimage.size() != bins.size())
      return fail("projection injective", "degree " + std::to_string(n));
    if (n <= 5 && (image != bimage || image.size() != catalan(n)))
      return fail("projection image", "degree " + std::to_string(n) + ": " +
                                          std::to_string(image.size()) + " vectors");
  }
  return pass("projection");
}

CheckResult join_meet(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const auto& p = Poset::of_degree(n);
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j) {
        const auto& v = p.name(i);
        const auto& w = p.name(j);
        Name jb = p.name(p.join(i, j)), mb = p.name(p.meet(i, j));
        if (!(join(v, w) == jb)) return fail("join", lit(v) + " v " + lit(w));
        if (!(meet(v, w) == mb)) return fail("meet", lit(v) + " ^ " + lit(w));
      }
  }
  return pass("join/meet", "closed forms equal brute force for n <= " + std::to_string(max_n));
}

CheckResult moves_complete(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    int bad = 0;
    std::string first;
    for (const auto& v : names_of_degree(n)) {
      auto closure = moves_closure(v);
      auto ups = up_set(v);
      if (closure != ups) {
        if (!bad) {
          for (const auto& w : ups)
            if (!closure.count(w)) {
              first = lit(v) + " < " + lit(w) + " is not generated";
              break;
            }
          if (first.empty()) first = lit(v) + ": moves leave the up-set";
        }
        ++bad;
      }
    }
    if (bad)
      return fail("moves", "n = " + std::to_string(n) + ": " + std::to_string(bad) +
                               " elements whose up-set is not generated, e.g. " + first);
  }
  return pass("moves", "closure = up-set for n <= " + std::to_string(max_n));
}

CheckResult moebius_closed_form(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    int nonzero = 0;
    for (const auto& v : names_of_degree(n)) {
      int c = moebius(v, MoebiusMode::Closed), b = moebius(v, MoebiusMode::Brute);
      if (c != b)
        return fail("moebius", lit(v) + ": closed " + std::to_string(c) + ", brute " + std::to_string(b));
      if (b) ++nonzero;
    }
    if (nonzero != 1 << (n - 1))
      return fail("moebius", "n = " + std::to_string(n) + ": " + std::to_string(nonzero) +
                                 " nonzero values");
  }
  return pass("moebius", "closed = brute, 2^(n-1) nonzero, n <= " + std::to_string(max_n));
}

CheckResult atoms_independent(int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    const auto& p = Poset::of_degree(n);
    auto as = atoms(n);
    std::set<Name> cov;
    for (int k : p.upper_covers(p.bottom())) cov.insert(p.name(k));
    if (cov != std::set<Name>(as.begin(), as.end()))
      return fail("atoms", "atoms of T_" + std::to_string(n) + " differ from covers of the minimum");
    const Name cor = encode_name(corolla(n));
    const std::size_t k = as.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      int j = -1;
      for (std::size_t b = 0; b < k; ++b)
        if (mask >> b & 1) j = j < 0 ? p.index(as[b]) : p.join(j, p.index(as[b]));
      const bool full = mask == (std::size_t{1} << k) - 1;
      if (full && !(p.name(j) == cor)) return fail("atoms", "join of all atoms is " + lit(p.name(j)));
      if (!full && !(less_name(p.name(j), cor)))
        return fail("atoms", "a proper subset joins to " + lit(p.name(j)));
    }
  }
  return pass("atoms");
}

CheckResult cover_duality(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const auto& p = Poset::of_degree(n);
    for (int i = 0; i < p.size(); ++i) {
      std::set<int> lower;
      for (int k : p.lower_covers(p.index(involute_name(p.name(i))))) lower.insert(k);
      for (int k : p.upper_covers(i))
        if (!lower.count(p.index(involute_name(p.name(k)))))
          return fail("cover duality", lit(p.name(i)) + " -> " + lit(p.name(k)));
      if (lower.size() != p.upper_covers(i).size())
        return fail("cover duality", lit(p.name(i)));
    }
  }
  return pass("cover duality");
}

CheckResult moebius_projection(int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::vector<int>> img;
    {
      std::set<std::vector<int>> s;
      for (const auto& v : names_of_degree(n)) s.insert(project_binary(v));
      img.assign(s.begin(), s.end());
    }
    // mu from the minimum of the image, ordered componentwise
    const std::size_t N = img.size();
    std::vector<std::size_t> order(N);
    for (std::size_t i = 0; i < N; ++i) order[i] = i;
    auto below = [&](std::size_t i) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < N; ++j) c += vec_leq(img[j], img[i]);
      return c;
    };
    std::vector<std::size_t> bc(N);
    for (std::size_t i = 0; i < N; ++i) bc[i] = below(i);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return bc[a] < bc[b]; });
    std::map<std::vector<int>, int> mu;
    for (auto i : order) {
      if (bc[i] == 1) {
        mu[img[i]] = 1;
        continue;
      }
      int s = 0;
      for (std::size_t j = 0; j < N; ++j)
        if (j != i && vec_leq(img[j], img[i])) s += mu[img[j]];
      mu[img[i]] = -s;
    }
    for (const auto& v : names_of_degree(n))
      if (moebius(v, MoebiusMode::Closed) != 0 && mu[project_binary(v)] == 0)
        return fail("moebius under projection", lit(v));
  }
  return pass("moebius under projection");
}

CheckResult left_modular_lemmas(int max_n) {
  for (int n = 3; n <= max_n; ++n) {
    const auto& lo = Poset::of_degree(n - 1);
    const auto& hi = Poset::of_degree(n);
    int found = 0, graft_bad = 0, dagger_bad = 0;
    std::string example;
    for (int u = 0; u < lo.size(); ++u) {
      if (!is_left_modular(lo, u)) continue;
      ++found;
      if (!is_left_modular(lo, lo.index(involute_name(lo.name(u))))) ++dagger_bad;
      Tree g = graft({decode_name(lo.name(u)), Tree{}});
      if (!is_left_modular(hi, hi.index(encode_name(g)))) {
        if (!graft_bad) example = decode_name(lo.name(u)).str() + " -> " + g.str();
        ++graft_bad;
      }
    }
    if (graft_bad || dagger_bad)
      return fail("left-modular lemmas",
                  "n = " + std::to_string(n) + ": of " + std::to_string(found) +
                      " left-modular u, " + std::to_string(graft_bad) +
                      " lose left-modularity under u v (0) (e.g. " + example + "), " +
                      std::to_string(dagger_bad) + " under the involution");
  }
  return pass("left-modular lemmas");
}

CheckResult ll_structure(int min_n, int max_n) {
  for (int n = min_n; n <= max_n; ++n) {
    try {
      auto chain = left_modular_chain(n);
      const std::size_t want = static_cast<std::size_t>((n - 1) * (n - 1) + n);
      if (chain.size() != want) return fail("LL structure", "wrong chain length");
      if (!level_condition(chain)) return fail("LL structure", "level condition fails");
      auto cp = characteristic_polynomial(n);
      CharPoly expect;
      expect.roots[0] = (n - 1) * (n - 1);
      expect.roots[1] = n - 1;
      if (!(cp == expect)) return fail("LL structure", "chi = " + cp.str());
    } catch (const SearchFailure& e) {
      const auto& p = Poset::of_degree(n);
      int lm = 0;
      for (int x = 0; x < p.size(); ++x) lm += is_left_modular(p, x);
      return fail("LL structure", "n = " + std::to_string(n) + ": " + e.what() + "; T_" +
                                      std::to_string(n) + " has only " + std::to_string(lm) +
                                      " left-modular elements out of " + std::to_string(p.size()));
    }
  }
  return pass("LL structure", "n = " + std::to_string(min_n) + ".." + std::to_string(max_n));
}

namespace {

LinComb op(Op o, const LinComb& a, const LinComb& b) { return tri_op(o, a, b); }
LinComb st(const LinComb& a, const LinComb& b) { return star(a, b); }

}  // namespace

CheckResult trialgebra_axioms(int max_total) {
  using enum Op;
  for (auto [a, b, c] : triples(max_total))
    for (const auto& x0 : names_of_degree(a))
      for (const auto& y0 : names_of_degree(b))
        for (const auto& z0 : names_of_degree(c)) {
          LinComb x(x0), y(y0), z(z0);
          const std::pair<LinComb, LinComb> ax[] = {
              {op(Prec, op(Prec, x, y), z), op(Prec, x, st(y, z))},
              {op(Prec, op(Succ, x, y), z), op(Succ, x, op(Prec, y, z))},
              {op(Succ, st(x, y), z), op(Succ, x, op(Succ, y, z))},
              {op(Bullet, op(Succ, x, y), z), op(Succ, x, op(Bullet, y, z))},
              {op(Bullet, op(Prec, x, y), z), op(Bullet, x, op(Succ, y, z))},
              {op(Prec, op(Bullet, x, y), z), op(Bullet, x, op(Prec, y, z))},
              {op(Bullet, op(Bullet, x, y), z), op(Bullet, x, op(Bullet, y, z))}};
          for (int k = 0; k < 7; ++k)
            if (!(ax[k].first == ax[k].second))
              return fail("trialgebra axioms", "axiom " + std::to_string(k + 1) + " fails on " +
                                                   lit(x0) + ", " + lit(y0) + ", " + lit(z0));
        }
  return pass("trialgebra axioms", "total degree <= " + std::to_string(max_total));
}

CheckResult star_partition(int max_total) {
  for (auto [a, b] : splits(max_total))
    for (const auto& v : names_of_degree(a))
      for (const auto& w : names_of_degree(b)) {
        std::multiset<Name> parts;
        for (Op o : {Op::Prec, Op::Succ, Op::Bullet})
          for (const auto& u : tri_terms(o, v, w)) parts.insert(u);
        const auto& iv = star_interval(v, w);
        if (parts != std::multiset<Name>(iv.begin(), iv.end())) {
          std::string d = lit(v) + " * " + lit(w) + ": interval has " + std::to_string(iv.size()) +
                          " trees, < > . give " + std::to_string(parts.size());
          for (const auto& u : iv)
            if (!parts.count(u)) d += "; " + lit(u) + " is in no part";
          return fail("star partition", d);
        }
      }
  return pass("star partition", "total degree <= " + std::to_string(max_total));
}

CheckResult star_associativity(int max_total) {
  for (auto [a, b, c] : triples(max_total))
    for (const auto& u : names_of_degree(a))
      for (const auto& v : names_of_degree(b))
        for (const auto& w : names_of_degree(c)) {
          LinComb l = star(star(LinComb(u), LinComb(v)), LinComb(w));
          LinComb r = star(LinComb(u), star(LinComb(v), LinComb(w)));
          if (!(l == r)) return fail("star associativity", lit(u) + ", " + lit(v) + ", " + lit(w));
          // the triple interval
          Name lo = over(over(u, v), w), hi = under(under(u, v), w);
          LinComb iv;
          for (const auto& t : names_of_degree(a + b + c))
            if (leq_name(lo, t) && leq_name(t, hi)) iv.add(t, 1);
          if (!(iv == l)) return fail("triple interval", lit(u) + ", " + lit(v) + ", " + lit(w));
        }
  return pass("star associativity", "total degree <= " + std::to_string(max_total));
}

CheckResult trialgebra_involution(int max_total) {
  auto dag = [](const LinComb& x) {
    LinComb out;
    for (const auto& [v, c] : x.terms()) out.add(involute_name(v), c);
    return out;
  };
  for (auto [a, b] : splits(max_total))
    for (const auto& v : names_of_degree(a))
      for (const auto& w : names_of_degree(b)) {
        auto vd = involute_name(v), wd = involute_name(w);
        if (!(dag(star(v, w)) == star(wd, vd)) ||
            !(dag(tri_op(Op::Prec, v, w)) == tri_op(Op::Succ, wd, vd)) ||
            !(dag(tri_op(Op::Bullet, v, w)) == tri_op(Op::Bullet, wd, vd)))
          return fail("trialgebra involution", lit(v) + ", " + lit(w));
      }
  return pass("trialgebra involution");
}

CheckResult universal_expressions(int max_n) {
  const auto ops = trialgebra_ops();
  const LinComb A(encode_name(corolla(1)));
  for (int n = 1; n <= max_n; ++n)
    for (const auto& t : trees_of_degree(n)) {
      auto e = universal_expression(t);
      if (e.gen_count() != n) return fail("universal expression", t.str() + ": wrong GEN count");
      if (!(eval_universal(e, ops, A) == LinComb(encode_name(t))))
        return fail("universal expression", t.str() + " from " + e.str());
    }
  return pass("universal expression", "eval(omega_t) = t for degree <= " + std::to_string(max_n));
}

CheckResult free_generation(int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    const auto& basis = names_of_degree(n);
    std::map<Name, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
    std::vector<std::vector<Rational>> rows;
    for (int a = 1; a < n; ++a)
      for (const auto& v : names_of_degree(a))
        for (const auto& w : names_of_degree(n - a))
          for (Op o : {Op::Prec, Op::Succ, Op::Bullet}) {
            std::vector<Rational> r(basis.size(), 0);
            for (const auto& u : tri_terms(o, v, w)) r[col.at(u)] += 1;
            rows.push_back(std::move(r));
          }
    // rank by elimination
    std::size_t rank = 0;
    for (std::size_t c = 0; c < basis.size() && rank < rows.size(); ++c) {
      std::size_t piv = rank;
      while (piv < rows.size() && is_zero(rows[piv][c])) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[rank], rows[piv]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || is_zero(rows[r][c])) continue;
        Rational f = rows[r][c] / rows[rank][c];
        for (std::size_t k = c; k < basis.size(); ++k) rows[r][k] -= f * rows[rank][k];
      }
      ++rank;
    }
    if (rank != basis.size())
      return fail("free generation", "degree " + std::to_string(n) + ": rank " +
                                         std::to_string(rank) + " of " + std::to_string(basis.size()));
  }
  return pass("free generation", "products span T_n for n <= " + std::to_string(max_n));
}

CheckResult grove_example() {
  auto A = Grove::single(encode_name(corolla(1)));
  auto s = dend_add(A, A).str(true);
  if (s != "((oo)o) u (ooo) u (o(oo))") return fail("A + A", s);
  return pass("A + A", s);
}

CheckResult grove_closure(int max_total) {
  // every pair of groves is a sub-pair of the total groves, so this covers them all
  for (auto [a, b] : splits(max_total)) {
    try {
      dend_add(total_grove(a), total_grove(b));
    } catch (const Error& e) {
      return fail("grove closure", "total(" + std::to_string(a) + ") + total(" +
                                       std::to_string(b) + "): " + e.what());
    }
  }
  return pass("grove closure", "total degree <= " + std::to_string(max_total));
}

CheckResult total_grove_identity(int max_total) {
  for (auto [a, b] : splits(max_total)) {
    const std::string ab = std::to_string(a) + " + " + std::to_string(b);
    try {
      if (!(dend_add(total_grove(a), total_grove(b)) == total_grove(a + b)))
        return fail("total groves", ab);
    } catch (const Error& e) {
      return fail("total groves", ab + ": " + e.what());
    }
  }
  return pass("total groves");
}

CheckResult grove_axioms(int max_total) {
  using enum GroveOp;
  auto L = [](const Grove& x, const Grove& y) { return grove_op(Left, x, y); };
  auto R = [](const Grove& x, const Grove& y) { return grove_op(Right, x, y); };
  auto M = [](const Grove& x, const Grove& y) { return grove_op(Mid, x, y); };
  for (auto [a, b, c] : triples(max_total))
    for (const auto& x0 : names_of_degree(a))
      for (const auto& y0 : names_of_degree(b))
        for (const auto& z0 : names_of_degree(c)) {
          auto x = Grove::single(x0), y = Grove::single(y0), z = Grove::single(z0);
          const std::pair<Grove, Grove> ax[] = {
              {L(L(x, y), z), L(x, dend_add(y, z))}, {L(R(x, y), z), R(x, L(y, z))},
              {R(dend_add(x, y), z), R(x, R(y, z))}, {M(R(x, y), z), R(x, M(y, z))},
              {M(L(x, y), z), M(x, R(y, z))},        {L(M(x, y), z), M(x, L(y, z))},
              {M(M(x, y), z), M(x, M(y, z))}};
          for (int k = 0; k < 7; ++k)
            if (!(ax[k].first == ax[k].second))
              return fail("grove axioms", "axiom " + std::to_string(k + 1) + " fails on " +
                                              lit(x0) + ", " + lit(y0) + ", " + lit(z0));
          std::set<Name> parts;
          std::size_t total = 0;
          for (auto o : {Left, Right, Mid}) {
            auto g = grove_op(o, x, y);
            total += g.size();
            parts.insert(g.members().begin(), g.members().end());
          }
          if (total != parts.size() || !(Grove(parts) == dend_add(x, y)))
            return fail("grove split", lit(x0) + ", " + lit(y0));
        }
  return pass("grove axioms", "total degree <= " + std::to_string(max_total));
}

CheckResult sandwich_unique(int max_total) {
  for (auto [n, m] : splits(max_total))
    for (const auto& w : names_of_degree(n + m)) {
      try {
        if (decompose_pair(w, n, m) != decompose_pair_brute(w, n, m))
          return fail("sandwich", lit(w) + " split " + std::to_string(n) + "+" + std::to_string(m));
      } catch (const Error& e) {
        return fail("sandwich", e.what());
      }
    }
  return pass("sandwich", "unique for n+m <= " + std::to_string(max_total));
}

CheckResult corolla_laws(int max_sum, int max_product) {
  for (int p = 1; p < max_sum; ++p)
    for (int q = 1; p + q <= max_sum; ++q) {
      auto cp = Grove::single(encode_name(corolla(p))), cq = Grove::single(encode_name(corolla(q)));
      if (!(grove_op(GroveOp::Mid, cp, cq) == Grove::single(encode_name(corolla(p + q)))))
        return fail("corolla sum", std::to_string(p) + " + " + std::to_string(q));
    }
  for (int p = 1; p <= max_product; ++p)
    for (int q = 1; p * q <= max_product; ++q) {
      auto cp = Grove::single(encode_name(corolla(p))), cq = Grove::single(encode_name(corolla(q)));
      if (!(dend_mul(cp, cq) == Grove::single(encode_name(corolla(p * q)))))
        return fail("corolla product", std::to_string(p) + " x " + std::to_string(q));
    }
  return pass("corolla laws");
}

CheckResult mul_associative(int max_product) {
  for (int a = 1; a <= max_product; ++a)
    for (int b = 1; a * b <= max_product; ++b)
      for (int c = 1; a * b * c <= max_product; ++c)
        for (const auto& u : names_of_degree(a))
          for (const auto& v : names_of_degree(b))
            for (const auto& w : names_of_degree(c)) {
              auto U = Grove::single(u), V = Grove::single(v), W = Grove::single(w);
              if (!(dend_mul(dend_mul(U, V), W) == dend_mul(U, dend_mul(V, W))))
                return fail("mul associative", lit(u) + ", " + lit(v) + ", " + lit(w));
            }
  return pass("mul associative", "degree product <= " + std::to_string(max_product));
}

CheckResult mul_left_distributive(int max_result) {
  for (int a = 1; a < max_result; ++a)
    for (int b = 1; a + b <= max_result; ++b)
      for (int c = 1; (a + b) * c <= max_result; ++c)
        for (const auto& u : names_of_degree(a))
          for (const auto& v : names_of_degree(b))
            for (const auto& w : names_of_degree(c)) {
              auto U = Grove::single(u), V = Grove::single(v), W = Grove::single(w);
              if (!(dend_mul(dend_add(U, V), W) == dend_add(dend_mul(U, W), dend_mul(V, W))))
                return fail("mul left distributive", lit(u) + ", " + lit(v) + ", " + lit(w));
            }
  return pass("mul left distributive");
}

CheckResult grove_involution(int max_total) {
  for (auto [a, b] : splits(max_total))
    for (const auto& v : names_of_degree(a))
      for (const auto& w : names_of_degree(b)) {
        auto V = Grove::single(v), W = Grove::single(w);
        auto Vd = involute(V), Wd = involute(W);
        if (!(involute(dend_add(V, W)) == dend_add(Wd, Vd)) ||
            !(involute(grove_op(GroveOp::Left, V, W)) == grove_op(GroveOp::Right, Wd, Vd)) ||
            !(involute(grove_op(GroveOp::Mid, V, W)) == grove_op(GroveOp::Mid, Wd, Vd)))
          return fail("grove involution", lit(v) + ", " + lit(w));
        if (a * b <= max_total + 2 && !(involute(dend_mul(V, W)) == dend_mul(Vd, Wd)))
          return fail("mul involution", lit(v) + ", " + lit(w));
      }
  return pass("grove involution");
}

CheckResult coassociativity(int max_n) {
  for (int n = 1; n <= max_n; ++n)
    for (const auto& v : names_of_degree(n))
      if (!(coassoc_left(v) == coassoc_right(v))) return fail("coassociativity", lit(v));
  return pass("coassociativity", "degree <= " + std::to_string(max_n));
}

CheckResult counit_laws(int max_n) {
  for (int n = 0; n <= max_n; ++n)
    for (const auto& v : names_of_degree(n)) {
      LinComb l, r;
      for (const auto& [ab, c] : coproduct(v).terms()) {
        if (ab.first.is_unit()) l.add(ab.second, c);
        if (ab.second.is_unit()) r.add(ab.first, c);
      }
      if (!(l == LinComb(v)) || !(r == LinComb(v))) return fail("counit", lit(v));
    }
  return pass("counit", "degree <= " + std::to_string(max_n));
}

CheckResult connected(int max_n) {
  for (int n = 1; n <= max_n; ++n)
    for (const auto& v : names_of_degree(n)) {
      auto d = coproduct(v);
      d.add({v, Name{}}, -1);
      d.add({Name{}, v}, -1);
      for (const auto& [ab, c] : d.terms()) {
        int a = ab.first.degree(), b = ab.second.degree();
        if (a <= 0 || a >= n || b <= 0 || b >= n) return fail("connected", lit(v));
      }
    }
  return pass("connected");
}

CheckResult hopf_morphism(int max_total) {
  for (auto [a, b] : splits(max_total))
    for (const auto& v : names_of_degree(a))
      for (const auto& w : names_of_degree(b))
        for (Op o : {Op::Prec, Op::Succ, Op::Bullet}) {
          auto lhs = coproduct(tri_op(o, v, w));
          auto rhs = tensor_op(o, coproduct(v), coproduct(w));
          if (!(lhs == rhs)) {
            const char* s = o == Op::Prec ? " < " : o == Op::Succ ? " > " : " . ";
            return fail("coproduct morphism", lit(v) + s + lit(w) + ": Delta gives " + to_text(lhs) +
                                                  "; tensor product gives " + to_text(rhs));
          }
        }
  return pass("coproduct morphism", "total degree <= " + std::to_string(max_total));
}

CheckResult primitives(int max_corolla) {
  for (int k = 1; k <= max_corolla; ++k)
    if (!is_primitive(LinComb(encode_name(corolla(k)))))
      return fail("primitives", corolla(k).str() + " is not primitive");
  return pass("primitives");
}

CheckResult primitive_closure(int max_n) {
  std::vector<Name> prims;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& v : names_of_degree(n))
      if (is_primitive(LinComb(v))) prims.push_back(v);
  for (const auto& v : prims)
    for (const auto& w : prims)
      if (v.degree() + w.degree() <= max_n && !is_primitive(tri_op(Op::Bullet, v, w)))
        return fail("primitive closure", lit(v) + " . " + lit(w));
  return pass("primitive closure", std::to_string(prims.size()) + " primitive basis elements");
}

CheckResult primitive_combinations(int max_p) {
  const std::vector<Name> vs{encode_name(corolla(1)), encode_name(corolla(2))};
  for (const auto& v : vs)
    for (int p = 1; p <= max_p; ++p) {
      std::vector<std::vector<Rational>> lambdas;
      std::vector<Rational> l(2 * p, 0);
      l[0] = 1;
      l[2 * p - 1] = -1;
      lambdas.push_back(l);
      std::vector<Rational> m(2 * p);
      Rational s = 0;
      for (int i = 0; i + 1 < 2 * p; ++i) {
        m[i] = Rational(i + 1, 2);
        s += m[i];
      }
      m[2 * p - 1] = -s;
      lambdas.push_back(m);
      for (const auto& lam : lambdas)
        if (!is_primitive(primitive_combination(v, p, lam)))
          return fail("primitive combination", lit(v) + ", p = " + std::to_string(p));
    }
  return pass("primitive combination");
}

CheckResult integer_hopf(int max_nm, int max_r) {
  for (int n = 0; n <= max_nm; ++n)
    for (int m = 0; m <= max_nm; ++m) {
      IntElem a(static_cast<unsigned>(n)), b(static_cast<unsigned>(m));
      if (!(int_coproduct(int_add(a, b)) == int_tensor_add(int_coproduct(a), int_coproduct(b))))
        return fail("integer Hopf", "[" + std::to_string(n) + "] perp [" + std::to_string(m) + "]");
      if (n >= 1 && m >= 1 &&
          !(ext_map(int_add(a, b)) == tri_op(Op::Bullet, ext_map(a), ext_map(b))))
        return fail("ext", std::to_string(n) + ", " + std::to_string(m));
      for (unsigned r = 1; r <= static_cast<unsigned>(max_r); ++r) {
        if (!(int_coproduct(int_times(a, r)) == int_tensor_times(int_coproduct(a), r)))
          return fail("times r coalgebra", std::to_string(n) + " x " + std::to_string(r));
        if (!(int_times(int_add(a, b), r) == int_add(int_times(a, r), int_times(b, r))))
          return fail("times r algebra", std::to_string(n) + " x " + std::to_string(r));
      }
    }
  // coassociative and cocommutative
  for (int n = 0; n <= max_nm; ++n) {
    auto d = int_coproduct(IntElem(static_cast<unsigned>(n)));
    IntTensor sw;
    for (const auto& [k, c] : d.terms()) sw.add({k.second, k.first}, c);
    if (!(sw == d)) return fail("integer Hopf", "not cocommutative");
    Combination<std::vector<unsigned>> l, r;
    for (const auto& [k, c] : d.terms()) {
      const auto dl = int_coproduct(IntElem(k.first)), dr = int_coproduct(IntElem(k.second));
      for (const auto& [k2, c2] : dl.terms())
        l.add({k2.first, k2.second, k.second}, c * c2);
      for (const auto& [k2, c2] : dr.terms())
        r.add({k.first, k2.first, k2.second}, c * c2);
    }
    if (!(l == r)) return fail("integer Hopf", "not coassociative");
  }
  return pass("integer Hopf", "n, m <= " + std::to_string(max_nm));
}

CheckResult involutive_hopf() {
  auto r = determine_involutivity(3, 4);
  std::string d = std::string("degree <= 3: plain ") + (r.plain_small ? "holds" : "fails") +
                  ", swapped " + (r.swapped_small ? "holds" : "fails") + "; chosen " + r.chosen +
                  (r.chosen == "none" ? "" : r.chosen_large ? ", holds on degree 4" : ", fails on degree 4");
  if (r.chosen == "none" || !r.chosen_large) return fail("involutive Hopf", d);
  return pass("involutive Hopf", d);
}

}  // namespace check

std::vector<std::string> suite_names() { return {"counting", "lattice", "trialgebra", "grove", "hopf"}; }

SuiteReport run_suite(const std::string& suite, int k) {
  using namespace check;
  using Thunk = std::pair<const char*, std::function<CheckResult()>>;
  auto cap = [&](int bound) { return std::min(k, bound); };
  std::vector<Thunk> plan;
  if (suite == "counting") {
    plan = {{"enumeration", [&] { return enumeration_counts(cap(7)); }},
            {"involution", [&] { return involution_is_involution(cap(7)); }},
            {"recurrence", [&] { return recurrence(cap(8)); }},
            {"invariants", [&] { return invariant_counts(cap(8)); }},
            {"graft_on_leaf mirror", [&] { return graft_on_leaf_mirror(cap(3)); }}};
  } else if (suite == "lattice") {
    plan = {{"name tables", [] { return name_tables(); }},
            {"round trip", [&] { return name_round_trip(cap(6)); }},
            {"mirror coherence", [&] { return mirror_coherence(cap(5)); }},
            {"graft formulas", [&] { return graft_formulas(cap(5)); }},
            {"anti-automorphism", [&] { return anti_automorphism(cap(5)); }},
            {"over/under duality", [&] { return over_under_duality(cap(5)); }},
            {"projection", [&] { return projection(cap(6)); }},
            {"join/meet", [&] { return join_meet(cap(5)); }},
            {"moves", [&] { return moves_complete(cap(4)); }},
            {"moebius", [&] { return moebius_closed_form(cap(5)); }},
            {"atoms", [&] { return atoms_independent(cap(5)); }},
            {"cover duality", [&] { return cover_duality(cap(5)); }},
            {"moebius under projection", [&] { return moebius_projection(cap(4)); }},
            {"left-modular lemmas", [&] { return left_modular_lemmas(cap(4)); }},
            {"LL structure", [&] { return ll_structure(2, cap(5)); }}};
  } else if (suite == "trialgebra") {
    plan = {{"trialgebra axioms", [&] { return trialgebra_axioms(cap(6)); }},
            {"star partition", [&] { return star_partition(cap(6)); }},
            {"star associativity", [&] { return star_associativity(cap(6)); }},
            {"trialgebra involution", [&] { return trialgebra_involution(cap(5)); }},
            {"universal expression", [&] { return universal_expressions(cap(5)); }},
            {"free generation", [&] { return free_generation(cap(5)); }}};
  } else if (suite == "grove") {
    plan = {{"A + A", [] { return grove_example(); }},
            {"grove closure", [&] { return grove_closure(cap(5)); }},
            {"total groves", [&] { return total_grove_identity(cap(6)); }},
            {"grove axioms", [&] { return grove_axioms(cap(6)); }},
            {"sandwich", [&] { return sandwich_unique(cap(5)); }},
            {"corolla laws", [&] { return corolla_laws(cap(6), cap(6)); }},
            {"mul associative", [&] { return mul_associative(cap(6)); }},
            {"mul left distributive", [&] { return mul_left_distributive(cap(6)); }},
            {"grove involution", [&] { return grove_involution(cap(5)); }}};
  } else if (suite == "hopf") {
    plan = {{"coassociativity", [&] { return coassociativity(cap(4)); }},
            {"counit", [&] { return counit_laws(cap(5)); }},
            {"connected", [&] { return connected(cap(5)); }},
            {"coproduct morphism", [&] { return hopf_morphism(cap(4)); }},
            {"primitives", [&] { return primitives(cap(4)); }},
            {"primitive closure", [&] { return primitive_closure(cap(4)); }},
            {"primitive combination", [] { return primitive_combinations(2); }},
            {"integer Hopf", [] { return integer_hopf(10, 5); }},
            {"involutive Hopf", [] { return involutive_hopf(); }}};
  } else {
    throw PreconditionError("unknown suite '" + suite + "'");
  }
  SuiteReport r{suite, {}};
  for (const auto& [name, fn] : plan) {
    try {
      r.checks.push_back(fn());
    } catch (const Error& e) {
      r.checks.push_back({name, false, std::string("error: ") + e.what()});
    }
  }
  return r;
}

}  // namespace atree
