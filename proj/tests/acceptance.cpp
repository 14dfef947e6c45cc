// acceptance criteria 1-10, one PASS/FAIL line each
// usage: acceptance [--criterion N]
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "arithmetree/errors.hpp"
#include "arithmetree/lattice.hpp"
#include "arithmetree/verify.hpp"

using namespace atree;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::vector<std::function<CheckResult()>> checks;
};

CheckResult bounded_lattice(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const auto& p = Poset::of_degree(n);
    for (int i = 0; i < p.size(); ++i)
      if (!p.le(p.bottom(), i) || !p.le(i, p.top()))
        return {"bounded", false, "T_" + std::to_string(n) + " has no bottom or top"};
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j) {
        p.join(i, j);  // throws when a least upper bound is missing
        p.meet(i, j);
      }
  }
  return {"bounded", true, {}};
}

CheckResult recursion_count(int lo, int hi) {
  // enumeration against the independent count from the T_n recursion
  for (int n = lo; n <= hi; ++n)
    if (trees_of_degree(n).size() != super_catalan(n))
      return {"recursion count", false, "n = " + std::to_string(n)};
  return {"recursion count", true, {}};
}

const std::vector<Criterion>& criteria() {
  using namespace check;
  static const std::vector<Criterion> all{
      {1, "enumeration", 5, {[] { return enumeration_counts(7); }, [] { return recursion_count(5, 7); }}},
      {2, "name tables", 1, {[] { return name_tables(); }}},
      {3, "lattice oracle equivalence", 60,
       {[] { return join_meet(5); }, [] { return bounded_lattice(5); }}},
      {4, "moves theorem", 30, {[] { return moves_complete(4); }}},
      {5, "moebius", 30, {[] { return moebius_closed_form(5); }}},
      {6, "LL structure", 60, {[] { return ll_structure(2, 5); }}},
      {7, "trialgebra", 60,
       {[] { return trialgebra_axioms(6); }, [] { return star_partition(6); },
        [] { return universal_expressions(5); }}},
      {8, "arithmetree", 60,
       {[] { return grove_example(); }, [] { return grove_closure(5); },
        [] { return total_grove_identity(6); }, [] { return sandwich_unique(5); },
        [] { return corolla_laws(6, 6); }, [] { return mul_associative(6); }}},
      {9, "hopf", 60,
       {[] { return coassociativity(4); }, [] { return counit_laws(4); },
        [] { return hopf_morphism(4); }, [] { return primitives(4); },
        [] { return primitive_combinations(2); }, [] { return integer_hopf(10, 5); }}},
      {10, "counting", 30, {[] { return invariant_counts(8); }, [] { return recurrence(8); }}}};
  return all;
}

bool run_one(const Criterion& c) {
  const auto t0 = Clock::now();
  std::vector<CheckResult> rs;
  for (const auto& f : c.checks) {
    try {
      rs.push_back(f());
    } catch (const Error& e) {
      rs.push_back({"error", false, e.what()});
    }
  }
  const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  bool ok = dt <= c.limit_s;
  std::string why;
  for (const auto& r : rs)
    if (!r.ok) {
      ok = false;
      why += (why.empty() ? "" : "; ") + r.name + ": " + r.detail;
    }
  if (dt > c.limit_s) why += (why.empty() ? "" : "; ") + std::string("over the time limit");
  std::printf("%s criterion %d (%s) %.3fs / %.0fs%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, dt,
              c.limit_s, why.empty() ? "" : " -- ", why.c_str());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
      return 2;
    }
  }
  if (only < 0 || only > 10) {
    std::fprintf(stderr, "criterion must be 1..10\n");
    return 2;
  }
  bool ok = true;
  for (const auto& c : criteria())
    if (!only || c.id == only) ok = run_one(c) && ok;
  return ok ? 0 : 1;
}
