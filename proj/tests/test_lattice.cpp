#include "helpers.hpp"

using namespace atree;
using namespace th;

TEST_CASE("bounded lattice") {
  for (int n = 1; n <= 5; ++n) {
    const auto& p = Poset::of_degree(n);
    CHECK(p.name(p.bottom()) == encode_name(graft_on_leaf(Tree{}, 1, trees_of_degree(n).front())));
    for (int i = 0; i < p.size(); ++i) {
      CHECK(p.le(p.bottom(), i));
      CHECK(p.le(i, p.top()));
    }
  }
  CHECK(Poset::of_degree(2).name(Poset::of_degree(2).bottom()) == N(AB));
  CHECK(Poset::of_degree(2).name(Poset::of_degree(2).top()) == N(BA));
}

TEST_CASE("join and meet") {
  CHECK(join(N(MB), N(AM)) == N(COR));
  CHECK(meet(N(BAC), N(ACA)) == N(ABC));
  for (const auto& v : names_of_degree(3)) CHECK(join(N(ABC), v) == v);
  for (int n = 1; n <= 4; ++n)
    for (const auto& v : names_of_degree(n))
      for (const auto& w : names_of_degree(n)) {
        CHECK(join(v, w) == join_brute(v, w));
        CHECK(meet(v, w) == meet_brute(v, w));
      }
}

TEST_CASE("covers") {
  auto c = covers(N(ABC));
  CHECK(c == std::set<Name>{N(AM), N(MB)});
  CHECK(covers(N(M)) == std::set<Name>{N(BA)});
  CHECK(covers(N("(o(o(oo)))")).empty());
  CHECK(moves(N("(o(o(oo)))")).empty());
}

TEST_CASE("moves generate the order up to degree 3") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& v : names_of_degree(n)) CHECK(moves_closure(v) == up_set(v));
}

TEST_CASE("moves miss relations in degree 4") {
  // a genuine coordinatewise relation no sequence of the three moves reaches
  auto v = N("((o((oo)o))o)"), w = N("(o(oo)(oo))");
  CHECK(less_name(v, w));
  CHECK(up_set(v).count(w) == 1);
  CHECK(moves_closure(v).count(w) == 0);
}

TEST_CASE("moebius") {
  CHECK(moebius(N(M), MoebiusMode::Closed) == -1);
  CHECK(moebius(N(BA), MoebiusMode::Closed) == 0);
  CHECK(moebius(N(AB), MoebiusMode::Closed) == 1);
  for (int n = 1; n <= 5; ++n) {
    int nonzero = 0;
    for (const auto& v : names_of_degree(n)) {
      const int c = moebius(v, MoebiusMode::Closed);
      CHECK(c == moebius(v, MoebiusMode::Brute));
      nonzero += c != 0;
    }
    CHECK(nonzero == 1 << (n - 1));
  }
}

TEST_CASE("atoms") {
  CHECK(atoms(2) == std::vector<Name>{N(M)});
  CHECK(atoms(3) == std::vector<Name>{N(MB), N(AM)});
  auto as = atoms(4);
  REQUIRE(as.size() == 3);
  CHECK(join(join(as[0], as[1]), as[2]) == encode_name(corolla(4)));
}

TEST_CASE("left-modular chain in degrees 2 and 3") {
  CHECK(left_modular_chain(2) == std::vector<Name>{N(AB), N(M), N(BA)});
  auto c3 = left_modular_chain(3);
  CHECK(c3.size() == 7);
  CHECK(level_condition(c3));
  for (std::size_t i = 1; i < c3.size(); ++i) CHECK(covers(c3[i - 1]).count(c3[i]) == 1);
  const auto& p = Poset::of_degree(3);
  for (const auto& x : c3) CHECK(is_left_modular(p, p.index(x)));
}

TEST_CASE("characteristic polynomial in degrees 2 and 3") {
  CHECK(characteristic_polynomial(2).str() == "x*(x-1)");
  CHECK(characteristic_polynomial(3).str() == "x^4*(x-1)^2");
}

TEST_CASE("the involution does not reverse the order in degree 4") {
  auto v = N("((o((oo)o))o)"), w = N("(o(oo)(oo))");
  CHECK(less_name(v, w));
  CHECK_FALSE(less_name(involute_name(w), involute_name(v)));
  // both directions agree up to degree 3
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : names_of_degree(n))
      for (const auto& b : names_of_degree(n))
        CHECK(less_name(a, b) == less_name(involute_name(b), involute_name(a)));
}

TEST_CASE("degree 4 has few left-modular elements") {
  const auto& p = Poset::of_degree(4);
  int lm = 0;
  for (int x = 0; x < p.size(); ++x) lm += is_left_modular(p, x);
  CHECK(lm == 6);
  CHECK_FALSE(is_left_modular(p, p.index(N("(((o(oo))o)o)"))));
}

TEST_CASE("hasse diagram") {
  auto dot = hasse_dot(2);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("label=\"((oo)o)\"") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(hasse_dot(3) == hasse_dot(3));
}
