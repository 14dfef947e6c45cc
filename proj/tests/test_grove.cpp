#include "helpers.hpp"

using namespace atree;
using namespace th;

TEST_CASE("grove literals") {
  auto g = G("((oo)o) ∪ (ooo) u (o(oo))");
  CHECK(g.size() == 3);
  CHECK(g.degree() == 2);
  CHECK(g.str() == "((oo)o) ∪ (ooo) ∪ (o(oo))");
  CHECK(g.str(true) == "((oo)o) u (ooo) u (o(oo))");
  CHECK(G("{}").empty());
  CHECK(Grove{}.str() == "∅");
  CHECK(G("(1,1+h^-1)") == Grove::single(N(A)));
  CHECK_THROWS_AS(G("(oo) u (oo)"), InvalidName);
  CHECK_THROWS_AS(G("(oo) u (ooo)"), DegreeMismatch);
}

TEST_CASE("dendriform addition") {
  CHECK(dend_add(G(A), G(A)) == G("((oo)o) u (ooo) u (o(oo))"));
  CHECK(dend_add(Grove::unit(), G(MA)) == G(MA));
  CHECK(dend_add(total_grove(1), total_grove(2)) == total_grove(3));
  CHECK(dend_add(G(A), Grove{}).empty());
}

TEST_CASE("grove operations") {
  CHECK(grove_op(GroveOp::Mid, Grove::single(encode_name(corolla(2))),
                 Grove::single(encode_name(corolla(3)))) == Grove::single(encode_name(corolla(5))));
  CHECK(grove_op(GroveOp::Right, Grove::unit(), G(M)) == G(M));
  CHECK(grove_op(GroveOp::Left, G(M), Grove{}).empty());
  CHECK(grove_op(GroveOp::Left, G(A), G(A)) == G(BA));
  CHECK(grove_op(GroveOp::Right, G(A), G(A)) == G(AB));
}

TEST_CASE("total groves") {
  CHECK(total_grove(1) == G(A));
  CHECK(total_grove(2) == G("((oo)o) u (ooo) u (o(oo))"));
  CHECK(total_grove(4).size() == 45);
}

TEST_CASE("sandwich decomposition") {
  CHECK(decompose_pair(N(M), 1, 1) == std::make_pair(N(A), N(A)));
  CHECK(decompose_pair(N(AB), 1, 1) == std::make_pair(N(A), N(A)));
  for (const auto& w : names_of_degree(4)) {
    auto p = decompose_pair(w, 2, 2);
    CHECK(p == decompose_pair_brute(w, 2, 2));
  }
  CHECK_THROWS_AS(decompose_pair(N(M), 1, 2), DegreeMismatch);
}

TEST_CASE("sandwich pairs are not unique for a 1+3 split") {
  auto w = Name::parse("(1,1+h^-1,3,3+h^-3,1+h^-1+h^-3)");
  CHECK_THROWS_AS(decompose_pair_brute(w, 1, 3), Error);
}

TEST_CASE("dendriform multiplication") {
  auto c = [](int p) { return Grove::single(encode_name(corolla(p))); };
  CHECK(dend_mul(c(2), c(3)) == c(6));
  CHECK(dend_mul(G(A), G(MA)) == G(MA));
  CHECK(dend_mul(G(M), G(A)) == G(M));
  CHECK(dend_mul(Grove{}, G(A)).empty());
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; p * q <= 6; ++q) CHECK(dend_mul(c(p), c(q)) == c(p * q));
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; p + q <= 6; ++q) CHECK(grove_op(GroveOp::Mid, c(p), c(q)) == c(p + q));
}

TEST_CASE("multiplication is associative on small singletons") {
  auto r = check::mul_associative(6);
  CHECK_MESSAGE(r.ok, r.detail);
}
