#include "helpers.hpp"

using namespace atree;
using namespace th;

TEST_CASE("enumeration sizes") {
  CHECK(trees_of_degree(0).size() == 1);
  CHECK(trees_of_degree(0).front().is_leaf());
  CHECK(trees_of_degree(2).size() == 3);
  CHECK(trees_of_degree(3).size() == 11);
  CHECK(trees_of_degree(4).size() == 45);
  CHECK(trees_of_degree(6).size() == 903);
  CHECK(super_catalan(0) == 1);
  CHECK(super_catalan(4) == 45);
  CHECK(super_catalan(6) == 903);
  CHECK(super_catalan(7) == 4279);
}

TEST_CASE("enumeration is sorted by literal and duplicate free") {
  const auto& ts = trees_of_degree(4);
  for (std::size_t i = 1; i < ts.size(); ++i) CHECK(ts[i - 1].str() < ts[i].str());
  CHECK(enumerate_trees(3) == trees_of_degree(3));
}

TEST_CASE("enumeration refuses huge degrees") {
  CHECK_THROWS_AS(trees_of_degree(11), ResourceError);
  CHECK_THROWS_AS(trees_of_degree(-1), PreconditionError);
}

TEST_CASE("graft") {
  Tree o;
  CHECK(graft({o, o}).str() == A);
  CHECK(graft({o, o, T(A)}).str() == MA);
  CHECK(corolla(3).str() == "(oooo)");
  CHECK(corolla(0).is_leaf());
  CHECK_THROWS_AS(graft({o}), ArityError);
}

TEST_CASE("involution") {
  CHECK(involution(T(AB)).str() == BA);
  CHECK(involution(T(ACA)).str() == ACA);
  for (int p = 1; p <= 5; ++p) CHECK(involution(corolla(p)) == corolla(p));
  for (const auto& t : trees_of_degree(5)) CHECK(involution(involution(t)) == t);
}

TEST_CASE("graft on leaf") {
  CHECK(graft_on_leaf(T(A), 1, T(A)).str() == AB);
  CHECK(graft_on_leaf(T(A), 2, T(A)).str() == BA);
  for (int i = 1; i <= 4; ++i) CHECK(graft_on_leaf(Tree{}, i, T(COR)) == T(COR));
  CHECK_THROWS_AS(graft_on_leaf(T(A), 4, T(A)), IndexError);
  CHECK_THROWS_AS(graft_on_leaf(T(A), 0, T(A)), IndexError);
}

TEST_CASE("literal codec") {
  CHECK(Tree::parse("(oo)").str() == A);
  CHECK(Tree::parse("o").is_leaf());
  CHECK(Tree::parse("(o(oo))").str() == BA);
  CHECK_THROWS_AS(Tree::parse("(o)"), ArityError);
  CHECK_THROWS_AS(Tree::parse("(oo"), SyntaxError);
  CHECK_THROWS_AS(Tree::parse("(oo))"), SyntaxError);
  CHECK_THROWS_AS(Tree::parse("(ox)"), SyntaxError);
}

TEST_CASE("invariant counts") {
  const std::uint64_t want[] = {1, 1, 3, 3, 11, 11};
  for (int n = 1; n <= 6; ++n) CHECK(invariant_count(n) == want[n - 1]);
  for (int n = 1; n <= 8; ++n) CHECK(invariant_count(n) == super_catalan((n + 1) / 2));
}

TEST_CASE("recurrence") {
  for (int n = 1; n <= 8; ++n) CHECK(recurrence_value(n) == super_catalan(n));
  // read with a free slack index the same sum overcounts from n = 2
  CHECK(recurrence_value_literal(1) == 1);
  CHECK(recurrence_value_literal(2) == 4);
}
