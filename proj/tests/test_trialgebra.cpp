#include "helpers.hpp"

using namespace atree;
using namespace th;

TEST_CASE("star") {
  CHECK(star(N(A), N(A)) == S("((oo)o) + (ooo) + (o(oo))"));
  CHECK(star(N(M), Name{}) == LinComb(N(M)));
  CHECK(star(Name{}, N(M)) == LinComb(N(M)));
  auto am = star(N(A), N(M));
  CHECK(am == S("((oo)oo) + (oooo) + (o(ooo))"));
  for (const auto& [u, c] : am.terms()) {
    CHECK(c == Rational(1));
    CHECK(leq_name(over(N(A), N(M)), u));
    CHECK(leq_name(u, under(N(A), N(M))));
  }
}

TEST_CASE("the three operations") {
  CHECK(tri_op(Op::Bullet, N(A), N(A)) == LinComb(N(M)));
  CHECK(tri_op(Op::Succ, N(A), N(A)) == LinComb(N(AB)));
  CHECK(tri_op(Op::Prec, N(A), N(A)) == LinComb(N(BA)));
}

TEST_CASE("unit conventions") {
  Name u;
  auto v = N(M);
  CHECK(tri_op(Op::Prec, u, v).empty());
  CHECK(tri_op(Op::Succ, v, u).empty());
  CHECK(tri_op(Op::Prec, v, u) == LinComb(v));
  CHECK(tri_op(Op::Succ, u, v) == LinComb(v));
  CHECK(tri_op(Op::Bullet, u, v).empty());
  CHECK(tri_op(Op::Bullet, v, u).empty());
  for (Op o : {Op::Prec, Op::Succ, Op::Bullet}) CHECK_THROWS_AS(tri_op(o, u, u), UndefinedExpression);
}

TEST_CASE("partition of the star interval up to total degree 3") {
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; a + b <= 3; ++b)
      for (const auto& v : names_of_degree(a))
        for (const auto& w : names_of_degree(b))
          CHECK(tri_op(Op::Prec, v, w) + tri_op(Op::Succ, v, w) + tri_op(Op::Bullet, v, w) ==
                star(v, w));
}

TEST_CASE("the coordinatewise interval is larger than the three parts in degree 4") {
  auto v = N(A), w = N("(o((oo)o))");
  auto parts = tri_op(Op::Prec, v, w) + tri_op(Op::Succ, v, w) + tri_op(Op::Bullet, v, w);
  auto s = star(v, w);
  CHECK(parts.size() == 3);
  CHECK(s.size() == 4);
  CHECK(s.coefficient(N("(o(o(oo)o))")) == Rational(1));
  CHECK(parts.coefficient(N("(o(o(oo)o))")) == Rational(0));
}

TEST_CASE("universal expressions") {
  CHECK(universal_expression(T(M)).str() == "g . g");
  CHECK(universal_expression(T(ACA)).str() == "(g > g) < g");
  CHECK(universal_expression(T(AB)).str() == "g > g");
  CHECK(universal_expression(T(BA)).str() == "g < g");
  CHECK(universal_expression(T("(o(oo)o)")).str() == "(g < g) . g");
  CHECK_THROWS_AS(universal_expression(Tree{}), PreconditionError);
  const auto ops = trialgebra_ops();
  const LinComb a(N(A));
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : trees_of_degree(n)) {
      auto e = universal_expression(t);
      CHECK(e.gen_count() == n);
      CHECK(eval_universal(e, ops, a) == LinComb(encode_name(t)));
    }
  CHECK(eval_universal(UniversalExpr::gen(), ops, a) == a);
}

TEST_CASE("grove evaluation of a universal expression") {
  auto e = UniversalExpr::node(Op::Bullet, UniversalExpr::gen(), UniversalExpr::gen());
  auto g = Grove::single(encode_name(corolla(3)));
  CHECK(eval_universal(e, grove_ops(), g) == Grove::single(encode_name(corolla(6))));
}

TEST_CASE("seven axioms up to total degree 4") {
  CHECK(check::trialgebra_axioms(4).ok);
}

TEST_CASE("free generation up to degree 5") {
  auto r = check::free_generation(5);
  CHECK_MESSAGE(r.ok, r.detail);
}
