#include "helpers.hpp"

#include "arithmetree/json_io.hpp"

using namespace atree;
using namespace th;

TEST_CASE("formal sums") {
  LinComb x(N(A), 2);
  x.add(N(A), -2);
  CHECK(x.empty());
  auto y = S("2*(oo) - 1/2*(oo) + 1");
  CHECK(y.coefficient(N(A)) == Rational(3, 2));
  CHECK(y.coefficient(Name{}) == Rational(1));
  CHECK(to_text(y) == "1 + 3/2*(oo)");
  CHECK(to_text(LinComb{}) == "0");
  CHECK(to_text(S("(o(oo)) + ((oo)o) + (ooo)")) == "((oo)o) + (ooo) + (o(oo))");
  CHECK(S("(1,1+h^-1)") == LinComb(N(A)));
  CHECK(S("(1,2,1+h^-1+h^-2) - (1,1+h^-1,1+h^-1)") == S("(o(oo)) - ((oo)o)"));
  CHECK_THROWS_AS(S(""), SyntaxError);
  CHECK_THROWS_AS(S("x*(oo)"), SyntaxError);
}

TEST_CASE("tensor text") {
  CHECK(to_text(coproduct(N(BA))) == "(o(oo)) (x) 1 + (oo) (x) (oo) + 1 (x) (o(oo))");
}

TEST_CASE("json") {
  auto j = to_json(N(M));
  CHECK(j["name"] == "(1,1+2h^-1,1+h^-1)");
  CHECK(j["tree"] == "(ooo)");
  CHECK(j["coords"][1]["kind"] == "bare");
  CHECK(j["coords"][1]["pos"] == 2);
  auto s = to_json(S("2*(oo)"));
  CHECK(s[0]["coefficient"] == "2");
  auto g = to_json(G("(ooo) u ((oo)o)"));
  CHECK(g["degree"] == 2);
  CHECK(g["members"].size() == 2);
}
