#include "helpers.hpp"

using namespace atree;
using namespace th;

TEST_CASE("encode") {
  CHECK(N(A).str() == "(1,1+h^-1)");
  CHECK(N(AB).str() == "(1,1+h^-1,1+h^-1)");
  CHECK(N(M).str() == "(1,1+2h^-1,1+h^-1)");
  CHECK(N(BA).str() == "(1,2,1+h^-1+h^-2)");
  CHECK(N(ACA).str() == "(1,1+h^-1,3,1+h^-1+h^-3)");
  CHECK(N("o").str() == "(0)");
  CHECK(N("o").is_unit());
}

TEST_CASE("T_3 name table") {
  const std::pair<const char*, const char*> rows[] = {
      {ABC, "(1,1+h^-1,1+h^-1,1+h^-1)"},         {AM, "(1,1+h^-1,2+3h^-1,1+h^-1)"},
      {MB, "(1,1+2h^-1,1+h^-1,1+h^-1)"},         {BAC, "(1,2,1+h^-1+h^-2,1+h^-1)"},
      {ACA, "(1,1+h^-1,3,1+h^-1+h^-3)"},         {COR, "(1,1+2h^-1,2+3h^-1,1+h^-1)"},
      {"(o(oo)o)", "(1,2,2+h^-2,1+h^-1)"},       {MA, "(1,1+2h^-1,3,1+h^-1+h^-3)"},
      {"(o(ooo))", "(1,2,2+3h^-1,1+h^-1+h^-2)"}, {"(o((oo)o))", "(1,2,2+h^-2,1+h^-1+h^-2)"},
      {"(o(o(oo)))", "(1,2,3,1+h^-1+h^-2+h^-3)"}};
  for (const auto& [t, v] : rows) CHECK(N(t).str() == v);
}

TEST_CASE("decode") {
  CHECK(decode_name(Name::parse("(1,1+h^-1,1+h^-1)")).str() == AB);
  CHECK(decode_name(Name::parse("(0)")).is_leaf());
  CHECK_THROWS_AS(decode_name(Name::parse("(1,2,2)")), InvalidName);
  for (int n = 0; n <= 6; ++n)
    for (const auto& t : trees_of_degree(n)) CHECK(decode_name(encode_name(t)) == t);
}

TEST_CASE("first coordinate is OPEN(1)") {
  for (const auto& t : trees_of_degree(4)) {
    auto v = encode_name(t);
    CHECK(v[0] == Coordinate::open(1));
  }
}

TEST_CASE("trivial order on coordinates") {
  CHECK(compare(Coordinate::open(2), Coordinate::bare(2)) > 0);
  CHECK(compare(Coordinate::bare(2), Coordinate::close({1})) > 0);
  CHECK(compare(Coordinate::close({1}), Coordinate::close({1, 2})) < 0);
  CHECK(compare(Coordinate::close({2}), Coordinate::close({1, 2})) > 0);
  CHECK(Coordinate::bare(3).coefficients() == std::vector<int>{2, 3});
  CHECK(Coordinate::close({1, 3}).coefficients() == std::vector<int>{1, 1, 0, 1});
  auto v = N(M);
  CHECK(leq_name(v, v));
  CHECK_FALSE(less_name(v, v));
  CHECK(less_name(N(AB), N(M)));
  CHECK(less_name(N(M), N(BA)));
  CHECK_THROWS_AS(leq_name(N(A), N(M)), DegreeMismatch);
}

TEST_CASE("shift") {
  CHECK(shift(1, Coordinate::open(1), ShiftMode::Box) == Coordinate::open(2));
  CHECK(shift(2, Coordinate::close({1, 3}), ShiftMode::Tri) == Coordinate::close({1, 5}));
  auto c = Coordinate::close({2, 4});
  CHECK(shift(0, c, ShiftMode::Box) == c);
  CHECK(shift(3, Coordinate::bare(2), ShiftMode::Box) == Coordinate::bare(5));
}

TEST_CASE("graft_names") {
  Name u, a = Name::parse("(1,1+h^-1)");
  CHECK(graft_names({a, u}).str() == "(1,1+h^-1,1+h^-1)");
  CHECK(graft_names({u, a}).str() == "(1,2,1+h^-1+h^-2)");
  CHECK(graft_names({u, u, u}).str() == "(1,1+2h^-1,1+h^-1)");
  CHECK_THROWS_AS(graft_names({a}), ArityError);
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : trees_of_degree(n)) {
      std::vector<Name> parts;
      for (const auto& k : t.children()) parts.push_back(encode_name(k));
      CHECK(graft_names(parts) == encode_name(t));
    }
}

TEST_CASE("over and under") {
  CHECK(over(N(A), N(A)) == N(AB));
  CHECK(under(N(A), N(A)) == N(BA));
  CHECK(over(Name{}, N(M)) == N(M));
  CHECK(under(N(M), Name{}) == N(M));
  CHECK(over(N(A), N(M)) == N(AM));
  CHECK(under(N(A), N(M)) == N("(o(ooo))"));
}

TEST_CASE("involute_name") {
  CHECK(involute_name(N(AB)) == N(BA));
  CHECK(involute_name(N(M)) == N(M));
  for (int n = 0; n <= 5; ++n)
    for (const auto& t : trees_of_degree(n)) {
      auto v = encode_name(t);
      CHECK(involute_name(involute_name(v)) == v);
      CHECK(involute_name(v) == encode_name(involution(t)));
    }
}

TEST_CASE("projection to binary names") {
  CHECK(project_binary(N(BA)) == std::vector<int>{1, 2});
  CHECK(project_binary(N(M)) == std::vector<int>{1, 2});
  CHECK(project_binary(N(AB)) == std::vector<int>{1, 1});
}

TEST_CASE("name literal codec") {
  CHECK(Name::parse("(1,1+2h^-1,1+h^-1)") == N(M));
  CHECK(Name::parse("(0)").is_unit());
  CHECK(Name::parse(" (1,2,1+h^-1+h^-2) ") == N(BA));
  CHECK_THROWS_AS(Name::parse("(1,1+3h^-1)"), InvalidName);
  CHECK_THROWS_AS(Name::parse("(1,1+h^-1"), SyntaxError);
  CHECK_THROWS_AS(Name::parse("(1,x)"), SyntaxError);
  for (const auto& t : trees_of_degree(4)) {
    auto v = encode_name(t);
    CHECK(Name::parse(v.str()) == v);
  }
  CHECK(parse_literal("(ooo)") == N(M));
  CHECK(parse_literal("(1,1+2h^-1,1+h^-1)") == N(M));
}
