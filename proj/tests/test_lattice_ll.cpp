// chain and characteristic polynomial oracles beyond degree 3
#include "helpers.hpp"

using namespace atree;

TEST_CASE("left-modular chain of T_4 has 13 elements") {
  std::vector<Name> c;
  CHECK_NOTHROW(c = left_modular_chain(4));
  CHECK(c.size() == 13);
}

TEST_CASE("characteristic polynomial of T_4") {
  std::string s;
  CHECK_NOTHROW(s = characteristic_polynomial(4).str());
  CHECK(s == "x^9*(x-1)^3");
}
