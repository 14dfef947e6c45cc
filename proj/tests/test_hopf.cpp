#include "helpers.hpp"

using namespace atree;
using namespace th;

namespace {
TensorComb tc(std::initializer_list<std::pair<std::pair<Name, Name>, int>> ts) {
  TensorComb out;
  for (const auto& [k, c] : ts) out.add(k, c);
  return out;
}
}  // namespace

TEST_CASE("coproduct") {
  Name one;
  CHECK(coproduct(N(A)) == tc({{{N(A), one}, 1}, {{one, N(A)}, 1}}));
  CHECK(coproduct(N(M)) == tc({{{N(M), one}, 1}, {{one, N(M)}, 1}}));
  CHECK(coproduct(N(BA)) == tc({{{N(BA), one}, 1}, {{N(A), N(A)}, 1}, {{one, N(BA)}, 1}}));
  CHECK(coproduct(one) == tc({{{one, one}, 1}}));
  CHECK(counit(S("2*(oo) + 3*1")) == Rational(3));
}

TEST_CASE("tensor operations") {
  Name one;
  TensorComb a1({N(A), one}), aa({N(A), N(A)}), one_a({one, N(A)});
  CHECK(tensor_op(Op::Bullet, a1, a1) == TensorComb({N(M), one}));
  CHECK(tensor_op(Op::Prec, aa, one_a) == TensorComb({N(A), N(BA)}));
}

TEST_CASE("coalgebra laws up to degree 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& v : names_of_degree(n)) CHECK(coassoc_left(v) == coassoc_right(v));
  auto r = check::counit_laws(4);
  CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("coproduct is a morphism up to total degree 4") {
  auto r = check::hopf_morphism(4);
  CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("primitives") {
  CHECK(is_primitive(LinComb(N(A))));
  CHECK_FALSE(is_primitive(LinComb(N(BA))));
  for (int k = 1; k <= 4; ++k) CHECK(is_primitive(LinComb(encode_name(corolla(k)))));
  auto x = primitive_combination(N(A), 1, {Rational(1), Rational(-1)});
  CHECK(x == S("((oo)o) - (o(oo))"));
  CHECK(is_primitive(x));
  CHECK(is_primitive(primitive_combination(N(M), 2, {1, 2, -4, 1})));
  CHECK_THROWS_AS(primitive_combination(N(A), 1, {1, 1}), PreconditionError);
  CHECK_THROWS_AS(primitive_combination(N(BA), 1, {1, -1}), PreconditionError);
  CHECK_THROWS_AS(primitive_combination(N(A), 2, {1, -1}), PreconditionError);
}

TEST_CASE("integer Hopf algebra") {
  IntElem two(2u), three(3u), zero(0u), one(1u);
  CHECK(int_add(two, three) == IntElem(5u));
  CHECK(int_coproduct(zero) == IntTensor({0u, 0u}));
  CHECK(int_tensor_add(IntTensor({1u, 0u}), IntTensor({0u, 1u})).empty());
  CHECK(ext_map(one) == LinComb(N(A)));
  CHECK(ext_map(zero) == LinComb(Name{}));
  CHECK(ext_map(int_add(two, three)) == tri_op(Op::Bullet, ext_map(two), ext_map(three)));
  CHECK(ext_map(int_add(two, three)) == LinComb(encode_name(corolla(5))));
  auto r = check::integer_hopf(10, 5);
  CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("involutive compatibility") {
  auto r = determine_involutivity(3, 4);
  CHECK(r.plain_small);
  CHECK(r.chosen == "plain");
  CHECK(r.chosen_large);
}
