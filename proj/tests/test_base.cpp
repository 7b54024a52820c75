#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropfan/base.hpp"

using namespace tropfan;

TEST_CASE("vector helpers") {
  Vec a = {1, -2, 3}, b = {4, 0, -1};
  CHECK(add(a, b) == Vec{5, -2, 2});
  CHECK(sub(a, b) == Vec{-3, -2, 4});
  CHECK(neg(a) == Vec{-1, 2, -3});
  CHECK(scaled(Int(-2), a) == Vec{-2, 4, -6});
  CHECK(dot(a, b) == 1);
  CHECK(is_zero(Vec{0, 0}));
  CHECK_FALSE(is_zero(a));
}

TEST_CASE("content and primitive") {
  CHECK(content(Vec{6, -9, 12}) == 3);
  CHECK(content(Vec{0, 0, 0}) == 0);
  auto [p, c] = primitive(Vec{-4, 0, 8});
  CHECK(p == Vec{-1, 0, 2});
  CHECK(c == 4);
  CHECK_THROWS_AS(primitive(Vec{0, 0}), TropError);
}

TEST_CASE("determinant") {
  CHECK(det({{1, 2}, {3, 4}}) == -2);
  CHECK(det({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
  CHECK(det({{1, 1, 1}, {1, 1, 1}, {0, 0, 1}}) == 0);
  // 4x4 with known value
  CHECK(det({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}) == -1);
}

TEST_CASE("solve_pair") {
  Vec x = {1, 0, 1}, y = {0, 1, 1};
  auto s = solve_pair(x, y, Vec{2, 3, 5});
  REQUIRE(s.has_value());
  CHECK(s->first == 2);
  CHECK(s->second == 3);
  CHECK_FALSE(solve_pair(x, y, Vec{1, 1, 0}).has_value());  // outside span
  CHECK_FALSE(solve_pair(x, scaled(Int(2), x), x).has_value());  // dependent
  // rational coefficients
  auto r = solve_pair(Vec{2, 0}, Vec{0, 3}, Vec{1, 1});
  REQUIRE(r.has_value());
  CHECK(r->first == Rat(1, 2));
  CHECK(r->second == Rat(1, 3));
}

TEST_CASE("solve_square and nullspace") {
  auto sol = solve_square({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}},
                          {Rat(3), Rat(1)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 2);
  CHECK((*sol)[1] == 1);
  CHECK_FALSE(solve_square({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}},
                           {Rat(1), Rat(1)})
                  .has_value());

  auto ns = nullspace({{Rat(1), Rat(2), Rat(3)}}, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns)
    CHECK(v[0] * 1 + v[1] * 2 + v[2] * 3 == 0);
}

TEST_CASE("kernel_direction") {
  Vec k = kernel_direction({{1, 0, 0}, {0, 1, 0}});
  CHECK((k == Vec{0, 0, 1} || k == Vec{0, 0, -1}));
  CHECK(is_zero(kernel_direction({{1, 2, 3}, {2, 4, 6}})));
}

TEST_CASE("error classification") {
  CHECK(is_input_error(ErrorKind::InputError));
  CHECK_FALSE(is_input_error(ErrorKind::DegreeTooSmall));
  CHECK_FALSE(is_input_error(ErrorKind::UnbalancedCurve));
  TropError e(ErrorKind::ZeroVector, "v");
  CHECK(e.kind() == ErrorKind::ZeroVector);
}
