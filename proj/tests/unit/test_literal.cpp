#include <doctest.h>

#include "weylcells/literal.hpp"
#include "weylcells/type_a.hpp"

using namespace weylcells;

TEST_CASE("literal forms") {
  auto g2 = RootSystem::build(Family::G2, 2);
  CHECK(parse_element(g2, "w:0,1,2,1,2,1").length() == 6);
  CHECK(parse_element(g2, "w:0,1,2,1,2,1") == Element::fundamental(g2, 1));
  CHECK(parse_element(g2, "t:[1,0]") == Element::fundamental(g2, 1));
  CHECK(parse_element(g2, "e") == Element::identity(g2));
  CHECK(parse_element(g2, "w:e") == Element::identity(g2));
  CHECK(parse_element(g2, " t:[ 2 , 0 ] ") == Element::dominant(g2, {2, 0}));
  CHECK(parse_element(g2, "t:[1,0]*w:1") == Element::fundamental(g2, 1) * Element::generator(g2, 1));
  CHECK(parse_element(g2, "w:1*w:2*w:1") == Element::from_generators(g2, {1, 2, 1}));
  CHECK(parse_element(g2, "t:[-1,+2]").lambda() == IntVec{-1, 2});

  auto a2 = RootSystem::build(Family::A, 2);
  CHECK(parse_element(a2, "[1,2,3]") == Element::identity(a2));
  CHECK(parse_element(a2, "[2,1,3]") == Element::generator(a2, 1));
  CHECK(to_permutation(parse_element(a2, "[0,2,4]")).window() == std::vector<std::int64_t>{0, 2, 4});

  auto c3 = RootSystem::build(Family::C, 3);
  const Element x3 = Element::fundamental(c3, 3);
  CHECK(parse_element(c3, "w:" + format_word(x3.reduced_word())) == x3);
}

TEST_CASE("literal errors name the offending token") {
  auto g2 = RootSystem::build(Family::G2, 2);
  auto token = [&](const std::string& text) {
    try {
      parse_element(g2, text);
    } catch (const LiteralError& e) {
      return e.token;
    }
    return std::string("<parsed>");
  };
  CHECK(token("w:0,1,x") == "x");
  CHECK(token("w:0,3") == "3");
  CHECK(token("w:g5") == "g5");
  CHECK(token("t:[1]") == "t:[1]");
  CHECK(token("t:1,0") == "1,0");
  CHECK(token("s:1") == "s:1");
  CHECK(token("w:1**w:2") == "");
  CHECK(token("[1,2,3]") == "[1,2,3]");
  auto a2 = RootSystem::build(Family::A, 2);
  CHECK_THROWS_AS(parse_element(a2, "[1,1,3]"), LiteralError);
  CHECK_THROWS_AS(parse_element(a2, "[1,2]"), LiteralError);
}

TEST_CASE("emitted literals round-trip") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::A, 3}, {Family::B, 3}, {Family::C, 2}, {Family::D, 4}, {Family::G2, 2}}) {
    auto rs = RootSystem::build(f, n);
    std::vector<Element> gammas{Element::identity(rs)};
    for (int j = 1; j <= n; ++j) gammas.push_back(Element::gamma(rs, j));
    for (const auto& g : affine_ball(rs, 4))
      for (const auto& t : gammas) {
        const Element h = t * g;
        CHECK(parse_element(rs, element_literal(h)) == h);
      }
  }
}
