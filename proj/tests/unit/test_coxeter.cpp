#include <doctest.h>

#include <set>

#include "artin/coxeter_group.hpp"
#include "artin/errors.hpp"

using namespace artin;

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

struct TypeData {
  const char* code;
  std::uint64_t order;
  int h;
  bool xi_identity;
};

// orders and Coxeter numbers from the classification tables
const TypeData kTypes[] = {
    {"A1", 2, 2, true},          {"A2", 6, 3, false},          {"A3", 24, 4, false},
    {"A4", 120, 5, false},       {"A5", 720, 6, false},        {"A6", 5040, 7, false},
    {"A7", 40320, 8, false},     {"A8", factorial(9), 9, false},
    {"B2", 8, 4, true},          {"B3", 48, 6, true},          {"B4", 384, 8, true},
    {"B5", 3840, 10, true},      {"B6", 46080, 12, true},      {"B7", 645120, 14, true},
    {"B8", 10321920, 16, true},  {"D4", 192, 6, true},         {"D5", 1920, 8, false},
    {"D6", 23040, 10, true},     {"D7", 322560, 12, false},    {"D8", 5160960, 14, true},
    {"E6", 51840, 12, false},    {"E7", 2903040, 18, true},    {"E8", 696729600, 30, true},
    {"F4", 1152, 12, true},      {"H3", 120, 10, true},        {"H4", 14400, 30, true},
    {"I2:5", 10, 5, false},      {"I2:6", 12, 6, true},        {"I2:7", 14, 7, false},
    {"I2:8", 16, 8, true},       {"I2:12", 24, 12, true},
};

bool relations_hold(const CoxeterGroup& w) {
  for (int i = 0; i < w.rank(); ++i)
    if (!w.generator(i).pow(2).is_identity()) return false;
  for (const auto& e : w.graph().pairs()) {
    Element st = w.generator(e.i) * w.generator(e.j);
    if (st.order() != static_cast<std::uint64_t>(e.m)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("group constants for connected types up to rank 8") {
  for (const auto& t : kTypes) {
    CAPTURE(std::string(t.code));
    CoxeterGroup w(CoxeterGraph::parse(t.code));
    int n = w.rank();
    CHECK(w.order() == t.order);
    CHECK(w.coxeter_number() == t.h);
    CHECK(w.reflections().size() == static_cast<std::size_t>(n * t.h / 2));
    CHECK(w.length(w.longest_element()) == n * t.h / 2);
    CHECK(w.longest_element().pow(2).is_identity());
    CHECK(relations_hold(w));

    Element c = w.identity();
    for (int i = 0; i < n; ++i) c = c * w.generator(i);
    if (t.xi_identity) CHECK(c.pow(t.h / 2) == w.longest_element());
    if (!t.xi_identity && t.h % 2 == 0 && t.code[0] != 'D') CHECK(c.pow(t.h / 2) != w.longest_element());

    auto xi = w.xi();
    bool identity = true;
    for (int i = 0; i < n; ++i) {
      CHECK(xi[static_cast<std::size_t>(xi[static_cast<std::size_t>(i)])] == i);
      if (xi[static_cast<std::size_t>(i)] != i) identity = false;
    }
    CHECK(identity == t.xi_identity);
    auto z = w.center();
    CHECK(z.size() == (t.xi_identity ? 2u : 1u));
    for (const auto& g : z) CHECK(w.is_central(g));
  }
}

TEST_CASE("longest element negates every root exactly when xi is trivial") {
  for (const char* code : {"B3", "B5", "E7", "H3", "I2:6", "A3"}) {
    CoxeterGroup w(CoxeterGraph::parse(code));
    bool minus_one = true;
    for (std::size_t r = 0; r < w.degree(); ++r)
      if (w.longest_element()[r] != w.roots().negation(r)) minus_one = false;
    CHECK(minus_one == (w.center().size() == 2));
  }
}

TEST_CASE("B_n agrees with the signed permutation model") {
  // s_1 = [-1, 1, ..., 1], s_i = (i-1, i); roots +-e_i and +-e_i +- e_j
  for (int n = 2; n <= 5; ++n) {
    CoxeterGroup w(CoxeterGraph::standard(Family::B, n));
    CHECK(w.order() == (std::uint64_t{1} << n) * factorial(n));
    CHECK(w.roots().positive_count() == static_cast<std::size_t>(n * n));
    // s_1 s_2 has order 4 and s_i s_{i+1} order 3 for i >= 2
    CHECK((w.generator(0) * w.generator(1)).order() == 4);
    for (int i = 1; i + 1 < n; ++i) CHECK((w.generator(i) * w.generator(i + 1)).order() == 3);
  }
}

TEST_CASE("small cases") {
  CoxeterGroup a1(CoxeterGraph::parse("A1"));
  CHECK(a1.order() == 2);
  CHECK(a1.longest_element() == a1.generator(0));
  CHECK(a1.center().size() == 2);

  CoxeterGroup i27(CoxeterGraph::parse("I2:7"));
  CHECK(i27.order() == 14);
  CHECK(i27.reflections().size() == 7);

  CoxeterGroup a2(CoxeterGraph::parse("A2"));
  CHECK(a2.xi() == std::vector<int>{1, 0});
  CoxeterGroup i26(CoxeterGraph::parse("I2:6"));
  CHECK(i26.xi() == std::vector<int>{0, 1});
}

TEST_CASE("lengths and reduced words") {
  for (const char* code : {"H3", "F4", "D5", "I2:9", "B3xA1xA1"}) {
    CoxeterGroup w(CoxeterGraph::parse(code));
    CHECK(w.reduced_word(w.identity()).empty());
    Element x = w.identity();
    for (int step = 0; step < 40; ++step) {
      x = x * w.generator((step * 7 + 3) % w.rank());
      for (auto strategy : {Descent::smallest, Descent::largest}) {
        auto word = w.reduced_word(x, strategy);
        CHECK(static_cast<int>(word.size()) == w.length(x));
        CHECK(w.from_word(word) == x);
      }
    }
  }
}

TEST_CASE("subgroup orders") {
  CoxeterGroup h3(CoxeterGraph::parse("H3"));
  std::vector<Element> one{h3.generator(0)};
  CHECK(h3.subgroup_order(one) == 2);
  CHECK(h3.subgroup_order(h3.generators()) == 120);

  for (int k = 1; k <= 3; ++k) {
    int p = 4 * k + 2;
    CoxeterGroup w(CoxeterGraph::parse("I2:" + std::to_string(p)));
    std::vector<Element> t{w.generator(0), w.from_word(std::vector<int>{1, 0, 1})};
    CHECK(w.subgroup_order(t) == static_cast<std::uint64_t>(2 * (2 * k + 1)));
  }
}

TEST_CASE("H3 reflections contain r_1..r_15") {
  CoxeterGroup w(CoxeterGraph::parse("H3"));
  const std::vector<std::vector<int>> words = {
      {1},
      {2},
      {3},
      {1, 2, 1},
      {2, 3, 2},
      {2, 1, 2},
      {1, 2, 3, 2, 1},
      {3, 2, 1, 2, 3},
      {1, 2, 1, 2, 1},
      {1, 3, 2, 1, 2, 3, 1},
      {2, 1, 2, 3, 2, 1, 2},
      {2, 1, 3, 2, 1, 2, 3, 1, 2},
      {1, 2, 1, 2, 3, 2, 1, 2, 1},
      {1, 2, 1, 3, 2, 1, 2, 3, 1, 2, 1},
      {2, 1, 2, 1, 3, 2, 1, 2, 3, 1, 2, 1, 2},
  };
  std::set<std::size_t> seen;
  for (auto word : words) {
    for (auto& i : word) --i;
    Element t = w.from_word(word);
    seen.insert(w.reflection_index(t));
  }
  CHECK(seen.size() == 15);
}

TEST_CASE("sign characters") {
  CHECK(CoxeterGroup(CoxeterGraph::parse("H3")).sign_characters().size() == 1);
  CHECK(CoxeterGroup(CoxeterGraph::parse("B3")).sign_characters().size() == 3);
  CHECK(CoxeterGroup(CoxeterGraph::parse("A1")).sign_characters().size() == 1);
  CoxeterGroup b3(CoxeterGraph::parse("B3"));
  for (const auto& gamma : b3.sign_characters()) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Element x = b3.generator(i) * b3.generator(j);
        CHECK(b3.sign(gamma, x) == gamma.value[static_cast<std::size_t>(i)] *
                                       gamma.value[static_cast<std::size_t>(j)]);
      }
  }
}

TEST_CASE("keys round-trip and preserve element order") {
  CoxeterGroup w(CoxeterGraph::parse("E6"));
  Element x = w.identity(), prev = w.identity();
  for (int step = 0; step < 60; ++step) {
    x = x * w.generator((step * 5 + 1) % 6);
    CHECK(w.from_key(w.key(x)) == x);
    CHECK((w.key(x) < w.key(prev)) == (x < prev));
    prev = x;
  }
}

TEST_CASE("graph rejection") {
  CHECK_THROWS_AS(CoxeterGraph::parse("n=3;1-2,2-3,1-3"), NonSphericalGraph);
  CHECK_THROWS_AS(CoxeterGraph::parse("n=2;1-2:inf"), UnsupportedLabel);
  CHECK_THROWS_AS(CoxeterGraph::parse("n=3;1-2:4,2-3:4"), NonSphericalGraph);
  CHECK_THROWS_AS(CoxeterGroup(CoxeterGraph::parse("B3xA1")).xi(), DisconnectedGraph);
}
