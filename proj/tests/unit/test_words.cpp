#include <doctest.h>

#include <random>

#include "artin/errors.hpp"
#include "artin/urep.hpp"
#include "artin/words.hpp"

using namespace artin;

TEST_CASE("word syntax") {
  auto w = ArtinWord::parse("1 2 -3");
  REQUIRE(w.size() == 3);
  CHECK(w.letters()[2] == Letter{2, -1});
  CHECK(w.str() == "1 2 -3");
  CHECK_FALSE(w.is_positive());
  CHECK(ArtinWord::parse("").empty());
  CHECK_THROWS_AS(ArtinWord::parse("1 x"), ParseError);
  CHECK_THROWS_AS(ArtinWord::parse("4", 3), ParseError);
  CHECK_THROWS_AS(ArtinWord::parse("0"), ParseError);
}

TEST_CASE("free reduction") {
  auto w = ArtinWord::parse("1 2 -2 -1 3 3 -3");
  CHECK(w.reduced() == ArtinWord::parse("3"));
  CHECK(w.reduced().reduced() == w.reduced());
  CHECK((w * w.inverse()).reduced().empty());
  CHECK(ArtinWord::parse("1 2").pow(-2) == ArtinWord::parse("-2 -1 -2 -1"));
}

TEST_CASE("omega") {
  auto x = ArtinWord::generator(0), y = ArtinWord::generator(1);
  CHECK(omega(x, y, 2) == ArtinWord::parse("1 2"));
  CHECK(omega(x, y, 3) == ArtinWord::parse("1 2 1"));
  CHECK(omega(x, y, 4) == ArtinWord::parse("1 2 1 2"));
  CHECK_THROWS_AS(omega(x, y, 0), InfiniteLabel);
  CHECK_THROWS_AS(omega(x, y, 1), InfiniteLabel);
}

TEST_CASE("mu evaluation") {
  for (const char* code : {"A1", "A2", "B3", "H3", "E6", "I2:7", "B2xA1"}) {
    CAPTURE(std::string(code));
    CoxeterGroup w(CoxeterGraph::parse(code));
    CHECK(mu_eval(w, ArtinWord::parse("1 1")).is_identity());
    CHECK(mu_eval(w, ArtinWord::parse("-1")) == w.generator(0));
    for (const auto& e : w.graph().pairs()) {
      auto a = ArtinWord::generator(e.i), b = ArtinWord::generator(e.j);
      CHECK(mu_eval(w, omega(a, b, e.m)) == mu_eval(w, omega(b, a, e.m)));
    }
    if (!w.graph().connected()) {
      CHECK_THROWS_AS(fundamental_and_central(w), DisconnectedGraph);
      continue;
    }
    auto f = fundamental_and_central(w);
    CHECK(mu_eval(w, f.delta) == w.longest_element());
    Element d = mu_eval(w, f.central);
    CHECK(w.is_central(d));
    CHECK((d * d).is_identity());
  }
}

TEST_CASE("fundamental and central elements") {
  auto a1 = fundamental_and_central(CoxeterGroup(CoxeterGraph::parse("A1")));
  CHECK(a1.delta == ArtinWord::parse("1"));
  CHECK(a1.central == a1.delta);
  CoxeterGroup a2(CoxeterGraph::parse("A2"));
  auto f2 = fundamental_and_central(a2);
  CHECK(f2.delta.size() == 3);
  CHECK(f2.central == f2.delta * f2.delta);
  auto b3 = fundamental_and_central(CoxeterGroup(CoxeterGraph::parse("B3")));
  CHECK(b3.central == b3.delta);
}

TEST_CASE("Tits section") {
  CoxeterGroup a2(CoxeterGraph::parse("A2"));
  CHECK(tits_section(a2, a2.identity()).empty());
  Element x = a2.from_word(std::vector<int>{0, 1, 0});
  auto lo = tits_section(a2, x, Descent::smallest), hi = tits_section(a2, x, Descent::largest);
  CHECK(lo.is_positive());
  CHECK(mu_eval(a2, lo) == x);
  CHECK(mu_eval(a2, hi) == x);
  CHECK(u_eval(a2, ArtinWord::parse("1 2 1")) == u_eval(a2, ArtinWord::parse("2 1 2")));
  CHECK(u_eval(a2, lo) == u_eval(a2, hi));

  std::mt19937_64 rng(7);
  for (const char* code : {"B4", "H3", "D5", "F4"}) {
    CoxeterGroup w(CoxeterGraph::parse(code));
    auto t = fundamental_and_central(w).delta;
    CHECK(t == tits_section(w, w.longest_element()));
    for (int k = 0; k < 40; ++k) {
      std::vector<int> word;
      for (int i = 0; i < 25; ++i) word.push_back(static_cast<int>(rng() % static_cast<unsigned>(w.rank())));
      Element g = w.from_word(word);
      auto s1 = tits_section(w, g, Descent::smallest), s2 = tits_section(w, g, Descent::largest);
      CHECK(static_cast<int>(s1.size()) == w.length(g));
      CHECK(mu_eval(w, s1) == g);
      CHECK(u_eval(w, s1) == u_eval(w, s2));
    }
  }
}
