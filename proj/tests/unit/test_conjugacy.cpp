#include <doctest.h>

#include <algorithm>
#include <set>

#include "artin/conjugacy.hpp"

using namespace artin;

namespace {

std::vector<Element> all_elements(const CoxeterGroup& w) {
  std::set<Element> seen{w.identity()};
  std::vector<Element> queue{w.identity()};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& s : w.generators()) {
      Element y = queue[k] * s;
      if (seen.insert(y).second) queue.push_back(y);
    }
  return queue;
}

// class sizes by brute-force conjugation over all of W
std::multiset<std::uint64_t> brute_class_sizes(const CoxeterGroup& w) {
  auto elems = all_elements(w);
  std::set<Element> done;
  std::multiset<std::uint64_t> sizes;
  for (const auto& x : elems) {
    if (done.count(x)) continue;
    std::set<Element> cls;
    for (const auto& g : elems) cls.insert(x.conjugated_by(g));
    done.insert(cls.begin(), cls.end());
    sizes.insert(cls.size());
  }
  return sizes;
}

}  // namespace

TEST_CASE("A2 has classes of sizes 1, 2, 3") {
  CoxeterGroup w(CoxeterGraph::parse("A2"));
  ConjugacyClasses classes(w);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].size() == 1);
  CHECK(classes[1].size() == 2);
  CHECK(classes[2].size() == 3);
  CHECK(classes[0].representative().is_identity());
}

TEST_CASE("class sizes agree with brute force") {
  for (const char* code : {"A3", "B3", "H3", "I2:8", "I2:9", "D4", "B2xA1"}) {
    CAPTURE(std::string(code));
    CoxeterGroup w(CoxeterGraph::parse(code));
    ConjugacyClasses classes(w);
    std::multiset<std::uint64_t> sizes;
    for (const auto& c : classes) sizes.insert(c.size());
    CHECK(sizes == brute_class_sizes(w));
  }
}

TEST_CASE("representatives are minimal and transversal conjugators are correct") {
  CoxeterGroup w(CoxeterGraph::parse("F4"));
  ConjugacyClasses classes(w);
  std::uint64_t total = 0;
  for (const auto& c : classes) {
    total += c.size();
    CHECK(w.order() % c.size() == 0);
    auto keys = c.keys();
    CHECK(*std::min_element(keys.begin(), keys.end()) == c.rep_key());
    for (std::uint32_t idx = 0; idx < c.size(); idx += 7) {
      Element g = c.conjugator(w, idx);
      CHECK(w.key(c.representative().conjugated_by(g)) == keys[idx]);
    }
    auto gens = c.centralizer_generators(w);
    for (const auto& z : gens) CHECK(z.commutes_with(c.representative()));
    if (!gens.empty()) CHECK(w.subgroup_order(gens) == w.order() / c.size());
  }
  CHECK(total == w.order());
  CHECK(classes.size() == 25);
}

TEST_CASE("H3 has the identity class and 10 classes") {
  CoxeterGroup w(CoxeterGraph::parse("H3"));
  ConjugacyClasses classes(w);
  CHECK(classes.size() == 10);
  CHECK(classes.find(w.identity()) == 0);
}

TEST_CASE("W(E7): 60 classes, 30 even") {
  CoxeterGroup w(CoxeterGraph::parse("E7"));
  ConjugacyClasses classes(w);
  CHECK(classes.size() == 60);
  SignCharacter gamma{std::vector<int>(7, -1), {0}};
  std::size_t even = 0;
  std::uint64_t even_total = 0, total = 0;
  for (const auto& c : classes) {
    total += c.size();
    if (w.sign(gamma, c.representative()) == 1) {
      ++even;
      even_total += c.size();
    }
  }
  CHECK(total == w.order());
  CHECK(even == 30);
  CHECK(even_total == w.order() / 2);
}
