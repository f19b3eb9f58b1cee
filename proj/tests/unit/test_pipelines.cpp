#include <doctest.h>

#include <numeric>
#include <set>

#include "artin/errors.hpp"
#include "artin/pipelines.hpp"

using namespace artin;

TEST_CASE("H3 search") {
  auto r = h3_search(2);
  CHECK(r.x1 == 600);
  CHECK(r.x2 == 18);
  REQUIRE(r.x3.size() == 4);
  std::set<std::string> names;
  for (const auto& n : r.x3_names) names.insert(n.value_or("?"));
  CHECK(names == std::set<std::string>{"mu'", "mu''", "nu_3^3", "nu_3^4"});
}

TEST_CASE("B3 verification") {
  auto r = bn_verify(3);
  CHECK(r.proper_match);
  CHECK(r.catalog_unique);
  CHECK(r.report.proper_count() == 3);
  CHECK_THROWS_AS(bn_verify(4), std::invalid_argument);
  CHECK_THROWS_AS(bn_verify(7), GroupTooLarge);
}

TEST_CASE("F4 class identities") {
  CoxeterGroup w(CoxeterGraph::parse("F4"));
  ConjugacyClasses classes(w);
  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.size();
  CHECK(total == w.order());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& cls = classes[k];
    CAPTURE(cls.size());
    auto s = class_search(w, cls, cls.representative());
    auto row = class_stats(w, s, k);
    auto [y, u] = direct_pair_counts(w, cls);
    CHECK(y == row.y);
    CHECK(u == *row.u);
    CHECK(d_by_centralizer(w, cls) == row.d);
    CHECK(row.z_tilde <= row.z);
    CHECK(row.z <= row.x * row.x * row.x);
    CHECK((row.z - row.z_tilde - row.x) % 6 == 0);
  }
  auto even = even_classes(w, classes);
  std::uint64_t even_total = 1;
  for (auto k : even) even_total += classes[k].size();
  CHECK(even_total == w.order() / 2);
}

TEST_CASE("E7 size-63 class") {
  CoxeterGroup w(CoxeterGraph::parse("E7"));
  ConjugacyClasses classes(w);
  CHECK(classes.size() == 60);
  CHECK(even_classes(w, classes).size() == 29);

  auto t1 = e7_table1(w, classes, 63, 2);
  REQUIRE(t1.rows.size() == 1);
  const auto& row = t1.rows.front();
  CHECK(row.x == 33);
  CHECK(row.y == 1953);
  CHECK(row.z == 4353);
  CHECK(row.d == 31);
  CHECK(row.z_tilde == 2880);

  const auto& cls = classes[row.class_index];
  CHECK(d_by_centralizer(w, cls) == row.d);
  auto other = cls.elements(w).back();
  CHECK(class_search(w, cls, other).x.size() == row.x);

  auto s = class_search(w, cls, row.representative);
  std::vector<std::array<std::uint32_t, 3>> triples;
  z_counts(s, &triples);
  for (std::size_t k = 0; k < triples.size(); k += 97)
    CHECK(v_count_for_triple(s, triples[k], true) == v_count_for_triple(s, triples[k], false));

  auto t2 = e7_table2(w, classes, t1, 2);
  CHECK(*t2.rows.front().u == 2079);
  CHECK(*t2.rows.front().v == 23040);
  CHECK(*t2.v2 == 23040);
  CHECK(*t2.v2_prime == 23040);
  CHECK(*t2.v2_equals_v2_prime);

  auto again = e7_table1(w, ConjugacyClasses(w), 63, 1);
  CHECK(again.rows.front().representative == row.representative);
  CHECK(again.rows.front().z_tilde == row.z_tilde);

  CHECK_THROWS_AS(e7_table2(w, classes, SearchReport{}), Table1Missing);
}
