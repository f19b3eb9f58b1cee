#include <doctest.h>

#include <random>

#include "artin/errors.hpp"
#include "artin/urep.hpp"

using namespace artin;

namespace {

WHom named(const CoxeterGroup& w, const std::string& name) {
  for (auto& e : catalog(w))
    if (e.name == name) return e.hom;
  FAIL("missing catalog entry " << name);
  return {};
}

ArtinWord random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::vector<Letter> letters;
  int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  for (int k = 0; k < len; ++k)
    letters.push_back({static_cast<int>(rng() % static_cast<unsigned>(rank)), rng() % 2 ? 1 : -1});
  return ArtinWord(letters);
}

}  // namespace

TEST_CASE("U generators") {
  CoxeterGroup w(CoxeterGraph::parse("H3"));
  for (int i = 0; i < 3; ++i) {
    AffinePerm u = u_generator(w, i);
    auto [k, t] = u(0, static_cast<std::size_t>(i));
    CHECK(k == 1);
    CHECK(t == static_cast<std::size_t>(i));
    for (std::size_t r = 0; r < w.reflections().size(); ++r) {
      if (r == static_cast<std::size_t>(i)) continue;
      auto [k2, t2] = u(5, r);
      CHECK(k2 == 5);
      CHECK(w.reflections()[t2] == w.reflections()[r].conjugated_by(w.generator(i)));
    }
  }
}

TEST_CASE("U on I2(4q)") {
  for (int q : {1, 2, 3}) {
    CoxeterGroup w(CoxeterGraph::parse("I2:" + std::to_string(4 * q)));
    auto s1 = w.generator(0), s2 = w.generator(1);
    std::vector<std::size_t> t(static_cast<std::size_t>(2 * q) + 1);
    Element a = w.identity();  // (s2 s1)^{i-1}
    for (int i = 1; i <= q; ++i) {
      Element odd = a * s2 * a.inverse();
      t[static_cast<std::size_t>(2 * i - 1)] = w.reflection_index(odd);
      t[static_cast<std::size_t>(2 * i)] = w.reflection_index(odd.conjugated_by(s1));
      a = a * s2 * s1;
    }
    AffinePerm u21 = u_eval(w, ArtinWord::parse("2 1"));
    auto [k, img] = u21(7, t[2]);
    CHECK(k == 8);
    CHECK(img == t[1]);
    AffinePerm u1 = u_eval(w, ArtinWord::parse("1"));
    for (int i = 1; i <= q; ++i) {
      CHECK(u1(0, t[static_cast<std::size_t>(2 * i - 1)]) ==
            std::pair<std::int64_t, std::size_t>{0, t[static_cast<std::size_t>(2 * i)]});
    }
  }
}

TEST_CASE("U is a homomorphism") {
  std::mt19937_64 rng(0);
  for (const char* code : {"A3", "B3", "H3", "I2:7", "I2:8"}) {
    CAPTURE(std::string(code));
    CoxeterGroup w(CoxeterGraph::parse(code));
    for (int k = 0; k < 200; ++k) {
      auto a = random_word(rng, w.rank(), 12), b = random_word(rng, w.rank(), 12);
      AffinePerm ua = u_eval(w, a), ub = u_eval(w, b);
      CHECK(u_eval(w, a * b) == ua * ub);
      CHECK(ua.base() == conjugation_on_reflections(w, mu_eval(w, a)));
      CHECK((ua * ua).offset_sum() == 2 * ua.offset_sum());
    }
    CHECK(u_eval(w, ArtinWord::parse("1 -1")) == AffinePerm::identity(w.reflections().size()));
    for (int i = 0; i < w.rank(); ++i)
      for (int j = i + 1; j < w.rank(); ++j) {
        auto si = ArtinWord::generator(i), sj = ArtinWord::generator(j);
        int m = w.graph().label(i, j);
        CHECK(u_eval(w, omega(si, sj, m)) == u_eval(w, omega(sj, si, m)));
      }
  }
}

TEST_CASE("AffinePerm algebra") {
  CoxeterGroup w(CoxeterGraph::parse("B3"));
  auto a = u_eval(w, ArtinWord::parse("1 2 -3")), b = u_eval(w, ArtinWord::parse("3 3 2")),
       c = u_eval(w, ArtinWord::parse("-2 1"));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * a.inverse() == AffinePerm::identity(a.size()));
}

TEST_CASE("parity profile") {
  CoxeterGroup w(CoxeterGraph::parse("I2:8"));
  auto std_prof = parity_profile(w, WHom{{w.generators().begin(), w.generators().end()}});
  for (int i = 0; i < 2; ++i) {
    auto u = u_generator(w, i);
    CHECK(std_prof[static_cast<std::size_t>(i)].base == u.base());
  }
  auto prof = parity_profile(w, named(w, "nu_8^1"));
  std::size_t t1 = 1, t2 = w.reflection_index(w.generator(1).conjugated_by(w.generator(0)));
  CHECK(prof[1].parity[t2] == 1);
  ConjugacyClass s2_class = ConjugacyClass::orbit(w, w.generator(1));
  for (std::size_t t = 0; t < prof[1].parity.size(); ++t)
    if (t != t2 && s2_class.contains(w.key(w.reflections()[t]))) CHECK(prof[1].parity[t] == 0);
  CHECK(prof[1].base[t2] == t1);
  CoxeterGroup a2(CoxeterGraph::parse("A2"));
  CHECK_THROWS_AS(parity_profile(a2, WHom{{a2.generator(0), a2.generator(0) * a2.generator(1)}}), InvalidHom);
}

TEST_CASE("obstruction verdicts") {
  for (const char* code : {"A1", "A3", "B3", "H3", "I2:5", "I2:8", "B4", "D4", "F4", "A4", "H4"}) {
    CAPTURE(std::string(code));
    CoxeterGroup w(CoxeterGraph::parse(code));
    auto r = obstruction(w, WHom{{w.generators().begin(), w.generators().end()}});
    CHECK(r.verdict == Verdict::no_parity_obstruction);
    CHECK(r.equations == static_cast<std::size_t>(w.rank() * (w.rank() - 1) / 2) * w.reflections().size());
  }
  auto expect_obstructed = [](const char* code, const char* name) {
    CAPTURE(std::string(code));
    CAPTURE(std::string(name));
    CoxeterGroup w(CoxeterGraph::parse(code));
    auto sys = offset_system(w, named(w, name));
    auto r = solve_obstruction(sys);
    CHECK(r.verdict == Verdict::obstructed);
    CHECK(verify_certificate(sys, r.certificate));
  };
  expect_obstructed("I2:8", "nu_8^1");
  expect_obstructed("I2:8", "nu_8^2");
  expect_obstructed("I2:12", "nu_12^1");
  expect_obstructed("I2:12", "nu_12^2");
  for (const char* name : {"nu_3^1", "nu_3^2", "nu_3^3", "nu_3^4"}) expect_obstructed("H3", name);
  expect_obstructed("B3", "nu_3^3");
  expect_obstructed("B3", "nu_3^4");
}

TEST_CASE("matrix dump") {
  CoxeterGroup w(CoxeterGraph::parse("I2:8"));
  auto sys = offset_system(w, named(w, "nu_8^1"));
  auto text = dump_matrix(sys);
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(sys.equations.size()));
  CHECK(text.find('\n') == sys.variables() + 1);
}

TEST_CASE("theorem 3.1 report") {
  auto i28 = theorem31_report(CoxeterGroup(CoxeterGraph::parse("I2:8")));
  CHECK_FALSE(i28.vacuous);
  for (const auto& row : i28.rows) {
    CAPTURE(row.name.value_or("?"));
    CHECK(row.result.verdict == Verdict::obstructed);
  }
  auto h3 = theorem31_report(CoxeterGroup(CoxeterGraph::parse("H3")));
  CHECK(h3.rows.size() == 4);
  for (const auto& row : h3.rows) CHECK(row.result.verdict == Verdict::obstructed);
  auto e7 = theorem31_report(CoxeterGroup(CoxeterGraph::parse("E7")));
  CHECK(e7.vacuous);
  CHECK(e7.source == "catalog");
  CHECK_THROWS_AS(theorem31_report(CoxeterGroup(CoxeterGraph::parse("E6"))), GroupTooLarge);
}
