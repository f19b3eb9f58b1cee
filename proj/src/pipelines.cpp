#include "artin/pipelines.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "artin/errors.hpp"
#include "artin/parallel.hpp"

namespace artin {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool braids(const Element& a, const Element& b) { return a * b * a == b * a * b; }

std::vector<Element> enumerate_subgroup(const CoxeterGroup& w, std::span<const Element> gens) {
  std::vector<Element> out{w.identity()};
  std::unordered_set<std::uint64_t> seen{w.key(out.front())};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      Element next = out[k] * g;
      if (seen.insert(w.key(next)).second) out.push_back(std::move(next));
    }
  return out;
}

std::vector<std::string> split_names(const std::string& name) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t next = name.find(" ~ ", pos);
    out.push_back(name.substr(pos, next - pos));
    if (next == std::string::npos) return out;
    pos = next + 3;
  }
}

}  // namespace

H3SearchResult h3_search(int threads) {
  CoxeterGroup w(CoxeterGraph::parse("H3"));
  auto elems = enumerate_subgroup(w, w.generators());
  std::sort(elems.begin(), elems.end());

  std::vector<std::vector<WHom>> found(elems.size());
  parallel_for(elems.size(), threads, [&](std::size_t a) {
    const Element& x = elems[a];
    for (const auto& y : elems) {
      Element xy = x * y, yx = y * x;
      if (xy * xy * x != yx * yx * y) continue;
      for (const auto& z : elems)
        if (x * z == z * x && y * z * y == z * y * z) found[a].push_back(WHom{{x, y, z}});
    }
  });

  H3SearchResult out;
  HomSpace space(w);
  std::set<WHom> orbits;
  for (const auto& part : found) {
    out.x1 += part.size();
    for (const auto& h : part) orbits.insert(space.canonical(h));
  }
  out.x2 = orbits.size();

  std::vector<std::pair<WHom, std::string>> named;
  for (const auto& e : catalog(w)) named.emplace_back(space.canonical(e.hom), e.name);
  for (const auto& h : orbits) {
    if (w.subgroup_order(h.images) != 60) continue;
    out.x3.push_back(h);
    std::optional<std::string> name;
    for (const auto& [c, n] : named)
      if (c == h) name = n;
    out.x3_names.push_back(name);
  }
  return out;
}

std::vector<std::size_t> even_classes(const CoxeterGroup& w, const ConjugacyClasses& classes) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const Element& rep = classes[k].representative();
    if (!rep.is_identity() && w.length(rep) % 2 == 0) out.push_back(k);
  }
  return out;
}

ClassSearch class_search(const CoxeterGroup& w, const ConjugacyClass& cls, const Element& t, int threads) {
  ClassSearch s;
  s.cls = &cls;
  s.t = t;
  s.elements = cls.elements(w);
  std::vector<std::uint8_t> flags(s.elements.size(), 0);
  parallel_for(s.elements.size(), threads, [&](std::size_t k) {
    const Element& u = s.elements[k];
    flags[k] = static_cast<std::uint8_t>((braids(u, t) ? 1 : 0) | (u.commutes_with(t) ? 2 : 0));
  });
  for (std::size_t k = 0; k < flags.size(); ++k) {
    if (flags[k] & 1) s.x.push_back(static_cast<std::uint32_t>(k));
    if (flags[k] & 2) s.d.push_back(static_cast<std::uint32_t>(k));
  }
  return s;
}

std::pair<std::uint64_t, std::uint64_t> z_counts(const ClassSearch& s,
                                                 std::vector<std::array<std::uint32_t, 3>>* keep) {
  std::size_t n = s.x.size();
  std::vector<std::uint8_t> comm(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      bool c = a == b || s.elements[s.x[a]].commutes_with(s.elements[s.x[b]]);
      comm[a * n + b] = comm[b * n + a] = c;
    }
  std::uint64_t all = 0, distinct = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!comm[a * n + b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!comm[a * n + c] || !comm[b * n + c]) continue;
        ++all;
        if (a == b || b == c || a == c) continue;
        ++distinct;
        if (keep) keep->push_back({s.x[a], s.x[b], s.x[c]});
      }
    }
  return {all, distinct};
}

ClassStatsRow class_stats(const CoxeterGroup& w, const ClassSearch& s, std::size_t class_index) {
  ClassStatsRow row;
  row.class_index = class_index;
  row.class_size = s.cls->size();
  row.x = s.x.size();
  row.d = s.d.size();
  row.y = row.class_size * row.d;
  std::tie(row.z, row.z_tilde) = z_counts(s);
  row.u = row.class_size * row.x;
  row.representative = s.t;
  row.representative_word = w.reduced_word(s.t);
  return row;
}

std::pair<std::uint64_t, std::uint64_t> direct_pair_counts(const CoxeterGroup& w, const ConjugacyClass& cls) {
  auto elems = cls.elements(w);
  std::uint64_t y = 0, u = 0;
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if (a.commutes_with(b)) ++y;
      if (braids(a, b)) ++u;
    }
  return {y, u};
}

std::uint64_t d_by_centralizer(const CoxeterGroup& w, const ConjugacyClass& cls) {
  auto gens = cls.centralizer_generators(w);
  std::uint64_t count = 0;
  for (const auto& g : enumerate_subgroup(w, gens))
    if (cls.contains(w.key(g))) ++count;
  return count;
}

namespace {

// Calls visit(u1, u6, u7) for every completion of (u2, u3, u5) with u4 = T.
template <typename Visit>
void v_search(const ClassSearch& s, const std::array<std::uint32_t, 3>& triple, bool pruned, Visit&& visit) {
  const Element& t = s.t;
  const Element& u2 = s.elements[triple[0]];
  const Element& u3 = s.elements[triple[1]];
  const Element& u5 = s.elements[triple[2]];
  std::vector<std::uint32_t> all;
  if (!pruned) {
    all.resize(s.elements.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<std::uint32_t>(k);
  }
  const auto& pool = pruned ? s.d : all;
  std::vector<std::uint32_t> l1, l6, l7;
  for (auto k : pool) {
    const Element& u = s.elements[k];
    if (!pruned && !u.commutes_with(t)) continue;
    if (!u.commutes_with(u2)) continue;
    bool c3 = u.commutes_with(u3), c5 = u.commutes_with(u5);
    if (c5 && braids(u, u3)) l1.push_back(k);
    if (c3 && braids(u, u5)) l6.push_back(k);
    if (c3 && c5) l7.push_back(k);
  }
  for (auto a : l1)
    for (auto b : l6) {
      if (!s.elements[a].commutes_with(s.elements[b])) continue;
      for (auto c : l7)
        if (s.elements[a].commutes_with(s.elements[c]) && braids(s.elements[b], s.elements[c]))
          visit(a, b, c);
    }
}

void require_e7(const CoxeterGroup& w) {
  if (w.graph().code() != "E7") throw std::invalid_argument("the V search needs W(E7) in standard numbering");
}

}  // namespace

std::uint64_t v_count_for_triple(const ClassSearch& s, const std::array<std::uint32_t, 3>& triple, bool pruned) {
  std::uint64_t n = 0;
  v_search(s, triple, pruned, [&](std::uint32_t, std::uint32_t, std::uint32_t) { ++n; });
  return n;
}

SearchReport e7_table1(const CoxeterGroup& w, const ConjugacyClasses& classes,
                       std::optional<std::uint64_t> class_size, int threads) {
  SearchReport out;
  out.graph = w.graph().code();
  auto start = Clock::now();
  for (std::size_t k : even_classes(w, classes)) {
    const auto& cls = classes[k];
    if (class_size && cls.size() != *class_size) continue;
    auto s = class_search(w, cls, cls.representative(), threads);
    auto row = class_stats(w, s, k);
    row.u.reset();
    out.rows.push_back(std::move(row));
  }
  out.timings.emplace_back("table1", seconds_since(start));
  return out;
}

SearchReport e7_table2(const CoxeterGroup& w, const ConjugacyClasses& classes, const SearchReport& table1,
                       int threads) {
  require_e7(w);
  if (table1.rows.empty()) throw Table1Missing("table 2 needs the table 1 rows");
  SearchReport out = table1;
  auto start = Clock::now();
  for (auto& row : out.rows) {
    if (row.z_tilde == 0) continue;
    if (row.class_index >= classes.size()) throw Table1Missing("row refers to an unknown class");
    const auto& cls = classes[row.class_index];
    auto s = class_search(w, cls, row.representative, threads);
    row.u = row.class_size * s.x.size();
    std::vector<std::array<std::uint32_t, 3>> triples;
    z_counts(s, &triples);

    bool collect = row.class_size == 63;
    std::vector<std::vector<std::vector<std::uint64_t>>> tuples(collect ? triples.size() : 0);
    std::vector<std::uint64_t> counts(triples.size(), 0);
    parallel_for(triples.size(), threads, [&](std::size_t k) {
      v_search(s, triples[k], true, [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        ++counts[k];
        if (!collect) return;
        const auto& tr = triples[k];
        tuples[k].push_back({w.key(s.elements[a]), w.key(s.elements[tr[0]]), w.key(s.elements[tr[1]]),
                             w.key(s.t), w.key(s.elements[tr[2]]), w.key(s.elements[b]),
                             w.key(s.elements[c])});
      });
    });
    std::uint64_t v = 0;
    for (auto c : counts) v += c;
    row.v = v;

    if (collect) {
      auto vstart = Clock::now();
      std::set<std::vector<std::uint64_t>> vset;
      for (auto& part : tuples)
        for (auto& tup : part) vset.insert(std::move(tup));
      auto vprime = e7_v_prime(w, row.representative);
      out.v2 = v;
      out.v2_prime = vprime.size();
      out.v2_equals_v2_prime = std::set<std::vector<std::uint64_t>>(vprime.begin(), vprime.end()) == vset;
      out.timings.emplace_back("v_prime", seconds_since(vstart));
    }
  }
  out.timings.emplace_back("table2", seconds_since(start));
  return out;
}

std::vector<std::vector<std::uint64_t>> e7_v_prime(const CoxeterGroup& w, const Element& t) {
  require_e7(w);
  const Element& w0 = w.longest_element();
  Element x0 = w0 * w.generator(3);
  auto cls = ConjugacyClass::orbit(w, t);
  auto idx_t = cls.index_of(w.key(t));
  auto idx_x = cls.index_of(w.key(x0));
  if (!idx_x) return {};
  Element ct = cls.conjugator(w, *idx_t), cx_inv = cls.conjugator(w, *idx_x).inverse();
  std::vector<Element> images;
  for (int i = 0; i < w.rank(); ++i) images.push_back(w0 * w.generator(i));

  std::set<std::vector<std::uint64_t>> out;
  for (const auto& z : enumerate_subgroup(w, cls.centralizer_generators(w))) {
    Element u = ct * z * cx_inv;
    std::vector<std::uint64_t> tup;
    for (const auto& x : images) tup.push_back(w.key(x.conjugated_by(u)));
    out.insert(std::move(tup));
  }
  return {out.begin(), out.end()};
}

BnVerification bn_verify(int n, std::uint64_t bound, int threads) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("bn_verify needs odd n >= 3");
  CoxeterGroup w(CoxeterGraph::standard(Family::B, n));
  HomSpace space(w, bound);
  BnVerification out;
  out.report = classify_uceps(space, GroupingMode::equivalence, threads);

  std::string suffix = std::to_string(n);
  std::set<std::string> expected{"mu'", "nu_" + suffix + "^3", "nu_" + suffix + "^4"};
  std::set<std::string> seen;
  bool ok = out.report.proper_count() == expected.size();
  for (const auto& c : out.report.classes) {
    if (!c.proper) continue;
    std::size_t hits = 0;
    for (const auto& name : split_names(c.name.value_or("")))
      if (expected.count(name)) {
        ++hits;
        seen.insert(name);
      }
    ok = ok && hits == 1;
  }
  out.proper_match = ok && seen == expected;

  out.catalog_unique = true;
  for (const auto& e : catalog(w)) {
    std::size_t hits = 0;
    for (const auto& c : out.report.classes)
      for (const auto& name : split_names(c.name.value_or("")))
        if (name == e.name) ++hits;
    out.catalog_unique = out.catalog_unique && hits == 1;
  }
  return out;
}

}  // namespace artin
