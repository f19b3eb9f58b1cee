#include "artin/hom.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "artin/errors.hpp"
#include "artin/parallel.hpp"

namespace artin {

namespace {

void require_valid(const CoxeterGroup& w, const WHom& h) {
  if (h.images.size() != static_cast<std::size_t>(w.rank()))
    throw InvalidHom("expected " + std::to_string(w.rank()) + " images, got " +
                     std::to_string(h.images.size()));
  if (!is_valid(w, h)) throw InvalidHom("images break an Artin relation");
}

bool relation_holds(const Element& a, const Element& b, int m) {
  return omega(a, b, m) == omega(b, a, m);
}

Element word_element(const CoxeterGroup& w, std::string_view text) {
  return mu_eval(w, ArtinWord::parse(text, w.rank()));
}

// e_j = s_j ... s_2 s_1 s_2 ... s_j (1-based j)
Element bn_e(const CoxeterGroup& w, int j) {
  Element e = w.generator(0);
  for (int k = 1; k < j; ++k) e = e.conjugated_by(w.generator(k));
  return e;
}

std::vector<std::uint64_t> tuple_keys(const CoxeterGroup& w, const WHom& h) {
  std::vector<std::uint64_t> keys;
  keys.reserve(h.images.size());
  for (const auto& x : h.images) keys.push_back(w.key(x));
  return keys;
}

}  // namespace

bool is_valid(const CoxeterGroup& w, const WHom& h) {
  if (h.images.size() != static_cast<std::size_t>(w.rank())) return false;
  for (const auto& e : w.graph().pairs())
    if (!relation_holds(h.images[static_cast<std::size_t>(e.i)], h.images[static_cast<std::size_t>(e.j)], e.m))
      return false;
  return true;
}

std::uint64_t image_order(const CoxeterGroup& w, const WHom& h) {
  require_valid(w, h);
  return w.subgroup_order(h.images);
}

bool is_ucep(const CoxeterGroup& w, const WHom& h) {
  require_valid(w, h);
  StabilizerChain chain(w.degree(), h.images);
  auto z = w.center_elements();
  std::uint64_t meet = 0;
  for (const auto& c : z)
    if (chain.contains(c)) ++meet;
  return chain.order() * z.size() / meet == w.order();
}

bool is_proper(const CoxeterGroup& w, const WHom& h) {
  return is_ucep(w, h) && w.subgroup_order(h.images) < w.order();
}

bool is_ordinary(const CoxeterGroup& w, const WHom& h) {
  require_valid(w, h);
  return std::all_of(h.images.begin(), h.images.end(),
                     [](const Element& x) { return x.pow(2).is_identity(); });
}

std::vector<std::vector<int>> image_words(const CoxeterGroup& w, const WHom& h) {
  std::vector<std::vector<int>> out;
  for (const auto& x : h.images) out.push_back(w.reduced_word(x));
  return out;
}

WHom hom_from_words(const CoxeterGroup& w, std::span<const std::string> words) {
  WHom h;
  for (const auto& text : words) h.images.push_back(word_element(w, text));
  return h;
}

ProperExistence exists_proper_ucep(const CoxeterGroup& w) {
  auto xi = w.xi();
  ProperExistence out;
  for (int i = 0; i < w.rank(); ++i)
    if (xi[static_cast<std::size_t>(i)] != i) return out;
  for (const auto& gamma : w.sign_characters()) {
    if (w.sign(gamma, w.longest_element()) == -1) {
      out.exists = true;
      out.witness = gamma;
      return out;
    }
  }
  return out;
}

std::vector<NamedHom> catalog(const CoxeterGroup& w) {
  const auto& g = w.graph();
  if (!g.connected() || !g.standard_numbering())
    throw NoCatalogEntry("no catalog for " + g.code());
  const Component& c = g.components()[0];
  const Element& w0 = w.longest_element();
  std::vector<NamedHom> out;
  auto named = [&](std::string name, std::vector<Element> images) {
    out.push_back({std::move(name), WHom{std::move(images)}});
  };

  if (c.family == Family::I && c.p % 4 == 2) {
    named("mu'", {w.generator(0), word_element(w, "2 1 2")});
  } else if (c.family == Family::I && c.p % 4 == 0) {
    std::string p = std::to_string(c.p);
    named("nu_" + p + "^1", {w.generator(0), word_element(w, "2 1")});
    named("nu_" + p + "^2", {word_element(w, "1 2"), w.generator(1)});
  } else if (c.family == Family::B && c.rank >= 2) {
    int n = c.rank;
    std::string tag = std::to_string(n);
    std::vector<Element> plain, twisted;
    for (int i = 1; i < n; ++i) {
      plain.push_back(w.generator(i));
      twisted.push_back(bn_e(w, i) * w.generator(i));
    }
    auto with_first = [](Element first, const std::vector<Element>& rest) {
      std::vector<Element> images{std::move(first)};
      images.insert(images.end(), rest.begin(), rest.end());
      return images;
    };
    std::vector<NamedHom> all = {
        {"mu'", WHom{with_first(w0 * w.generator(0), plain)}},
        {"nu_" + tag + "^1", WHom{with_first(w.generator(0), twisted)}},
        {"nu_" + tag + "^2", WHom{with_first(w0, twisted)}},
        {"nu_" + tag + "^3", WHom{with_first(w0 * w.generator(0), twisted)}},
        {"nu_" + tag + "^4", WHom{with_first(w.identity(), twisted)}},
    };
    for (auto& entry : all)
      if (n % 2 == 1 || (is_valid(w, entry.hom) && is_ucep(w, entry.hom))) out.push_back(std::move(entry));
  } else if (c.family == Family::H && c.rank == 3) {
    named("mu'", {w.generator(0) * w0, w.generator(1) * w0, w.generator(2) * w0});
    named("mu''", {word_element(w, "2 1 2 1 3 2 1 2 1 3 2 1 2 3"),
                   word_element(w, "3 2 1 2 1 3 2 1 2 3"), word_element(w, "1 3")});
    named("nu_3^1", {word_element(w, "3 2 1 2 3 1 2 1 2"), word_element(w, "1 2 3 1 2 1 2 3 2 1 2"),
                     word_element(w, "2 1 2 3 1 2 1 2 3")});
    named("nu_3^2", {word_element(w, "3 2 1 2 3 1 2 1 2 3 2"), word_element(w, "1 2 3"),
                     word_element(w, "3 2 1 2 3 1 2 1 2 3 1")});
    named("nu_3^3", {word_element(w, "2 1 2 1"), word_element(w, "2 1 2 1 3 2 1 2 1 3 2 1"),
                     word_element(w, "1 2 1 2")});
    named("nu_3^4", {word_element(w, "3 2 1 2"), word_element(w, "2 3 2 1"), word_element(w, "2 1 2 3")});
  } else if (c.family == Family::E && c.rank == 7) {
    std::vector<Element> images;
    for (int i = 0; i < 7; ++i) images.push_back(w0 * w.generator(i));
    named("mu'", std::move(images));
  } else {
    throw NoCatalogEntry("no catalog for " + g.code());
  }
  return out;
}

void check_automorphism(const CoxeterGroup& w, const Automorphism& a) {
  if (a.images.size() != static_cast<std::size_t>(w.rank()))
    throw InvalidAutomorphism(a.name + ": wrong number of images");
  for (const auto& x : a.images)
    if (x.is_identity() || !x.pow(2).is_identity())
      throw InvalidAutomorphism(a.name + ": generator images must be involutions");
  for (const auto& e : w.graph().pairs()) {
    Element st = a.images[static_cast<std::size_t>(e.i)] * a.images[static_cast<std::size_t>(e.j)];
    if (st.order() != static_cast<std::uint64_t>(e.m))
      throw InvalidAutomorphism(a.name + ": Coxeter relation fails");
  }
  if (w.subgroup_order(a.images) != w.order()) throw InvalidAutomorphism(a.name + ": not surjective");
}

Element apply(const CoxeterGroup& w, const Automorphism& a, const Element& x) {
  Element out = w.identity();
  for (int i : w.reduced_word(x)) out = out * a.images[static_cast<std::size_t>(i)];
  return out;
}

WHom apply(const CoxeterGroup& w, const Automorphism& a, const WHom& h) {
  WHom out;
  for (const auto& x : h.images) out.images.push_back(apply(w, a, x));
  return out;
}

Automorphism h3_alpha(const CoxeterGroup& w) {
  return {"alpha", "special",
          {word_element(w, "2 1 3 2 3 1 2 1 3 2 3 1 2"), w.generator(1), w.generator(2)}};
}

std::vector<Automorphism> automorphism_generators(const CoxeterGroup& w) {
  const auto& g = w.graph();
  if (!g.connected() || !g.standard_numbering())
    throw UnsupportedEquivalence("no automorphism generators known for " + g.code());
  const Component& c = g.components()[0];
  std::vector<Automorphism> out;
  if (c.family == Family::I) {
    out.push_back({"alpha_0", "graph", {w.generator(1), w.generator(0)}});
    Element s1 = w.generator(0), s2 = w.generator(1);
    for (int k = 1; 2 * k + 1 < c.p; ++k) {
      if (std::gcd(2 * k + 1, c.p) != 1) continue;
      Element image = s2.conjugated_by((s2 * s1).pow(k));
      out.push_back({"alpha_" + std::to_string(k), "special", {s1, image}});
    }
  } else if (c.family == Family::B && c.rank % 2 == 1) {
    std::vector<Element> images{w.generator(0)};
    for (int i = 1; i < c.rank; ++i) images.push_back(w.longest_element() * w.generator(i));
    out.push_back({"alpha_0", "special", std::move(images)});
  } else if (c.family == Family::H && c.rank == 3) {
    out.push_back(h3_alpha(w));
  } else if ((c.family == Family::A && (c.rank == 1 || c.rank == 3)) ||
             (c.family == Family::E && c.rank == 7) || (c.family == Family::D && c.rank % 2 == 1)) {
    // all automorphisms are inner
  } else {
    throw UnsupportedEquivalence("no automorphism generators known for " + g.code());
  }
  for (const auto& a : out) check_automorphism(w, a);
  return out;
}

namespace {

const CoxeterGroup& within_bound(const CoxeterGroup& w, std::uint64_t bound) {
  if (w.order() > bound)
    throw GroupTooLarge("|W(" + w.graph().code() + ")| = " + std::to_string(w.order()) +
                        " exceeds the brute-force bound; use the pipelines");
  return w;
}

}  // namespace

HomSpace::HomSpace(const CoxeterGroup& w, std::uint64_t bound, std::uint64_t seed)
    : group_(&w), classes_(within_bound(w, bound), seed) {
  for (const auto& c : classes_) {
    auto elems = c.elements(w);
    elements_.insert(elements_.end(), elems.begin(), elems.end());
  }
  std::sort(elements_.begin(), elements_.end());
  centralizers_.resize(classes_.size());
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const Element& rep = classes_[k].representative();
    for (std::size_t e = 0; e < elements_.size(); ++e)
      if (elements_[e].commutes_with(rep)) centralizers_[k].push_back(e);
  }
}

const std::vector<std::size_t>& HomSpace::centralizer(std::size_t class_index) const {
  return centralizers_[class_index];
}

WHom HomSpace::canonical_from_rep(const WHom& h, std::size_t class_index) const {
  const CoxeterGroup& w = *group_;
  std::vector<std::uint64_t> best = tuple_keys(w, h);
  std::size_t best_z = 0;
  bool found = false;
  for (std::size_t z : centralizer(class_index)) {
    const Element& g = elements_[z];
    bool smaller = false;
    for (std::size_t i = 1; i < h.images.size(); ++i) {
      std::uint64_t key = w.key(h.images[i].conjugated_by(g));
      if (key != best[i]) {
        smaller = key < best[i];
        break;
      }
    }
    if (!smaller) continue;
    for (std::size_t i = 1; i < h.images.size(); ++i) best[i] = w.key(h.images[i].conjugated_by(g));
    best_z = z;
    found = true;
  }
  if (!found) return h;
  WHom out;
  for (const auto& x : h.images) out.images.push_back(x.conjugated_by(elements_[best_z]));
  return out;
}

WHom HomSpace::canonical(const WHom& h) const {
  const CoxeterGroup& w = *group_;
  std::size_t k = classes_.find(h.images.at(0));
  std::uint32_t idx = *classes_[k].index_of(w.key(h.images[0]));
  Element c_inv = classes_[k].conjugator(w, idx).inverse();
  WHom moved;
  for (const auto& x : h.images) moved.images.push_back(x.conjugated_by(c_inv));
  return canonical_from_rep(moved, k);
}

std::uint64_t HomSpace::orbit_size(const WHom& h) const {
  WHom c = canonical(h);
  std::size_t k = classes_.find(c.images[0]);
  std::uint64_t stabilizer = 0;
  for (std::size_t z : centralizer(k)) {
    const Element& g = elements_[z];
    bool fixes = std::all_of(c.images.begin(), c.images.end(),
                             [&](const Element& x) { return x.commutes_with(g); });
    if (fixes) ++stabilizer;
  }
  return group_->order() / stabilizer;
}

std::vector<HomSpace::Orbit> HomSpace::valid_orbits(int threads) const {
  const CoxeterGroup& w = *group_;
  int n = w.rank();
  std::vector<std::vector<int>> labels(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (const auto& e : w.graph().pairs()) {
    labels[static_cast<std::size_t>(e.i)][static_cast<std::size_t>(e.j)] = e.m;
    labels[static_cast<std::size_t>(e.j)][static_cast<std::size_t>(e.i)] = e.m;
  }

  std::vector<std::vector<Orbit>> per_class(classes_.size());
  parallel_for(classes_.size(), threads, [&](std::size_t k) {
    std::map<std::vector<std::uint64_t>, WHom> found;
    WHom tuple;
    tuple.images.push_back(classes_[k].representative());
    auto extend = [&](auto&& self) -> void {
      std::size_t i = tuple.images.size();
      if (i == static_cast<std::size_t>(n)) {
        WHom c = canonical_from_rep(tuple, k);
        auto keys = tuple_keys(w, c);
        found.emplace(std::move(keys), std::move(c));
        return;
      }
      for (const auto& x : elements_) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) ok = relation_holds(tuple.images[j], x, labels[j][i]);
        if (!ok) continue;
        tuple.images.push_back(x);
        self(self);
        tuple.images.pop_back();
      }
    };
    extend(extend);
    for (auto& [keys, hom] : found) per_class[k].push_back({std::move(hom), 0});
    for (auto& orbit : per_class[k]) orbit.size = orbit_size(orbit.canonical);
  });

  std::vector<Orbit> out;
  for (auto& v : per_class)
    for (auto& o : v) out.push_back(std::move(o));
  std::sort(out.begin(), out.end(), [&](const Orbit& a, const Orbit& b) {
    return tuple_keys(w, a.canonical) < tuple_keys(w, b.canonical);
  });
  return out;
}

std::string to_string(GroupingMode mode) {
  return mode == GroupingMode::conjugacy ? "conjugacy" : "equivalence";
}

std::size_t HomClassReport::proper_count() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const HomClass& c) { return c.proper; }));
}

HomClassReport classify_uceps(const HomSpace& space, GroupingMode mode, int threads) {
  const CoxeterGroup& w = space.group();
  std::map<std::vector<std::uint64_t>, std::string> names;
  try {
    for (const auto& entry : catalog(w))
      names.emplace(tuple_keys(w, space.canonical(entry.hom)), entry.name);
  } catch (const NoCatalogEntry&) {
  }

  HomClassReport report;
  report.graph = w.graph().code();
  report.mode = GroupingMode::conjugacy;
  for (auto& orbit : space.valid_orbits(threads)) {
    if (!is_ucep(w, orbit.canonical)) continue;
    HomClass c;
    auto it = names.find(tuple_keys(w, orbit.canonical));
    if (it != names.end()) c.name = it->second;
    c.image_order = w.subgroup_order(orbit.canonical.images);
    c.homs = orbit.size;
    c.proper = c.image_order < w.order();
    c.ordinary = is_ordinary(w, orbit.canonical);
    c.images = std::move(orbit.canonical);
    report.classes.push_back(std::move(c));
  }
  if (mode == GroupingMode::equivalence) {
    auto gens = automorphism_generators(w);
    return merge_by_automorphisms(space, report, gens);
  }
  return report;
}

HomClassReport merge_by_automorphisms(const HomSpace& space, const HomClassReport& report,
                                      std::span<const Automorphism> gens) {
  const CoxeterGroup& w = space.group();
  for (const auto& a : gens) check_automorphism(w, a);
  std::size_t count = report.classes.size();
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (std::size_t k = 0; k < count; ++k) index.emplace(tuple_keys(w, report.classes[k].images), k);

  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < count; ++k) {
    for (const auto& a : gens) {
      WHom image = space.canonical(apply(w, a, report.classes[k].images));
      auto it = index.find(tuple_keys(w, image));
      if (it == index.end()) throw InvalidAutomorphism(a.name + " maps a class outside the report");
      std::size_t x = find(k), y = find(it->second);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }

  HomClassReport out;
  out.graph = report.graph;
  out.mode = GroupingMode::equivalence;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t k = 0; k < count; ++k) {
    const HomClass& c = report.classes[k];
    std::size_t root = find(k);
    auto [it, fresh] = slot.emplace(root, out.classes.size());
    if (fresh) {
      out.classes.push_back(c);
      continue;
    }
    HomClass& merged = out.classes[it->second];
    merged.homs += c.homs;
    merged.conjugacy_classes += c.conjugacy_classes;
    if (c.name) merged.name = merged.name ? *merged.name + " ~ " + *c.name : *c.name;
  }
  for (auto& c : out.classes) {
    if (!c.name) continue;
    std::vector<std::string> parts;
    for (std::size_t start = 0;;) {
      std::size_t end = c.name->find(" ~ ", start);
      parts.push_back(c.name->substr(start, end - start));
      if (end == std::string::npos) break;
      start = end + 3;
    }
    std::sort(parts.begin(), parts.end());
    std::string joined;
    for (const auto& part : parts) joined += (joined.empty() ? "" : " ~ ") + part;
    c.name = joined;
  }
  return out;
}

bool preserves_coloured(const CoxeterGroup& w, std::span<const ArtinWord> phi) {
  if (phi.size() != static_cast<std::size_t>(w.rank()))
    throw InvalidHom("expected one word per generator");
  WHom h;
  for (const auto& word : phi) h.images.push_back(mu_eval(w, word));
  for (const auto& e : w.graph().pairs())
    if (!relation_holds(h.images[static_cast<std::size_t>(e.i)], h.images[static_cast<std::size_t>(e.j)], e.m))
      throw RelationViolation("images of sigma_" + std::to_string(e.i + 1) + ", sigma_" +
                              std::to_string(e.j + 1) + " break their Artin relation under mu");
  return std::all_of(h.images.begin(), h.images.end(),
                     [](const Element& x) { return x.pow(2).is_identity(); });
}

}  // namespace artin
