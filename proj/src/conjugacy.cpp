#include "artin/conjugacy.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "artin/errors.hpp"

namespace artin {

namespace {

struct Bfs {
  std::vector<std::uint64_t> keys;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> via;
  std::uint64_t min_key = ~std::uint64_t{0};
  std::uint32_t min_index = 0;
};

Bfs conjugation_bfs(const CoxeterGroup& w, const Element& start) {
  Bfs out;
  std::unordered_map<std::uint64_t, std::uint32_t> seen;
  std::vector<Element> elems{start};
  out.keys.push_back(w.key(start));
  out.parent.push_back(0);
  out.via.push_back(0);
  seen.emplace(out.keys[0], 0);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (out.keys[k] < out.min_key) {
      out.min_key = out.keys[k];
      out.min_index = static_cast<std::uint32_t>(k);
    }
    for (int i = 0; i < w.rank(); ++i) {
      Element y = elems[k].conjugated_by(w.generator(i));
      std::uint64_t key = w.key(y);
      if (!seen.emplace(key, static_cast<std::uint32_t>(elems.size())).second) continue;
      elems.push_back(std::move(y));
      out.keys.push_back(key);
      out.parent.push_back(static_cast<std::uint32_t>(k));
      out.via.push_back(static_cast<std::uint8_t>(i));
    }
  }
  return out;
}

}  // namespace

ConjugacyClass ConjugacyClass::orbit(const CoxeterGroup& w, const Element& x) {
  if (w.order() > kMaxClassEnumerationOrder)
    throw GroupTooLarge("conjugacy classes of W(" + w.graph().code() + ") are too large to enumerate");
  Bfs bfs = conjugation_bfs(w, x);
  if (bfs.min_index != 0) bfs = conjugation_bfs(w, w.from_key(bfs.min_key));

  ConjugacyClass c;
  c.rep_ = w.from_key(bfs.keys[0]);
  c.keys_ = std::move(bfs.keys);
  c.parent_ = std::move(bfs.parent);
  c.via_ = std::move(bfs.via);
  c.sorted_.reserve(c.keys_.size());
  for (std::size_t k = 0; k < c.keys_.size(); ++k)
    c.sorted_.emplace_back(c.keys_[k], static_cast<std::uint32_t>(k));
  std::sort(c.sorted_.begin(), c.sorted_.end());
  return c;
}

std::optional<std::uint32_t> ConjugacyClass::index_of(std::uint64_t key) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::make_pair(key, std::uint32_t{0}));
  if (it == sorted_.end() || it->first != key) return std::nullopt;
  return it->second;
}

std::vector<int> ConjugacyClass::conjugator_word(std::uint32_t idx) const {
  // element idx = s_a ... s_b rep s_b ... s_a, conjugator s_a ... s_b
  std::vector<int> word;
  for (std::uint32_t k = idx; k != 0; k = parent_[k]) word.push_back(via_[k]);
  return word;
}

Element ConjugacyClass::conjugator(const CoxeterGroup& w, std::uint32_t idx) const {
  return w.from_word(conjugator_word(idx));
}

std::vector<Element> ConjugacyClass::elements(const CoxeterGroup& w) const {
  std::vector<Element> out;
  out.reserve(keys_.size());
  for (auto k : keys_) out.push_back(w.from_key(k));
  return out;
}

std::vector<Element> ConjugacyClass::centralizer_generators(const CoxeterGroup& w) const {
  std::uint64_t target = w.order() / size();
  StabilizerChain chain(w.degree());
  std::vector<Element> gens;
  if (target == 1) return gens;

  std::vector<Element> transversal(keys_.size());
  transversal[0] = w.identity();
  for (std::size_t k = 0; k < keys_.size() && chain.order() < target; ++k) {
    if (k > 0) transversal[k] = w.generator(via_[k]) * transversal[parent_[k]];
    Element x = w.from_key(keys_[k]);
    for (int i = 0; i < w.rank() && chain.order() < target; ++i) {
      const Element& s = w.generator(i);
      std::uint64_t key = w.key(x.conjugated_by(s));
      std::uint32_t j = *index_of(key);
      if (j > k) {
        if (parent_[j] == k && via_[j] == i) continue;  // tree edge
        transversal[j] = w.generator(via_[j]) * transversal[parent_[j]];
      }
      Element g = transversal[j].inverse() * s * transversal[k];
      if (chain.extend(g)) gens.push_back(std::move(g));
    }
  }
  if (chain.order() != target) throw Error("centralizer order mismatch");
  return gens;
}

ConjugacyClasses::ConjugacyClasses(const CoxeterGroup& w, std::uint64_t seed) : group_(&w) {
  if (!w.keys_supported() || w.order() > kMaxClassEnumerationOrder)
    throw GroupTooLarge("conjugacy classes of W(" + w.graph().code() + ") are too large to enumerate");
  std::uint64_t covered = 0;
  std::vector<Element> pending;

  auto consider = [&](const Element& x) {
    if (covered == w.order() || locate(w.key(x))) return;
    classes_.push_back(ConjugacyClass::orbit(w, x));
    covered += classes_.back().size();
    Element rep = classes_.back().representative();
    for (std::uint64_t k = 2, o = rep.order(); k < o; ++k) pending.push_back(rep.pow(static_cast<std::int64_t>(k)));
    pending.push_back(w.longest_element() * rep);
  };
  auto drain = [&] {
    while (!pending.empty() && covered < w.order()) {
      Element x = std::move(pending.back());
      pending.pop_back();
      consider(x);
    }
  };

  consider(w.identity());
  for (const auto& s : w.generators()) consider(s);
  drain();
  int n = w.rank();
  for (std::uint32_t mask = 1; mask < (1u << n) && covered < w.order(); ++mask) {
    Element c = w.identity();
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) c = c * w.generator(i);
    consider(c);
    drain();
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(0, n - 1);
  std::size_t base_length = 2 * w.reflections().size() + static_cast<std::size_t>(n);
  std::uniform_int_distribution<std::size_t> extra(0, base_length);
  for (std::uint64_t attempt = 0; covered < w.order(); ++attempt) {
    if (attempt > 1'000'000) throw Error("conjugacy class discovery did not terminate");
    Element x = w.identity();
    std::size_t word_length = base_length + extra(rng);
    for (std::size_t k = 0; k < word_length; ++k) x = x * w.generator(letter(rng));
    consider(x);
    drain();
  }

  std::sort(classes_.begin(), classes_.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.rep_key() < b.rep_key();
  });
}

std::optional<std::size_t> ConjugacyClasses::locate(std::uint64_t key) const {
  for (std::size_t k = 0; k < classes_.size(); ++k)
    if (classes_[k].contains(key)) return k;
  return std::nullopt;
}

std::size_t ConjugacyClasses::find(const Element& x) const {
  auto k = locate(group_->key(x));
  if (!k) throw MembershipError("element not found in any conjugacy class");
  return *k;
}

}  // namespace artin
