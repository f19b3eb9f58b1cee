#include "artin/coxeter_group.hpp"

#include <algorithm>
#include <numeric>

#include "artin/errors.hpp"

namespace artin {

CoxeterGroup::CoxeterGroup(CoxeterGraph graph)
    : graph_(std::move(graph)), roots_(graph_), chain_(roots_.size()) {
  for (int i = 0; i < rank(); ++i) generators_.push_back(roots_.simple_reflection(i));
  chain_ = StabilizerChain(degree(), generators_);

  // reflection of s_j(beta) is s_j refl(beta) s_j
  std::size_t npos = roots_.positive_count();
  reflections_.resize(npos);
  for (std::size_t r = 0; r < npos; ++r) {
    const auto& d = roots_.derivation(r);
    if (d.kind == RootSystem::Derivation::simple)
      reflections_[r] = generator(d.generator);
    else
      reflections_[r] = reflections_[d.parent].conjugated_by(generator(d.generator));
  }

  w0_ = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < rank(); ++i) {
      if (!is_right_descent(w0_, i)) {
        w0_ = w0_ * generator(i);
        grew = true;
      }
    }
  }

  Element c = identity();
  for (const auto& s : generators_) c = c * s;
  coxeter_number_ = static_cast<int>(c.order());
}

Element CoxeterGroup::from_word(std::span<const int> word) const {
  Element w = identity();
  for (int i : word) w = w * generator(i);
  return w;
}

std::uint64_t CoxeterGroup::subgroup_order(std::span<const Element> elements) const {
  for (const auto& g : elements) check_member(g);
  return StabilizerChain(degree(), elements).order();
}

void CoxeterGroup::check_member(const Element& g) const {
  if (g.degree() != degree() || !chain_.contains(g))
    throw MembershipError("element is not in W(" + graph_.code() + ")");
}

int CoxeterGroup::length(const Element& w) const {
  int len = 0;
  std::size_t npos = roots_.positive_count();
  for (std::size_t r = 0; r < npos; ++r)
    if (!roots_.is_positive(w[r])) ++len;
  return len;
}

bool CoxeterGroup::is_right_descent(const Element& w, int i) const {
  return !roots_.is_positive(w[static_cast<std::size_t>(i)]);
}

std::vector<int> CoxeterGroup::reduced_word(const Element& w, Descent strategy) const {
  std::vector<int> word;
  Element x = w;
  for (;;) {
    int found = -1;
    for (int k = 0; k < rank(); ++k) {
      int i = strategy == Descent::smallest ? k : rank() - 1 - k;
      if (is_right_descent(x, i)) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    word.push_back(found);
    x = x * generator(found);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> CoxeterGroup::xi() const {
  if (!graph_.connected()) throw DisconnectedGraph("xi is defined for connected graphs only");
  std::vector<int> out(static_cast<std::size_t>(rank()), -1);
  for (int i = 0; i < rank(); ++i) {
    Element c = generator(i).conjugated_by(w0_);
    for (int j = 0; j < rank(); ++j)
      if (c == generator(j)) out[static_cast<std::size_t>(i)] = j;
    if (out[static_cast<std::size_t>(i)] < 0) throw Error("w0 does not normalise S");
  }
  return out;
}

std::vector<Element> CoxeterGroup::center() const {
  auto perm = xi();
  for (int i = 0; i < rank(); ++i)
    if (perm[static_cast<std::size_t>(i)] != i) return {identity()};
  return {identity(), w0_};
}

bool CoxeterGroup::is_central(const Element& g) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Element& s) { return g.commutes_with(s); });
}

Element CoxeterGroup::parabolic_longest(std::span<const int> gens) const {
  Element w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : gens) {
      if (!is_right_descent(w, i)) {
        w = w * generator(i);
        grew = true;
      }
    }
  }
  return w;
}

std::vector<Element> CoxeterGroup::center_elements() const {
  std::vector<Element> out{identity()};
  for (const auto& comp : graph_.components()) {
    Element w = parabolic_longest(comp.vertices);
    if (!is_central(w)) continue;
    std::size_t count = out.size();
    for (std::size_t k = 0; k < count; ++k) out.push_back(out[k] * w);
  }
  return out;
}

std::size_t CoxeterGroup::reflection_index(const Element& t) const {
  std::size_t npos = roots_.positive_count(), found = npos;
  for (std::size_t r = 0; r < npos; ++r) {
    if (t[r] != roots_.negation(r)) continue;
    if (found != npos) throw MembershipError("element is not a reflection");
    found = r;
  }
  if (found == npos || reflections_[found] != t) throw MembershipError("element is not a reflection");
  return found;
}

const Element& CoxeterGroup::reflection_of_root(std::size_t root) const {
  return reflections_[roots_.is_positive(root) ? root : roots_.negation(root)];
}

std::vector<std::vector<int>> CoxeterGroup::odd_blocks() const {
  int n = rank();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& e : graph_.pairs())
    if (e.m % 2 == 1) parent[static_cast<std::size_t>(find(e.i))] = find(e.j);
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    if (block_of[static_cast<std::size_t>(root)] < 0) {
      block_of[static_cast<std::size_t>(root)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(root)])].push_back(v);
  }
  return blocks;
}

std::vector<SignCharacter> CoxeterGroup::sign_characters() const {
  auto blocks = odd_blocks();
  std::vector<SignCharacter> out;
  std::uint32_t count = 1u << blocks.size();
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    SignCharacter gamma;
    gamma.value.assign(static_cast<std::size_t>(rank()), 1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (!(mask >> b & 1u)) continue;
      gamma.blocks.push_back(static_cast<int>(b));
      for (int v : blocks[b]) gamma.value[static_cast<std::size_t>(v)] = -1;
    }
    out.push_back(std::move(gamma));
  }
  return out;
}

int CoxeterGroup::sign(const SignCharacter& gamma, const Element& w) const {
  int s = 1;
  for (int i : reduced_word(w)) s *= gamma.value[static_cast<std::size_t>(i)];
  return s;
}

std::uint64_t CoxeterGroup::key(const Element& w) const {
  if (!keys_supported()) throw GroupTooLarge("element keys need rank <= 8");
  std::uint64_t k = 0;
  for (int i = 0; i < 8; ++i) {
    k <<= 8;
    if (i < rank()) k |= w[static_cast<std::size_t>(i)];
  }
  return k;
}

Element CoxeterGroup::from_key(std::uint64_t key) const {
  std::size_t deg = degree(), npos = roots_.positive_count();
  std::vector<RootIndex> img(deg);
  for (std::size_t r = 0; r < npos; ++r) {
    const auto& d = roots_.derivation(r);
    if (d.kind == RootSystem::Derivation::simple) {
      img[r] = static_cast<RootIndex>(key >> (8 * (7 - d.generator)) & 0xffu);
    } else {
      // w(s_i beta) = t_{w(alpha_i)}(w(beta))
      const Element& t = reflection_of_root(img[static_cast<std::size_t>(d.generator)]);
      img[r] = t[img[d.parent]];
    }
  }
  for (std::size_t r = 0; r < npos; ++r)
    img[r + npos] = static_cast<RootIndex>(roots_.negation(img[r]));
  return Element(std::move(img));
}

}  // namespace artin
