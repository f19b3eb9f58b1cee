#include "artin/stabilizer_chain.hpp"

namespace artin {

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {}

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Element> generators)
    : degree_(degree) {
  for (const auto& g : generators)
    if (!g.is_identity() && !contains(g)) add_strong(g);
  complete();
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t n = 1;
  for (const auto& level : levels_) n *= level.orbit.size();
  return n;
}

StabilizerChain::Sifted StabilizerChain::sift(Element h, std::size_t from) const {
  for (std::size_t k = from; k < levels_.size(); ++k) {
    const Level& level = levels_[k];
    int r = level.rep_of[h[level.base_point]];
    if (r < 0) return {std::move(h), k};
    h = level.reps[static_cast<std::size_t>(r)].inverse() * h;
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(const Element& g) const {
  auto s = sift(g, 0);
  return s.level == levels_.size() && s.residue.is_identity();
}

void StabilizerChain::grow_orbit(Level& level) {
  // BFS closure from the current orbit under all level generators
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (std::size_t gi : level.generators) {
      const Element& s = strong_[gi];
      std::size_t image = s[level.orbit[k]];
      if (level.rep_of[image] >= 0) continue;
      level.rep_of[image] = static_cast<int>(level.reps.size());
      level.reps.push_back(s * level.reps[k]);
      level.orbit.push_back(image);
    }
  }
  level.checked.resize(level.orbit.size());
  for (auto& row : level.checked) row.resize(level.generators.size(), false);
}

void StabilizerChain::add_strong(const Element& g) {
  bool fixes_base = true;
  for (std::size_t b : base_)
    if (g[b] != b) fixes_base = false;
  if (fixes_base) {
    std::size_t moved = 0;
    while (g[moved] == moved) ++moved;
    base_.push_back(moved);
    Level level;
    level.base_point = moved;
    level.rep_of.assign(degree_, -1);
    level.rep_of[moved] = 0;
    level.orbit.push_back(moved);
    level.reps.push_back(Element::identity(degree_));
    levels_.push_back(std::move(level));
  }
  strong_.push_back(g);
  std::size_t index = strong_.size() - 1;
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    levels_[k].generators.push_back(index);
    grow_orbit(levels_[k]);
    if (g[levels_[k].base_point] != levels_[k].base_point) break;
  }
}

void StabilizerChain::complete() {
  std::size_t i = levels_.size();
  while (i > 0) {
    Level& level = levels_[i - 1];
    bool restarted = false;
    for (std::size_t pos = 0; pos < level.orbit.size() && !restarted; ++pos) {
      for (std::size_t gpos = 0; gpos < level.generators.size(); ++gpos) {
        if (level.checked[pos][gpos]) continue;
        level.checked[pos][gpos] = true;
        const Element& s = strong_[level.generators[gpos]];
        std::size_t image = s[level.orbit[pos]];
        const Element& u_image = level.reps[static_cast<std::size_t>(level.rep_of[image])];
        Element schreier = u_image.inverse() * s * level.reps[pos];
        auto sifted = sift(std::move(schreier), i);
        if (sifted.level == levels_.size() && sifted.residue.is_identity()) continue;
        add_strong(sifted.residue);
        i = sifted.level + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

bool StabilizerChain::extend(const Element& g) {
  if (g.is_identity() || contains(g)) return false;
  add_strong(g);
  complete();
  return true;
}

}  // namespace artin
