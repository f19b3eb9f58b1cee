#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "artin/element.hpp"

namespace artin {

/// Base and strong generating set for a permutation group acting on roots,
/// built by deterministic Schreier-Sims with explicit transversals.
///
/// Answers order and membership, and can be extended one generator at a time;
/// extend() reports whether the group grew, which is how redundant generators
/// are filtered out of Schreier generating sets.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree);
  StabilizerChain(std::size_t degree, std::span<const Element> generators);

  std::uint64_t order() const;
  bool contains(const Element& g) const;
  /// Adds g to the group. Returns false when g was already a member.
  bool extend(const Element& g);

  std::size_t degree() const noexcept { return degree_; }
  std::span<const std::size_t> base() const noexcept { return base_; }
  std::span<const Element> strong_generators() const noexcept { return strong_; }

 private:
  struct Level {
    std::size_t base_point = 0;
    std::vector<std::size_t> generators;  // indices into strong_
    std::vector<std::size_t> orbit;
    std::vector<int> rep_of;              // point -> index into reps, -1 outside the orbit
    std::vector<Element> reps;            // reps[k](base_point) == orbit[k]
    std::vector<std::vector<bool>> checked;  // [orbit position][generator position]
  };

  struct Sifted {
    Element residue;
    std::size_t level;  // first level whose orbit misses the residue, or levels_.size()
  };

  Sifted sift(Element h, std::size_t from) const;
  void add_strong(const Element& g);
  void grow_orbit(Level& level);
  void complete();

  std::size_t degree_;
  std::vector<std::size_t> base_;
  std::vector<Element> strong_;
  std::vector<Level> levels_;
};

}  // namespace artin
