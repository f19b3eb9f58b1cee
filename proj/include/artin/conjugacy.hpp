#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "artin/coxeter_group.hpp"

namespace artin {

/// One conjugacy class, stored as element keys in breadth-first order from its
/// representative (the minimal element of the class) under conjugation by the
/// simple reflections. The BFS tree is kept as a Schreier transversal.
class ConjugacyClass {
 public:
  /// Conjugation orbit of x. The representative is the minimal element.
  static ConjugacyClass orbit(const CoxeterGroup& w, const Element& x);

  const Element& representative() const noexcept { return rep_; }
  std::uint64_t rep_key() const noexcept { return keys_.front(); }
  std::uint64_t size() const noexcept { return keys_.size(); }

  bool contains(std::uint64_t key) const { return index_of(key).has_value(); }
  std::optional<std::uint32_t> index_of(std::uint64_t key) const;
  std::span<const std::uint64_t> keys() const noexcept { return keys_; }

  /// c with c * representative * c^-1 equal to the element at BFS index idx.
  Element conjugator(const CoxeterGroup& w, std::uint32_t idx) const;
  std::vector<int> conjugator_word(std::uint32_t idx) const;
  std::vector<Element> elements(const CoxeterGroup& w) const;

  /// Generators of the centralizer of the representative, extracted from
  /// Schreier generators of the transversal and reduced by a stabilizer chain.
  std::vector<Element> centralizer_generators(const CoxeterGroup& w) const;

 private:
  Element rep_;
  std::vector<std::uint64_t> keys_;                           // BFS order
  std::vector<std::pair<std::uint64_t, std::uint32_t>> sorted_;  // (key, BFS index)
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> via_;  // generator conjugating parent into this element
};

/// All conjugacy classes of W, discovered from deterministic seeds (identity,
/// generators, w0, parabolic Coxeter elements) and seeded random words with
/// their powers, until class sizes sum to |W|. Classes are sorted by
/// (size, representative).
class ConjugacyClasses {
 public:
  explicit ConjugacyClasses(const CoxeterGroup& w, std::uint64_t seed = 0);

  std::size_t size() const noexcept { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t k) const { return classes_[k]; }
  auto begin() const noexcept { return classes_.begin(); }
  auto end() const noexcept { return classes_.end(); }

  /// Index of the class containing x.
  std::size_t find(const Element& x) const;

 private:
  std::optional<std::size_t> locate(std::uint64_t key) const;

  const CoxeterGroup* group_;
  std::vector<ConjugacyClass> classes_;
};

/// Upper bound on |W| for class enumeration.
inline constexpr std::uint64_t kMaxClassEnumerationOrder = 50'000'000;

}  // namespace artin
