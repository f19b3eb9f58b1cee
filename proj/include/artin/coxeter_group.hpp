#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "artin/element.hpp"
#include "artin/graph.hpp"
#include "artin/root_system.hpp"
#include "artin/stabilizer_chain.hpp"

namespace artin {

/// Homomorphism W -> {+1, -1}. `value[i]` is the sign of s_i; the generators
/// with value -1 form a union of odd-edge blocks.
struct SignCharacter {
  std::vector<int> value;
  std::vector<int> blocks;  // indices of the chosen odd-edge blocks
};

enum class Descent { smallest, largest };

/// Finite Coxeter group acting faithfully on its root system.
///
/// Generators are 0-based in code (s_0 prints as 1); all words returned
/// here use the same 0-based indices.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterGraph graph);

  const CoxeterGraph& graph() const noexcept { return graph_; }
  const RootSystem& roots() const noexcept { return roots_; }
  int rank() const noexcept { return graph_.rank(); }
  std::size_t degree() const noexcept { return roots_.size(); }

  const Element& generator(int i) const { return generators_[static_cast<std::size_t>(i)]; }
  std::span<const Element> generators() const noexcept { return generators_; }
  Element identity() const { return Element::identity(degree()); }
  Element from_word(std::span<const int> word) const;

  std::uint64_t order() const { return chain_.order(); }
  std::uint64_t subgroup_order(std::span<const Element> elements) const;
  /// Throws MembershipError unless g is a root permutation of this group.
  void check_member(const Element& g) const;

  int length(const Element& w) const;
  bool is_right_descent(const Element& w, int i) const;
  std::vector<int> reduced_word(const Element& w, Descent strategy = Descent::smallest) const;

  const Element& longest_element() const noexcept { return w0_; }
  /// Order of s_1 s_2 ... s_n.
  int coxeter_number() const noexcept { return coxeter_number_; }
  /// w0 s_i w0 = s_xi(i). Throws DisconnectedGraph.
  std::vector<int> xi() const;
  /// {1, w0} when w0 is central, {1} otherwise. Throws DisconnectedGraph.
  std::vector<Element> center() const;
  bool is_central(const Element& g) const;
  /// Z(W) for any graph: products of the central component longest elements.
  std::vector<Element> center_elements() const;
  /// Longest element of the parabolic subgroup on the given generators.
  Element parabolic_longest(std::span<const int> gens) const;

  /// Reflections indexed by the positive root they negate.
  std::span<const Element> reflections() const noexcept { return reflections_; }
  /// Index into reflections() of the reflection t (the positive root it negates).
  std::size_t reflection_index(const Element& t) const;
  /// The reflection whose root is +-root.
  const Element& reflection_of_root(std::size_t root) const;

  std::vector<SignCharacter> sign_characters() const;
  /// Odd-edge blocks: connected components of the graph restricted to odd labels.
  std::vector<std::vector<int>> odd_blocks() const;
  int sign(const SignCharacter& gamma, const Element& w) const;

  /// Images of the simple roots packed big-endian into 64 bits; key order is
  /// element order. Requires rank <= 8.
  std::uint64_t key(const Element& w) const;
  Element from_key(std::uint64_t key) const;
  bool keys_supported() const noexcept { return rank() <= 8; }

 private:
  CoxeterGraph graph_;
  RootSystem roots_;
  std::vector<Element> generators_;
  std::vector<Element> reflections_;
  StabilizerChain chain_;
  Element w0_;
  int coxeter_number_ = 1;
};

}  // namespace artin
