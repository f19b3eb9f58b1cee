#pragma once

#include <cstdint>
#include <vector>

#include "artin/element.hpp"
#include "artin/graph.hpp"

namespace artin {

/// Exact element a + b*phi of Z[phi], phi = (1 + sqrt 5) / 2, phi^2 = phi + 1.
struct GoldenInt {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend GoldenInt operator+(GoldenInt x, GoldenInt y) { return {x.a + y.a, x.b + y.b}; }
  friend GoldenInt operator-(GoldenInt x, GoldenInt y) { return {x.a - y.a, x.b - y.b}; }
  friend GoldenInt operator*(GoldenInt x, GoldenInt y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend bool operator==(GoldenInt, GoldenInt) = default;
  friend auto operator<=>(GoldenInt, GoldenInt) = default;  // structural, not numeric

  /// -1, 0 or +1 according to the real value.
  int sign() const;
};

/// Finite root system of a spherical Coxeter graph, reduced to the data needed
/// to act on roots by index.
///
/// Roots 0..N-1 are the positive roots, root N+k is the negative of root k.
/// Roots 0..n-1 are the simple roots in generator order; the remaining positive
/// roots follow in breadth-first discovery order under the simple reflections.
/// Crystallographic and H-type components carry exact coordinates in the
/// simple-root basis over Z[phi]; I2(p) components use the 2p directions
/// k*pi/p acted on by rotation/flip arithmetic and carry no coordinates.
class RootSystem {
 public:
  explicit RootSystem(const CoxeterGraph& graph);

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return 2 * positive_; }
  std::size_t positive_count() const noexcept { return positive_; }
  bool is_positive(std::size_t root) const noexcept { return root < positive_; }
  std::size_t negation(std::size_t root) const noexcept {
    return root < positive_ ? root + positive_ : root - positive_;
  }
  bool has_coordinates() const noexcept { return !coords_.empty(); }
  /// Coordinates of a root in the simple-root basis (only if has_coordinates()).
  const std::vector<GoldenInt>& coordinates(std::size_t root) const { return coords_[root]; }
  int component(std::size_t root) const { return component_[root]; }

  /// Permutation of roots induced by the simple reflection s_i.
  const Element& simple_reflection(int i) const { return simple_[static_cast<std::size_t>(i)]; }

  /// How root r was reached: either simple root `generator`, or
  /// s_generator applied to `parent` (parent positive and earlier in the order),
  /// or the negative of `parent`.
  struct Derivation {
    enum Kind : std::uint8_t { simple, reflected, negated } kind;
    int generator;
    std::size_t parent;
  };
  const Derivation& derivation(std::size_t root) const { return derivation_[root]; }

 private:
  int rank_ = 0;
  std::size_t positive_ = 0;
  std::vector<std::vector<GoldenInt>> coords_;
  std::vector<int> component_;
  std::vector<Element> simple_;
  std::vector<Derivation> derivation_;
};

}  // namespace artin
