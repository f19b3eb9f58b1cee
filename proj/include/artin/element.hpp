#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace artin {

/// Index of a root. Root systems handled here have at most 255 roots.
using RootIndex = std::uint8_t;

/// An element of a finite Coxeter group, stored as the permutation it induces
/// on the root set. Products compose as functions: (a * b)(x) = a(b(x)).
///
/// The default ordering is lexicographic on the image array; it is the
/// canonical element order used for class representatives and hom canonical
/// forms.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<RootIndex> images) : images_(std::move(images)) {}

  static Element identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  RootIndex operator[](std::size_t root) const { return images_[root]; }
  std::span<const RootIndex> images() const noexcept { return images_; }

  Element operator*(const Element& rhs) const;
  Element& operator*=(const Element& rhs);
  Element inverse() const;
  Element conjugated_by(const Element& g) const;  // g * this * g^-1
  Element pow(std::int64_t k) const;
  bool is_identity() const noexcept;
  bool commutes_with(const Element& other) const;
  std::uint64_t order() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element& a, const Element& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<RootIndex> images_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

}  // namespace artin
