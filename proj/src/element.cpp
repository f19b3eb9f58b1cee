#include "artin/element.hpp"

#include <numeric>

namespace artin {

Element Element::identity(std::size_t degree) {
  std::vector<RootIndex> img(degree);
  std::iota(img.begin(), img.end(), RootIndex{0});
  return Element(std::move(img));
}

Element Element::operator*(const Element& rhs) const {
  std::vector<RootIndex> img(rhs.images_.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = images_[rhs.images_[x]];
  return Element(std::move(img));
}

Element& Element::operator*=(const Element& rhs) {
  *this = *this * rhs;
  return *this;
}

Element Element::inverse() const {
  std::vector<RootIndex> img(images_.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[images_[x]] = static_cast<RootIndex>(x);
  return Element(std::move(img));
}

Element Element::conjugated_by(const Element& g) const {
  // (g h g^-1)(g(x)) = g(h(x))
  std::vector<RootIndex> img(images_.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[g.images_[x]] = g.images_[images_[x]];
  return Element(std::move(img));
}

Element Element::pow(std::int64_t k) const {
  Element base = k < 0 ? inverse() : *this;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Element result = identity(images_.size());
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

bool Element::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Element::commutes_with(const Element& other) const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[other.images_[x]] != other.images_[images_[x]]) return false;
  return true;
}

std::uint64_t Element::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  // FNV-1a over the image array
  std::uint64_t h = 1469598103934665603ull;
  for (RootIndex v : e.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace artin
