#include "artin/root_system.hpp"

#include <map>

#include "artin/errors.hpp"

namespace artin {

int GoldenInt::sign() const {
  // a + b*phi = (x + y*sqrt5) / 2 with x = 2a + b, y = b
  std::int64_t x = 2 * a + b, y = b;
  if (x >= 0 && y >= 0) return (x == 0 && y == 0) ? 0 : 1;
  if (x <= 0 && y <= 0) return -1;
  std::int64_t x2 = x * x, y2 = 5 * y * y;
  if (x > 0) return x2 > y2 ? 1 : -1;
  return y2 > x2 ? 1 : -1;
}

namespace {

constexpr std::size_t kMaxRoots = 255;

struct RootValue {
  int comp = 0;
  std::vector<GoldenInt> coords;  // empty for dihedral components
  int angle = -1;                 // dihedral direction index, -1 otherwise

  friend bool operator<(const RootValue& x, const RootValue& y) {
    if (x.comp != y.comp) return x.comp < y.comp;
    if (x.angle != y.angle) return x.angle < y.angle;
    return x.coords < y.coords;
  }
};

class Builder {
 public:
  explicit Builder(const CoxeterGraph& g) : graph_(g), n_(g.rank()) {
    for (int i = 0; i < n_; ++i) {
      const auto& comp = g.components()[static_cast<std::size_t>(g.component_of(i))];
      local_.push_back(comp.vertices[0] == i ? 0 : 1);
    }
  }

  bool dihedral(int comp) const {
    return graph_.components()[static_cast<std::size_t>(comp)].family == Family::I;
  }

  int p_of(int comp) const { return graph_.components()[static_cast<std::size_t>(comp)].p; }

  GoldenInt cartan(int i, int j) const {
    if (i == j) return {2, 0};
    int m = graph_.label(i, j);
    switch (m) {
      case 2: return {0, 0};
      case 3: return {-1, 0};
      case 4: return {i < j ? -2 : -1, 0};
      case 5: return {0, -1};
      case 6: return {i < j ? -3 : -1, 0};
      default: throw UnsupportedLabel("label " + std::to_string(m) + " outside an I2 component");
    }
  }

  RootValue simple(int i) const {
    RootValue v;
    v.comp = graph_.component_of(i);
    if (dihedral(v.comp)) {
      v.angle = local_[static_cast<std::size_t>(i)] == 0 ? 0 : p_of(v.comp) - 1;
    } else {
      v.coords.assign(static_cast<std::size_t>(n_), GoldenInt{});
      v.coords[static_cast<std::size_t>(i)] = {1, 0};
    }
    return v;
  }

  RootValue reflect(int i, const RootValue& v) const {
    if (graph_.component_of(i) != v.comp) return v;
    RootValue out = v;
    if (dihedral(v.comp)) {
      int p = p_of(v.comp);
      int j = local_[static_cast<std::size_t>(i)] == 0 ? 0 : p - 1;
      out.angle = ((2 * j + p - v.angle) % (2 * p) + 2 * p) % (2 * p);
    } else {
      GoldenInt c{};
      for (int j = 0; j < n_; ++j) c = c + v.coords[static_cast<std::size_t>(j)] * cartan(i, j);
      out.coords[static_cast<std::size_t>(i)] = out.coords[static_cast<std::size_t>(i)] - c;
    }
    return out;
  }

  RootValue negate(const RootValue& v) const {
    RootValue out = v;
    if (dihedral(v.comp)) {
      int p = p_of(v.comp);
      out.angle = (v.angle + p) % (2 * p);
    } else {
      for (auto& c : out.coords) c = GoldenInt{} - c;
    }
    return out;
  }

  bool positive(const RootValue& v) const {
    if (dihedral(v.comp)) return v.angle < p_of(v.comp);
    for (const auto& c : v.coords) {
      int s = c.sign();
      if (s != 0) return s > 0;
    }
    return false;
  }

 private:
  const CoxeterGraph& graph_;
  int n_;
  std::vector<int> local_;
};

}  // namespace

RootSystem::RootSystem(const CoxeterGraph& graph) : rank_(graph.rank()) {
  Builder b(graph);
  std::vector<RootValue> values;
  std::map<RootValue, std::size_t> index;

  for (int i = 0; i < rank_; ++i) {
    values.push_back(b.simple(i));
    index.emplace(values.back(), values.size() - 1);
    derivation_.push_back({Derivation::simple, i, 0});
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    for (int i = 0; i < rank_; ++i) {
      RootValue r = b.reflect(i, values[k]);
      if (!b.positive(r) || index.count(r)) continue;
      if ((values.size() + 1) * 2 > kMaxRoots)
        throw GroupTooLarge("root systems with more than 255 roots are not supported");
      values.push_back(r);
      index.emplace(values.back(), values.size() - 1);
      derivation_.push_back({Derivation::reflected, i, k});
    }
  }
  positive_ = values.size();
  for (std::size_t k = 0; k < positive_; ++k) {
    values.push_back(b.negate(values[k]));
    index.emplace(values.back(), values.size() - 1);
    derivation_.push_back({Derivation::negated, -1, k});
  }

  bool all_coords = true;
  for (const auto& v : values) {
    component_.push_back(v.comp);
    if (v.coords.empty()) all_coords = false;
  }
  if (all_coords)
    for (const auto& v : values) coords_.push_back(v.coords);

  for (int i = 0; i < rank_; ++i) {
    std::vector<RootIndex> img(values.size());
    for (std::size_t r = 0; r < values.size(); ++r) {
      auto it = index.find(b.reflect(i, values[r]));
      if (it == index.end()) throw Error("root system is not closed under reflections");
      img[r] = static_cast<RootIndex>(it->second);
    }
    simple_.emplace_back(std::move(img));
  }
}

}  // namespace artin
