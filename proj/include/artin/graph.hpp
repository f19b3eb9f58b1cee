#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace artin {

/// Families of connected spherical Coxeter graphs.
enum class Family : char { A = 'A', B = 'B', D = 'D', E = 'E', F = 'F', H = 'H', I = 'I' };

/// A connected component of a Coxeter graph together with its recognised type.
///
/// `vertices[k]` is the (0-based) vertex of the whole graph that plays the role
/// of vertex k+1 in the standard numbering of the type:
///   A_n  path 1-2-...-n
///   B_n  path with the 4-labelled edge {1,2}
///   D_n  path 1-...-(n-2), with n-1 and n both attached to n-2
///   E_n  path 1-3-4-...-n, with 2 attached to 4
///   F_4  path 1-2-3-4, the 4-labelled edge is {2,3}
///   H_n  path with the 5-labelled edge {1,2}
///   I2(p) the single edge {1,2} labelled p (p >= 5)
struct Component {
  Family family = Family::A;
  int rank = 0;
  int p = 0;  // edge label, only for I2(p)
  std::vector<int> vertices;

  std::string type_name() const;  // "A5", "E7", "I2(10)"
  std::string code() const;       // "A5", "E7", "I2:10"
  bool standard_numbering() const;  // vertices are consecutive and in standard order
};

/// Spherical-type Coxeter graph on vertices 0..n-1 (printed 1..n).
///
/// Labels follow the Coxeter-matrix convention: m_ii = 1, m_ij = 2 for
/// non-adjacent vertices, m_ij >= 3 for edges. Construction classifies every
/// component and rejects anything that is not of spherical type.
class CoxeterGraph {
 public:
  /// `labels` is a dense n x n symmetric matrix in row-major order.
  CoxeterGraph(int n, std::vector<int> labels);

  /// Type codes ("A5", "I2:10", "G2", "B3xA1xA1") or edge lists ("n=4;1-2:3,2-3:4").
  static CoxeterGraph parse(std::string_view text);

  /// The connected graph of a type in standard numbering. `p` is used for I2 only.
  static CoxeterGraph standard(Family family, int rank, int p = 0);

  int rank() const noexcept { return n_; }
  int label(int i, int j) const { return labels_[static_cast<std::size_t>(i * n_ + j)]; }

  const std::vector<Component>& components() const noexcept { return components_; }
  bool connected() const noexcept { return components_.size() == 1; }
  int component_of(int vertex) const { return component_of_[static_cast<std::size_t>(vertex)]; }

  /// True when every component is numbered in standard order on consecutive vertices.
  bool standard_numbering() const;

  /// "B3xA1xA1" when the numbering is standard, otherwise the edge-list form.
  std::string code() const;
  std::string edge_list() const;

  /// Every unordered pair i < j (0-based) with its label, including commuting pairs.
  struct Edge {
    int i;
    int j;
    int m;
  };
  std::vector<Edge> pairs() const;

  bool operator==(const CoxeterGraph& other) const {
    return n_ == other.n_ && labels_ == other.labels_;
  }

 private:
  void classify();

  int n_ = 0;
  std::vector<int> labels_;
  std::vector<Component> components_;
  std::vector<int> component_of_;
};

}  // namespace artin
