#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/conjugacy.hpp"
#include "artin/hom.hpp"

namespace artin {

struct H3SearchResult {
  std::uint64_t x1 = 0;                  // valid triples
  std::size_t x2 = 0;                    // conjugacy orbits
  std::vector<WHom> x3;                  // orbit representatives with image of order 60
  std::vector<std::optional<std::string>> x3_names;
};

/// Triples (x, y, z) in W(H3)^3 with xyxyx = yxyxy, xz = zx, yzy = zyz.
H3SearchResult h3_search(int threads = 1);

struct ClassStatsRow {
  std::size_t class_index = 0;
  std::uint64_t class_size = 0;
  std::uint64_t x = 0;
  std::uint64_t d = 0;  // elements of the class commuting with T
  std::uint64_t y = 0;
  std::uint64_t z = 0;
  std::uint64_t z_tilde = 0;
  std::optional<std::uint64_t> u;
  std::optional<std::uint64_t> v;
  Element representative;  // T, the minimal element of the class
  std::vector<int> representative_word;
};

struct SearchReport {
  std::string graph;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> timings;  // seconds per stage
  std::vector<ClassStatsRow> rows;
  std::optional<std::uint64_t> v2;
  std::optional<std::uint64_t> v2_prime;
  std::optional<bool> v2_equals_v2_prime;
};

/// Indices of the nontrivial classes on which (-1)^length is 1.
std::vector<std::size_t> even_classes(const CoxeterGroup& w, const ConjugacyClasses& classes);

/// Per-class search data: the class T lies in, X (elements braiding with T),
/// D (elements commuting with T).
struct ClassSearch {
  const ConjugacyClass* cls = nullptr;
  Element t;
  std::vector<Element> elements;
  std::vector<std::uint32_t> x;  // indices into elements
  std::vector<std::uint32_t> d;
};

ClassSearch class_search(const CoxeterGroup& w, const ConjugacyClass& cls, const Element& t, int threads = 1);
/// Row with C, X, D, Y = |C||D|, Z, Z~ and U = |C||X|.
ClassStatsRow class_stats(const CoxeterGroup& w, const ClassSearch& s, std::size_t class_index);
/// Ordered triples of X, pairwise commuting: (all, pairwise distinct). With
/// `keep`, the distinct triples are stored as indices into s.elements.
std::pair<std::uint64_t, std::uint64_t> z_counts(const ClassSearch& s,
                                                 std::vector<std::array<std::uint32_t, 3>>* keep = nullptr);
/// |Y| and |U| by scanning all pairs of the class.
std::pair<std::uint64_t, std::uint64_t> direct_pair_counts(const CoxeterGroup& w, const ConjugacyClass& cls);
/// |centralizer(T) intersected with the class|, by enumerating the centralizer.
std::uint64_t d_by_centralizer(const CoxeterGroup& w, const ConjugacyClass& cls);

/// Tuples (u1..u7) of V for one class, u4 = T. u1, u6, u7 are drawn from D
/// when `pruned`, from the whole class otherwise.
std::uint64_t v_count_for_triple(const ClassSearch& s, const std::array<std::uint32_t, 3>& triple,
                                 bool pruned = true);

/// Class statistics rows for the nontrivial even classes of W(E7), optionally only
/// classes of one size.
SearchReport e7_table1(const CoxeterGroup& w, const ConjugacyClasses& classes,
                       std::optional<std::uint64_t> class_size = std::nullopt, int threads = 1);
/// Fills U and V for the rows of `table1` with Z~ != 0, and V' when the size-63
/// class is present. Throws Table1Missing when table1 has no rows.
SearchReport e7_table2(const CoxeterGroup& w, const ConjugacyClasses& classes, const SearchReport& table1,
                       int threads = 1);

/// Tuples (u w0 s_i u^-1)_i over all u with u w0 s_4 u^-1 = t.
std::vector<std::vector<std::uint64_t>> e7_v_prime(const CoxeterGroup& w, const Element& t);

struct BnVerification {
  HomClassReport report;
  bool proper_match = false;   // proper classes are mu', nu^3, nu^4
  bool catalog_unique = false; // every catalog map lies in exactly one class
};

/// Throws GroupTooLarge, std::invalid_argument for even n.
BnVerification bn_verify(int n, std::uint64_t bound = kDefaultBruteForceBound, int threads = 1);

}  // namespace artin
