#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "artin/conjugacy.hpp"
#include "artin/coxeter_group.hpp"
#include "artin/words.hpp"

namespace artin {

/// Homomorphism A -> W given by the images of the Artin generators.
struct WHom {
  std::vector<Element> images;
  friend bool operator==(const WHom&, const WHom&) = default;
  friend auto operator<=>(const WHom& a, const WHom& b) { return a.images <=> b.images; }
};

bool is_valid(const CoxeterGroup& w, const WHom& h);
/// The following throw InvalidHom when h breaks an Artin relation.
std::uint64_t image_order(const CoxeterGroup& w, const WHom& h);
bool is_ucep(const CoxeterGroup& w, const WHom& h);
bool is_proper(const CoxeterGroup& w, const WHom& h);
bool is_ordinary(const CoxeterGroup& w, const WHom& h);

/// Image words of h as reduced words of each image (0-based generators).
std::vector<std::vector<int>> image_words(const CoxeterGroup& w, const WHom& h);
/// Builds a hom from words in the s_i, e.g. {"1 2 1", "2"}.
WHom hom_from_words(const CoxeterGroup& w, std::span<const std::string> words);

struct ProperExistence {
  bool exists = false;
  std::optional<SignCharacter> witness;
};
/// A proper ucep exists iff w0 is central and some sign character takes -1 on
/// w0. Throws DisconnectedGraph.
ProperExistence exists_proper_ucep(const CoxeterGroup& w);

struct NamedHom {
  std::string name;
  WHom hom;
};
/// Named homomorphisms for I2(p), B_n, H3, E7. Throws NoCatalogEntry.
std::vector<NamedHom> catalog(const CoxeterGroup& w);

/// Automorphism of W given by the images of s_1..s_n.
struct Automorphism {
  std::string name;
  std::string provenance;  // "graph" or "special"
  std::vector<Element> images;
};
/// Throws InvalidAutomorphism unless the images define a bijective endomorphism.
void check_automorphism(const CoxeterGroup& w, const Automorphism& a);
Element apply(const CoxeterGroup& w, const Automorphism& a, const Element& x);
WHom apply(const CoxeterGroup& w, const Automorphism& a, const WHom& h);
/// Generators of Aut(W) modulo inner automorphisms, where known.
/// Throws UnsupportedEquivalence for other types.
std::vector<Automorphism> automorphism_generators(const CoxeterGroup& w);
/// The H3 automorphism alpha with alpha(s_2) = s_2, alpha(s_3) = s_3.
Automorphism h3_alpha(const CoxeterGroup& w);

inline constexpr std::uint64_t kDefaultBruteForceBound = 10'000;

/// Brute-force access to Hom(A, W) for small W: all elements, conjugacy
/// classes, and canonical forms of image tuples under conjugation.
class HomSpace {
 public:
  /// Throws GroupTooLarge when |W| > bound.
  explicit HomSpace(const CoxeterGroup& w, std::uint64_t bound = kDefaultBruteForceBound,
                    std::uint64_t seed = 0);

  const CoxeterGroup& group() const noexcept { return *group_; }
  const ConjugacyClasses& classes() const noexcept { return classes_; }
  std::span<const Element> elements() const noexcept { return elements_; }

  /// Minimal tuple in the conjugation orbit of h.
  WHom canonical(const WHom& h) const;
  /// Size of the conjugation orbit of h.
  std::uint64_t orbit_size(const WHom& h) const;

  struct Orbit {
    WHom canonical;
    std::uint64_t size = 0;
  };
  /// Every valid hom up to conjugacy, sorted by canonical form.
  std::vector<Orbit> valid_orbits(int threads = 1) const;

 private:
  const std::vector<std::size_t>& centralizer(std::size_t class_index) const;
  WHom canonical_from_rep(const WHom& h, std::size_t class_index) const;

  const CoxeterGroup* group_;
  ConjugacyClasses classes_;
  std::vector<Element> elements_;
  std::vector<std::vector<std::size_t>> centralizers_;  // element indices per class rep
};

enum class GroupingMode { conjugacy, equivalence };
std::string to_string(GroupingMode mode);

struct HomClass {
  std::optional<std::string> name;
  WHom images;                 // canonical representative
  std::uint64_t image_order = 0;
  std::uint64_t homs = 0;      // number of homomorphisms in the class
  std::size_t conjugacy_classes = 1;
  bool proper = false;
  bool ordinary = false;
};

struct HomClassReport {
  std::string graph;
  GroupingMode mode = GroupingMode::conjugacy;
  std::vector<HomClass> classes;

  std::size_t proper_count() const;
};

/// All ucep classes (epimorphisms and proper ones), up to conjugacy, with
/// catalog names attached where they match. In equivalence mode the classes
/// are merged under automorphism_generators().
HomClassReport classify_uceps(const HomSpace& space, GroupingMode mode, int threads = 1);
/// Merges conjugacy classes under the given automorphisms together with inner ones.
HomClassReport merge_by_automorphisms(const HomSpace& space, const HomClassReport& report,
                                      std::span<const Automorphism> gens);

/// phi given by one Artin word per generator. Throws RelationViolation when
/// the mu-images break an Artin relation; true iff every mu(phi(sigma_i))^2 = 1.
bool preserves_coloured(const CoxeterGroup& w, std::span<const ArtinWord> phi);

}  // namespace artin
