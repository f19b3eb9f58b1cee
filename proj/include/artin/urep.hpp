#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "artin/gf2.hpp"
#include "artin/hom.hpp"
#include "artin/words.hpp"

namespace artin {

/// Bijection (k, t) -> (k + c(t), pi(t)) of Z x T. Reflections are indexed as
/// in CoxeterGroup::reflections().
class AffinePerm {
 public:
  AffinePerm() = default;
  AffinePerm(std::vector<std::uint16_t> base, std::vector<std::int64_t> offsets);
  static AffinePerm identity(std::size_t size);

  std::size_t size() const noexcept { return base_.size(); }
  const std::vector<std::uint16_t>& base() const noexcept { return base_; }
  const std::vector<std::int64_t>& offsets() const noexcept { return offsets_; }

  std::pair<std::int64_t, std::size_t> operator()(std::int64_t k, std::size_t t) const {
    return {k + offsets_[t], base_[t]};
  }
  /// (c, pi) * (c', pi') = (t -> c'(t) + c(pi'(t)), pi o pi').
  AffinePerm operator*(const AffinePerm& rhs) const;
  AffinePerm inverse() const;
  std::int64_t offset_sum() const;

  friend bool operator==(const AffinePerm&, const AffinePerm&) = default;

 private:
  std::vector<std::uint16_t> base_;
  std::vector<std::int64_t> offsets_;
};

/// Base bijection of T induced by conjugation with x.
std::vector<std::uint16_t> conjugation_on_reflections(const CoxeterGroup& w, const Element& x);

AffinePerm u_generator(const CoxeterGroup& w, int i);
AffinePerm u_eval(const CoxeterGroup& w, const ArtinWord& word);

struct ParityProfile {
  std::vector<std::uint16_t> base;
  std::vector<std::uint8_t> parity;  // offsets mod 2
  friend bool operator==(const ParityProfile&, const ParityProfile&) = default;
};

/// Profile of U on a lift of each psi(sigma_i). The two Tits lifts (smallest
/// and largest descents) are compared; std::logic_error if they disagree.
/// Throws InvalidHom.
std::vector<ParityProfile> parity_profile(const CoxeterGroup& w, const WHom& psi);

/// Sum of coefficients[v] * x_v = constant over Z, where x_{i*|T|+t} is the free
/// even part of the offset of the unknown lift of psi(sigma_i) at t.
struct OffsetEquation {
  std::vector<std::int64_t> coefficients;
  std::int64_t constant = 0;
  int gen_i = 0;  // relation omega(sigma_i, sigma_j) = omega(sigma_j, sigma_i)
  int gen_j = 0;
  std::size_t reflection = 0;
};

struct OffsetSystem {
  std::size_t generators = 0;
  std::size_t reflections = 0;
  std::vector<OffsetEquation> equations;

  std::size_t variables() const noexcept { return generators * reflections; }
  /// Rows divided by the largest power of two dividing every entry, then
  /// reduced mod 2 (last bit is the constant).
  std::vector<BitRow> mod2_rows() const;
};

/// Throws InvalidHom.
OffsetSystem offset_system(const CoxeterGroup& w, const WHom& psi, int threads = 1);

enum class Verdict { obstructed, no_parity_obstruction };
std::string to_string(Verdict v);

struct ObstructionResult {
  Verdict verdict = Verdict::no_parity_obstruction;
  std::size_t variables = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> certificate;  // equation indices
};

ObstructionResult solve_obstruction(const OffsetSystem& system);
ObstructionResult obstruction(const CoxeterGroup& w, const WHom& psi, int threads = 1);
bool verify_certificate(const OffsetSystem& system, std::span<const std::size_t> certificate);
/// One line of 0/1 per equation, constant last.
std::string dump_matrix(const OffsetSystem& system);

struct Theorem31Row {
  std::optional<std::string> name;
  WHom hom;
  std::uint64_t image_order = 0;
  bool proper = false;
  ObstructionResult result;
};

struct Theorem31Report {
  std::string graph;
  std::string source;  // "brute-force" or "catalog"
  bool vacuous = false;
  std::vector<Theorem31Row> rows;
};

/// Obstruction run on every extraordinary ucep class (brute force when |W| is
/// within bound, catalog otherwise). Throws GroupTooLarge when neither works.
Theorem31Report theorem31_report(const CoxeterGroup& w, int threads = 1,
                                 std::uint64_t bound = kDefaultBruteForceBound);

}  // namespace artin
