#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/coxeter_group.hpp"
#include "artin/errors.hpp"

namespace artin {

/// sigma_gen^exp, gen 0-based, exp = +-1.
struct Letter {
  int gen = 0;
  int exp = 1;
  friend bool operator==(Letter, Letter) = default;
};

/// Word in the Artin generators. Elements of A are only ever handled as words;
/// equality in A is never decided, only images under mu and U are compared.
class ArtinWord {
 public:
  ArtinWord() = default;
  explicit ArtinWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// "1 2 -3" is sigma_1 sigma_2 sigma_3^-1. Indices are checked against rank
  /// when rank >= 0.
  static ArtinWord parse(std::string_view text, int rank = -1);
  /// Positive word from 0-based generator indices.
  static ArtinWord positive(std::span<const int> gens);
  static ArtinWord generator(int gen, int exp = 1) { return ArtinWord({{gen, exp}}); }

  std::string str() const;
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_positive() const;

  ArtinWord inverse() const;
  ArtinWord reduced() const;
  ArtinWord pow(int k) const;
  ArtinWord operator*(const ArtinWord& rhs) const;

  friend bool operator==(const ArtinWord&, const ArtinWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// (ab)^{m/2} for m even, (ab)^{(m-1)/2} a for m odd. m = 0 stands for infinity.
template <typename T>
T omega(const T& a, const T& b, int m) {
  if (m <= 0) throw InfiniteLabel("omega(a, b : infinity) is undefined");
  if (m < 2) throw InfiniteLabel("omega needs m >= 2");
  T out = a * b;
  for (int k = 1; k < m / 2; ++k) out = out * a * b;
  if (m % 2 == 1) out = out * a;
  return out;
}

Element mu_eval(const CoxeterGroup& w, const ArtinWord& word);

/// Positive lift of a reduced word of w.
ArtinWord tits_section(const CoxeterGroup& w, const Element& x, Descent strategy = Descent::smallest);

struct FundamentalElements {
  ArtinWord delta;    // Delta = T(w0)
  ArtinWord central;  // delta = Delta if xi = Id, Delta^2 otherwise
};
/// Throws DisconnectedGraph.
FundamentalElements fundamental_and_central(const CoxeterGroup& w);

}  // namespace artin
