#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace artin {

/// Dense row over GF(2).
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  bool get(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1u; }
  void set(std::size_t k, bool v = true);
  void flip(std::size_t k) { words_[k / 64] ^= std::uint64_t{1} << (k % 64); }
  BitRow& operator^=(const BitRow& rhs);
  bool none() const;
  /// First set bit, or size() when there is none.
  std::size_t first() const;
  std::vector<std::size_t> ones() const;

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Augmented linear system over GF(2): each row holds `vars` coefficient bits
/// followed by one constant bit.
struct Gf2Result {
  bool consistent = true;
  std::size_t rank = 0;
  /// Rows whose sum is 0 = 1 when inconsistent.
  std::vector<std::size_t> certificate;
};

Gf2Result gf2_solve(std::span<const BitRow> rows, std::size_t vars);

/// True iff the listed rows sum to the row with only the constant bit set.
bool gf2_check_certificate(std::span<const BitRow> rows, std::size_t vars,
                           std::span<const std::size_t> certificate);

}  // namespace artin
