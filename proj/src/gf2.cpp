#include "artin/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace artin {

void BitRow::set(std::size_t k, bool v) {
  std::uint64_t mask = std::uint64_t{1} << (k % 64);
  if (v)
    words_[k / 64] |= mask;
  else
    words_[k / 64] &= ~mask;
}

BitRow& BitRow::operator^=(const BitRow& rhs) {
  if (rhs.bits_ != bits_) throw std::invalid_argument("BitRow size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
  return *this;
}

bool BitRow::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t x) { return x == 0; });
}

std::size_t BitRow::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return bits_;
}

std::vector<std::size_t> BitRow::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i)
    for (std::uint64_t x = words_[i]; x; x &= x - 1)
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  return out;
}

Gf2Result gf2_solve(std::span<const BitRow> rows, std::size_t vars) {
  std::vector<BitRow> work(rows.begin(), rows.end());
  std::vector<BitRow> combo;
  combo.reserve(work.size());
  for (std::size_t r = 0; r < work.size(); ++r) {
    if (work[r].size() != vars + 1) throw std::invalid_argument("row width must be vars + 1");
    combo.emplace_back(work.size());
    combo.back().set(r);
  }

  Gf2Result out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < vars && pivot_row < work.size(); ++col) {
    std::size_t p = pivot_row;
    while (p < work.size() && !work[p].get(col)) ++p;
    if (p == work.size()) continue;
    std::swap(work[p], work[pivot_row]);
    std::swap(combo[p], combo[pivot_row]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == pivot_row || !work[r].get(col)) continue;
      work[r] ^= work[pivot_row];
      combo[r] ^= combo[pivot_row];
    }
    ++pivot_row;
  }
  out.rank = pivot_row;
  for (std::size_t r = pivot_row; r < work.size(); ++r) {
    if (!work[r].get(vars)) continue;
    out.consistent = false;
    out.certificate = combo[r].ones();
    break;
  }
  return out;
}

bool gf2_check_certificate(std::span<const BitRow> rows, std::size_t vars,
                           std::span<const std::size_t> certificate) {
  if (certificate.empty()) return false;
  BitRow sum(vars + 1);
  for (std::size_t r : certificate) {
    if (r >= rows.size()) return false;
    sum ^= rows[r];
  }
  BitRow target(vars + 1);
  target.set(vars);
  return sum == target;
}

}  // namespace artin
