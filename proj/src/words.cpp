#include "artin/words.hpp"

#include <algorithm>
#include <charconv>

namespace artin {

ArtinWord ArtinWord::parse(std::string_view text, int rank) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (ch == ' ' || ch == ',' || ch == '\t') {
      ++pos;
      continue;
    }
    int sign = 1;
    if (ch == '-' || ch == '+') {
      sign = ch == '-' ? -1 : 1;
      ++pos;
    }
    int value = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("bad word '" + std::string(text) + "'");
    pos = static_cast<std::size_t>(end - text.data());
    if (value < 1 || (rank >= 0 && value > rank))
      throw ParseError("generator index " + std::to_string(value) + " out of range in '" +
                       std::string(text) + "'");
    letters.push_back({value - 1, sign});
  }
  return ArtinWord(std::move(letters));
}

ArtinWord ArtinWord::positive(std::span<const int> gens) {
  std::vector<Letter> letters;
  for (int g : gens) letters.push_back({g, 1});
  return ArtinWord(std::move(letters));
}

std::string ArtinWord::str() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    if (l.exp < 0) out += '-';
    out += std::to_string(l.gen + 1);
  }
  return out;
}

bool ArtinWord::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l.exp > 0; });
}

ArtinWord ArtinWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  return ArtinWord(std::move(out));
}

ArtinWord ArtinWord::reduced() const {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return ArtinWord(std::move(out));
}

ArtinWord ArtinWord::pow(int k) const {
  ArtinWord base = k < 0 ? inverse() : *this;
  ArtinWord out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

ArtinWord ArtinWord::operator*(const ArtinWord& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return ArtinWord(std::move(out));
}

Element mu_eval(const CoxeterGroup& w, const ArtinWord& word) {
  Element x = w.identity();
  for (const auto& l : word.letters()) {
    if (l.gen < 0 || l.gen >= w.rank()) throw ParseError("generator index out of range");
    x = x * w.generator(l.gen);
  }
  return x;
}

ArtinWord tits_section(const CoxeterGroup& w, const Element& x, Descent strategy) {
  return ArtinWord::positive(w.reduced_word(x, strategy));
}

FundamentalElements fundamental_and_central(const CoxeterGroup& w) {
  auto xi = w.xi();
  FundamentalElements out;
  out.delta = tits_section(w, w.longest_element());
  bool trivial = true;
  for (int i = 0; i < w.rank(); ++i)
    if (xi[static_cast<std::size_t>(i)] != i) trivial = false;
  out.central = trivial ? out.delta : out.delta * out.delta;
  return out;
}

}  // namespace artin
