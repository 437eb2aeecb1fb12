#pragma once

// Free-group words over an indexed alphabet.
//
// A letter is a nonzero integer: generator g (0-based) is +(g+1), its
// inverse is -(g+1). Words are always stored freely reduced.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lowdim/error.hpp"

namespace lowdim {

using Letter = std::int32_t;

constexpr Letter positive_letter(std::size_t generator) { return static_cast<Letter>(generator + 1); }
constexpr Letter negative_letter(std::size_t generator) { return -static_cast<Letter>(generator + 1); }
constexpr std::size_t generator_of(Letter l) { return static_cast<std::size_t>((l > 0 ? l : -l) - 1); }
constexpr Letter inverse_letter(Letter l) { return -l; }

/// Total order used wherever a canonical choice is needed: x < X < y < Y < ...
constexpr std::uint32_t letter_code(Letter l) {
  return static_cast<std::uint32_t>(2 * generator_of(l) + (l > 0 ? 0 : 1));
}

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : Word(std::span<const Letter>(letters.begin(), letters.size())) {}
  explicit Word(std::span<const Letter> letters) { append_reduced(letters); }
  explicit Word(const std::vector<Letter>& letters) : Word(std::span<const Letter>(letters)) {}

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> letters) { return Word(letters); }

  static Word generator(std::size_t g) { return Word{positive_letter(g)}; }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const {
    Word out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
    return out;
  }

  Word& operator*=(const Word& rhs) {
    append_reduced(rhs.letters_);
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  Word power(long long k) const {
    Word base = k < 0 ? inverse() : *this;
    Word out;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
    return out;
  }

  long long exponent_sum(std::size_t g) const {
    long long s = 0;
    for (Letter l : letters_)
      if (generator_of(l) == g) s += l > 0 ? 1 : -1;
    return s;
  }

  std::size_t occurrences(std::size_t g) const {
    return static_cast<std::size_t>(
        std::count_if(letters_.begin(), letters_.end(), [g](Letter l) { return generator_of(l) == g; }));
  }

  /// Largest generator index referenced plus one (0 for the empty word).
  std::size_t generator_bound() const {
    std::size_t b = 0;
    for (Letter l : letters_) b = std::max(b, generator_of(l) + 1);
    return b;
  }

  bool is_cyclically_reduced() const { return letters_.size() < 2 || letters_.front() != -letters_.back(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  void append_reduced(std::span<const Letter> letters) {
    for (Letter l : letters) {
      if (l == 0) reject("letter 0 is not a valid generator letter");
      if (!letters_.empty() && letters_.back() == -l)
        letters_.pop_back();
      else
        letters_.push_back(l);
    }
  }
  static void reject(const char* what) { throw input_error(what); }

  std::vector<Letter> letters_;
};

struct CyclicReduction {
  Word core;
  Word conjugator;  // word == conjugator * core * conjugator^-1
};

inline CyclicReduction cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return {Word(std::span<const Letter>(l.data() + lo, hi - lo)),
          Word(std::span<const Letter>(l.data(), lo))};
}

inline Word cyclic_core(const Word& w) { return cyclic_reduce(w).core; }

/// Left rotation by k letters. Only meaningful for cyclically reduced words,
/// where the result is again reduced.
inline Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Letter> out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return Word(out);
}

namespace detail {

inline bool code_less(std::span<const Letter> a, std::span<const Letter> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Letter x, Letter y) { return letter_code(x) < letter_code(y); });
}

inline std::vector<Letter> min_rotation(const std::vector<Letter>& w) {
  std::vector<Letter> best = w, cur = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (code_less(cur, best)) best = cur;
  }
  return best;
}

}  // namespace detail

/// Representative of the class of a cyclically reduced word under rotation
/// and inversion: the code-lexicographically least rotation of w or w^-1.
inline Word cyclic_canonical(const Word& w) {
  Word core = cyclic_core(w);
  auto a = detail::min_rotation(core.letters());
  auto b = detail::min_rotation(core.inverse().letters());
  return Word(detail::code_less(b, a) ? b : a);
}

/// True when u and v are equal up to cyclic rotation (no inversion).
inline bool cyclically_equal(const Word& u, const Word& v) {
  Word cu = cyclic_core(u), cv = cyclic_core(v);
  if (cu.size() != cv.size()) return false;
  for (std::size_t k = 0; k < std::max<std::size_t>(cu.size(), 1); ++k)
    if (rotate(cu, k) == cv) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Text syntax: space separated tokens, a lowercase token names a generator and
// its uppercase spelling names the inverse ("x y X Y").

using Alphabet = std::vector<std::string>;

inline bool is_generator_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::islower(u) || std::isdigit(u) || c == '_';
  });
}

inline std::string inverse_name(std::string_view name) {
  std::string out(name);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

inline std::string letter_name(Letter l, const Alphabet& alphabet) {
  std::size_t g = generator_of(l);
  detail::require(g < alphabet.size(), "letter references generator " + std::to_string(g) + " outside the alphabet");
  return l > 0 ? alphabet[g] : inverse_name(alphabet[g]);
}

/// Tokenizes and freely reduces. Unknown tokens are rejected by name.
inline Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) break;
    std::string_view tok = text.substr(i, j - i);
    bool found = false;
    for (std::size_t g = 0; g < alphabet.size() && !found; ++g) {
      if (tok == alphabet[g]) {
        letters.push_back(positive_letter(g));
        found = true;
      } else if (tok == inverse_name(alphabet[g])) {
        letters.push_back(negative_letter(g));
        found = true;
      }
    }
    if (!found) detail::reject("unknown generator symbol '" + std::string(tok) + "'");
    i = j;
  }
  return Word(letters);
}

inline std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += ' ';
    out += letter_name(l, alphabet);
  }
  return out;
}

}  // namespace lowdim
