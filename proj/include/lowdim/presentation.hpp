#pragma once

// Finitely presented groups, balanced presentations and Andrews-Curtis moves.
//
// Relators are kept cyclically reduced but are not rotated to a canonical
// representative; quotienting by rotation/inversion/relabeling happens in
// ac::canonical_key.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lowdim/error.hpp"
#include "lowdim/word.hpp"

namespace lowdim {

class Presentation {
 public:
  Presentation() = default;

  Presentation(Alphabet generators, std::vector<Word> relators) : generators_(std::move(generators)) {
    std::set<std::string> seen;
    for (const auto& g : generators_) {
      detail::require(is_generator_name(g), "generator name '" + g + "' must be a lowercase token");
      detail::require(seen.insert(g).second, "duplicate generator name '" + g + "'");
    }
    relators_.reserve(relators.size());
    for (std::size_t i = 0; i < relators.size(); ++i) {
      detail::require(relators[i].generator_bound() <= generators_.size(),
                      "relator " + std::to_string(i) + " references an unknown generator");
      relators_.push_back(cyclic_core(relators[i]));
    }
  }

  /// Parses relators written in the token syntax against the generator list.
  static Presentation parse(const Alphabet& generators, const std::vector<std::string>& relators) {
    std::vector<Word> words;
    words.reserve(relators.size());
    for (const auto& r : relators) words.push_back(parse_word(r, generators));
    return Presentation(generators, std::move(words));
  }

  const Alphabet& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  std::size_t relator_count() const noexcept { return relators_.size(); }
  const Word& relator(std::size_t i) const { return relators_.at(i); }

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& r : relators_) n += r.size();
    return n;
  }

  bool is_balanced() const noexcept { return generators_.size() == relators_.size(); }

  std::string format_relator(std::size_t i) const { return format_word(relator(i), generators_); }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Alphabet generators_;
  std::vector<Word> relators_;
};

/// A presentation with as many relators as generators.
class BalancedPresentation {
 public:
  BalancedPresentation() = default;
  explicit BalancedPresentation(Presentation p) : p_(std::move(p)) {
    detail::require(p_.is_balanced(), "presentation is not balanced: " + std::to_string(p_.generator_count()) +
                                          " generators, " + std::to_string(p_.relator_count()) + " relators");
  }
  BalancedPresentation(Alphabet generators, std::vector<Word> relators)
      : BalancedPresentation(Presentation(std::move(generators), std::move(relators))) {}

  static BalancedPresentation parse(const Alphabet& generators, const std::vector<std::string>& relators) {
    return BalancedPresentation(Presentation::parse(generators, relators));
  }

  const Presentation& presentation() const noexcept { return p_; }
  operator const Presentation&() const noexcept { return p_; }

  const Alphabet& generators() const noexcept { return p_.generators(); }
  const std::vector<Word>& relators() const noexcept { return p_.relators(); }
  std::size_t rank() const noexcept { return p_.generator_count(); }
  const Word& relator(std::size_t i) const { return p_.relator(i); }
  std::size_t total_length() const { return p_.total_length(); }
  std::string format_relator(std::size_t i) const { return p_.format_relator(i); }

  friend bool operator==(const BalancedPresentation&, const BalancedPresentation&) = default;

 private:
  Presentation p_;
};

namespace detail {

inline void check_relator_index(const BalancedPresentation& p, std::size_t i, const char* what) {
  require(i < p.rank(), std::string(what) + " index " + std::to_string(i) + " out of range (rank " +
                            std::to_string(p.rank()) + ")");
}

inline BalancedPresentation with_relator(const BalancedPresentation& p, std::size_t i, Word r) {
  auto rels = p.relators();
  rels[i] = std::move(r);
  return BalancedPresentation(p.generators(), std::move(rels));
}

inline std::string fresh_generator_name(const Alphabet& used) {
  auto taken = [&](const std::string& s) { return std::find(used.begin(), used.end(), s) != used.end(); };
  if (!taken("g")) return "g";
  for (std::size_t k = 1;; ++k) {
    std::string s = "g" + std::to_string(k);
    if (!taken(s)) return s;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Andrews-Curtis moves

/// r_i <- r_i * conj * r_j * conj^-1 (then cyclically reduced).
inline BalancedPresentation ac_multiply(const BalancedPresentation& p, std::size_t i, std::size_t j,
                                        const Word& conj) {
  detail::check_relator_index(p, i, "ac_multiply target");
  detail::check_relator_index(p, j, "ac_multiply source");
  detail::require(i != j, "ac_multiply needs two distinct relators (i == j is not an Andrews-Curtis move)");
  detail::require(conj.generator_bound() <= p.rank(), "conjugator references an unknown generator");
  return detail::with_relator(p, i, p.relator(i) * conj * p.relator(j) * conj.inverse());
}

/// r_i <- r_i^-1.
inline BalancedPresentation ac_invert(const BalancedPresentation& p, std::size_t i) {
  detail::check_relator_index(p, i, "ac_invert");
  return detail::with_relator(p, i, p.relator(i).inverse());
}

/// r_i <- cyclic reduction of conj * r_i * conj^-1. On a cyclically reduced
/// relator this is either a rotation or the identity.
inline BalancedPresentation ac_conjugate(const BalancedPresentation& p, std::size_t i, const Word& conj) {
  detail::check_relator_index(p, i, "ac_conjugate");
  detail::require(conj.generator_bound() <= p.rank(), "conjugator references an unknown generator");
  return detail::with_relator(p, i, conj * p.relator(i) * conj.inverse());
}

/// Appends a fresh generator g together with the relator g.
inline BalancedPresentation stabilize(const BalancedPresentation& p) {
  auto gens = p.generators();
  auto rels = p.relators();
  rels.push_back(Word::generator(gens.size()));
  gens.push_back(detail::fresh_generator_name(gens));
  return BalancedPresentation(std::move(gens), std::move(rels));
}

/// Why relator i cannot be removed by destabilization, or nullopt if it can.
inline std::optional<std::string> destabilize_obstruction(const BalancedPresentation& p, std::size_t i) {
  if (i >= p.rank()) return "relator index " + std::to_string(i) + " out of range";
  const Word& r = p.relator(i);
  if (r.size() != 1) return "relator " + std::to_string(i) + " is not a single generator letter";
  std::size_t g = generator_of(r[0]);
  for (std::size_t k = 0; k < p.rank(); ++k)
    if (k != i && p.relator(k).occurrences(g) > 0)
      return "generator '" + p.generators()[g] + "' also occurs in relator " + std::to_string(k);
  return std::nullopt;
}

/// Removes relator i = g^{+-1} and its generator g, which must occur nowhere else.
inline BalancedPresentation destabilize(const BalancedPresentation& p, std::size_t i) {
  if (auto why = destabilize_obstruction(p, i)) detail::reject("cannot destabilize: " + *why);
  std::size_t g = generator_of(p.relator(i)[0]);
  Alphabet gens;
  std::vector<Word> rels;
  for (std::size_t k = 0; k < p.rank(); ++k) {
    if (k != g) gens.push_back(p.generators()[k]);
    if (k == i) continue;
    std::vector<Letter> shifted;
    for (Letter l : p.relator(k)) {
      std::size_t h = generator_of(l);
      std::size_t nh = h > g ? h - 1 : h;
      shifted.push_back(l > 0 ? positive_letter(nh) : negative_letter(nh));
    }
    rels.emplace_back(shifted);
  }
  return BalancedPresentation(std::move(gens), std::move(rels));
}

// ---------------------------------------------------------------------------
// The two-generator family <x, y | y = w^-1 x w, x^{n+1} = y^n>.

inline const Alphabet& xy_alphabet() {
  static const Alphabet a{"x", "y"};
  return a;
}

inline BalancedPresentation ak_presentation(unsigned n, const Word& w) {
  detail::require(!w.empty(), "the conjugating word w must be nonempty");
  detail::require(w.generator_bound() <= 2, "the conjugating word w must be a word in x and y");
  const Word x = Word::generator(0), y = Word::generator(1);
  Word r1 = y.inverse() * w.inverse() * x * w;
  Word r2 = x.power(static_cast<long long>(n) + 1) * y.inverse().power(n);
  return BalancedPresentation(xy_alphabet(), {r1, r2});
}

inline BalancedPresentation ak_presentation(unsigned n, std::string_view w = "y x") {
  return ak_presentation(n, parse_word(w, xy_alphabet()));
}

// ---------------------------------------------------------------------------
// Tietze simplification by generator elimination.

namespace detail {

struct Elimination {
  std::size_t relator;
  std::size_t generator;
  Word value;  // generator == value
};

/// Substitutes generator g := value in w, then renumbers generators above g.
inline Word substitute_and_drop(const Word& w, std::size_t g, const Word& value) {
  Word out;
  for (Letter l : w) {
    std::size_t h = generator_of(l);
    if (h == g) {
      out *= l > 0 ? value : value.inverse();
    } else {
      out *= Word{l};
    }
  }
  std::vector<Letter> shifted;
  for (Letter l : out) {
    std::size_t h = generator_of(l);
    std::size_t nh = h > g ? h - 1 : h;
    shifted.push_back(l > 0 ? positive_letter(nh) : negative_letter(nh));
  }
  return Word(shifted);
}

/// If g occurs exactly once in r, solve r = 1 for g. A relator that is a
/// single letter is never used, so <x | x> stays as it is.
inline std::optional<Word> solve_for(const Word& r, std::size_t g) {
  if (r.size() < 2 || r.occurrences(g) != 1) return std::nullopt;
  auto it = std::find_if(r.begin(), r.end(), [g](Letter l) { return generator_of(l) == g; });
  auto k = static_cast<std::size_t>(it - r.begin());
  // rotate so g^e is first: g^e * u = 1  =>  g = u^-e
  Word rot = rotate(r, k);
  Word u(std::span<const Letter>(rot.letters().data() + 1, rot.size() - 1));
  return rot[0] > 0 ? u.inverse() : u;
}

/// Picks the elimination with the smallest resulting total length. Ties go to
/// the highest-numbered generator, then to the earliest relator.
inline std::optional<Elimination> best_elimination(const Presentation& p) {
  std::optional<Elimination> best;
  std::size_t best_len = 0;
  for (std::size_t gi = p.generator_count(); gi-- > 0;) {
    for (std::size_t ri = 0; ri < p.relator_count(); ++ri) {
      auto value = solve_for(p.relator(ri), gi);
      if (!value) continue;
      std::size_t len = 0;
      for (std::size_t k = 0; k < p.relator_count(); ++k)
        if (k != ri) len += cyclic_core(substitute_and_drop(p.relator(k), gi, *value)).size();
      if (!best || len < best_len) {
        best = Elimination{ri, gi, *value};
        best_len = len;
      }
    }
  }
  return best;
}

inline Presentation eliminate(const Presentation& p, const Elimination& e) {
  Alphabet gens;
  for (std::size_t k = 0; k < p.generator_count(); ++k)
    if (k != e.generator) gens.push_back(p.generators()[k]);
  std::vector<Word> rels;
  for (std::size_t k = 0; k < p.relator_count(); ++k)
    if (k != e.relator) rels.push_back(substitute_and_drop(p.relator(k), e.generator, e.value));
  return Presentation(std::move(gens), std::move(rels));
}

}  // namespace detail

/// Eliminates generators that occur exactly once in some relator, and drops
/// empty relators and relators that repeat another one up to rotation and
/// inversion. The result presents an isomorphic group.
inline Presentation tietze_simplify(Presentation p) {
  for (;;) {
    std::vector<Word> kept;
    std::set<Word> seen;
    for (const auto& r : p.relators()) {
      if (r.empty()) continue;
      if (seen.insert(cyclic_canonical(r)).second) kept.push_back(r);
    }
    if (kept.size() != p.relator_count()) p = Presentation(p.generators(), std::move(kept));
    auto e = detail::best_elimination(p);
    if (!e) return p;
    p = detail::eliminate(p, *e);
  }
}

/// Balance-preserving variant: only generator eliminations, each of which
/// removes one generator and one relator.
inline BalancedPresentation tietze_simplify(const BalancedPresentation& bp) {
  Presentation p = bp.presentation();
  while (auto e = detail::best_elimination(p)) p = detail::eliminate(p, *e);
  return BalancedPresentation(std::move(p));
}

}  // namespace lowdim
