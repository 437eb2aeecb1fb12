#pragma once

// Todd-Coxeter coset enumeration over the trivial subgroup (HLT strategy with
// a coincidence queue). A closed table certifies the order of the group.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lowdim/error.hpp"
#include "lowdim/presentation.hpp"

namespace lowdim {

inline constexpr std::size_t default_coset_budget = 100'000;

/// Column of letter l in a coset table: 2g for g, 2g+1 for g^-1.
constexpr std::size_t coset_column(Letter l) { return 2 * generator_of(l) + (l > 0 ? 0 : 1); }
constexpr std::size_t inverse_column(std::size_t c) { return c ^ 1U; }

/// A complete coset table: entry(c, col) is the image of coset c.
struct CosetTable {
  std::size_t generators = 0;
  std::size_t count = 0;
  std::vector<std::int32_t> entries;  // row-major, count x 2*generators

  std::size_t cosets() const { return count; }
  std::int32_t operator()(std::size_t coset, std::size_t col) const { return entries[coset * 2 * generators + col]; }
};

enum class CosetStatus { closed, budget_exceeded };

struct CosetResult {
  CosetStatus status = CosetStatus::budget_exceeded;
  std::size_t order = 0;    // number of cosets when closed
  std::size_t live = 0;     // live cosets when the run stopped
  std::size_t defined = 0;  // total coset definitions made
  CosetTable table;         // compacted, only when closed
};

/// Independent check of a claimed complete table: every entry is defined,
/// each column pair is mutually inverse and every relator traces to the
/// identity at every coset. Returns a description of the first failure.
inline std::string verify_coset_table(const CosetTable& t, std::span<const Word> relators) {
  const std::size_t n = t.cosets(), width = 2 * t.generators;
  if (t.generators == 0) {
    for (const auto& r : relators)
      if (!r.empty()) return "nonempty relator over an empty alphabet";
    return n == 1 ? "" : "a table with no generators has exactly one coset";
  }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t col = 0; col < width; ++col) {
      auto v = t(c, col);
      if (v < 0 || static_cast<std::size_t>(v) >= n) return "undefined entry at coset " + std::to_string(c);
      if (t(static_cast<std::size_t>(v), inverse_column(col)) != static_cast<std::int32_t>(c))
        return "columns not mutually inverse at coset " + std::to_string(c);
    }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t k = 0; k < relators.size(); ++k) {
      std::size_t cur = c;
      for (Letter l : relators[k]) {
        if (generator_of(l) >= t.generators) return "relator letter outside the table alphabet";
        cur = static_cast<std::size_t>(t(cur, coset_column(l)));
      }
      if (cur != c) return "relator " + std::to_string(k) + " does not close at coset " + std::to_string(c);
    }
  return {};
}

namespace detail {

class CosetEnumerator {
 public:
  CosetEnumerator(std::size_t generators, std::span<const Word> relators, std::size_t max_cosets)
      : gens_(generators), width_(2 * generators), max_(max_cosets) {
    for (const auto& r : relators)
      if (!r.empty()) {
        std::vector<std::size_t> cols;
        for (Letter l : r) cols.push_back(coset_column(l));
        rels_.push_back(std::move(cols));
      }
  }

  CosetResult run() {
    CosetResult res;
    if (!new_coset()) return finish(res);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& r : rels_) {
        if (!alive(c)) break;
        if (!scan_and_fill(c, r)) return finish(res);
      }
      if (!alive(c)) continue;
      for (std::size_t col = 0; col < width_; ++col)
        if (at(c, col) < 0) {
          auto d = new_coset();
          if (!d) return finish(res);
          set(c, col, *d);
        }
    }
    res.status = CosetStatus::closed;
    return finish(res);
  }

 private:
  std::int32_t& at(std::size_t c, std::size_t col) { return table_[c * width_ + col]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != static_cast<std::int32_t>(r)) r = static_cast<std::size_t>(parent_[r]);
    while (parent_[c] != static_cast<std::int32_t>(r)) {
      std::size_t next = static_cast<std::size_t>(parent_[c]);
      parent_[c] = static_cast<std::int32_t>(r);
      c = next;
    }
    return r;
  }

  std::optional<std::size_t> new_coset() {
    if (parent_.size() >= max_) return std::nullopt;
    std::size_t c = parent_.size();
    parent_.push_back(static_cast<std::int32_t>(c));
    table_.resize(table_.size() + width_, -1);
    ++live_;
    return c;
  }

  void set(std::size_t c, std::size_t col, std::size_t d) {
    at(c, col) = static_cast<std::int32_t>(d);
    at(d, inverse_column(col)) = static_cast<std::int32_t>(c);
  }

  // Returns false when the budget is exhausted.
  bool scan_and_fill(std::size_t c, const std::vector<std::size_t>& r) {
    std::size_t f = c, b = c;
    std::size_t i = 0, j = r.size();  // unscanned letters are r[i..j)
    for (;;) {
      while (i < j && at(f, r[i]) >= 0) f = static_cast<std::size_t>(at(f, r[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j > i && at(b, inverse_column(r[j - 1])) >= 0)
        b = static_cast<std::size_t>(at(b, inverse_column(r[--j])));
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        set(f, r[i], b);  // deduction closes the cycle
        return true;
      }
      auto d = new_coset();
      if (!d) return false;
      set(f, r[i], *d);
    }
  }

  void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = static_cast<std::int32_t>(a);
    --live_;
    queue.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t e = queue[q];
      for (std::size_t col = 0; col < width_; ++col) {
        auto fv = at(e, col);
        if (fv < 0) continue;
        auto f = static_cast<std::size_t>(fv);
        at(e, col) = -1;
        if (at(f, inverse_column(col)) == static_cast<std::int32_t>(e)) at(f, inverse_column(col)) = -1;
        std::size_t e1 = rep(e), f1 = rep(f);
        if (at(e1, col) >= 0) {
          merge(f1, static_cast<std::size_t>(at(e1, col)), queue);
        } else if (at(f1, inverse_column(col)) >= 0) {
          merge(e1, static_cast<std::size_t>(at(f1, inverse_column(col))), queue);
        } else {
          set(e1, col, f1);
        }
      }
    }
  }

  CosetResult& finish(CosetResult& res) {
    res.defined = parent_.size();
    res.live = live_;
    if (res.status != CosetStatus::closed) return res;
    res.order = live_;
    std::vector<std::int32_t> renumber(parent_.size(), -1);
    std::int32_t next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (alive(c)) renumber[c] = next++;
    res.table.generators = gens_;
    res.table.count = live_;
    res.table.entries.reserve(live_ * width_);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (std::size_t col = 0; col < width_; ++col) {
        auto v = at(c, col);
        res.table.entries.push_back(v < 0 ? -1 : renumber[rep(static_cast<std::size_t>(v))]);
      }
    }
    return res;
  }

  std::size_t gens_, width_, max_;
  std::vector<std::vector<std::size_t>> rels_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> table_;
  std::size_t live_ = 0;
};

}  // namespace detail

/// Enumerates cosets of the trivial subgroup. max_cosets bounds the number of
/// coset definitions; running out is reported as a status, not an error.
/// A closed result has already passed verify_coset_table.
inline CosetResult todd_coxeter(std::size_t generators, std::span<const Word> relators,
                                std::size_t max_cosets = default_coset_budget) {
  detail::require(max_cosets >= 1, "max_cosets must be at least 1");
  for (const auto& r : relators)
    detail::require(r.generator_bound() <= generators, "relator references a generator outside the alphabet");
  auto res = detail::CosetEnumerator(generators, relators, max_cosets).run();
  if (res.status == CosetStatus::closed) {
    auto failure = verify_coset_table(res.table, relators);
    detail::ensure(failure.empty(), "closed coset table failed verification: " + failure);
  }
  return res;
}

inline CosetResult todd_coxeter(const Presentation& p, std::size_t max_cosets = default_coset_budget) {
  return todd_coxeter(p.generator_count(), p.relators(), max_cosets);
}

}  // namespace lowdim
