#pragma once

// Bounded breadth-first search for Andrews-Curtis trivializations.
//
// States are deduplicated by canonical_key, which identifies presentations
// that differ by relator order, relator inversion, cyclic rotation of
// relators and relabeling of generators. One search step ("edge") multiplies
// a rotation of r_i by a conjugate of a rotation of r_j^{+-1}, or stabilizes
// or destabilizes. Because rotations of both relators are enumerated, the set
// of successor keys depends only on the key of a state, so the outcome status
// does not depend on which representative of a key was stored first.
//
// Each edge expands into ordinary moves for the trace: conjugations that
// rotate r_i and r_j, an optional inversion of r_j, then the multiplication.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "lowdim/error.hpp"
#include "lowdim/presentation.hpp"
#include "lowdim/word.hpp"

namespace lowdim::ac {

struct SearchConfig {
  std::size_t max_total_length = 16;
  std::size_t max_depth = 8;
  std::size_t conjugator_depth = 1;
  std::size_t node_budget = 20'000;
  std::size_t stabilizations = 0;
  std::size_t workers = 1;
};

// ---------------------------------------------------------------------------
// Moves and traces

struct InvertMove {
  std::size_t relator;
  friend bool operator==(const InvertMove&, const InvertMove&) = default;
};
struct ConjugateMove {
  std::size_t relator;
  Word conjugator;
  friend bool operator==(const ConjugateMove&, const ConjugateMove&) = default;
};
struct MultiplyMove {
  std::size_t target, source;
  Word conjugator;
  friend bool operator==(const MultiplyMove&, const MultiplyMove&) = default;
};
struct StabilizeMove {
  friend bool operator==(const StabilizeMove&, const StabilizeMove&) = default;
};
struct DestabilizeMove {
  std::size_t relator;
  friend bool operator==(const DestabilizeMove&, const DestabilizeMove&) = default;
};

using Move = std::variant<InvertMove, ConjugateMove, MultiplyMove, StabilizeMove, DestabilizeMove>;
using Trace = std::vector<Move>;

inline BalancedPresentation apply_move(const BalancedPresentation& p, const Move& m) {
  return std::visit(
      [&](const auto& mv) -> BalancedPresentation {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, InvertMove>) return ac_invert(p, mv.relator);
        else if constexpr (std::is_same_v<T, ConjugateMove>) return ac_conjugate(p, mv.relator, mv.conjugator);
        else if constexpr (std::is_same_v<T, MultiplyMove>) return ac_multiply(p, mv.target, mv.source, mv.conjugator);
        else if constexpr (std::is_same_v<T, StabilizeMove>) return stabilize(p);
        else return destabilize(p, mv.relator);
      },
      m);
}

/// Applies the trace in order. A failing step is rejected with its index.
inline BalancedPresentation replay_trace(BalancedPresentation p, const Trace& trace) {
  for (std::size_t k = 0; k < trace.size(); ++k) {
    try {
      p = apply_move(p, trace[k]);
    } catch (const input_error& e) {
      throw input_error("trace step " + std::to_string(k) + " is illegal: " + e.what());
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace detail {

/// Minimal-memory state used inside the search.
struct State {
  std::size_t generators = 0;
  std::vector<std::vector<Letter>> relators;

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& r : relators) n += r.size();
    return n;
  }
};

inline State to_state(const BalancedPresentation& p) {
  State s{p.rank(), {}};
  for (const auto& r : p.relators()) s.relators.push_back(r.letters());
  return s;
}

using Code = std::uint8_t;

/// Least rotation of the code sequence w or its inverse.
inline void canonical_cyclic(const std::vector<Code>& w, std::vector<Code>& out) {
  const std::size_t n = w.size();
  out.assign(w.begin(), w.end());
  if (n == 1) out[0] &= static_cast<Code>(~1U);
  if (n < 2) return;
  std::vector<Code> inv(n);
  for (std::size_t k = 0; k < n; ++k) inv[k] = static_cast<Code>(w[n - 1 - k] ^ 1U);
  auto better = [&](const std::vector<Code>& src, std::size_t start) {
    for (std::size_t k = 0; k < n; ++k) {
      Code c = src[(start + k) % n];
      if (c != out[k]) return c < out[k];
    }
    return false;
  };
  auto take = [&](const std::vector<Code>& src, std::size_t start) {
    for (std::size_t k = 0; k < n; ++k) out[k] = src[(start + k) % n];
  };
  for (std::size_t s = 1; s < n; ++s)
    if (better(w, s)) take(w, s);
  for (std::size_t s = 0; s < n; ++s)
    if (better(inv, s)) take(inv, s);
}

inline std::string key_of(const State& s) {
  const std::size_t n = s.generators;
  lowdim::detail::require(n < 120, "canonical_key supports fewer than 120 generators");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool have = false;
  std::vector<std::vector<Code>> rels(s.relators.size());
  std::vector<Code> mapped;
  do {
    for (std::size_t k = 0; k < s.relators.size(); ++k) {
      mapped.clear();
      for (Letter l : s.relators[k])
        mapped.push_back(static_cast<Code>(2 * perm[generator_of(l)] + (l > 0 ? 0 : 1)));
      canonical_cyclic(mapped, rels[k]);
    }
    std::sort(rels.begin(), rels.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::string key;
    key.push_back(static_cast<char>(n));
    for (const auto& r : rels) {
      key.push_back(static_cast<char>(0xFF));
      for (Code c : r) key.push_back(static_cast<char>(c));
    }
    if (!have || key < best) {
      best = std::move(key);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool trivial_state(const State& s) {
  if (s.relators.size() != s.generators) return false;
  std::vector<bool> hit(s.generators, false);
  for (const auto& r : s.relators) {
    if (r.size() != 1) return false;
    std::size_t g = generator_of(r[0]);
    if (g >= s.generators || hit[g]) return false;
    hit[g] = true;
  }
  return true;
}

}  // namespace detail

/// Opaque key, equal exactly for presentations related by relator order,
/// relator inversion, cyclic rotation of relators and generator relabeling.
using CanonicalKey = std::string;

inline CanonicalKey canonical_key(const BalancedPresentation& p) { return detail::key_of(detail::to_state(p)); }

/// True when the relators are, up to order and inversion, the generators
/// themselves, each exactly once.
inline bool is_trivial_form(const BalancedPresentation& p) { return detail::trivial_state(detail::to_state(p)); }

// ---------------------------------------------------------------------------
// Search

enum class SearchStatus { trivialized, exhausted, budget_exceeded };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::trivialized: return "trivialized";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

struct SearchStats {
  std::size_t nodes_expanded = 0;
  std::size_t distinct_keys = 0;
  std::size_t max_frontier = 0;
  std::size_t depth_reached = 0;
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::exhausted;
  Trace trace;       // only for trivialized; replays to a trivial form
  std::size_t steps = 0;  // search edges on the trace (<= max_depth)
  SearchStats stats;
};

/// Freely reduced words of length <= depth over the first `generators`
/// generators, in length-lex order (letters ordered x < X < y < Y ...).
inline std::vector<Word> conjugators(std::size_t generators, std::size_t depth) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  std::vector<Letter> alphabet;
  for (std::size_t g = 0; g < generators; ++g) {
    alphabet.push_back(positive_letter(g));
    alphabet.push_back(negative_letter(g));
  }
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter l : alphabet) {
        if (!w.empty() && w.back() == -l) continue;
        auto letters = w.letters();
        letters.push_back(l);
        next.emplace_back(letters);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

namespace detail {

enum class EdgeKind : std::uint8_t { multiply, stabilize, destabilize };

struct Edge {
  EdgeKind kind = EdgeKind::multiply;
  std::uint16_t target = 0, source = 0;  // destabilize uses target
  std::int8_t sign = 1;
  std::uint16_t rot_target = 0, rot_source = 0;
  std::uint32_t conj = 0;  // index into the conjugator list for this generator count
};

struct Node {
  State state;
  std::uint32_t parent;
  Edge edge;
};

struct Candidate {
  std::string key;
  std::uint32_t parent;
  std::uint32_t ordinal;
  Edge edge;
  State state;
  bool trivial;
};

inline std::vector<Letter> rotated(const std::vector<Letter>& w, std::size_t k) {
  if (w.empty()) return w;
  std::vector<Letter> out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

inline std::vector<Letter> inverted(const std::vector<Letter>& w) {
  std::vector<Letter> out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

inline void push_reduced(std::vector<Letter>& acc, Letter l) {
  if (!acc.empty() && acc.back() == -l) acc.pop_back();
  else acc.push_back(l);
}

inline std::vector<Letter> cyclic_core_of(std::vector<Letter> w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return {w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi)};
}

class Searcher {
 public:
  Searcher(const BalancedPresentation& start, const SearchConfig& cfg) : start_(start), cfg_(cfg) {
    base_rank_ = start.rank();
  }

  SearchOutcome run() {
    SearchOutcome out;
    State s0 = to_state(start_);
    nodes_.push_back(Node{s0, UINT32_MAX, {}});
    visited_.insert(key_of(s0));
    out.stats.distinct_keys = 1;
    out.stats.max_frontier = 1;
    if (trivial_state(s0)) {
      out.status = SearchStatus::trivialized;
      return out;
    }
    std::vector<std::uint32_t> frontier{0};
    std::size_t depth = 0;
    while (!frontier.empty() && depth < cfg_.max_depth) {
      std::size_t remaining = cfg_.node_budget - out.stats.nodes_expanded;
      bool truncated = frontier.size() > remaining;
      std::size_t count = truncated ? remaining : frontier.size();
      auto cands = expand_level(frontier, count);
      out.stats.nodes_expanded += count;
      ++depth;
      out.stats.depth_reached = depth;

      std::vector<std::uint32_t> next;
      std::optional<std::size_t> trivial_at;
      for (auto& c : cands) {
        visited_.insert(c.key);
        nodes_.push_back(Node{std::move(c.state), c.parent, c.edge});
        next.push_back(static_cast<std::uint32_t>(nodes_.size() - 1));
        if (c.trivial && !trivial_at) trivial_at = nodes_.size() - 1;
      }
      out.stats.distinct_keys = visited_.size();
      out.stats.max_frontier = std::max(out.stats.max_frontier, next.size());
      if (trivial_at) {
        out.status = SearchStatus::trivialized;
        build_trace(*trivial_at, out);
        return out;
      }
      if (truncated || (out.stats.nodes_expanded >= cfg_.node_budget && !next.empty() && depth < cfg_.max_depth)) {
        out.status = SearchStatus::budget_exceeded;
        return out;
      }
      frontier = std::move(next);
    }
    out.status = SearchStatus::exhausted;
    return out;
  }

 private:
  const std::vector<Word>& conj_list(std::size_t gens) {
    auto it = conj_cache_.find(gens);
    if (it == conj_cache_.end()) it = conj_cache_.emplace(gens, conjugators(gens, cfg_.conjugator_depth)).first;
    return it->second;
  }

  // Calls emit(edge, child) for every successor of s within the length cap,
  // in a fixed order.
  template <class Emit>
  void for_each_successor(const State& s, const std::vector<Word>& conjs, Emit&& emit) const {
    const std::size_t n = s.relators.size();
    const std::size_t total = s.total_length();
    std::vector<Letter> buf;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto& ri = s.relators[i];
        const auto& rj = s.relators[j];
        const std::size_t base = total - ri.size();
        for (int sign : {1, -1}) {
          for (std::uint32_t ci = 0; ci < conjs.size(); ++ci) {
            const auto& c = conjs[ci].letters();
            for (std::size_t a = 0; a < std::max<std::size_t>(ri.size(), 1); ++a) {
              for (std::size_t b = 0; b < std::max<std::size_t>(rj.size(), 1); ++b) {
                buf.clear();
                for (std::size_t k = 0; k < ri.size(); ++k) push_reduced(buf, ri[(a + k) % ri.size()]);
                for (Letter l : c) push_reduced(buf, l);
                const std::size_t m = rj.size();
                for (std::size_t k = 0; k < m; ++k) {
                  Letter l = sign > 0 ? rj[(b + k) % m] : -rj[(b + m - 1 - k) % m];
                  push_reduced(buf, l);
                }
                for (auto it = c.rbegin(); it != c.rend(); ++it) push_reduced(buf, -*it);
                auto core = cyclic_core_of(buf);
                if (base + core.size() > cfg_.max_total_length) continue;
                State child = s;
                child.relators[j] = rotated(rj, b);
                if (sign < 0) child.relators[j] = inverted(child.relators[j]);
                child.relators[i] = std::move(core);
                Edge e{EdgeKind::multiply, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                       static_cast<std::int8_t>(sign), static_cast<std::uint16_t>(a),
                       static_cast<std::uint16_t>(b), ci};
                emit(e, std::move(child));
              }
            }
          }
        }
      }
    }
    if (cfg_.stabilizations == 0) return;
    if (s.generators < base_rank_ + cfg_.stabilizations && total + 1 <= cfg_.max_total_length) {
      State child = s;
      child.relators.push_back({positive_letter(s.generators)});
      ++child.generators;
      emit(Edge{EdgeKind::stabilize}, std::move(child));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (s.relators[i].size() != 1) continue;
      std::size_t g = generator_of(s.relators[i][0]);
      bool elsewhere = false;
      for (std::size_t k = 0; k < n && !elsewhere; ++k)
        if (k != i)
          for (Letter l : s.relators[k])
            if (generator_of(l) == g) {
              elsewhere = true;
              break;
            }
      if (elsewhere) continue;
      State child;
      child.generators = s.generators - 1;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i) continue;
        std::vector<Letter> r;
        for (Letter l : s.relators[k]) {
          std::size_t h = generator_of(l);
          std::size_t nh = h > g ? h - 1 : h;
          r.push_back(l > 0 ? positive_letter(nh) : negative_letter(nh));
        }
        child.relators.push_back(std::move(r));
      }
      Edge e{EdgeKind::destabilize, static_cast<std::uint16_t>(i)};
      emit(e, std::move(child));
    }
  }

  // Expands frontier[0..count) and returns the new states of the next level,
  // in (parent, ordinal) order, each key appearing once.
  std::vector<Candidate> expand_level(const std::vector<std::uint32_t>& frontier, std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) conj_list(nodes_[frontier[k]].state.generators);
    for (std::size_t g = 0; g <= base_rank_ + cfg_.stabilizations; ++g) conj_list(g);

    const std::size_t workers = std::max<std::size_t>(1, std::min(cfg_.workers, count));
    std::vector<std::vector<Candidate>> per_worker(workers);
    auto work = [&](std::size_t w) {
      std::unordered_set<std::string> local;
      auto& outv = per_worker[w];
      // Contiguous chunks keep each worker's output sorted by parent.
      std::size_t lo = count * w / workers, hi = count * (w + 1) / workers;
      for (std::size_t k = lo; k < hi; ++k) {
        const Node& node = nodes_[frontier[k]];
        const auto& conjs = conj_cache_.at(node.state.generators);
        std::uint32_t ordinal = 0;
        std::unordered_set<std::string> seen_children;
        for_each_successor(node.state, conjs, [&](const Edge& e, State&& child) {
          std::uint32_t ord = ordinal++;
          std::string key = key_of(child);
          if (visited_.count(key) || !local.insert(key).second) return;
          bool trivial = trivial_state(child);
          outv.push_back(Candidate{std::move(key), frontier[k], ord, e, std::move(child), trivial});
        });
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    // Workers own disjoint parent ranges in increasing order, so concatenating
    // and keeping the first occurrence of each key reproduces sequential BFS.
    std::vector<Candidate> merged;
    std::unordered_set<std::string> taken;
    for (auto& v : per_worker)
      for (auto& c : v)
        if (taken.insert(c.key).second) merged.push_back(std::move(c));
    return merged;
  }

  void build_trace(std::size_t node_index, SearchOutcome& out) const {
    std::vector<std::size_t> path;
    for (std::size_t k = node_index; nodes_[k].parent != UINT32_MAX; k = nodes_[k].parent) path.push_back(k);
    std::reverse(path.begin(), path.end());
    out.steps = path.size();
    for (std::size_t k : path) {
      const Node& node = nodes_[k];
      const State& parent = nodes_[node.parent].state;
      const Edge& e = node.edge;
      switch (e.kind) {
        case EdgeKind::stabilize: out.trace.push_back(StabilizeMove{}); break;
        case EdgeKind::destabilize: out.trace.push_back(DestabilizeMove{e.target}); break;
        case EdgeKind::multiply: {
          const auto& ri = parent.relators[e.target];
          const auto& rj = parent.relators[e.source];
          if (e.rot_target > 0) {
            Word prefix(std::vector<Letter>(ri.begin(), ri.begin() + e.rot_target));
            out.trace.push_back(ConjugateMove{e.target, prefix.inverse()});
          }
          if (e.rot_source > 0) {
            Word prefix(std::vector<Letter>(rj.begin(), rj.begin() + e.rot_source));
            out.trace.push_back(ConjugateMove{e.source, prefix.inverse()});
          }
          if (e.sign < 0) out.trace.push_back(InvertMove{e.source});
          out.trace.push_back(MultiplyMove{e.target, e.source, conj_cache_.at(parent.generators)[e.conj]});
          break;
        }
      }
    }
  }

  BalancedPresentation start_;
  SearchConfig cfg_;
  std::size_t base_rank_ = 0;
  std::vector<Node> nodes_;
  std::unordered_set<std::string> visited_;
  std::unordered_map<std::size_t, std::vector<Word>> conj_cache_;
};

}  // namespace detail

/// Breadth-first search over search edges (see the header comment). A
/// trivialized outcome has been replayed and checked before it is returned.
inline SearchOutcome search(const BalancedPresentation& p, const SearchConfig& cfg) {
  lowdim::detail::require(cfg.node_budget >= 1, "node budget must be at least 1");
  lowdim::detail::require(p.total_length() <= cfg.max_total_length,
                          "input total relator length " + std::to_string(p.total_length()) +
                              " exceeds max_total_length " + std::to_string(cfg.max_total_length));
  lowdim::detail::require(p.rank() + cfg.stabilizations < 120, "too many generators for the search");
  for (const auto& r : p.relators())
    lowdim::detail::require(r.size() < 65'536, "relator too long for the search");
  auto out = detail::Searcher(p, cfg).run();
  if (out.status == SearchStatus::trivialized) {
    auto end = replay_trace(p, out.trace);
    lowdim::detail::ensure(is_trivial_form(end), "search trace does not replay to a trivial form");
  }
  return out;
}

}  // namespace lowdim::ac
