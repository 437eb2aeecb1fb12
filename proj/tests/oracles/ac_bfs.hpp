#pragma once

// Plain breadth-first search over literal Andrews-Curtis moves on token
// strings: invert a relator, conjugate it by a single letter, or multiply it
// by the other relator or its inverse, optionally conjugated by one letter.
// States are compared exactly (no canonical forms). Returns the number of
// moves to a presentation whose relators are {x, y} up to inversion and
// order, or -1 if none is found within the bounds.

#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oracles/token_words.hpp"

namespace oracle {

inline bool trivial_pair(const std::string& a, const std::string& b) {
  auto gen = [](const std::string& s) { return s == "x" || s == "X" ? 1 : s == "y" || s == "Y" ? 2 : 0; };
  int ga = gen(a), gb = gen(b);
  return ga && gb && ga != gb;
}

inline int ac_distance(const std::string& r0, const std::string& r1, std::size_t max_total, int max_depth) {
  using State = std::pair<std::string, std::string>;
  State start{cyclic_reduce(r0), cyclic_reduce(r1)};
  if (trivial_pair(start.first, start.second)) return 0;
  std::set<State> seen{start};
  std::deque<std::pair<State, int>> queue{{start, 0}};
  const std::vector<std::string> conj{"", "x", "X", "y", "Y"};
  while (!queue.empty()) {
    auto [s, d] = queue.front();
    queue.pop_front();
    if (d == max_depth) continue;
    std::vector<State> next;
    for (int i = 0; i < 2; ++i) {
      const std::string& ri = i == 0 ? s.first : s.second;
      const std::string& rj = i == 0 ? s.second : s.first;
      auto put = [&](std::string v) {
        v = cyclic_reduce(v);
        next.push_back(i == 0 ? State{v, rj} : State{rj, v});
      };
      put(invert(ri));
      for (std::size_t c = 1; c < conj.size(); ++c) put(conj[c] + " " + ri + " " + invert(conj[c]));
      for (const auto& c : conj) {
        put(ri + " " + c + " " + rj + " " + invert(c));
        put(ri + " " + c + " " + invert(rj) + " " + invert(c));
      }
    }
    for (const auto& n : next) {
      if (tokens(n.first).size() + tokens(n.second).size() > max_total) continue;
      if (!seen.insert(n).second) continue;
      if (trivial_pair(n.first, n.second)) return d + 1;
      queue.push_back({n, d + 1});
    }
  }
  return -1;
}

}  // namespace oracle
