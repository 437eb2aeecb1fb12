#pragma once

// Seeded random framed-link models shared by the Kirby tests and the
// acceptance suite.

#include <random>

#include "lowdim/kirby.hpp"

namespace testing_support {

inline lowdim::kirby::FramedLinkModel random_model(std::mt19937& rng, std::size_t max_size, int max_entry) {
  using namespace lowdim;
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  std::bernoulli_distribution coin(0.5);
  const std::size_t n = size(rng);
  IntegerMatrix l(n, n);
  std::vector<kirby::Component> comps;
  for (std::size_t i = 0; i < n; ++i) {
    comps.push_back({kirby::Kind::plain, coin(rng)});
    for (std::size_t j = i; j < n; ++j) l(i, j) = l(j, i) = entry(rng);
  }
  return kirby::FramedLinkModel(std::move(comps), std::move(l));
}

/// A random legal slide, blow-up or blow-down (when one is available).
inline lowdim::kirby::FramedLinkModel random_move(std::mt19937& rng, const lowdim::kirby::FramedLinkModel& m) {
  using namespace lowdim::kirby;
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> index(0, m.size() - 1);
  std::bernoulli_distribution coin(0.5);
  int sign = coin(rng) ? 1 : -1;
  switch (kind(rng)) {
    case 0:
      if (m.size() >= 2) {
        std::size_t u = index(rng), v = index(rng);
        if (u != v) return slide(m, u, v, sign);
      }
      return m;
    case 1:
      return blow_up(m, sign);
    default:
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m.component(i).unknotted && (m.link(i, i) == 1 || m.link(i, i) == -1) && m.size() > 1)
          return blow_down(m, i);
      return blow_up(m, sign);
  }
}

}  // namespace testing_support
