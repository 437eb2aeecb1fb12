#pragma once

// Link groups from planar diagram codes.
//
// A crossing is (a, b, c, d): arc labels counterclockwise starting from the
// incoming under-strand, so the under-strand runs a -> c and the over-strand
// joins b and d. The sign field is authoritative; +1 means the over-strand
// runs b -> d. Components list their arc labels in traversal order.
//
// Generators are overarcs (maximal unions of labels joined across the
// over-strand of a crossing). At a crossing with incoming under-arc x_i,
// outgoing under-arc x_j, over-arc x_k and sign e the relation is
// x_j = x_k^e x_i x_k^-e.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lowdim/abelian.hpp"
#include "lowdim/error.hpp"
#include "lowdim/presentation.hpp"
#include "lowdim/word.hpp"

namespace lowdim::wirtinger {

struct Crossing {
  std::array<long long, 4> arcs{};
  int sign = 1;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct PDCode {
  std::vector<Crossing> crossings;
  std::vector<std::vector<long long>> components;
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Validated diagram with lookup tables.
class Diagram {
 public:
  explicit Diagram(PDCode pd) : pd_(std::move(pd)) {
    using lowdim::detail::require;
    require(!pd_.components.empty(), "a diagram needs at least one component");
    for (std::size_t c = 0; c < pd_.components.size(); ++c) {
      const auto& comp = pd_.components[c];
      require(!comp.empty(), "component " + std::to_string(c) + " has no arcs");
      for (std::size_t k = 0; k < comp.size(); ++k) {
        long long l = comp[k];
        require(l >= 0, "arc label " + std::to_string(l) + " is negative");
        require(component_of_.emplace(l, c).second, "arc label " + std::to_string(l) + " listed twice in components");
        next_[l] = comp[(k + 1) % comp.size()];
      }
    }
    std::map<long long, int> uses;
    for (std::size_t x = 0; x < pd_.crossings.size(); ++x) {
      const auto& cr = pd_.crossings[x];
      require(cr.sign == 1 || cr.sign == -1, "crossing " + std::to_string(x) + " has sign other than +1/-1");
      for (long long l : cr.arcs) {
        require(component_of_.count(l) != 0, "arc label " + std::to_string(l) + " is in no component");
        ++uses[l];
      }
      const long long a = cr.arcs[0], b = cr.arcs[1], c = cr.arcs[2], d = cr.arcs[3];
      require(next_.at(a) == c, "crossing " + std::to_string(x) + ": under-strand arc " + std::to_string(a) +
                                    " is not followed by arc " + std::to_string(c));
      bool forward = next_.at(b) == d, backward = next_.at(d) == b;
      require(forward || backward, "crossing " + std::to_string(x) + ": over-strand arcs " + std::to_string(b) +
                                       " and " + std::to_string(d) + " are not consecutive");
      if (forward != backward)
        require((cr.sign == 1) == forward, "crossing " + std::to_string(x) + ": sign disagrees with the direction of arc " +
                                               std::to_string(b));
      require(under_at_.emplace(a, x).second, "arc label " + std::to_string(a) + " enters two under-crossings");
    }
    for (const auto& [label, c] : component_of_) {
      int n = uses.count(label) ? uses[label] : 0;
      bool lone = pd_.components[c].size() == 1 && n == 0;
      require(n == 2 || lone, "arc label " + std::to_string(label) + " occurs " + std::to_string(n) +
                                  " times in crossings, expected 2");
    }
    build_overarcs();
  }

  const PDCode& code() const noexcept { return pd_; }
  std::size_t component_count() const noexcept { return pd_.components.size(); }
  std::size_t component_of(long long label) const { return component_of_.at(label); }
  std::size_t overarc_of(long long label) const { return overarc_.at(label); }
  const Alphabet& generator_names() const noexcept { return names_; }

  std::size_t over_component(const Crossing& c) const { return component_of(c.arcs[1]); }
  std::size_t under_component(const Crossing& c) const { return component_of(c.arcs[0]); }

  /// Crossings passed under while walking component c from its first arc.
  std::vector<const Crossing*> underpasses(std::size_t c) const {
    std::vector<const Crossing*> out;
    for (long long l : pd_.components.at(c)) {
      auto it = under_at_.find(l);
      if (it != under_at_.end()) out.push_back(&pd_.crossings[it->second]);
    }
    return out;
  }

 private:
  void build_overarcs() {
    std::map<long long, long long> parent;
    for (const auto& [l, c] : component_of_) parent[l] = l;
    auto find = [&](long long l) {
      while (parent[l] != l) l = parent[l] = parent[parent[l]];
      return l;
    };
    for (const auto& cr : pd_.crossings) {
      long long x = find(cr.arcs[1]), y = find(cr.arcs[3]);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
    std::map<long long, std::size_t> index;  // root -> generator
    for (const auto& [l, c] : component_of_) {
      long long r = find(l);
      auto [it, fresh] = index.emplace(r, names_.size());
      if (fresh) names_.push_back("a" + std::to_string(r));
      overarc_[l] = it->second;
    }
  }

  PDCode pd_;
  std::map<long long, std::size_t> component_of_;
  std::map<long long, long long> next_;
  std::map<long long, std::size_t> under_at_;
  std::map<long long, std::size_t> overarc_;
  Alphabet names_;
};

/// One generator per overarc, one relator per crossing.
inline Presentation wirtinger_presentation(const Diagram& dg) {
  std::vector<Word> rels;
  for (const auto& cr : dg.code().crossings) {
    Word xi = Word::generator(dg.overarc_of(cr.arcs[0]));
    Word xj = Word::generator(dg.overarc_of(cr.arcs[2]));
    Word xk = Word::generator(dg.overarc_of(cr.arcs[1])).power(cr.sign);
    rels.push_back(xk * xi * xk.inverse() * xj.inverse());
  }
  return Presentation(dg.generator_names(), std::move(rels));
}

inline Presentation wirtinger_presentation(const PDCode& pd) { return wirtinger_presentation(Diagram(pd)); }

/// Sum of crossing signs where component c passes over and under itself.
inline long long self_writhe(const Diagram& dg, std::size_t c) {
  long long w = 0;
  for (const auto& cr : dg.code().crossings)
    if (dg.under_component(cr) == c && dg.over_component(cr) == c) w += cr.sign;
  return w;
}

/// Linking numbers between components (half the signed count of crossings
/// between them), with the given framings on the diagonal.
inline IntegerMatrix linking_matrix(const Diagram& dg, const std::vector<long long>& framings) {
  const std::size_t n = dg.component_count();
  lowdim::detail::require(framings.size() == n, "expected " + std::to_string(n) + " framings, got " +
                                                    std::to_string(framings.size()));
  std::vector<std::vector<long long>> twice(n, std::vector<long long>(n, 0));
  for (const auto& cr : dg.code().crossings) {
    std::size_t u = dg.under_component(cr), o = dg.over_component(cr);
    if (u == o) continue;
    twice[u][o] += cr.sign;
    twice[o][u] += cr.sign;
  }
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        m(i, i) = framings[i];
        continue;
      }
      lowdim::detail::require(twice[i][j] % 2 == 0, "odd signed crossing count between components " +
                                                        std::to_string(i) + " and " + std::to_string(j));
      m(i, j) = twice[i][j] / 2;
    }
  return m;
}

/// Generator index of the meridian of component c (its first arc).
inline std::size_t meridian(const Diagram& dg, std::size_t c) {
  lowdim::detail::require(c < dg.component_count(), "unknown component " + std::to_string(c));
  return dg.overarc_of(dg.code().components[c].front());
}

/// Longitude of component c with the given framing, as a word that commutes
/// with meridian(c): the over-arcs met at under-passes, read in reverse order,
/// times the meridian to the power framing - self writhe.
inline Word longitude_word(const Diagram& dg, std::size_t c, long long framing) {
  lowdim::detail::require(c < dg.component_count(), "unknown component " + std::to_string(c));
  Word w;
  auto under = dg.underpasses(c);
  for (auto it = under.rbegin(); it != under.rend(); ++it)
    w *= Word::generator(dg.overarc_of((*it)->arcs[1])).power((*it)->sign);
  return w * Word::generator(meridian(dg, c)).power(framing - self_writhe(dg, c));
}

inline Word longitude_word(const PDCode& pd, std::size_t c, long long framing) {
  return longitude_word(Diagram(pd), c, framing);
}

struct SurgeryPresentation {
  Presentation presentation;
  std::vector<std::size_t> meridians;  // generator index per component
  std::vector<Word> longitudes;        // framed longitude per component
};

/// Link group plus one framed-longitude relator per component.
inline SurgeryPresentation surgery_presentation(const Diagram& dg, const std::vector<long long>& framings) {
  const std::size_t n = dg.component_count();
  lowdim::detail::require(framings.size() == n, "expected " + std::to_string(n) + " framings, got " +
                                                    std::to_string(framings.size()));
  SurgeryPresentation out;
  auto link = wirtinger_presentation(dg);
  auto rels = link.relators();
  for (std::size_t c = 0; c < n; ++c) {
    out.meridians.push_back(meridian(dg, c));
    out.longitudes.push_back(longitude_word(dg, c, framings[c]));
    rels.push_back(out.longitudes.back());
  }
  out.presentation = Presentation(link.generators(), std::move(rels));
  return out;
}

inline SurgeryPresentation surgery_presentation(const PDCode& pd, const std::vector<long long>& framings) {
  return surgery_presentation(Diagram(pd), framings);
}

}  // namespace lowdim::wirtinger
