#pragma once

// Homological bookkeeping for framed links and Kirby diagrams with dotted
// circles. A model is a list of components plus the symmetric linking
// matrix, whose diagonal holds framings (0 for dotted circles).
//
// Handle slides act on the matrix by congruence: sliding u over v with sign s
// adds s * row v to row u and s * column v to column u, which gives the new
// framing m + n + 2 s lk(u, v).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lowdim/abelian.hpp"
#include "lowdim/error.hpp"

namespace lowdim::kirby {

enum class Kind { plain, dotted };

struct Component {
  Kind kind = Kind::plain;
  bool unknotted = false;  // caller-supplied; the matrix cannot see knotting
  friend bool operator==(const Component&, const Component&) = default;
};

inline constexpr const char* dotted_slide_rule = "dotted circles cannot slide over non-dotted components";

class FramedLinkModel {
 public:
  FramedLinkModel() = default;

  /// Framings are read from the diagonal of `linking`.
  FramedLinkModel(std::vector<Component> components, IntegerMatrix linking)
      : components_(std::move(components)), linking_(std::move(linking)) {
    const std::size_t n = components_.size();
    detail::require(linking_.rows() == n && linking_.cols() == n,
                    "linking matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j)
        detail::require(linking_(i, j) == linking_(j, i), "linking matrix is not symmetric at (" +
                                                              std::to_string(i) + "," + std::to_string(j) + ")");
      if (components_[i].kind == Kind::dotted)
        detail::require(linking_(i, i) == 0, "dotted component " + std::to_string(i) + " must have diagonal 0");
    }
  }

  std::size_t size() const noexcept { return components_.size(); }
  const std::vector<Component>& components() const noexcept { return components_; }
  const Component& component(std::size_t i) const { return components_.at(i); }
  const IntegerMatrix& linking() const noexcept { return linking_; }
  bool is_dotted(std::size_t i) const { return component(i).kind == Kind::dotted; }
  bool has_dotted() const {
    for (const auto& c : components_)
      if (c.kind == Kind::dotted) return true;
    return false;
  }

  /// Framing of a plain component, nullopt for a dotted one.
  std::optional<Integer> framing(std::size_t i) const {
    if (is_dotted(i)) return std::nullopt;
    return linking_(i, i);
  }
  const Integer& link(std::size_t i, std::size_t j) const { return linking_(i, j); }

  friend bool operator==(const FramedLinkModel&, const FramedLinkModel&) = default;

 private:
  std::vector<Component> components_;
  IntegerMatrix linking_;
};

namespace detail {

using lowdim::detail::reject;
using lowdim::detail::require;

inline void check_index(const FramedLinkModel& m, std::size_t i, const char* what) {
  require(i < m.size(), std::string(what) + " index " + std::to_string(i) + " out of range (" +
                            std::to_string(m.size()) + " components)");
}

inline void check_sign(int sign) { require(sign == 1 || sign == -1, "sign must be +1 or -1"); }

/// Row u += s * row v, column u += s * column v.
inline IntegerMatrix congruence_add(const IntegerMatrix& l, std::size_t u, std::size_t v, int s) {
  IntegerMatrix out = l;
  out.add_row(u, v, s);
  out.add_col(u, v, s);
  return out;
}

inline FramedLinkModel without(const FramedLinkModel& m, std::vector<std::size_t> drop) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
  std::vector<Component> comps;
  IntegerMatrix l(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    comps.push_back(m.component(keep[a]));
    for (std::size_t b = 0; b < keep.size(); ++b) l(a, b) = m.link(keep[a], keep[b]);
  }
  return FramedLinkModel(std::move(comps), std::move(l));
}

inline FramedLinkModel appended(const FramedLinkModel& m, const std::vector<Component>& extra,
                                const IntegerMatrix& block) {
  const std::size_t n = m.size(), k = extra.size();
  auto comps = m.components();
  comps.insert(comps.end(), extra.begin(), extra.end());
  IntegerMatrix l(n + k, n + k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) l(i, j) = m.link(i, j);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) l(n + i, n + j) = block(i, j);
  return FramedLinkModel(std::move(comps), std::move(l));
}

inline bool isolated(const FramedLinkModel& m, std::size_t i, std::size_t partner) {
  for (std::size_t w = 0; w < m.size(); ++w)
    if (w != i && w != partner && m.link(i, w) != 0) return false;
  return true;
}

}  // namespace detail

/// Slides plain component u over plain component v.
inline FramedLinkModel slide(const FramedLinkModel& m, std::size_t u, std::size_t v, int sign) {
  detail::check_index(m, u, "slide");
  detail::check_index(m, v, "slide");
  detail::check_sign(sign);
  detail::require(u != v, "a component cannot slide over itself");
  if (m.is_dotted(u)) detail::reject(std::string("illegal slide of dotted component: ") + dotted_slide_rule);
  if (m.is_dotted(v))
    detail::reject("component " + std::to_string(v) + " is dotted; use slide_over_dotted to slide a 2-handle over it");
  return FramedLinkModel(m.components(), detail::congruence_add(m.linking(), u, v, sign));
}

/// Slides the 2-handle h over the dotted circle d, changing its framing by
/// 2 * sign * lk(h, d).
inline FramedLinkModel slide_over_dotted(const FramedLinkModel& m, std::size_t h, std::size_t d, int sign) {
  detail::check_index(m, h, "slide_over_dotted");
  detail::check_index(m, d, "slide_over_dotted");
  detail::check_sign(sign);
  if (m.is_dotted(h)) detail::reject(std::string("illegal slide of dotted component: ") + dotted_slide_rule);
  detail::require(m.is_dotted(d), "component " + std::to_string(d) + " is not dotted");
  detail::require(m.link(h, d) != 0, "slide_over_dotted needs lk(h, d) != 0, got 0 for h=" + std::to_string(h) +
                                         ", d=" + std::to_string(d));
  return FramedLinkModel(m.components(), detail::congruence_add(m.linking(), h, d, sign));
}

/// Appends an unknotted component with framing sign, unlinked from the rest.
inline FramedLinkModel blow_up(const FramedLinkModel& m, int sign) {
  detail::check_sign(sign);
  IntegerMatrix b(1, 1);
  b(0, 0) = sign;
  return detail::appended(m, {{Kind::plain, true}}, b);
}

/// Removes an unknotted +-1-framed component i. Every other pair (j, k)
/// changes by -eps * lk(i, j) * lk(i, k); dotted diagonals stay 0. Components
/// that linked i lose their unknotted mark, since the twist may knot them.
inline FramedLinkModel blow_down(const FramedLinkModel& m, std::size_t i) {
  detail::check_index(m, i, "blow_down");
  detail::require(!m.is_dotted(i), "cannot blow down dotted component " + std::to_string(i));
  const Integer eps = m.link(i, i);
  detail::require(eps == 1 || eps == -1,
                  "blow_down needs framing +1 or -1, component " + std::to_string(i) + " has " + eps.str());
  detail::require(m.component(i).unknotted, "blow_down needs component " + std::to_string(i) + " marked unknotted");
  IntegerMatrix l = m.linking();
  auto comps = m.components();
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j == i) continue;
    if (m.link(i, j) != 0) comps[j].unknotted = false;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == i || (j == k && m.is_dotted(j))) continue;
      l(j, k) -= eps * m.link(i, j) * m.link(i, k);
    }
  }
  return detail::without(FramedLinkModel(std::move(comps), std::move(l)), {i});
}

inline FramedLinkModel add_distant_unknot(const FramedLinkModel& m) {
  return detail::appended(m, {{Kind::plain, true}}, IntegerMatrix(1, 1));
}

/// Appends a dotted circle d and a 0-framed meridian h with lk(d, h) = 1.
inline FramedLinkModel add_hopf_pair(const FramedLinkModel& m) {
  return detail::appended(m, {{Kind::dotted, true}, {Kind::plain, true}}, IntegerMatrix{{0, 1}, {1, 0}});
}

/// Why the pair (d, h) is not a removable canceling pair, or nullopt.
inline std::optional<std::string> hopf_pair_obstruction(const FramedLinkModel& m, std::size_t d, std::size_t h) {
  if (d >= m.size() || h >= m.size()) return "component index out of range";
  if (d == h) return "d and h must be different components";
  if (!m.is_dotted(d)) return "component " + std::to_string(d) + " is not dotted";
  if (m.is_dotted(h)) return "component " + std::to_string(h) + " is dotted, expected a 2-handle";
  if (m.link(h, h) != 0)
    return "the 2-handle of a canceling pair must have framing 0, component " + std::to_string(h) + " has " +
           m.link(h, h).str();
  if (m.link(d, h) != 1 && m.link(d, h) != -1) return "lk(d, h) must be +-1, got " + m.link(d, h).str();
  if (!detail::isolated(m, d, h)) return "dotted component " + std::to_string(d) + " links another component";
  if (!detail::isolated(m, h, d)) return "component " + std::to_string(h) + " links another component";
  return std::nullopt;
}

inline FramedLinkModel remove_hopf_pair(const FramedLinkModel& m, std::size_t d, std::size_t h) {
  if (auto why = hopf_pair_obstruction(m, d, h)) detail::reject("cannot remove canceling pair: " + *why);
  return detail::without(m, {d, h});
}

struct HypothesisReport {
  bool holds = false;
  std::string detail;  // first nonzero entry, or a confirmation
};

/// True iff every framing and linking number is zero.
inline HypothesisReport gpr_hypothesis_check(const FramedLinkModel& m) {
  detail::require(!m.has_dotted(), "the hypothesis check applies to links without dotted components");
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      if (m.link(i, j) != 0) {
        std::string what = i == j ? "framing of component " + std::to_string(i)
                                  : "lk(" + std::to_string(i) + "," + std::to_string(j) + ")";
        return {false, what + " is " + m.link(i, j).str()};
      }
  return {true, "all " + std::to_string(m.size()) + " framings and all linking numbers are 0"};
}

/// H_1 of the 3-manifold obtained by surgery.
inline AbelianGroup h1_of_surgery(const FramedLinkModel& m) {
  detail::require(!m.has_dotted(), "surgery homology is undefined for models with dotted components");
  return h1_from_matrix(m.linking());
}

/// Model of an n-component link with all framings and linking numbers 0.
inline FramedLinkModel zero_model(std::size_t n, bool unknotted = false) {
  return FramedLinkModel(std::vector<Component>(n, Component{Kind::plain, unknotted}), IntegerMatrix(n, n));
}

// ---------------------------------------------------------------------------
// Move scripts

struct Slide {
  std::size_t u, v;
  int sign;
  friend bool operator==(const Slide&, const Slide&) = default;
};
struct BlowUp {
  int sign;
  friend bool operator==(const BlowUp&, const BlowUp&) = default;
};
struct BlowDown {
  std::size_t component;
  friend bool operator==(const BlowDown&, const BlowDown&) = default;
};
struct AddUnknot {
  friend bool operator==(const AddUnknot&, const AddUnknot&) = default;
};
struct AddHopfPair {
  friend bool operator==(const AddHopfPair&, const AddHopfPair&) = default;
};
struct RemoveHopfPair {
  std::size_t dotted, handle;
  friend bool operator==(const RemoveHopfPair&, const RemoveHopfPair&) = default;
};
struct SlideOverDotted {
  std::size_t handle, dotted;
  int sign;
  friend bool operator==(const SlideOverDotted&, const SlideOverDotted&) = default;
};

using KirbyMove = std::variant<Slide, BlowUp, BlowDown, AddUnknot, AddHopfPair, RemoveHopfPair, SlideOverDotted>;
using MoveScript = std::vector<KirbyMove>;

inline FramedLinkModel apply_move(const FramedLinkModel& m, const KirbyMove& move) {
  return std::visit(
      [&](const auto& mv) -> FramedLinkModel {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, Slide>) return slide(m, mv.u, mv.v, mv.sign);
        else if constexpr (std::is_same_v<T, BlowUp>) return blow_up(m, mv.sign);
        else if constexpr (std::is_same_v<T, BlowDown>) return blow_down(m, mv.component);
        else if constexpr (std::is_same_v<T, AddUnknot>) return add_distant_unknot(m);
        else if constexpr (std::is_same_v<T, AddHopfPair>) return add_hopf_pair(m);
        else if constexpr (std::is_same_v<T, RemoveHopfPair>) return remove_hopf_pair(m, mv.dotted, mv.handle);
        else return slide_over_dotted(m, mv.handle, mv.dotted, mv.sign);
      },
      move);
}

/// Applies the script in order; a failing move is reported with its index.
inline FramedLinkModel apply_script(FramedLinkModel m, const MoveScript& script) {
  for (std::size_t k = 0; k < script.size(); ++k) {
    try {
      m = apply_move(m, script[k]);
    } catch (const input_error& e) {
      throw input_error("move " + std::to_string(k) + ": " + e.what());
    }
  }
  return m;
}

}  // namespace lowdim::kirby
