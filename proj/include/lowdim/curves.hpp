#pragma once

// Slopes on the 4-punctured sphere P, the quotient of the genus-2 fiber by
// its order-3 symmetry, and the classification of their lifts.
//
// Punctures b1, b2 carry north poles and come from F_L; b3, b4 carry south
// poles and come from F_R. The parity of p/q fixes which punctures share a
// side of the curve:
//   (1,0): {b1,b2} | {b3,b4}    (0,1): {b1,b4} | {b2,b3}    (1,1): {b1,b3} | {b2,b4}
// so 1/0 is the slope of the separating curve gamma.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "lowdim/error.hpp"

namespace lowdim::curves {

/// Reduced p/q with q >= 0; 1/0 is the only slope with q = 0.
class Slope {
 public:
  Slope(long long p, long long q) : p_(p), q_(q) {
    detail::require(q >= 0, "slope denominator must be nonnegative, got " + text());
    detail::require(p != 0 || q != 0, "0/0 is not a slope");
    detail::require(std::gcd(p, q) == 1, "slope " + text() + " is not reduced");
    detail::require(q != 0 || p == 1, "the slope with q = 0 is written 1/0");
  }

  /// Reduces and normalizes signs; any nonzero (p, 0) becomes 1/0.
  static Slope normalized(long long p, long long q) {
    detail::require(p != 0 || q != 0, "0/0 is not a slope");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    if (q == 0) return Slope(1, 0);
    long long g = std::gcd(p, q);
    return Slope(p / g, q / g);
  }

  /// Accepts "p/q" or an integer "p" (meaning p/1).
  static Slope parse(std::string_view text) {
    auto number = [&](std::string_view s) {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      detail::require(ec == std::errc() && ptr == s.data() + s.size() && !s.empty(),
                      "cannot parse slope '" + std::string(text) + "'");
      return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return normalized(number(text), 1);
    return normalized(number(text.substr(0, slash)), number(text.substr(slash + 1)));
  }

  long long p() const noexcept { return p_; }
  long long q() const noexcept { return q_; }
  std::string text() const { return std::to_string(p_) + "/" + std::to_string(q_); }

  friend bool operator==(const Slope&, const Slope&) = default;
  /// Order by value, with 1/0 last.
  friend bool operator<(const Slope& a, const Slope& b) {
    if (a.q_ == 0 || b.q_ == 0) return a.q_ != 0 && b.q_ == 0;
    return a.p_ * b.q_ < b.p_ * a.q_;
  }

 private:
  long long p_, q_;
};

// ---------------------------------------------------------------------------
// Punctures

enum class Puncture { b1, b2, b3, b4 };
enum class Pole { north, south };
enum class FiberHalf { left, right };

inline constexpr std::array<Puncture, 4> punctures{Puncture::b1, Puncture::b2, Puncture::b3, Puncture::b4};

inline const char* name(Puncture b) {
  static constexpr const char* names[] = {"b1", "b2", "b3", "b4"};
  return names[static_cast<int>(b)];
}

inline Pole pole(Puncture b) { return b == Puncture::b1 || b == Puncture::b2 ? Pole::north : Pole::south; }
inline FiberHalf fiber_half(Puncture b) {
  return b == Puncture::b1 || b == Puncture::b2 ? FiberHalf::left : FiberHalf::right;
}

struct Parity {
  int p, q;
  friend bool operator==(const Parity&, const Parity&) = default;
  std::string text() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

inline Parity parity_class(const Slope& s) {
  return {static_cast<int>(((s.p() % 2) + 2) % 2), static_cast<int>(s.q() % 2)};
}

/// The two sides of the curve; `first` always contains b1.
struct Partition {
  std::array<Puncture, 2> first, second;
  friend bool operator==(const Partition&, const Partition&) = default;

  bool same_side(Puncture a, Puncture b) const {
    auto in = [](const std::array<Puncture, 2>& s, Puncture x) { return s[0] == x || s[1] == x; };
    return (in(first, a) && in(first, b)) || (in(second, a) && in(second, b));
  }
  std::string text() const {
    return std::string("{") + name(first[0]) + "," + name(first[1]) + "}|{" + name(second[0]) + "," +
           name(second[1]) + "}";
  }
};

inline Partition partition(const Slope& s) {
  using enum Puncture;
  Parity c = parity_class(s);
  if (c == Parity{1, 0}) return {{b1, b2}, {b3, b4}};
  if (c == Parity{0, 1}) return {{b1, b4}, {b2, b3}};
  return {{b1, b3}, {b2, b4}};
}

enum class Z3Class { trivial, nontrivial };
enum class CurveClass { gamma, candidate };

inline const char* to_string(Z3Class z) { return z == Z3Class::trivial ? "Trivial" : "Nontrivial"; }
inline const char* to_string(CurveClass c) { return c == CurveClass::gamma ? "GammaClass" : "CandidateClass"; }

/// Trivial iff the punctures on one side have different poles.
inline Z3Class z3_class(const Slope& s) {
  auto side = partition(s).first;
  return pole(side[0]) != pole(side[1]) ? Z3Class::trivial : Z3Class::nontrivial;
}

/// Same verdict read from either side of the partition.
inline Z3Class z3_class_from_side(const Slope& s, bool second_side) {
  auto part = partition(s);
  auto side = second_side ? part.second : part.first;
  return pole(side[0]) != pole(side[1]) ? Z3Class::trivial : Z3Class::nontrivial;
}

/// A nontrivial class lifts to a single curve; a trivial one to three
/// disjoint curves, each mapped homeomorphically.
inline CurveClass lift_type(const Slope& s) {
  return z3_class(s) == Z3Class::nontrivial ? CurveClass::gamma : CurveClass::candidate;
}

inline bool is_candidate(const Slope& s) { return lift_type(s) == CurveClass::candidate; }

/// Minimal intersection number of the two curves on P.
inline long long geometric_intersection(const Slope& a, const Slope& b) {
  long long det = a.p() * b.q() - b.p() * a.q();
  return 2 * (det < 0 ? -det : det);
}

/// Slope action of the shear (p, q) -> (p + q, q).
inline Slope shear(const Slope& s) { return Slope::normalized(s.p() + s.q(), s.q()); }

/// Candidate slopes with q <= max_q and |p| <= max(max_q, 1), by value.
inline std::vector<Slope> enumerate_candidates(long long max_q) {
  detail::require(max_q >= 0, "max_q must be nonnegative");
  const long long bound = std::max<long long>(max_q, 1);
  std::vector<Slope> out;
  for (long long q = 0; q <= max_q; ++q)
    for (long long p = -bound; p <= bound; ++p) {
      if (std::gcd(p, q) != 1 || (q == 0 && p != 1)) continue;
      Slope s(p, q);
      if (is_candidate(s)) out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Surgery-partner conditions for the curve V projecting to a slope.

enum class ConditionStatus { satisfied, fails, cited };

inline const char* to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::satisfied: return "satisfied";
    case ConditionStatus::fails: return "fails";
    case ConditionStatus::cited: return "cited";
  }
  return "?";
}

struct Condition {
  int index;
  std::string statement;
  ConditionStatus status;
  std::string reason;
};

inline std::vector<Condition> partner_conditions(const Slope& s) {
  const bool candidate = is_candidate(s);
  std::vector<Condition> out;
  out.push_back({1, "V lies in a fiber", ConditionStatus::satisfied,
                 "by construction: V is a lift of a curve in P, which lies in the fiber"});
  out.push_back({2, "the monodromy image of V can be isotoped off V", ConditionStatus::satisfied,
                 "the curve is isotopic to a lift of a curve in P, so its image is disjoint after isotopy"});
  if (candidate)
    out.push_back({3, "the monodromy image of V is not isotopic to V", ConditionStatus::satisfied,
                   "the three lifts are distinct and permuted by the order-3 symmetry"});
  else
    out.push_back({3, "the monodromy image of V is not isotopic to V", ConditionStatus::fails,
                   "the single lift is separating and invariant under the order-3 symmetry"});
  out.push_back({4, "the fiber framing of V is the 0-framing", ConditionStatus::cited,
                 "holds for every curve projecting homeomorphically to P; cited, not computed"});
  return out;
}

}  // namespace lowdim::curves
