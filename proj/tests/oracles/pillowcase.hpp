#pragma once

// Geometric model of the 4-punctured sphere as a pillowcase: the torus
// R^2 / (2Z)^2 modulo v -> -v, with punctures at the images of the integer
// points b1 = (0,0), b2 = (0,1), b3 = (1,1), b4 = (1,0).
//
// Unit squares of the plane map to the front face when floor(x) + floor(y)
// is even and to the back face otherwise. The four edges are
//   e1: x even (b1-b2)   e2: y odd (b2-b3)   e3: x odd (b3-b4)   e4: y even (b4-b1)
// A homomorphism pi_1(P) -> Z sending the loop around b_k to phi_k (with
// sum phi = 0) is the cocycle c(e1) = 0, c(e2) = -phi2, c(e3) = c(e2) - phi3,
// c(e4) = c(e3) - phi4, counted +c(e) on front -> back crossings and -c(e)
// on back -> front crossings.
//
// The curve of slope p/q is the image of the line q y - p x = 1/2, followed
// exactly for t in [0, 2) along direction (q, p).

#include <array>
#include <set>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

using Q = boost::rational<long long>;

inline long long floor_q(const Q& v) {
  long long n = v.numerator(), d = v.denominator();
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

enum class Edge { e1, e2, e3, e4 };

struct Event {
  Q t;
  Edge edge;
  bool front_to_back;
};

/// Edge crossings of the slope p/q curve in order of the parameter t.
inline std::vector<Event> cutting_sequence(long long p, long long q) {
  Q x0 = q == 0 ? Q(-1, 2) : Q(1, 7);
  Q y0 = q == 0 ? Q(1, 7) : (Q(1, 2) + Q(p) * x0) / Q(q);
  std::vector<std::pair<Q, bool>> hits;  // (t, vertical?)
  auto scan = [&](const Q& start, long long speed, bool vertical) {
    if (speed == 0) return;
    // all t in [0, 2) with start + speed * t integer
    for (long long k = floor_q(start) - 2 * (speed < 0 ? -speed : speed) - 1;
         k <= floor_q(start) + 2 * (speed < 0 ? -speed : speed) + 1; ++k) {
      Q t = (Q(k) - start) / Q(speed);
      if (t >= 0 && t < 2) hits.emplace_back(t, vertical);
    }
  };
  scan(x0, q, true);
  scan(y0, p, false);
  std::sort(hits.begin(), hits.end());
  std::vector<Event> out;
  for (const auto& [t, vertical] : hits) {
    Q x = x0 + Q(q) * t, y = y0 + Q(p) * t;
    // the point just before the crossing decides the starting face
    Q eps(1, 1'000'000);
    Q xb = x - Q(q) * eps, yb = y - Q(p) * eps;
    bool front_before = (floor_q(xb) + floor_q(yb)) % 2 == 0;
    long long line = vertical ? x.numerator() : y.numerator();
    bool even = line % 2 == 0;
    Edge e = vertical ? (even ? Edge::e1 : Edge::e3) : (even ? Edge::e4 : Edge::e2);
    out.push_back({t, e, front_before});
  }
  return out;
}

/// Value of the curve under the homomorphism with puncture values phi.
inline long long evaluate(long long p, long long q, const std::array<long long, 4>& phi) {
  std::array<long long, 4> c{};
  c[0] = 0;
  c[1] = -phi[1];
  c[2] = c[1] - phi[2];
  c[3] = c[2] - phi[3];
  long long total = 0;
  for (const auto& ev : cutting_sequence(p, q)) {
    long long v = c[static_cast<std::size_t>(ev.edge)];
    total += ev.front_to_back ? v : -v;
  }
  return total;
}

/// True when punctures a and b (0-based) lie on the same side of the curve.
inline bool same_side(long long p, long long q, int a, int b) {
  std::array<long long, 4> phi{};
  phi[static_cast<std::size_t>(a)] += 1;
  phi[static_cast<std::size_t>(b)] -= 1;
  return evaluate(p, q, phi) == 0;
}

/// Z/3 value with b1, b2 north (+1) and b3, b4 south (-1).
inline long long z3_value(long long p, long long q) {
  long long v = evaluate(p, q, {1, 1, -1, -1}) % 3;
  return v < 0 ? v + 3 : v;
}

/// Intersection count of the two curves: the preimages on the torus are the
/// lines q y - p x = +-1/2 (first curve) and +-1/3 (second), counted in
/// [0, 2)^2 and halved for the double cover.
inline long long intersections(long long p1, long long q1, long long p2, long long q2) {
  long long det = q1 * (-p2) - (-p1) * q2;
  if (det == 0) return 0;
  std::set<std::pair<Q, Q>> points;
  long long range = 2 * (std::abs(p1) + std::abs(q1) + std::abs(p2) + std::abs(q2)) + 4;
  for (Q c1 : {Q(1, 2), Q(-1, 2)})
    for (Q c2 : {Q(1, 3), Q(-1, 3)})
      for (long long m = -range; m <= range; ++m)
        for (long long n = -range; n <= range; ++n) {
          // q1 y - p1 x = r1, q2 y - p2 x = r2
          Q r1 = c1 + Q(2 * m), r2 = c2 + Q(2 * n);
          Q x = (Q(q1) * r2 - Q(q2) * r1) / Q(-det);
          Q y = (Q(-p1) * r2 - Q(-p2) * r1) / Q(-det);
          x = x - Q(2 * floor_q(x / Q(2)));
          y = y - Q(2 * floor_q(y / Q(2)));
          points.emplace(x, y);
        }
  return static_cast<long long>(points.size()) / 2;
}

}  // namespace oracle
