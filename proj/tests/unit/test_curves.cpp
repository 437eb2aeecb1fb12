#include <catch_amalgamated.hpp>

#include <set>

#include "lowdim/curves.hpp"
#include "oracles/pillowcase.hpp"

using namespace lowdim;
using namespace lowdim::curves;

namespace {
std::vector<Slope> all_slopes(long long max_p, long long max_q) {
  std::vector<Slope> out{Slope(1, 0)};
  for (long long q = 1; q <= max_q; ++q)
    for (long long p = -max_p; p <= max_p; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}
}  // namespace

TEST_CASE("slope validation and parsing") {
  CHECK_THROWS_AS(Slope(2, 4), input_error);
  CHECK_THROWS_AS(Slope(1, -2), input_error);
  CHECK_THROWS_AS(Slope(0, 0), input_error);
  CHECK_THROWS_AS(Slope(-1, 0), input_error);
  CHECK(Slope::parse("2/4") == Slope(1, 2));
  CHECK(Slope::parse("3/-5") == Slope(-3, 5));
  CHECK(Slope::parse("-7/0") == Slope(1, 0));
  CHECK(Slope::parse("4") == Slope(4, 1));
  CHECK_THROWS_AS(Slope::parse("x/2"), input_error);
  CHECK_THROWS_AS(Slope::parse("1/"), input_error);
}

TEST_CASE("parity and partition") {
  CHECK(parity_class(Slope(1, 0)) == Parity{1, 0});
  CHECK(parity_class(Slope(0, 1)) == Parity{0, 1});
  CHECK(parity_class(Slope(3, 5)) == Parity{1, 1});
  CHECK(parity_class(Slope(-3, 2)) == Parity{1, 0});
  using enum Puncture;
  CHECK(partition(Slope(1, 0)) == Partition{{b1, b2}, {b3, b4}});
  CHECK(partition(Slope(0, 1)) == Partition{{b1, b4}, {b2, b3}});
  CHECK(partition(Slope(2, 1)) == partition(Slope(0, 1)));
  CHECK(partition(Slope(1, 1)) == Partition{{b1, b3}, {b2, b4}});
}

TEST_CASE("classification examples") {
  CHECK(z3_class(Slope(1, 0)) == Z3Class::nontrivial);
  CHECK(z3_class(Slope(0, 1)) == Z3Class::trivial);
  CHECK(lift_type(Slope(1, 0)) == CurveClass::gamma);
  CHECK(lift_type(Slope(0, 1)) == CurveClass::candidate);
  CHECK(lift_type(Slope(1, 1)) == CurveClass::candidate);
  CHECK_FALSE(is_candidate(Slope(1, 0)));
  CHECK(is_candidate(Slope(0, 1)));
  CHECK(is_candidate(Slope(5, 3)));
}

TEST_CASE("puncture model") {
  int north = 0;
  for (auto b : punctures) {
    north += pole(b) == Pole::north;
    CHECK((pole(b) == Pole::north) == (fiber_half(b) == FiberHalf::left));
  }
  CHECK(north == 2);
}

TEST_CASE("partition and z3 class agree with the pillowcase oracle") {
  for (const auto& s : all_slopes(5, 5)) {
    auto part = partition(s);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b)
        CHECK(part.same_side(punctures[a], punctures[b]) ==
              oracle::same_side(s.p(), s.q(), static_cast<int>(a), static_cast<int>(b)));
    CHECK((z3_class(s) == Z3Class::trivial) == (oracle::z3_value(s.p(), s.q()) == 0));
  }
}

TEST_CASE("geometric intersection agrees with the torus line oracle") {
  auto slopes = all_slopes(5, 5);
  for (const auto& a : slopes)
    for (const auto& b : slopes) CHECK(geometric_intersection(a, b) == oracle::intersections(a.p(), a.q(), b.p(), b.q()));
  CHECK(geometric_intersection(Slope(0, 1), Slope(1, 0)) == 2);
  CHECK(geometric_intersection(Slope(1, 1), Slope(1, 0)) == 2);
}

TEST_CASE("property: class structure over a sweep") {
  for (const auto& s : all_slopes(60, 50)) {
    bool separates_b1_b2 = !partition(s).same_side(Puncture::b1, Puncture::b2);
    CHECK(is_candidate(s) == separates_b1_b2);
    CHECK(is_candidate(s) == (z3_class(s) == Z3Class::trivial));
    CHECK((lift_type(s) == CurveClass::gamma) == (parity_class(s) == Parity{1, 0}));
  }
  for (const auto& s : all_slopes(10, 10)) CHECK(z3_class(s) == z3_class_from_side(s, true));
}

TEST_CASE("property: intersection symmetry and shear invariance") {
  auto slopes = all_slopes(6, 6);
  for (const auto& a : slopes)
    for (const auto& b : slopes) {
      CHECK(geometric_intersection(a, b) == geometric_intersection(b, a));
      CHECK((geometric_intersection(a, b) == 0) == (a == b));
      CHECK(geometric_intersection(shear(a), shear(b)) == geometric_intersection(a, b));
    }
}

TEST_CASE("candidate enumeration") {
  CHECK(enumerate_candidates(0).empty());
  CHECK(enumerate_candidates(1) == std::vector<Slope>{Slope(-1, 1), Slope(0, 1), Slope(1, 1)});
  CHECK(enumerate_candidates(2) ==
        std::vector<Slope>{Slope(-2, 1), Slope(-1, 1), Slope(0, 1), Slope(1, 1), Slope(2, 1)});
  std::set<std::pair<long long, long long>> prev;
  for (long long q = 0; q <= 12; ++q) {
    auto c = enumerate_candidates(q);
    CHECK(std::is_sorted(c.begin(), c.end()));
    std::set<std::pair<long long, long long>> now;
    for (const auto& s : c) now.emplace(s.p(), s.q());
    CHECK(now.size() == c.size());
    CHECK(std::includes(now.begin(), now.end(), prev.begin(), prev.end()));
    CHECK(now.count({1, 0}) == 0);
    prev = now;
  }
}

TEST_CASE("partner conditions") {
  auto c = partner_conditions(Slope(0, 1));
  REQUIRE(c.size() == 4);
  CHECK(c[0].status == ConditionStatus::satisfied);
  CHECK(c[1].status == ConditionStatus::satisfied);
  CHECK(c[2].status == ConditionStatus::satisfied);
  CHECK(c[3].status == ConditionStatus::cited);
  CHECK(c[3].reason.find("not computed") != std::string::npos);
  auto g = partner_conditions(Slope(1, 0));
  CHECK(g[2].status == ConditionStatus::fails);
}
