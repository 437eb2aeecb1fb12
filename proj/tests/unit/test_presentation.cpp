#include <catch_amalgamated.hpp>

#include <random>

#include "lowdim/presentation.hpp"
#include "oracles/token_words.hpp"

using namespace lowdim;

namespace {
BalancedPresentation xy(std::vector<std::string> rels) { return BalancedPresentation::parse({"x", "y"}, rels); }
std::vector<std::string> rels(const BalancedPresentation& p) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < p.rank(); ++i) out.push_back(p.format_relator(i));
  return out;
}
using S = std::vector<std::string>;
}  // namespace

TEST_CASE("balance and alphabet are enforced") {
  CHECK_THROWS_AS(BalancedPresentation::parse({"x", "y"}, {"x"}), input_error);
  CHECK_THROWS_AS(BalancedPresentation::parse({"x", "x"}, {"x", "x"}), input_error);
  CHECK_THROWS_AS(BalancedPresentation::parse({"X"}, {"X"}), input_error);
  CHECK_THROWS_AS(BalancedPresentation::parse({"x"}, {"y"}), input_error);
  CHECK(rels(xy({"x y X", "y"})) == S{"y", "y"});
}

TEST_CASE("ac_multiply") {
  CHECK(rels(ac_multiply(xy({"x y", "y"}), 0, 1, {})) == S{"x y y", "y"});
  CHECK(rels(ac_multiply(ac_invert(xy({"x y", "y"}), 1), 0, 1, {})) == S{"x", "Y"});
  // x, y  ->  r1 * y x Y; concatenation "y y x Y" is cyclically "y x".
  auto p = ac_multiply(xy({"x", "y"}), 1, 0, parse_word("y", xy_alphabet()));
  CHECK(oracle::cyclic_reduce("y y x Y") == "y x");
  CHECK(rels(p) == S{"x", "y x"});
  CHECK_THROWS_AS(ac_multiply(xy({"x", "y"}), 0, 0, {}), input_error);
  CHECK_THROWS_AS(ac_multiply(xy({"x", "y"}), 0, 2, {}), input_error);
}

TEST_CASE("ac_multiply agrees with hand concatenation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 5), pick(0, 3);
  const char* names[] = {"x", "X", "y", "Y"};
  auto random_word = [&] {
    std::string s;
    for (int k = len(rng); k > 0; --k) s += std::string(s.empty() ? "" : " ") + names[pick(rng)];
    return s;
  };
  for (int trial = 0; trial < 500; ++trial) {
    auto p = xy({random_word(), random_word()});
    std::string c = random_word();
    auto q = ac_multiply(p, 0, 1, parse_word(c, xy_alphabet()));
    std::string hand = p.format_relator(0) + " " + c + " " + p.format_relator(1) + " " + oracle::invert(c);
    CHECK(q.format_relator(0) == oracle::cyclic_reduce(hand));
    CHECK(q.relator(1) == p.relator(1));
  }
}

TEST_CASE("ac_invert and ac_conjugate") {
  auto one = BalancedPresentation::parse({"x"}, {"x"});
  CHECK(rels(ac_invert(one, 0)) == S{"X"});
  CHECK(ac_invert(ac_invert(one, 0), 0) == one);
  CHECK(rels(ac_invert(xy({"x y", "y"}), 0)) == S{"Y X", "y"});
  auto y = parse_word("y", xy_alphabet());
  CHECK(rels(ac_conjugate(xy({"x", "y"}), 0, y)) == S{"x", "y"});
  CHECK(ac_conjugate(xy({"x y", "y"}), 0, {}) == xy({"x y", "y"}));
  auto q = ac_conjugate(xy({"x y", "y"}), 0, parse_word("x", xy_alphabet()));
  CHECK(oracle::same_up_to_rotation(q.format_relator(0), "x y"));
}

TEST_CASE("stabilize and destabilize") {
  auto one = BalancedPresentation::parse({"x"}, {"x"});
  auto s = stabilize(one);
  CHECK(s.generators() == Alphabet{"x", "g"});
  CHECK(rels(s) == S{"x", "g"});
  CHECK(destabilize(s, 1) == one);
  auto s2 = stabilize(s);
  CHECK(s2.generators() == Alphabet{"x", "g", "g1"});
  try {
    destabilize(xy({"x y", "y"}), 1);
    FAIL("expected rejection");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("also occurs in relator 0") != std::string::npos);
  }
  CHECK(destabilize_obstruction(xy({"x y", "y"}), 0).value().find("not a single generator letter") !=
        std::string::npos);
  // destabilizing the first generator renumbers the rest
  auto p = BalancedPresentation::parse({"a", "b"}, {"A", "b b"});
  auto d = destabilize(p, 0);
  CHECK(d.generators() == Alphabet{"b"});
  CHECK(rels(d) == S{"b b"});
}

TEST_CASE("property: stabilize then destabilize is the identity") {
  for (unsigned n = 0; n < 6; ++n) {
    auto p = ak_presentation(n);
    CHECK(destabilize(stabilize(p), 2) == p);
    CHECK(destabilize(destabilize(stabilize(stabilize(p)), 3), 2) == p);
  }
}

TEST_CASE("ak family") {
  CHECK(rels(ak_presentation(2, "y x")) == S{"Y X Y x y x", "x x x Y Y"});
  CHECK(rels(ak_presentation(0, "y x")) == S{"Y X Y x y x", "x"});
  CHECK(rels(ak_presentation(1, "y x")) == S{"Y X Y x y x", "x x Y"});
  CHECK_THROWS_AS(ak_presentation(1, "y z"), input_error);
  CHECK_THROWS_AS(ak_presentation(1, ""), input_error);
}

TEST_CASE("tietze simplification") {
  auto p = tietze_simplify(xy({"y X", "y"}));
  CHECK(p.generators() == Alphabet{"x"});
  CHECK(rels(p) == S{"x"});

  auto ak1 = ak_presentation(1);
  auto q = tietze_simplify(ak1);
  CHECK(q.total_length() < ak1.total_length());
  // y = x x from the second relator; the first becomes X^5 x^4 = X
  CHECK(q.generators() == Alphabet{"x"});
  CHECK(rels(q) == S{"X"});

  // general variant drops duplicate and empty relators
  auto g = tietze_simplify(Presentation::parse({"a", "b"}, {"a b a B", "b A B A", "", "a a b a B a"}));
  CHECK(g.relator_count() <= 2);
  auto free2 = tietze_simplify(Presentation::parse({"a", "b"}, {}));
  CHECK(free2.generator_count() == 2);
}
