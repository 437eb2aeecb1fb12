#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "lowdim/coset.hpp"
#include "lowdim/wirtinger.hpp"

using namespace lowdim;
using namespace lowdim::wirtinger;

namespace {
std::vector<std::string> rels(const Presentation& p) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < p.relator_count(); ++i) out.push_back(p.format_relator(i));
  return out;
}
using S = std::vector<std::string>;

// exponent sum, in w, of the generators whose arcs belong to component c
long long component_exponent(const Diagram& dg, const Word& w, std::size_t c) {
  long long s = 0;
  for (Letter l : w) {
    for (long long label : dg.code().components[c])
      if (dg.overarc_of(label) == generator_of(l)) {
        s += l > 0 ? 1 : -1;
        break;
      }
  }
  return s;
}

std::vector<std::vector<long long>> framing_grid(std::size_t n, int lo, int hi) {
  std::vector<std::vector<long long>> out{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<long long>> next;
    for (const auto& f : out)
      for (int v = lo; v <= hi; ++v) {
        auto g = f;
        g.push_back(v);
        next.push_back(g);
      }
    out = next;
  }
  return out;
}
}  // namespace

TEST_CASE("unknot") {
  auto p = wirtinger_presentation(fixtures::unknot());
  CHECK(p.generators() == Alphabet{"a1"});
  CHECK(p.relator_count() == 0);
  CHECK(longitude_word(fixtures::unknot(), 0, 0).empty());
  CHECK(longitude_word(fixtures::unknot(), 0, 3) == Word{1, 1, 1});
  auto s = surgery_presentation(fixtures::unknot(), {0});
  auto h = abelianization(s.presentation);
  CHECK(h.rank == 1);
  CHECK(h.torsion.empty());
  CHECK_THROWS_AS(longitude_word(fixtures::unknot(), 1, 0), input_error);
}

TEST_CASE("trefoil by hand") {
  Diagram dg(fixtures::trefoil());
  auto p = wirtinger_presentation(dg);
  CHECK(p.generators() == Alphabet{"a1", "a2", "a4"});
  CHECK(rels(p) == S{"a4 a1 A4 A2", "a1 a2 A1 A4", "a2 a4 A2 A1"});
  CHECK(self_writhe(dg, 0) == 3);
  CHECK(format_word(longitude_word(dg, 0, 0), p.generators()) == "a2 a1 a4 A1 A1 A1");
  auto t = tietze_simplify(p);
  CHECK(t.generator_count() == 2);
  REQUIRE(t.relator_count() == 1);
  CHECK(t.relator(0).size() == 6);
  CHECK(cyclic_canonical(t.relator(0)) ==
        cyclic_canonical(parse_word("a1 a2 a1 A2 A1 A2", t.generators())));
}

TEST_CASE("hopf link by hand") {
  Diagram dg(fixtures::hopf());
  auto p = wirtinger_presentation(dg);
  CHECK(p.generators() == Alphabet{"a1", "a3"});
  CHECK(rels(p) == S{"a1 a3 A1 A3", "a3 a1 A3 A1"});
  CHECK(linking_matrix(dg, {0, 0}) == IntegerMatrix{{0, 1}, {1, 0}});
  CHECK(format_word(longitude_word(dg, 0, 0), p.generators()) == "a3");
  CHECK(format_word(longitude_word(dg, 1, 2), p.generators()) == "a1 a3 a3");
  CHECK(abelianization(surgery_presentation(dg, {0, 0}).presentation).is_trivial());
}

TEST_CASE("longitudes commute with meridians in the link group") {
  // check in a finite quotient: the trefoil group maps onto S3
  Diagram dg(fixtures::trefoil());
  auto p = wirtinger_presentation(dg);
  auto m = Word::generator(meridian(dg, 0));
  auto l = longitude_word(dg, 0, 0);
  auto rel = p.relators();
  rel.push_back(parse_word("a1 a1", p.generators()));
  auto base = todd_coxeter(p.generator_count(), rel, 1000);
  REQUIRE(base.status == CosetStatus::closed);
  CHECK(base.order == 6);
  auto with = rel;
  with.push_back(m * l * m.inverse() * l.inverse());
  CHECK(todd_coxeter(p.generator_count(), with, 1000).order == 6);
}

TEST_CASE("malformed codes are rejected with the offending label") {
  auto bad = fixtures::trefoil();
  bad.crossings[0].arcs[3] = 6;
  try {
    Diagram dg(bad);
    FAIL("expected rejection");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("arc") != std::string::npos);
  }
  auto flipped = fixtures::trefoil();
  flipped.crossings[1].sign = -1;
  CHECK_THROWS_AS(Diagram(flipped), input_error);
  auto unknown = fixtures::hopf();
  unknown.crossings[0].arcs[0] = 9;
  CHECK_THROWS_AS(Diagram(unknown), input_error);
  CHECK_THROWS_AS(surgery_presentation(fixtures::hopf(), {0}), input_error);
  PDCode dup{{}, {{1}, {1}}};
  CHECK_THROWS_AS(Diagram(dup), input_error);
}

TEST_CASE("property: framing correction, abelianization consistency and meridians") {
  std::vector<PDCode> all{fixtures::unknot(), fixtures::unlink2(), fixtures::trefoil(), fixtures::hopf(),
                          fixtures::kinked_unknot()};
  for (const auto& pd : all) {
    Diagram dg(pd);
    for (const auto& f : framing_grid(dg.component_count(), -3, 3)) {
      auto s = surgery_presentation(dg, f);
      for (std::size_t c = 0; c < dg.component_count(); ++c)
        CHECK(component_exponent(dg, s.longitudes[c], c) == f[c]);
      CHECK(abelianization(s.presentation) == h1_from_matrix(linking_matrix(dg, f)));
      auto killed = s.presentation.relators();
      for (auto g : s.meridians) killed.push_back(Word::generator(g));
      auto tc = todd_coxeter(s.presentation.generator_count(), killed, 1000);
      CHECK(tc.status == CosetStatus::closed);
      CHECK(tc.order == 1);
    }
  }
}

TEST_CASE("unlink surgery is free of rank two on homology") {
  auto s = surgery_presentation(fixtures::unlink2(), {0, 0});
  auto h = abelianization(s.presentation);
  CHECK(h.rank == 2);
  CHECK(h.torsion.empty());
}
