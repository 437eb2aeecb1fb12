#include <catch_amalgamated.hpp>

#include "lowdim/pipeline.hpp"

using namespace lowdim;

namespace {
PipelineConfig small(unsigned n) {
  PipelineConfig cfg;
  cfg.n = n;
  cfg.search.max_total_length = 14;
  cfg.search.max_depth = 8;
  return cfg;
}
}  // namespace

TEST_CASE("n = 0 trivializes and certifies") {
  auto r = run_pipeline(small(0));
  CHECK(r.h1.is_trivial());
  CHECK(r.cosets.status == CosetStatus::closed);
  CHECK(r.cosets.order == 1);
  CHECK(r.search.status == ac::SearchStatus::trivialized);
  CHECK(r.hypothesis.holds);
}

TEST_CASE("n = 1 has trivial homology and a closed coset table") {
  auto r = run_pipeline(small(1));
  CHECK(r.det == 1);
  CHECK(r.h1.is_trivial());
  CHECK(r.cosets.status == CosetStatus::closed);
  CHECK(r.cosets.order == 1);
}

TEST_CASE("report is reproducible and reparses to itself") {
  for (unsigned n : {0u, 2u}) {
    auto cfg = small(n);
    auto a = io::dump(pipeline_json(run_pipeline(cfg)));
    cfg.search.workers = 3;
    auto b = io::dump(pipeline_json(run_pipeline(cfg)));
    CHECK(a == b);
    auto j = io::parse_text(a);
    CHECK(io::dump(j) == a);
    CHECK(j["caveat"] == ac_caveat);
    CHECK(j["metadata"].size() == 2);
    CHECK(io::presentation_from(j["presentation"]) == ak_presentation(n).presentation());
    CHECK(io::outcome_from(ak_presentation(n), j["ac_search"]).status == run_pipeline(cfg).search.status);
  }
}

TEST_CASE("invalid pipeline input is rejected") {
  PipelineConfig cfg;
  cfg.w = "z";
  CHECK_THROWS_AS(run_pipeline(cfg), input_error);
  cfg.w = "";
  CHECK_THROWS_AS(run_pipeline(cfg), input_error);
}
