#pragma once

// End-to-end report for one member <x,y | y = w^-1 x w, x^(n+1) = y^n> of the
// Akbulut-Kirby family: homology, coset enumeration, a bounded AC search, the
// zero-framing hypothesis on the 2-component model, and the slope candidates.

#include <sstream>
#include <string>

#include "lowdim/abelian.hpp"
#include "lowdim/acsearch.hpp"
#include "lowdim/coset.hpp"
#include "lowdim/curves.hpp"
#include "lowdim/io.hpp"
#include "lowdim/kirby.hpp"
#include "lowdim/presentation.hpp"

namespace lowdim {

inline constexpr const char* tool_name = "lowdim";
inline constexpr const char* tool_version = "0.1.0";

/// Attached to every report; an unsuccessful bounded search is not evidence.
inline constexpr const char* ac_caveat =
    "A search that ends exhausted or over budget proves nothing about the Andrews-Curtis class of this "
    "presentation: no invariant is currently known that tells Andrews-Curtis equivalence classes apart.";

struct PipelineConfig {
  unsigned n = 0;
  std::string w = "y x";
  ac::SearchConfig search = default_search();
  std::size_t coset_budget = default_coset_budget;
  long long max_q = 3;

  static ac::SearchConfig default_search() {
    ac::SearchConfig c;
    c.max_total_length = 20;
    c.max_depth = 30;
    c.conjugator_depth = 1;
    c.node_budget = 100'000;
    return c;
  }
};

struct PipelineReport {
  PipelineConfig config;
  BalancedPresentation presentation;
  IntegerMatrix exponents;
  Integer det;
  AbelianGroup h1;
  CosetResult cosets;
  ac::SearchOutcome search;
  kirby::HypothesisReport hypothesis;
  std::vector<curves::Slope> candidates;
};

inline PipelineReport run_pipeline(const PipelineConfig& cfg) {
  PipelineReport r{cfg, ak_presentation(cfg.n, cfg.w), {}, {}, {}, {}, {}, {}, {}};
  r.exponents = exponent_matrix(r.presentation);
  r.det = determinant(r.exponents);
  r.h1 = abelian_invariants(r.exponents);
  r.cosets = todd_coxeter(r.presentation, cfg.coset_budget);
  r.search = ac::search(r.presentation, cfg.search);
  r.hypothesis = kirby::gpr_hypothesis_check(kirby::zero_model(2, true));
  r.candidates = curves::enumerate_candidates(cfg.max_q);
  return r;
}

/// Deterministic report; the metadata block holds only the tool identity.
inline io::json pipeline_json(const PipelineReport& r) {
  io::json search_cfg = io::config_json(r.config.search);
  io::json j;
  j["metadata"] = {{"tool", tool_name}, {"version", tool_version}};
  j["input"] = {{"n", r.config.n}, {"w", r.config.w}};
  j["presentation"] = io::presentation_json(r.presentation);
  j["exponent_matrix"] = io::matrix_json(r.exponents);
  j["determinant"] = io::integer_json(r.det);
  j["abelianization"] = io::group_json(r.h1);
  j["h1_trivial"] = r.h1.is_trivial();
  j["coset"] = io::coset_json(r.cosets);
  j["coset"]["budget"] = r.config.coset_budget;
  j["ac_search"] = io::outcome_json(r.presentation, r.search);
  j["ac_search"]["config"] = search_cfg;
  j["hypothesis"] = {{"model", "2-component 0-framed unlink"}, {"holds", r.hypothesis.holds}, {"detail", r.hypothesis.detail}};
  io::json slopes = io::enumeration_json(r.config.max_q, r.candidates);
  j["candidate_slopes"] = slopes;
  j["caveat"] = ac_caveat;
  return j;
}

inline std::string pipeline_text(const PipelineReport& r) {
  std::ostringstream out;
  out << "presentation  <x,y | " << r.presentation.format_relator(0) << ", " << r.presentation.format_relator(1)
      << ">  (n=" << r.config.n << ", w=\"" << r.config.w << "\")\n";
  out << "H1            " << r.h1.describe() << " (det " << r.det << ")\n";
  out << "cosets        ";
  if (r.cosets.status == CosetStatus::closed)
    out << "closed, order " << r.cosets.order;
  else
    out << "stopped at budget " << r.config.coset_budget;
  out << " (" << r.cosets.defined << " defined)\n";
  out << "AC search     " << ac::to_string(r.search.status);
  if (r.search.status == ac::SearchStatus::trivialized) out << " in " << r.search.steps << " steps";
  out << " (" << r.search.stats.nodes_expanded << " nodes, depth " << r.search.stats.depth_reached << ")\n";
  out << "hypothesis    " << (r.hypothesis.holds ? "holds" : "fails") << " on the 0-framed 2-component unlink\n";
  out << "candidates    " << r.candidates.size() << " slopes with q <= " << r.config.max_q << "\n";
  out << "caveat        " << ac_caveat << "\n";
  return out.str();
}

}  // namespace lowdim
