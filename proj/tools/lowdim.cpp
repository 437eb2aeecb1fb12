// Command-line front end. JSON goes to stdout, human-readable notes to stderr.
// Exit codes: 0 ran to completion, 1 usage or input error, 2 internal error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lowdim/io.hpp"
#include "lowdim/pipeline.hpp"

namespace {

using namespace lowdim;
using io::json;

void add_search_flags(CLI::App& cmd, ac::SearchConfig& cfg) {
  cmd.add_option("--max-total-length", cfg.max_total_length, "largest total relator length visited")->capture_default_str();
  cmd.add_option("--max-depth", cfg.max_depth, "largest number of search steps")->capture_default_str();
  cmd.add_option("--conj-depth", cfg.conjugator_depth, "longest conjugating word")->capture_default_str();
  cmd.add_option("--budget", cfg.node_budget, "nodes expanded before giving up")->capture_default_str()->check(CLI::PositiveNumber);
  cmd.add_option("--stabilizations", cfg.stabilizations, "extra generators the search may add")->capture_default_str();
  cmd.add_option("--threads", cfg.workers, "worker threads per search level")->capture_default_str()->check(CLI::PositiveNumber);
}

std::vector<long long> parse_framings(const std::string& text) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      lowdim::detail::require(used == item.size(), "");
    } catch (const std::exception&) {
      throw input_error("cannot parse framing '" + item + "'");
    }
  }
  return out;
}

std::string classify_text(const curves::Slope& s) {
  std::ostringstream out;
  out << "slope      " << s.text() << "\n"
      << "parity     " << curves::parity_class(s).text() << "\n"
      << "partition  " << curves::partition(s).text() << "\n"
      << "z3 class   " << curves::to_string(curves::z3_class(s)) << "\n"
      << "lift type  " << curves::to_string(curves::lift_type(s)) << "\n";
  for (const auto& c : curves::partner_conditions(s))
    out << "condition " << c.index << " (" << c.statement << "): " << curves::to_string(c.status) << ", " << c.reason
        << "\n";
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Computational tools for framed links, balanced presentations and fiber slopes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version);

  PipelineConfig pipe;
  bool quiet = false;
  auto* pipeline = app.add_subcommand("pipeline", "full report for one member of the Akbulut-Kirby family");
  pipeline->add_option("--n", pipe.n, "family parameter n >= 0")->required();
  pipeline->add_option("--w", pipe.w, "conjugating word in x, y")->capture_default_str();
  pipeline->add_option("--coset-budget", pipe.coset_budget, "coset definitions allowed")->capture_default_str();
  pipeline->add_option("--max-q", pipe.max_q, "largest slope denominator listed")->capture_default_str()->check(CLI::NonNegativeNumber);
  pipeline->add_flag("--quiet", quiet, "skip the text summary on stderr");
  add_search_flags(*pipeline, pipe.search);

  std::string path, second_path;
  ac::SearchConfig search_cfg;
  auto* acs = app.add_subcommand("ac-search", "bounded Andrews-Curtis search on a balanced presentation");
  acs->add_option("presentation", path, "presentation JSON")->required();
  add_search_flags(*acs, search_cfg);

  std::size_t coset_budget = default_coset_budget;
  auto* certify = app.add_subcommand("certify", "abelianization and coset enumeration");
  certify->add_option("presentation", path, "presentation JSON")->required();
  certify->add_option("--coset-budget", coset_budget, "coset definitions allowed")->capture_default_str();

  auto* abel = app.add_subcommand("abelianization", "abelian invariants of a presentation");
  abel->add_option("presentation", path, "presentation JSON")->required();

  std::string framings_text;
  bool surgery = false;
  auto* wirt = app.add_subcommand("wirtinger", "link group of a PD code");
  wirt->add_option("pd", path, "PD code JSON")->required();
  wirt->add_option("--framings", framings_text, "comma-separated framings, one per component (default all 0)");
  wirt->add_flag("--surgery", surgery, "add the framed longitudes as relators");

  auto* kirby_cmd = app.add_subcommand("kirby", "framed link models");
  kirby_cmd->require_subcommand(1);
  auto* kapply = kirby_cmd->add_subcommand("apply", "apply a move script");
  kapply->add_option("model", path, "model JSON")->required();
  kapply->add_option("script", second_path, "move script JSON")->required();
  auto* kcheck = kirby_cmd->add_subcommand("check", "all framings and linking numbers zero?");
  kcheck->add_option("model", path, "model JSON")->required();
  auto* kh1 = kirby_cmd->add_subcommand("h1", "homology of the surgered 3-manifold");
  kh1->add_option("model", path, "model JSON")->required();

  std::string slope_text;
  long long max_q = 0;
  bool as_json = false;
  auto* curves_cmd = app.add_subcommand("curves", "slopes on the 4-punctured sphere");
  curves_cmd->require_subcommand(1);
  auto* classify = curves_cmd->add_subcommand("classify", "parity, partition, lift type and partner conditions");
  classify->add_option("slope", slope_text, "p/q")->required();
  classify->add_flag("--json", as_json, "emit JSON instead of text");
  auto* enumerate = curves_cmd->add_subcommand("enumerate", "candidate slopes up to a denominator");
  enumerate->add_option("--max-q", max_q, "largest denominator")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--json", as_json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*pipeline) {
    auto report = run_pipeline(pipe);
    if (!quiet) std::cerr << pipeline_text(report);
    std::cout << io::dump(pipeline_json(report));
  } else if (*acs) {
    auto p = io::balanced_from(io::read_file(path));
    auto outcome = ac::search(p, search_cfg);
    json j;
    j["presentation"] = io::presentation_json(p);
    j["config"] = io::config_json(search_cfg);
    j["outcome"] = io::outcome_json(p, outcome);
    std::cout << io::dump(j);
    if (outcome.status != ac::SearchStatus::trivialized) std::cerr << ac_caveat << "\n";
  } else if (*certify) {
    auto p = io::presentation_from(io::read_file(path));
    std::cout << io::dump(io::certification_json(p, abelianization(p), todd_coxeter(p, coset_budget)));
  } else if (*abel) {
    auto p = io::presentation_from(io::read_file(path));
    auto m = exponent_matrix(p);
    std::cout << io::dump({{"exponent_matrix", io::matrix_json(m)}, {"abelianization", io::group_json(abelian_invariants(m))}});
  } else if (*wirt) {
    wirtinger::Diagram dg(io::pd_from(io::read_file(path)));
    auto framings = parse_framings(framings_text);
    if (framings.empty()) framings.assign(dg.component_count(), 0);
    if (surgery) {
      std::cout << io::dump(io::surgery_json(dg, wirtinger::surgery_presentation(dg, framings), framings));
    } else {
      auto p = wirtinger::wirtinger_presentation(dg);
      std::cout << io::dump({{"presentation", io::presentation_json(p)},
                             {"linking", io::matrix_json(wirtinger::linking_matrix(dg, framings))},
                             {"abelianization", io::group_json(abelianization(p))}});
    }
  } else if (*kapply) {
    auto m = io::model_from(io::read_file(path));
    auto script = io::script_from(io::read_file(second_path));
    std::cout << io::dump(io::model_json(kirby::apply_script(m, script)));
  } else if (*kcheck) {
    auto r = kirby::gpr_hypothesis_check(io::model_from(io::read_file(path)));
    std::cout << io::dump({{"holds", r.holds}, {"detail", r.detail}});
  } else if (*kh1) {
    std::cout << io::dump(io::group_json(kirby::h1_of_surgery(io::model_from(io::read_file(path)))));
  } else if (*classify) {
    auto s = curves::Slope::parse(slope_text);
    if (as_json) std::cout << io::dump(io::classification_json(s));
    else std::cout << classify_text(s);
  } else if (*enumerate) {
    auto slopes = curves::enumerate_candidates(max_q);
    if (as_json) {
      std::cout << io::dump(io::enumeration_json(max_q, slopes));
    } else {
      for (const auto& s : slopes) std::cout << s.text() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lowdim::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const lowdim::invariant_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
