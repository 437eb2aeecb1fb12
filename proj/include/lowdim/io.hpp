#pragma once

// JSON encodings of every value the command line reads or writes.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lowdim/abelian.hpp"
#include "lowdim/acsearch.hpp"
#include "lowdim/coset.hpp"
#include "lowdim/curves.hpp"
#include "lowdim/kirby.hpp"
#include "lowdim/presentation.hpp"
#include "lowdim/wirtinger.hpp"

namespace lowdim::io {

using json = nlohmann::ordered_json;

namespace detail {

using lowdim::detail::reject;
using lowdim::detail::require;

inline const json& field(const json& j, const char* key) {
  require(j.is_object(), std::string("expected a JSON object with field '") + key + "'");
  auto it = j.find(key);
  require(it != j.end(), std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    reject(std::string("field '") + what + "' has the wrong type");
  }
}

inline std::size_t index(const json& j, const char* key) {
  const auto& v = field(j, key);
  require(v.is_number_integer() && v.get<long long>() >= 0, std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

inline int sign(const json& j, const char* key = "sign") {
  const auto& v = field(j, key);
  require(v.is_number_integer() && (v.get<long long>() == 1 || v.get<long long>() == -1),
          std::string("field '") + key + "' must be 1 or -1");
  return v.get<int>();
}

}  // namespace detail

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  lowdim::detail::require(static_cast<bool>(in), "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

/// Two-space indented text with a trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Integers and groups

inline json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  lowdim::detail::require(j.is_string(), "expected an integer");
  try {
    return Integer(j.get<std::string>());
  } catch (const std::runtime_error&) {
    lowdim::detail::reject("cannot parse integer '" + j.get<std::string>() + "'");
  }
}

inline json matrix_json(const IntegerMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline IntegerMatrix matrix_from(const json& j) {
  lowdim::detail::require(j.is_array(), "matrix must be an array of rows");
  const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    lowdim::detail::require(j[i].is_array() && j[i].size() == cols, "matrix rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from(j[i][k]);
  }
  return m;
}

inline json group_json(const AbelianGroup& g) {
  json t = json::array();
  for (const auto& v : g.torsion) t.push_back(integer_json(v));
  return {{"rank", g.rank}, {"torsion", t}, {"description", g.describe()}};
}

inline AbelianGroup group_from(const json& j) {
  AbelianGroup g;
  g.rank = detail::index(j, "rank");
  for (const auto& v : detail::field(j, "torsion")) g.torsion.push_back(integer_from(v));
  return g;
}

// ---------------------------------------------------------------------------
// Presentations

inline json presentation_json(const Presentation& p) {
  json rels = json::array();
  for (std::size_t i = 0; i < p.relator_count(); ++i) rels.push_back(p.format_relator(i));
  return {{"generators", p.generators()}, {"relators", rels}};
}

inline Presentation presentation_from(const json& j) {
  auto gens = detail::as<std::vector<std::string>>(detail::field(j, "generators"), "generators");
  auto rels = detail::as<std::vector<std::string>>(detail::field(j, "relators"), "relators");
  return Presentation::parse(gens, rels);
}

inline BalancedPresentation balanced_from(const json& j) { return BalancedPresentation(presentation_from(j)); }

// ---------------------------------------------------------------------------
// Certification

inline json coset_json(const CosetResult& r) {
  json j;
  j["status"] = r.status == CosetStatus::closed ? "closed" : "budget";
  if (r.status == CosetStatus::closed) j["order"] = r.order;
  j["defined"] = r.defined;
  j["live"] = r.live;
  return j;
}

inline CosetResult coset_from(const json& j) {
  CosetResult r;
  auto status = detail::as<std::string>(detail::field(j, "status"), "status");
  lowdim::detail::require(status == "closed" || status == "budget", "coset status must be closed or budget");
  r.status = status == "closed" ? CosetStatus::closed : CosetStatus::budget_exceeded;
  if (r.status == CosetStatus::closed) r.order = detail::index(j, "order");
  r.defined = detail::index(j, "defined");
  r.live = detail::index(j, "live");
  return r;
}

inline json certification_json(const Presentation& p, const AbelianGroup& h1, const CosetResult& cosets) {
  return {{"presentation", presentation_json(p)}, {"abelianization", group_json(h1)}, {"coset", coset_json(cosets)}};
}

// ---------------------------------------------------------------------------
// Search

inline json config_json(const ac::SearchConfig& c) {
  return {{"max_total_length", c.max_total_length}, {"max_depth", c.max_depth},
          {"conj_depth", c.conjugator_depth},       {"budget", c.node_budget},
          {"stabilizations", c.stabilizations}};
}

/// Trace moves, with conjugators spelled in the alphabet current at each step.
inline json trace_json(BalancedPresentation p, const ac::Trace& trace) {
  json out = json::array();
  for (const auto& m : trace) {
    json j = std::visit(
        [&](const auto& mv) -> json {
          using T = std::decay_t<decltype(mv)>;
          if constexpr (std::is_same_v<T, ac::InvertMove>) return {{"move", "invert"}, {"relator", mv.relator}};
          else if constexpr (std::is_same_v<T, ac::ConjugateMove>)
            return {{"move", "conjugate"}, {"relator", mv.relator}, {"conjugator", format_word(mv.conjugator, p.generators())}};
          else if constexpr (std::is_same_v<T, ac::MultiplyMove>)
            return {{"move", "multiply"},
                    {"target", mv.target},
                    {"source", mv.source},
                    {"conjugator", format_word(mv.conjugator, p.generators())}};
          else if constexpr (std::is_same_v<T, ac::StabilizeMove>) return {{"move", "stabilize"}};
          else return {{"move", "destabilize"}, {"relator", mv.relator}};
        },
        m);
    out.push_back(j);
    p = ac::apply_move(p, m);
  }
  return out;
}

inline ac::Trace trace_from(BalancedPresentation p, const json& j) {
  lowdim::detail::require(j.is_array(), "trace must be an array");
  ac::Trace out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& m = j[k];
    auto kind = detail::as<std::string>(detail::field(m, "move"), "move");
    ac::Move mv;
    auto conj = [&] { return parse_word(detail::as<std::string>(detail::field(m, "conjugator"), "conjugator"), p.generators()); };
    if (kind == "invert") mv = ac::InvertMove{detail::index(m, "relator")};
    else if (kind == "conjugate") mv = ac::ConjugateMove{detail::index(m, "relator"), conj()};
    else if (kind == "multiply") mv = ac::MultiplyMove{detail::index(m, "target"), detail::index(m, "source"), conj()};
    else if (kind == "stabilize") mv = ac::StabilizeMove{};
    else if (kind == "destabilize") mv = ac::DestabilizeMove{detail::index(m, "relator")};
    else lowdim::detail::reject("trace step " + std::to_string(k) + ": unknown move '" + kind + "'");
    out.push_back(mv);
    try {
      p = ac::apply_move(p, mv);
    } catch (const input_error& e) {
      throw input_error("trace step " + std::to_string(k) + " is illegal: " + e.what());
    }
  }
  return out;
}

inline json stats_json(const ac::SearchStats& s) {
  return {{"nodes_expanded", s.nodes_expanded},
          {"distinct_keys", s.distinct_keys},
          {"max_frontier", s.max_frontier},
          {"depth_reached", s.depth_reached}};
}

inline ac::SearchStats stats_from(const json& j) {
  return {detail::index(j, "nodes_expanded"), detail::index(j, "distinct_keys"), detail::index(j, "max_frontier"),
          detail::index(j, "depth_reached")};
}

inline json outcome_json(const BalancedPresentation& p, const ac::SearchOutcome& o) {
  json j;
  j["status"] = ac::to_string(o.status);
  j["stats"] = stats_json(o.stats);
  if (o.status == ac::SearchStatus::trivialized) {
    j["steps"] = o.steps;
    j["trace"] = trace_json(p, o.trace);
  }
  return j;
}

inline ac::SearchOutcome outcome_from(const BalancedPresentation& p, const json& j) {
  ac::SearchOutcome o;
  auto status = detail::as<std::string>(detail::field(j, "status"), "status");
  if (status == "trivialized") o.status = ac::SearchStatus::trivialized;
  else if (status == "exhausted") o.status = ac::SearchStatus::exhausted;
  else if (status == "budget_exceeded") o.status = ac::SearchStatus::budget_exceeded;
  else lowdim::detail::reject("unknown search status '" + status + "'");
  o.stats = stats_from(detail::field(j, "stats"));
  if (o.status == ac::SearchStatus::trivialized) {
    o.steps = detail::index(j, "steps");
    o.trace = trace_from(p, detail::field(j, "trace"));
  }
  return o;
}

// ---------------------------------------------------------------------------
// Kirby models and scripts

inline json model_json(const kirby::FramedLinkModel& m) {
  json comps = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json c;
    c["kind"] = m.is_dotted(i) ? "dotted" : "plain";
    if (!m.is_dotted(i)) c["framing"] = integer_json(*m.framing(i));
    c["unknotted"] = m.component(i).unknotted;
    comps.push_back(c);
  }
  return {{"components", comps}, {"linking", matrix_json(m.linking())}};
}

inline kirby::FramedLinkModel model_from(const json& j) {
  const auto& comps = detail::field(j, "components");
  lowdim::detail::require(comps.is_array(), "components must be an array");
  std::vector<kirby::Component> out;
  std::vector<std::optional<Integer>> framings;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    auto kind = detail::as<std::string>(detail::field(c, "kind"), "kind");
    lowdim::detail::require(kind == "plain" || kind == "dotted",
                            "component " + std::to_string(i) + ": kind must be plain or dotted");
    bool dotted = kind == "dotted";
    bool unknotted = c.contains("unknotted") ? detail::as<bool>(c["unknotted"], "unknotted") : false;
    out.push_back({dotted ? kirby::Kind::dotted : kirby::Kind::plain, unknotted});
    if (dotted) {
      lowdim::detail::require(!c.contains("framing"), "dotted component " + std::to_string(i) + " cannot carry a framing");
      framings.emplace_back();
    } else {
      framings.emplace_back(integer_from(detail::field(c, "framing")));
    }
  }
  IntegerMatrix l = j.contains("linking") ? matrix_from(j["linking"]) : IntegerMatrix(out.size(), out.size());
  lowdim::detail::require(l.rows() == out.size() && l.cols() == out.size(),
                          "linking matrix must be " + std::to_string(out.size()) + "x" + std::to_string(out.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    if (framings[i])
      lowdim::detail::require(l(i, i) == *framings[i], "framing of component " + std::to_string(i) +
                                                           " disagrees with the linking diagonal");
  return kirby::FramedLinkModel(std::move(out), std::move(l));
}

inline json move_json(const kirby::KirbyMove& m) {
  return std::visit(
      [](const auto& mv) -> json {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, kirby::Slide>) return {{"move", "slide"}, {"u", mv.u}, {"v", mv.v}, {"sign", mv.sign}};
        else if constexpr (std::is_same_v<T, kirby::BlowUp>) return {{"move", "blowup"}, {"sign", mv.sign}};
        else if constexpr (std::is_same_v<T, kirby::BlowDown>) return {{"move", "blowdown"}, {"component", mv.component}};
        else if constexpr (std::is_same_v<T, kirby::AddUnknot>) return {{"move", "add_unknot"}};
        else if constexpr (std::is_same_v<T, kirby::AddHopfPair>) return {{"move", "add_hopf_pair"}};
        else if constexpr (std::is_same_v<T, kirby::RemoveHopfPair>)
          return {{"move", "remove_hopf_pair"}, {"dotted", mv.dotted}, {"handle", mv.handle}};
        else return {{"move", "slide_over_dotted"}, {"handle", mv.handle}, {"dotted", mv.dotted}, {"sign", mv.sign}};
      },
      m);
}

inline kirby::KirbyMove move_from(const json& j) {
  auto kind = detail::as<std::string>(detail::field(j, "move"), "move");
  if (kind == "slide") return kirby::Slide{detail::index(j, "u"), detail::index(j, "v"), detail::sign(j)};
  if (kind == "blowup") return kirby::BlowUp{detail::sign(j)};
  if (kind == "blowdown") return kirby::BlowDown{detail::index(j, "component")};
  if (kind == "add_unknot") return kirby::AddUnknot{};
  if (kind == "add_hopf_pair") return kirby::AddHopfPair{};
  if (kind == "remove_hopf_pair") return kirby::RemoveHopfPair{detail::index(j, "dotted"), detail::index(j, "handle")};
  if (kind == "slide_over_dotted")
    return kirby::SlideOverDotted{detail::index(j, "handle"), detail::index(j, "dotted"), detail::sign(j)};
  lowdim::detail::reject("unknown Kirby move '" + kind + "'");
}

inline json script_json(const kirby::MoveScript& s) {
  json out = json::array();
  for (const auto& m : s) out.push_back(move_json(m));
  return out;
}

inline kirby::MoveScript script_from(const json& j) {
  lowdim::detail::require(j.is_array(), "a move script must be a JSON array");
  kirby::MoveScript out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    try {
      out.push_back(move_from(j[k]));
    } catch (const input_error& e) {
      throw input_error("move " + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Diagrams

inline json pd_json(const wirtinger::PDCode& pd) {
  json crossings = json::array();
  for (const auto& c : pd.crossings) crossings.push_back({{"arcs", c.arcs}, {"sign", c.sign}});
  return {{"crossings", crossings}, {"components", pd.components}};
}

inline wirtinger::PDCode pd_from(const json& j) {
  wirtinger::PDCode pd;
  const auto& crossings = detail::field(j, "crossings");
  lowdim::detail::require(crossings.is_array(), "crossings must be an array");
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    const auto& c = crossings[k];
    auto arcs = detail::as<std::vector<long long>>(detail::field(c, "arcs"), "arcs");
    lowdim::detail::require(arcs.size() == 4, "crossing " + std::to_string(k) + " must list 4 arcs");
    wirtinger::Crossing x;
    std::copy(arcs.begin(), arcs.end(), x.arcs.begin());
    x.sign = detail::sign(c);
    pd.crossings.push_back(x);
  }
  pd.components = detail::as<std::vector<std::vector<long long>>>(detail::field(j, "components"), "components");
  return pd;
}

inline json surgery_json(const wirtinger::Diagram& dg, const wirtinger::SurgeryPresentation& s,
                         const std::vector<long long>& framings) {
  const auto& gens = s.presentation.generators();
  json meridians = json::array(), longitudes = json::array();
  for (std::size_t c = 0; c < s.meridians.size(); ++c) {
    meridians.push_back(gens[s.meridians[c]]);
    longitudes.push_back(format_word(s.longitudes[c], gens));
  }
  auto linking = wirtinger::linking_matrix(dg, framings);
  return {{"presentation", presentation_json(s.presentation)},
          {"meridians", meridians},
          {"longitudes", longitudes},
          {"linking", matrix_json(linking)},
          {"abelianization", group_json(abelianization(s.presentation))},
          {"linking_h1", group_json(h1_from_matrix(linking))}};
}

// ---------------------------------------------------------------------------
// Slopes

inline json slope_json(const curves::Slope& s) { return s.text(); }

inline json classification_json(const curves::Slope& s) {
  auto part = curves::partition(s);
  json conds = json::array();
  for (const auto& c : curves::partner_conditions(s))
    conds.push_back({{"condition", c.index}, {"statement", c.statement}, {"status", to_string(c.status)}, {"reason", c.reason}});
  return {{"slope", s.text()},
          {"parity", {parity_class(s).p, parity_class(s).q}},
          {"partition", {{curves::name(part.first[0]), curves::name(part.first[1])},
                         {curves::name(part.second[0]), curves::name(part.second[1])}}},
          {"z3_class", to_string(curves::z3_class(s))},
          {"lift_type", to_string(curves::lift_type(s))},
          {"candidate", curves::is_candidate(s)},
          {"conditions", conds}};
}

inline json enumeration_json(long long max_q, const std::vector<curves::Slope>& slopes) {
  json list = json::array();
  for (const auto& s : slopes) list.push_back(slope_json(s));
  return {{"max_q", max_q}, {"count", slopes.size()}, {"candidates", list}};
}

inline std::vector<curves::Slope> enumeration_from(const json& j) {
  std::vector<curves::Slope> out;
  for (const auto& s : detail::field(j, "candidates")) out.push_back(curves::Slope::parse(detail::as<std::string>(s, "candidates")));
  return out;
}

}  // namespace lowdim::io
