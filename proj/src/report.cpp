#include "orthograph/report.hpp"

#include "orthograph/census.hpp"
#include "orthograph/errors.hpp"
#include "orthograph/subconstituent.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

namespace orthograph {

const char *to_string(Status s) {
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Inconclusive:
    return "inconclusive";
  case Status::NoTheorem:
    return "no-theorem";
  }
  return "?";
}

std::size_t ParamReport::count(Status s) const {
  std::size_t c = 0;
  for (const auto &v : verdicts)
    c += v.status == s;
  return c;
}

const Verdict *ParamReport::find(const std::string &claim) const {
  for (const auto &v : verdicts)
    if (v.claim == claim)
      return &v;
  return nullptr;
}

namespace {

Json spec_json(const FormSpec &spec) {
  return Json{{"n", spec.n()},
              {"nu", spec.nu()},
              {"delta", spec.delta()},
              {"z", spec.z()},
              {"dim", spec.dim()}};
}

template <class T> Json opt(const std::optional<T> &v) {
  if (!v)
    return nullptr;
  if constexpr (std::is_same_v<T, BigInt>)
    return v->str();
  else
    return *v;
}

std::string keys(const Histogram &h) {
  std::string s = "{";
  for (const auto &[value, count] : h) {
    if (s.size() > 1)
      s += ",";
    s += std::to_string(value);
  }
  return s + "}";
}

Json hist_json(const Histogram &h) {
  Json j = Json::object();
  for (const auto &[value, count] : h)
    j[std::to_string(value)] = count;
  return j;
}

Json measured_json(const MeasuredParams &m) {
  return Json{{"vertex_count", m.vertex_count},
              {"edge_count", m.edge_count()},
              {"classification", to_string(m.classification)},
              {"description", m.describe()},
              {"degrees", hist_json(m.census.degrees)},
              {"adjacent_common_neighbors", hist_json(m.census.adjacent)},
              {"nonadjacent_same_fiber", hist_json(m.census.nonadjacent_same)},
              {"nonadjacent_cross_fiber",
               hist_json(m.census.nonadjacent_cross)}};
}

Json sub_json(const SubVerification &s) {
  Json fields = Json::array();
  for (const auto &f : s.fields)
    fields.push_back(Json{{"field", f.field},
                          {"predicted", f.predicted},
                          {"measured", f.measured},
                          {"pass", f.pass}});
  return Json{{"predicted", prediction_json(s.predicted)},
              {"measured", measured_json(s.measured)},
              {"fields", fields},
              {"pass", s.pass}};
}

Verdict equal(std::string claim, const BigInt &predicted,
              std::optional<std::uint64_t> measured, std::string note = {}) {
  Verdict v{std::move(claim), Status::Fail, predicted.str(),
            measured ? std::to_string(*measured) : "none", std::move(note)};
  if (measured && predicted == *measured)
    v.status = Status::Pass;
  return v;
}

Verdict flag(std::string claim, bool ok, std::string predicted,
             std::string measured, std::string note = {}) {
  return {std::move(claim), ok ? Status::Pass : Status::Fail,
          std::move(predicted), std::move(measured), std::move(note)};
}

/// All values in the histogram equal `expected`; vacuous when it is empty.
Verdict single_value(std::string claim, const BigInt &expected,
                     const Histogram &h, std::string vacuous_note) {
  if (h.empty())
    return {std::move(claim), Status::Pass, expected.str(), "{}",
            std::move(vacuous_note)};
  const bool ok = h.size() == 1 && BigInt(h.begin()->first) == expected;
  return flag(std::move(claim), ok, "{" + expected.str() + "}", keys(h));
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

Json aut_json(const AutGroupResult &a) {
  return Json{{"complete", a.complete},
              {"method", a.method},
              {"order", a.complete ? Json(a.order.str()) : Json(nullptr)},
              {"generators", a.generators.size()},
              {"vertex_orbits", a.vertex_orbits},
              {"vertex_transitive", a.vertex_transitive},
              {"arc_count", a.arc_count},
              {"arc_orbit_size", a.arc_orbit_size},
              {"arc_transitive", a.arc_transitive},
              {"search_nodes", a.nodes}};
}

Json coloring_json(const ColoringResult &c) {
  return Json{{"chromatic_number", opt(c.chromatic_number)},
              {"lower", c.lower},
              {"upper", c.upper},
              {"lower_bound_method", c.lower_bound_method},
              {"upper_bound_method", c.upper_bound_method},
              {"clique", c.clique},
              {"independence_number", opt(c.independence_number)},
              {"reduced_size", c.reduced_size},
              {"coloring", c.coloring},
              {"search_nodes", c.nodes}};
}

std::optional<AutGroupResult> measure_automorphisms(const BitMatrix &adj,
                                                    const AutBudget &budget) {
  if (adj.size() <= budget.max_vertices)
    return automorphisms(adj, budget);
  try {
    return automorphisms_by_twins(adj, budget);
  } catch (const ResourceError &) {
    return std::nullopt;
  }
}

} // namespace

Json prediction_json(const TheoremPrediction &p) {
  return Json{{"branch", to_string(p.branch)},
              {"vertex_count", p.vertex_count.str()},
              {"degree", p.degree.str()},
              {"fiber_size", p.fiber_size.str()},
              {"lambda", p.lambda.str()},
              {"lambda_expanded", opt(p.lambda_expanded)},
              {"mu", opt(p.mu)},
              {"c1", opt(p.c1)},
              {"c2", opt(p.c2)},
              {"chromatic", p.chromatic ? Json(p.chromatic->str())
                                        : Json("excluded (delta=0, nu odd)")},
              {"residue",
               {{"vertex_count", p.residue_vertex_count.str()},
                {"degree", p.residue_degree.str()},
                {"lambda", opt(p.residue_lambda)},
                {"mu", opt(p.residue_mu)}}},
              {"residue_aut_order", opt(p.residue_aut_order)},
              {"aut_order", opt(p.aut_order)},
              {"aut_order_expr", p.aut_order_expr}};
}

Json prediction_json(const SubconstituentPrediction &p) {
  if (!p.covered())
    return Json{{"index", p.index}, {"branch", "none"}, {"note", p.note}};
  Json adj = Json::array(), non = Json::array();
  for (const auto &v : p.adjacent_values)
    adj.push_back(v.str());
  for (const auto &v : p.nonadjacent_values)
    non.push_back(v.str());
  return Json{{"index", p.index},
              {"branch", to_string(p.branch)},
              {"structure", p.structure},
              {"vertex_count", p.vertex_count.str()},
              {"degree", p.degree.str()},
              {"adjacent_common_neighbors", adj},
              {"nonadjacent_common_neighbors", non}};
}

ParamReport params_report(const FormSpec &spec) {
  ParamReport r{spec};
  r.predicted = prediction_json(predict_main(spec));
  Json subs = Json::array();
  for (int i : {1, 2})
    subs.push_back(prediction_json(predict_sub(spec, i)));
  r.predicted["subconstituents"] = subs;
  return r;
}

ParamReport verify_spec(const FormSpec &spec, const VerifyOptions &options) {
  ParamReport r{spec};
  auto &v = r.verdicts;
  const auto t_start = Clock::now();

  // Residue graph and its automorphism group feed the predictions.
  auto t = Clock::now();
  const OrthoGraph residue = residue_graph(spec);
  const MeasuredParams residue_m = census(residue);
  std::optional<AutGroupResult> residue_aut =
      measure_automorphisms(residue.adjacency(), options.aut_budget);
  std::optional<BigInt> residue_order;
  if (residue_aut && residue_aut->complete)
    residue_order = residue_aut->order;
  const TheoremPrediction pred = predict_main(spec, residue_order);
  r.predicted = prediction_json(pred);
  r.measured["residue"] = measured_json(residue_m);
  if (residue_aut)
    r.measured["residue"]["automorphisms"] = aut_json(*residue_aut);
  r.timings["residue_ms"] = ms_since(t);

  v.push_back(equal("residue.vertex_count", pred.residue_vertex_count,
                    residue.size()));
  v.push_back(equal("residue.degree", pred.residue_degree, residue_m.degree()));
  if (spec.nu() == 1) {
    v.push_back(flag("residue.complete",
                     residue_m.classification == Classification::Complete,
                     "complete", to_string(residue_m.classification)));
  } else {
    v.push_back(single_value("residue.lambda", *pred.residue_lambda,
                             residue_m.census.adjacent, "no edges"));
    v.push_back(single_value("residue.mu", *pred.residue_mu,
                             residue_m.census.nonadjacent(),
                             "no non-adjacent pairs"));
  }

  // Full graph.
  t = Clock::now();
  const OrthoGraph g = spec.n() == 1 ? residue : build_graph(spec, options.cap);
  r.timings["build_ms"] = ms_since(t);

  std::size_t unit_violations = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    unit_violations += !unit_position_check(spec, g.vertices()[i]);
  v.push_back(flag("vertex_unit_position", unit_violations == 0, "0 violations",
                   std::to_string(unit_violations) + " violations"));

  t = Clock::now();
  const MeasuredParams m = census(g);
  r.measured["graph"] = measured_json(m);
  r.timings["census_ms"] = ms_since(t);

  v.push_back(equal("vertex_count", pred.vertex_count, g.size()));
  v.push_back(equal("regularity", pred.degree, m.degree()));
  v.push_back(single_value("adjacent_common_neighbors", pred.lambda,
                           m.census.adjacent, "no edges"));
  if (spec.nu() == 1) {
    v.push_back(single_value("nonadjacent_common_neighbors", *pred.mu,
                             m.census.nonadjacent(),
                             "vacuous: no non-adjacent pairs"));
  } else {
    v.push_back(single_value("nonadjacent_cross_fiber", *pred.c1,
                             m.census.nonadjacent_cross,
                             "vacuous: no such pairs"));
    v.push_back(single_value("nonadjacent_same_fiber", *pred.c2,
                             m.census.nonadjacent_same,
                             "vacuous: fibres are singletons"));
  }

  {
    Verdict c{"classification", Status::Fail, to_string(pred.branch),
              m.describe(), {}};
    switch (pred.branch) {
    case MainBranch::DegeneratePath:
      c.status = g.size() == 2 && m.classification == Classification::Complete
                     ? Status::Pass
                     : Status::Fail;
      break;
    case MainBranch::NuOne:
      c.status = m.classification == Classification::SRG ||
                         m.classification == Classification::Complete
                     ? Status::Pass
                     : Status::Fail;
      if (m.classification == Classification::Complete)
        c.note = "complete graph: mu is vacuous";
      break;
    case MainBranch::NuAtLeastTwo:
      if (m.classification == Classification::QSRG)
        c.status = Status::Pass;
      else if (m.classification == Classification::SRG && spec.n() == 1) {
        c.status = Status::Pass;
        c.note = "singleton fibres: only c1 is realised, graph is SRG";
      }
      break;
    }
    v.push_back(c);
  }

  if (pred.lambda_expanded)
    v.push_back(flag("formula.lambda_dual_form",
                     pred.lambda == *pred.lambda_expanded, pred.lambda.str(),
                     pred.lambda_expanded->str()));
  if (pred.c2)
    v.push_back(flag("formula.c2_equals_degree", *pred.c2 == pred.degree,
                     pred.degree.str(), pred.c2->str()));

  // Lifting structure.
  t = Clock::now();
  const LiftingCheck lift = check_lifting(g, residue);
  r.measured["lifting"] = Json{{"fiber_count", lift.fiber_count},
                               {"min_fiber", lift.min_fiber},
                               {"max_fiber", lift.max_fiber},
                               {"pairs_checked", lift.pairs_checked},
                               {"descend_violations", lift.descend_violations},
                               {"lift_violations", lift.lift_violations}};
  v.push_back(flag("lifting.fiber_size",
                   lift.min_fiber == lift.max_fiber &&
                       pred.fiber_size == lift.min_fiber,
                   pred.fiber_size.str(),
                   std::to_string(lift.min_fiber) + ".." +
                       std::to_string(lift.max_fiber)));
  v.push_back(flag("lifting.partition",
                   lift.fibers_partition &&
                       lift.fiber_count == residue.size(),
                   std::to_string(residue.size()) + " fibres",
                   std::to_string(lift.fiber_count) + " fibres"));
  v.push_back(flag("lifting.adjacency_descends", lift.descend_violations == 0,
                   "0", std::to_string(lift.descend_violations)));
  v.push_back(flag("lifting.adjacency_lifts", lift.lift_violations == 0, "0",
                   std::to_string(lift.lift_violations)));
  const bool wreath = fiber_wreath_check(g);
  v.push_back(flag("fiber_wreath", wreath, "true", wreath ? "true" : "false"));
  r.timings["lifting_ms"] = ms_since(t);

  // Chromatic number: the lifted residue colouring seeds the solver, whose
  // lower bound is computed independently.
  t = Clock::now();
  if (g.size() <= options.color_max_vertices) {
    const ColoringResult rc =
        chromatic_exact(residue.adjacency(), options.color_budget);
    const std::vector<int> lifted = lift_coloring(g, rc.coloring);
    const bool lifted_ok = is_proper_coloring(g.adjacency(), lifted);
    v.push_back(flag("lifted_coloring",
                     lifted_ok && color_count(lifted) == rc.upper,
                     std::to_string(rc.upper) + " colours, proper",
                     std::to_string(color_count(lifted)) + " colours, " +
                         (lifted_ok ? "proper" : "improper")));
    const ColoringResult full =
        chromatic_exact(g.adjacency(), options.color_budget, lifted);
    r.measured["residue_coloring"] = coloring_json(rc);
    r.measured["coloring"] = coloring_json(full);
    const std::string measured =
        full.chromatic_number
            ? std::to_string(*full.chromatic_number)
            : "[" + std::to_string(full.lower) + "," +
                  std::to_string(full.upper) + "]";
    if (!pred.chromatic) {
      v.push_back({"chromatic_number", Status::NoTheorem, "excluded", measured,
                   "no theorem for delta = 0 with nu odd"});
    } else if (!full.chromatic_number) {
      v.push_back({"chromatic_number", Status::Inconclusive,
                   pred.chromatic->str(), measured, "solver budget exhausted"});
    } else {
      v.push_back(flag("chromatic_number",
                       *pred.chromatic == *full.chromatic_number,
                       pred.chromatic->str(), measured,
                       "lower bound by " + full.lower_bound_method));
    }
  } else {
    v.push_back({"chromatic_number",
                 pred.chromatic ? Status::Inconclusive : Status::NoTheorem,
                 pred.chromatic ? pred.chromatic->str() : "excluded", "skipped",
                 "graph larger than the colouring size limit"});
  }
  r.timings["coloring_ms"] = ms_since(t);

  // Automorphisms.
  t = Clock::now();
  const std::optional<AutGroupResult> aut =
      spec.n() == 1 ? residue_aut
                    : measure_automorphisms(g.adjacency(), options.aut_budget);
  if (aut)
    r.measured["automorphisms"] = aut_json(*aut);
  if (aut && aut->complete) {
    const std::string note = aut->method == "full-search"
                                 ? "verified by full group search"
                                 : "certified via twin-class reduction";
    if (pred.aut_order)
      v.push_back(flag("automorphism_order", *pred.aut_order == aut->order,
                       pred.aut_order->str(), aut->order.str(), note));
    else
      v.push_back({"automorphism_order", Status::Inconclusive,
                   pred.aut_order_expr, aut->order.str(),
                   "residue group order unavailable"});
    v.push_back(flag("vertex_transitivity", aut->vertex_transitive, "1 orbit",
                     std::to_string(aut->vertex_orbits) + " orbits", note));
    v.push_back(flag("arc_transitivity", aut->arc_transitive,
                     std::to_string(aut->arc_count) + " arcs in one orbit",
                     std::to_string(aut->arc_orbit_size) + " arcs in orbit",
                     note));
  } else {
    for (const char *claim :
         {"automorphism_order", "vertex_transitivity", "arc_transitivity"})
      v.push_back({claim, Status::Inconclusive, "", "",
                   "group search outside budget"});
  }
  r.timings["automorphism_ms"] = ms_since(t);

  // Subconstituents.
  t = Clock::now();
  if (options.subconstituents) {
    const std::size_t base =
        options.base_vertex ? *options.base_vertex : base_vertex(g);
    if (base >= g.size())
      throw UsageError("base vertex out of range");
    const DistanceCheck dist = distance_check(g, base);
    r.diagnostics["base_vertex"] = base;
    r.diagnostics["nonadjacent_is_distance_two"] =
        dist.nonadjacent_is_distance_two;
    r.diagnostics["degenerate_path"] = dist.degenerate_path;
    Json subs = Json::array();
    std::vector<MeasuredParams> sub_measured;
    for (int i : {1, 2}) {
      const Subconstituent s = subconstituent(g, i, base);
      const SubVerification sv =
          compare_sub(predict_sub(spec, i), census(s));
      subs.push_back(sub_json(sv));
      sub_measured.push_back(sv.measured);
      const std::string claim = "subconstituent" + std::to_string(i);
      if (!sv.predicted.covered()) {
        v.push_back({claim, Status::NoTheorem, "", sv.measured.describe(),
                     sv.predicted.note});
      } else {
        std::string failed;
        for (const auto &f : sv.fields)
          if (!f.pass)
            failed += (failed.empty() ? "mismatch: " : ", ") + f.field;
        v.push_back(flag(claim, sv.pass, sv.predicted.structure + " " +
                                             sv.predicted.vertex_count.str() +
                                             " vertices",
                         sv.measured.describe(), failed));
      }
    }
    r.measured["subconstituents"] = subs;

    std::optional<MeasuredParams> lifted_measured;
    if (spec.nu() >= 2) {
      const Subconstituent lifted = second_without_base_fiber(g, base);
      const SubVerification sv =
          compare_sub(predict_sub(spec, 2), census(lifted));
      lifted_measured = sv.measured;
      r.diagnostics["second_without_base_fiber"] = sub_json(sv);
      r.diagnostics["base_fiber_extra_vertices"] =
          g.fibers()[g.residue_labels()[base]].size() - 1;
    }
    // The odd-delta higher-rank statement is labelled as the first
    // subconstituent but its vertex count is that of the second; test it
    // against every candidate.
    const SubconstituentPrediction claim = odd_delta_higher_rank_claim(spec);
    if (claim.covered()) {
      Json matches = Json::array();
      if (compare_sub(claim, sub_measured[0]).pass)
        matches.push_back("first");
      if (compare_sub(claim, sub_measured[1]).pass)
        matches.push_back("second");
      if (lifted_measured && compare_sub(claim, *lifted_measured).pass)
        matches.push_back("second_without_base_fiber");
      r.diagnostics["odd_delta_claim_matches"] = matches;
    }
  }
  r.timings["subconstituent_ms"] = ms_since(t);
  r.timings["total_ms"] = ms_since(t_start);
  return r;
}

Json ParamReport::to_json() const {
  Json verdict_list = Json::array();
  for (const auto &v : verdicts)
    verdict_list.push_back(Json{{"claim", v.claim},
                                {"status", to_string(v.status)},
                                {"predicted", v.predicted},
                                {"measured", v.measured},
                                {"note", v.note}});
  Json j{{"schema_version", kSchemaVersion},
         {"tool", {{"name", "orthograph"}, {"version", kToolVersion}}},
         {"spec", spec_json(spec)},
         {"predicted", predicted}};
  if (!verdicts.empty()) {
    j["measured"] = measured;
    j["verdicts"] = verdict_list;
    j["diagnostics"] = diagnostics;
    j["summary"] = Json{{"pass", count(Status::Pass)},
                        {"fail", count(Status::Fail)},
                        {"inconclusive", count(Status::Inconclusive)},
                        {"no_theorem", count(Status::NoTheorem)},
                        {"overall", failed() ? "fail" : "pass"}};
    j["timings"] = timings;
  }
  return j;
}

const std::vector<std::string> &summary_claims() {
  static const std::vector<std::string> claims{
      "residue.vertex_count",      "residue.degree",
      "residue.complete",          "residue.lambda",
      "residue.mu",                "vertex_unit_position",
      "vertex_count",              "regularity",
      "adjacent_common_neighbors", "nonadjacent_common_neighbors",
      "nonadjacent_cross_fiber",   "nonadjacent_same_fiber",
      "classification",            "formula.lambda_dual_form",
      "formula.c2_equals_degree",  "lifting.fiber_size",
      "lifting.partition",         "lifting.adjacency_descends",
      "lifting.adjacency_lifts",   "fiber_wreath",
      "lifted_coloring",           "chromatic_number",
      "automorphism_order",        "vertex_transitivity",
      "arc_transitivity",          "subconstituent1",
      "subconstituent2"};
  return claims;
}

std::string summary_csv_header() {
  std::string s = "n,nu,delta,z,status,vertices,degree,structure";
  for (const auto &c : summary_claims())
    s += "," + c;
  return s;
}

namespace {

std::string spec_prefix(const FormSpec &spec) {
  return std::to_string(spec.n()) + "," + std::to_string(spec.nu()) + "," +
         std::to_string(spec.delta()) + "," + std::to_string(spec.z());
}

} // namespace

std::string summary_csv_row(const ParamReport &r) {
  std::ostringstream os;
  os << spec_prefix(r.spec) << "," << (r.failed() ? "fail" : "pass");
  const Json &graph = r.measured.contains("graph") ? r.measured["graph"]
                                                   : Json::object();
  os << "," << (graph.contains("vertex_count") ? graph["vertex_count"].dump() : "");
  std::string degree;
  if (graph.contains("degrees") && graph["degrees"].size() == 1)
    degree = graph["degrees"].begin().key();
  os << "," << degree;
  os << ","
     << (graph.contains("classification")
             ? graph["classification"].get<std::string>()
             : "");
  for (const auto &c : summary_claims()) {
    const Verdict *v = r.find(c);
    os << "," << (v ? to_string(v->status) : "n/a");
  }
  return os.str();
}

std::string summary_csv_skipped(const FormSpec &spec, std::uint64_t predicted) {
  std::string s = spec_prefix(spec) + ",skipped: size," +
                  std::to_string(predicted) + ",,";
  for (std::size_t i = 0; i < summary_claims().size(); ++i)
    s += ",n/a";
  return s;
}

void write_dimacs(std::ostream &os, const BitMatrix &adj) {
  std::uint64_t edges = 0;
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j : adj.row_indices(i))
      edges += j > i;
  os << "p edge " << adj.size() << " " << edges << "\n";
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j : adj.row_indices(i))
      if (j > i)
        os << "e " << i + 1 << " " << j + 1 << "\n";
}

Json adjacency_json(const FormSpec &spec, const BitMatrix &adj,
                    std::span<const std::size_t> parent_ids) {
  Json lists = Json::array();
  for (std::size_t i = 0; i < adj.size(); ++i)
    lists.push_back(adj.row_indices(i));
  Json j{{"schema_version", kSchemaVersion},
         {"spec", spec_json(spec)},
         {"vertex_count", adj.size()},
         {"adjacency", lists}};
  if (!parent_ids.empty())
    j["parent_ids"] = std::vector<std::size_t>(parent_ids.begin(),
                                               parent_ids.end());
  return j;
}

void write_vertex_csv(std::ostream &os, const PointSet &points,
                      std::span<const std::size_t> ids) {
  os << "id";
  for (int k = 0; k < points.spec().dim(); ++k)
    os << ",a" << k + 1;
  os << "\n";
  const std::size_t count = ids.empty() ? points.size() : ids.size();
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t v = ids.empty() ? i : ids[i];
    os << i;
    for (Residue x : points[v])
      os << "," << x;
    os << "\n";
  }
}

} // namespace orthograph
