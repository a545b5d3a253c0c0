#pragma once

#include "orthograph/automorphism.hpp"
#include "orthograph/coloring.hpp"
#include "orthograph/formulas.hpp"
#include "orthograph/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace orthograph {

inline constexpr const char *kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Inconclusive, NoTheorem };

const char *to_string(Status s);

/// One checked claim. `claim` names the statement being verified.
struct Verdict {
  std::string claim;
  Status status = Status::Inconclusive;
  std::string predicted;
  std::string measured;
  std::string note;
};

struct VerifyOptions {
  std::uint64_t cap = kDefaultVertexCap;
  ColoringBudget color_budget;
  /// Graphs above this size skip the chromatic solver.
  std::size_t color_max_vertices = 10'000;
  AutBudget aut_budget;
  bool subconstituents = true;
  /// Debug: measure subconstituents around this vertex instead of [e1].
  std::optional<std::size_t> base_vertex;
};

struct ParamReport {
  explicit ParamReport(FormSpec s) : spec(std::move(s)) {}

  FormSpec spec;
  Json predicted = Json::object();
  Json measured = Json::object();
  Json diagnostics = Json::object();
  std::vector<Verdict> verdicts;
  Json timings = Json::object();

  std::size_t count(Status s) const;
  bool failed() const { return count(Status::Fail) > 0; }
  const Verdict *find(const std::string &claim) const;

  /// Full report; everything outside "timings" is deterministic.
  Json to_json() const;
};

Json prediction_json(const TheoremPrediction &p);
Json prediction_json(const SubconstituentPrediction &p);

/// Predictions only; no graph is built.
ParamReport params_report(const FormSpec &spec);

/// Predictions, brute-force measurements and verdicts.
ParamReport verify_spec(const FormSpec &spec, const VerifyOptions &options = {});

/// Claims that get their own column in the sweep summary, in column order.
const std::vector<std::string> &summary_claims();
std::string summary_csv_header();
std::string summary_csv_row(const ParamReport &report);
std::string summary_csv_skipped(const FormSpec &spec, std::uint64_t predicted);

// Graph export.
void write_dimacs(std::ostream &os, const BitMatrix &adj);
Json adjacency_json(const FormSpec &spec, const BitMatrix &adj,
                    std::span<const std::size_t> parent_ids = {});
void write_vertex_csv(std::ostream &os, const PointSet &points,
                      std::span<const std::size_t> ids = {});

} // namespace orthograph
