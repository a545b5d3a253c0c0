// orthograph: build orthogonal graphs over Z_{2^n} and check their
// closed-form parameters against brute-force measurement.

#include "orthograph/errors.hpp"
#include "orthograph/kernels.hpp"
#include "orthograph/report.hpp"
#include "orthograph/subconstituent.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace orthograph;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// "3", "1..3" or "0,1,2".
std::vector<int> parse_range(const std::string &text, const char *name) {
  std::vector<int> out;
  auto number = [&](const std::string &s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0 || used != s.size())
      throw UsageError(std::string("--") + name + ": bad value '" + s + "'");
    return v;
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = number(text.substr(0, dots));
    const int hi = number(text.substr(dots + 2));
    if (lo > hi)
      throw UsageError(std::string("--") + name + ": empty range " + text);
    for (int v = lo; v <= hi; ++v)
      out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    out.push_back(number(item));
  if (out.empty())
    throw UsageError(std::string("--") + name + ": empty list");
  return out;
}

struct Options {
  std::string n = "1", nu = "1", delta = "0", z = "1";
  std::uint64_t cap = kDefaultVertexCap;
  std::uint64_t budget_color = ColoringBudget{}.max_nodes;
  std::uint64_t budget_aut = AutBudget{}.max_nodes;
  std::string format = "json";
  std::string out;
  long base_vertex = -1;
  int subconstituent = 0;
  bool no_subconstituents = false;
};

FormSpec single_spec(const Options &o) {
  const auto n = parse_range(o.n, "n"), nu = parse_range(o.nu, "nu"),
             delta = parse_range(o.delta, "delta"), z = parse_range(o.z, "z");
  if (n.size() != 1 || nu.size() != 1 || delta.size() != 1 || z.size() != 1)
    throw UsageError("this command takes a single (n, nu, delta, z)");
  if (z[0] < 0)
    throw UsageError("--z must be non-negative");
  return FormSpec(n[0], nu[0], delta[0], static_cast<Residue>(z[0]));
}

VerifyOptions verify_options(const Options &o) {
  VerifyOptions v;
  v.cap = o.cap;
  v.color_budget.max_nodes = o.budget_color;
  v.aut_budget.max_nodes = o.budget_aut;
  v.subconstituents = !o.no_subconstituents;
  if (o.base_vertex >= 0)
    v.base_vertex = static_cast<std::size_t>(o.base_vertex);
  return v;
}

/// Writes to --out if given, else stdout.
void emit(const Options &o, const std::string &text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f)
    throw UsageError("cannot open " + o.out);
  f << text;
}

std::string text_report(const ParamReport &r) {
  std::ostringstream os;
  os << r.spec.label() << "\n";
  for (const auto &v : r.verdicts) {
    os << "  " << to_string(v.status) << "  " << v.claim << ": predicted "
       << v.predicted << ", measured " << v.measured;
    if (!v.note.empty())
      os << " (" << v.note << ")";
    os << "\n";
  }
  os << "  " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail)
     << " fail, " << r.count(Status::Inconclusive) << " inconclusive, "
     << r.count(Status::NoTheorem) << " no-theorem\n";
  return os.str();
}

int cmd_params(const Options &o) {
  const ParamReport r = params_report(single_spec(o));
  if (o.format == "json")
    emit(o, r.to_json().dump(2) + "\n");
  else
    throw UsageError("params supports --format json");
  return 0;
}

int cmd_verify(const Options &o) {
  const ParamReport r = verify_spec(single_spec(o), verify_options(o));
  if (o.format == "json")
    emit(o, r.to_json().dump(2) + "\n");
  else if (o.format == "text")
    emit(o, text_report(r));
  else if (o.format == "csv")
    emit(o, summary_csv_header() + "\n" + summary_csv_row(r) + "\n");
  else
    throw UsageError("verify supports --format json, text or csv");
  return r.failed() ? kExitFail : 0;
}

int cmd_sweep(const Options &o) {
  if (o.format != "json" && o.format != "csv")
    throw UsageError("sweep supports --format json or csv");
  // Validate the whole grid before enumerating anything.
  std::vector<FormSpec> grid;
  for (int n : parse_range(o.n, "n"))
    for (int nu : parse_range(o.nu, "nu"))
      for (int delta : parse_range(o.delta, "delta"))
        for (int z : parse_range(o.z, "z")) {
          if (z < 0)
            throw UsageError("--z must be non-negative");
          // z is ignored unless delta = 2 and is reduced mod 2^n.
          const FormSpec spec(n, nu, delta, static_cast<Residue>(z));
          if (std::find(grid.begin(), grid.end(), spec) == grid.end())
            grid.push_back(spec);
        }
  const fs::path dir = o.out;
  if (!o.out.empty())
    fs::create_directories(dir);

  const VerifyOptions vo = verify_options(o);
  std::string summary = summary_csv_header() + "\n";
  bool any_fail = false;
  for (const FormSpec &spec : grid) {
    const std::uint64_t predicted = predicted_vertex_count(spec);
    if (predicted > o.cap) {
      summary += summary_csv_skipped(spec, predicted) + "\n";
      std::cerr << spec.label() << ": skipped: size " << predicted << "\n";
      continue;
    }
    const ParamReport r = verify_spec(spec, vo);
    any_fail = any_fail || r.failed();
    summary += summary_csv_row(r) + "\n";
    std::cerr << spec.label() << ": " << (r.failed() ? "fail" : "pass")
              << "\n";
    if (!o.out.empty() && o.format == "json") {
      const std::string stem = "n" + std::to_string(spec.n()) + "_nu" +
                               std::to_string(spec.nu()) + "_delta" +
                               std::to_string(spec.delta()) + "_z" +
                               std::to_string(spec.z());
      std::ofstream f(dir / (stem + ".json"));
      f << r.to_json().dump(2) << "\n";
    }
  }
  if (o.out.empty()) {
    std::cout << summary;
  } else {
    std::ofstream f(dir / "summary.csv");
    f << summary;
  }
  return any_fail ? kExitFail : 0;
}

int cmd_export(const Options &o) {
  const FormSpec spec = single_spec(o);
  const OrthoGraph g = build_graph(spec, o.cap);
  BitMatrix adj = g.adjacency();
  std::vector<std::size_t> ids;
  if (o.subconstituent != 0) {
    if (o.subconstituent != 1 && o.subconstituent != 2)
      throw UsageError("--subconstituent must be 1 or 2");
    Subconstituent s =
        subconstituent(g, o.subconstituent,
                       o.base_vertex >= 0
                           ? std::optional<std::size_t>(o.base_vertex)
                           : std::nullopt);
    adj = std::move(s.adjacency);
    ids = std::move(s.ids);
  }
  std::ostringstream os;
  if (o.format == "dimacs")
    write_dimacs(os, adj);
  else if (o.format == "json")
    os << adjacency_json(spec, adj, ids).dump() << "\n";
  else if (o.format == "csv")
    write_vertex_csv(os, g.vertices(), ids);
  else
    throw UsageError("export supports --format dimacs, json or csv");
  emit(o, os.str());
  return 0;
}

void add_spec_flags(CLI::App *cmd, Options &o, bool ranges) {
  const std::string suffix = ranges ? " (value, a..b or a,b,c)" : "";
  cmd->add_option("--n", o.n, "ring exponent: Z_{2^n}" + suffix)->required();
  cmd->add_option("--nu", o.nu, "Witt index" + suffix)->required();
  cmd->add_option("--delta", o.delta, "anisotropic part, 0, 1 or 2" + suffix)
      ->required();
  cmd->add_option("--z", o.z, "odd constant of the delta = 2 block" + suffix)
      ->capture_default_str();
  cmd->add_option("--cap", o.cap, "refuse graphs with more vertices")
      ->capture_default_str();
  cmd->add_option("--out", o.out, ranges ? "output directory" : "output file");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Orthogonal graphs over Z_{2^n}: construction and checks"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Options o;

  auto *params = app.add_subcommand("params", "predicted parameters only");
  add_spec_flags(params, o, false);
  params->add_option("--format", o.format, "json")->capture_default_str();

  auto *verify = app.add_subcommand("verify", "build, measure and compare");
  auto *sweep = app.add_subcommand("sweep", "verify a grid of parameters");
  for (auto *cmd : {verify, sweep}) {
    add_spec_flags(cmd, o, cmd == sweep);
    cmd->add_option("--budget-color", o.budget_color,
                    "colouring search node budget")
        ->capture_default_str();
    cmd->add_option("--budget-aut", o.budget_aut,
                    "automorphism search node budget")
        ->capture_default_str();
    cmd->add_flag("--no-subconstituents", o.no_subconstituents);
  }
  verify->add_option("--format", o.format, "json, text or csv")
      ->capture_default_str();
  verify->add_option("--base-vertex", o.base_vertex,
                     "debug: subconstituents around this vertex id");
  sweep->add_option("--format", o.format, "json or csv")->capture_default_str();

  auto *exp = app.add_subcommand("export", "write the graph");
  add_spec_flags(exp, o, false);
  exp->add_option("--format", o.format, "dimacs, json or csv (vertex table)")
      ->capture_default_str();
  exp->add_option("--subconstituent", o.subconstituent,
                  "export O(1) or O(2) instead");
  exp->add_option("--base-vertex", o.base_vertex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    configure_threads();
    if (*params)
      return cmd_params(o);
    if (*verify)
      return cmd_verify(o);
    if (*sweep)
      return cmd_sweep(o);
    return cmd_export(o);
  } catch (const ResourceError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) { // usage and config errors
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
