#include "cli.h"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tiling_disc/errors.h"
#include "tiling_disc/graph_io.h"
#include "tiling_disc/random_graphs.h"
#include "tiling_disc/solver.h"

namespace tiling_disc::cli {
namespace {

using nlohmann::json;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string fixed(double x, int digits) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << x;
  return ss.str();
}

json tiling_json(const Tiling& t) {
  json tiles = json::array();
  for (const Clique& c : t) {
    tiles.push_back(std::vector<Vertex>(c.begin(), c.end()));
  }
  return tiles;
}

void write_tiles(std::ostream& out, const Tiling& t) {
  for (const Clique& c : t) {
    out << 't';
    for (Vertex v : c) out << ' ' << v;
    out << '\n';
  }
}

// Applies every check the families guarantee to one tiling.
void check_tiling(const Construction& c, const Tiling& t, ExtremalReport& report) {
  if (!is_perfect_tiling(c.graph, t, c.meta.r)) {
    report.all_perfect = false;
    return;
  }
  const std::int64_t disc = discrepancy(c.labeling, t);
  const TypeCensus census = type_census(c.meta, t);
  if (report.checked == 0) {
    report.min_disc = report.max_disc = disc;
    report.census = census;
  } else {
    report.min_disc = std::min(report.min_disc, disc);
    report.max_disc = std::max(report.max_disc, disc);
    if (!(census == report.census)) report.census_consistent = false;
  }
  if (census_discrepancy(c.meta, t) != disc) report.census_route_agrees = false;
  ++report.checked;
}

}  // namespace

OutputFormat format_from_string(const std::string& name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "jsonl") return OutputFormat::kJsonLines;
  throw ParameterError("unknown format '" + name + "'");
}

void validate(const RunConfig& config) {
  if (config.restart_budget < 0) throw ParameterError("restart budget must be positive");
  if (config.threads < 0) throw ParameterError("thread count must be positive");
  if (!config.input_path.empty()) {
    std::ifstream probe(config.input_path);
    if (!probe) throw ParameterError("cannot read " + config.input_path);
  }
}

ExtremalReport run_verify_extremal(const ExtremalParams& params, const RunConfig& config) {
  validate(config);
  if (params.samples < 0) throw ParameterError("sample count must be non-negative");
  const Construction c = make_construction(params.family, params.param, params.n);
  ExtremalReport report;
  report.family = params.family;
  report.r = c.meta.r;
  report.n = c.meta.n;
  report.exhaustive = c.meta.n <= kExhaustiveVertexLimit;

  if (report.exhaustive) {
    enumerate_perfect_tilings(c.graph, c.meta.r, [&](const TilingView& view) {
      check_tiling(c, view.to_tiling(), report);
    });
    return report;
  }
  check_tiling(c, canonical_tiling(c.meta, c.graph), report);
  const std::optional<int> budget =
      config.restart_budget > 0 ? std::optional<int>(config.restart_budget) : std::nullopt;
  for (int s = 0; s < params.samples; ++s) {
    const auto t = sample_tiling(c.graph, c.meta.r, config.seed + s, budget);
    if (!t) {
      ++report.sample_failures;
      continue;
    }
    check_tiling(c, *t, report);
  }
  return report;
}

void write_extremal_report(std::ostream& out, const ExtremalReport& report,
                           OutputFormat format) {
  const std::string mode = report.exhaustive ? "exhaustive" : "sampled";
  const std::string verdict = report.pass() ? "PASS" : "FAIL";
  switch (format) {
    case OutputFormat::kText:
      out << "family=" << to_string(report.family) << " r=" << report.r
          << " n=" << report.n << " mode=" << mode << " checked=" << report.checked
          << " min=" << report.min_disc << " max=" << report.max_disc
          << " t1=" << report.census.t1 << " t2=" << report.census.t2
          << " t3=" << report.census.t3;
      if (report.sample_failures) out << " sample_failures=" << report.sample_failures;
      if (!report.census_consistent) out << " census=INCONSISTENT";
      if (!report.census_route_agrees) out << " census_route=MISMATCH";
      if (!report.all_perfect) out << " tiling=NOT_PERFECT";
      out << ' ' << verdict << '\n';
      break;
    case OutputFormat::kCsv:
      out << "family,r,n,mode,checked,min,max,t1,t2,t3,sample_failures,verdict\n"
          << to_string(report.family) << ',' << report.r << ',' << report.n << ','
          << mode << ',' << report.checked << ',' << report.min_disc << ','
          << report.max_disc << ',' << report.census.t1 << ',' << report.census.t2
          << ',' << report.census.t3 << ',' << report.sample_failures << ','
          << verdict << '\n';
      break;
    case OutputFormat::kJsonLines: {
      json j = {{"family", to_string(report.family)},
                {"r", report.r},
                {"n", report.n},
                {"mode", mode},
                {"checked", report.checked},
                {"min", report.min_disc},
                {"max", report.max_disc},
                {"census", {{"t1", report.census.t1},
                            {"t2", report.census.t2},
                            {"t3", report.census.t3}}},
                {"census_consistent", report.census_consistent},
                {"census_route_agrees", report.census_route_agrees},
                {"sample_failures", report.sample_failures},
                {"pass", report.pass()}};
      out << j.dump() << '\n';
      break;
    }
  }
}

namespace {

Graph scan_host(const ThresholdParams& params) {
  if (params.host == ScanHost::kComplete) return Graph::complete(params.n);
  if (params.n % (params.r + 1) != 0) {
    throw ParameterError("Turan host needs r+1 to divide n");
  }
  std::vector<int> sizes(params.r + 1, params.n / (params.r + 1));
  return Graph::complete_multipartite(sizes);
}

// Labels between the r+1 balanced classes follow the lexicographic half/half
// pattern of K_{r+1}; edges inside a class are +1.
EdgeLabeling turan_labeling(const Graph& g, int r) {
  const int size = g.order() / (r + 1);
  const int half = (r + 1) * r / 4;
  return EdgeLabeling(g, [size, half, r](Vertex a, Vertex b) {
    int ca = a / size, cb = b / size;
    if (ca == cb) return 1;
    if (ca > cb) std::swap(ca, cb);
    const int index = ca * (2 * (r + 1) - ca - 1) / 2 + (cb - ca - 1);
    return index < half ? 1 : -1;
  });
}

}  // namespace

std::vector<ThresholdRow> run_threshold_scan(const ThresholdParams& params,
                                             const RunConfig& config) {
  validate(config);
  if (params.r < 1 || params.n < params.r || params.n % params.r != 0) {
    throw ParameterError("threshold scan needs r | n");
  }
  if (params.samples < 0) throw ParameterError("sample count must be non-negative");
  const Graph host = scan_host(params);
  const int host_min = min_degree(host);
  Rng rng(config.seed);
  const bool exact = params.n <= kExhaustiveVertexLimit;
  SolverOptions options;
  options.threads = config.threads;
  options.node_limit = config.node_limit;
  const std::optional<int> restarts =
      config.restart_budget > 0 ? std::optional<int>(config.restart_budget) : std::nullopt;

  std::vector<ThresholdRow> rows;
  for (double fraction : params.fractions) {
    if (fraction < 0 || fraction > 1) {
      throw ParameterError("degree fractions must lie in [0, 1]");
    }
    ThresholdRow row;
    row.fraction = fraction;
    row.target_min_degree = static_cast<int>(std::ceil(fraction * host_min - 1e-9));
    row.samples = params.samples;
    row.mode = "exact";
    for (int s = 0; s < params.samples; ++s) {
      const Graph g = *min_degree_subgraph(host, row.target_min_degree, rng);
      EdgeLabeling f;
      switch (params.labeling) {
        case ScanLabeling::kPlus:
          f = EdgeLabeling::constant(g, 1);
          break;
        case ScanLabeling::kRandom:
          f = random_labeling(g, rng);
          break;
        case ScanLabeling::kTuran:
          f = turan_labeling(g, params.r);
          break;
      }
      std::optional<std::int64_t> best;
      bool solved = false;
      if (exact) {
        if (!exists_perfect_tiling(g, params.r)) continue;
        try {
          best = discrepancy_extremes(g, f, params.r, SearchMode::kBranchAndBound, options)
                     .max_abs();
          solved = true;
        } catch (const BudgetExceeded&) {
        }
      }
      if (!solved) {
        row.mode = "sampled";
        for (int k = 0; k < 100; ++k) {
          const auto t = sample_tiling(g, params.r, rng.next(), restarts);
          if (!t) break;
          const std::int64_t d = std::llabs(discrepancy(f, *t));
          best = best ? std::max(*best, d) : d;
        }
        if (!best) continue;
      }
      ++row.feasible;
      row.max_abs_disc = row.max_abs_disc ? std::max(*row.max_abs_disc, *best) : *best;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_threshold_rows(std::ostream& out, const ThresholdParams& params,
                          const RunConfig& config, const std::vector<ThresholdRow>& rows) {
  const char* host = params.host == ScanHost::kComplete ? "complete" : "turan";
  const char* labels = params.labeling == ScanLabeling::kPlus     ? "plus"
                       : params.labeling == ScanLabeling::kRandom ? "random"
                                                                  : "turan";
  if (config.format == OutputFormat::kJsonLines) {
    out << json{{"run", "threshold-scan"}, {"exploratory", true}, {"r", params.r},
                {"n", params.n}, {"host", host}, {"labeling", labels},
                {"seed", config.seed}}
               .dump()
        << '\n';
    for (const auto& row : rows) {
      json j = {{"fraction", row.fraction},
                {"target_min_degree", row.target_min_degree},
                {"samples", row.samples},
                {"feasible", row.feasible},
                {"feasible_rate", row.feasible_rate()},
                {"mode", row.mode}};
      j["max_abs_disc"] = row.max_abs_disc ? json(*row.max_abs_disc) : json(nullptr);
      out << j.dump() << '\n';
    }
    return;
  }
  out << "# EXPLORATORY threshold-scan r=" << params.r << " n=" << params.n
      << " host=" << host << " labeling=" << labels << " seed=" << config.seed << '\n';
  out << "fraction,target_min_degree,samples,feasible,feasible_rate,max_abs_disc,mode\n";
  for (const auto& row : rows) {
    out << fixed(row.fraction, 4) << ',' << row.target_min_degree << ',' << row.samples
        << ',' << row.feasible << ',' << fixed(row.feasible_rate(), 4) << ','
        << (row.max_abs_disc ? std::to_string(*row.max_abs_disc) : "NA") << ','
        << row.mode << '\n';
  }
}

void write_template_rows(std::ostream& out, const std::vector<TemplateCheck>& rows,
                         OutputFormat format) {
  auto i_text = [](const TemplateCheck& row) {
    const bool fixed_labels = row.spec.scenario == Scenario::kCase2a ||
                              row.spec.scenario == Scenario::kCase2b;
    return fixed_labels ? std::string("NA") : std::to_string(row.spec.i);
  };
  if (format == OutputFormat::kJsonLines) {
    for (const auto& row : rows) {
      json j = {{"scenario", to_string(row.spec.scenario)},
                {"r", row.spec.r},
                {"s", row.s},
                {"s_prime", row.s_prime},
                {"disc_K1", row.disc_k1},
                {"disc_K2", row.disc_k2},
                {"diff", row.diff},
                {"expected", row.expected.value},
                {"expected_printed", row.expected.printed},
                {"match", row.match()}};
      j["i"] = i_text(row) == "NA" ? json(nullptr) : json(row.spec.i);
      out << j.dump() << '\n';
    }
    return;
  }
  out << "scenario,r,i,s,s_prime,disc_K1,disc_K2,diff,expected,match\n";
  for (const auto& row : rows) {
    out << to_string(row.spec.scenario) << ',' << row.spec.r << ',' << i_text(row) << ','
        << row.s << ',' << row.s_prime << ',' << row.disc_k1 << ',' << row.disc_k2
        << ',' << row.diff << ',' << row.expected.value << ','
        << (row.match() ? "true" : "false") << '\n';
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrepancy of perfect clique tilings in +-1 labelled graphs",
               "tiling-disc"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, csv or jsonl")
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));
    sub->add_option("--out", config.output_path, "Write the report here instead of stdout");
    sub->add_option("--seed", config.seed, "Seed for every randomized step");
    sub->add_option("--threads", config.threads, "Worker threads (0: default)");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Emit an extremal construction");
  std::string family = "mod03";
  int gen_r = 3, gen_m = 1, gen_n = 12;
  std::string meta_out;
  gen->add_option("--family", family, "mod03, mod1, mod2 or matching")
      ->check(CLI::IsMember({"mod03", "mod1", "mod2", "matching"}));
  gen->add_option("--r", gen_r, "Clique size (mod03)");
  gen->add_option("--m", gen_m, "r = 4m+1 (mod1) or 4m+2 (mod2)");
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--meta-out", meta_out, "Also write the meta sidecar line here");
  add_common(gen);

  // solve
  auto* solve = app.add_subcommand("solve", "Exact discrepancy extremes of a graph file");
  int solve_r = 0;
  std::string mode = "bnb", objective = "extremes";
  int solve_samples = 1000;
  solve->add_option("input", config.input_path, "Graph file (default: stdin)");
  solve->add_option("--r", solve_r, "Tile size (default: header value)");
  solve->add_option("--mode", mode, "exhaustive or bnb")
      ->check(CLI::IsMember({"exhaustive", "bnb"}));
  solve->add_option("--objective", objective, "extremes or maxabs")
      ->check(CLI::IsMember({"extremes", "maxabs"}));
  solve->add_option("--budget", config.node_limit,
                    "Search-node budget; past it, fall back to sampling (0: none)");
  solve->add_option("--samples", solve_samples, "Sampled tilings in the fallback");
  solve->add_option("--restarts", config.restart_budget, "Sampler restart budget");
  add_common(solve);

  // verify-extremal
  auto* verify = app.add_subcommand("verify-extremal",
                                    "Check that every perfect tiling has discrepancy 0");
  int ver_r = 3, ver_m = 1, ver_n = 12, ver_samples = 1000;
  std::string ver_family = "mod03";
  verify->add_option("--family", ver_family)
      ->check(CLI::IsMember({"mod03", "mod1", "mod2", "matching"}));
  verify->add_option("--r", ver_r, "Clique size (mod03)");
  verify->add_option("--m", ver_m, "Family parameter (mod1, mod2)");
  verify->add_option("--n", ver_n, "Vertex count")->required();
  verify->add_option("--samples", ver_samples, "Sampled tilings beyond exhaustive range");
  verify->add_option("--restarts", config.restart_budget, "Sampler restart budget");
  add_common(verify);

  // verify-templates
  auto* templates = app.add_subcommand("verify-templates",
                                       "Recompute template gadget discrepancies");
  int r_min = 3, r_max = 8;
  std::string scenario_list;
  templates->add_option("--r-min", r_min);
  templates->add_option("--r-max", r_max);
  templates->add_option("--scenarios", scenario_list,
                        "Comma-separated scenarios (default: all)");
  add_common(templates);

  // threshold-scan
  auto* scan = app.add_subcommand("threshold-scan",
                                  "EXPLORATORY: feasibility and max |discrepancy| vs min degree");
  ThresholdParams tp;
  std::string fractions = "0.5,0.75,1.0", host = "complete", labeling = "random";
  scan->add_option("--r", tp.r)->required();
  scan->add_option("--n", tp.n)->required();
  scan->add_option("--fractions", fractions, "Comma-separated fractions of the host min degree");
  scan->add_option("--samples", tp.samples);
  scan->add_option("--host", host)->check(CLI::IsMember({"complete", "turan"}));
  scan->add_option("--labeling", labeling)->check(CLI::IsMember({"plus", "random", "turan"}));
  scan->add_option("--budget", config.node_limit, "Search-node budget per exact solve");
  scan->add_option("--restarts", config.restart_budget, "Sampler restart budget");
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file_out;
  std::ostream* sink = &out;
  try {
    config.format = format_from_string(format);
    validate(config);
    if (!config.output_path.empty()) {
      file_out.open(config.output_path);
      if (!file_out) throw ParameterError("cannot write " + config.output_path);
      sink = &file_out;
    }

    if (*gen) {
      const Family fam = family_from_string(family);
      const int param = fam == Family::kMod03 ? gen_r : gen_m;
      const Construction c = make_construction(fam, param, gen_n);
      LabeledGraph lg{c.graph, c.labeling, c.meta.r, meta_line(c.meta)};
      write_graph(*sink, lg);
      if (!meta_out.empty()) {
        std::ofstream m(meta_out);
        if (!m) throw ParameterError("cannot write " + meta_out);
        m << "meta " << *lg.meta << '\n';
      }
      return kExitOk;
    }

    if (*solve) {
      LabeledGraph lg = config.input_path.empty() ? read_graph(std::cin)
                                                  : read_graph_file(config.input_path);
      const int r = solve_r > 0 ? solve_r : lg.r;
      if (r <= 0) throw ParameterError("tile size missing: pass --r or set it in the header");
      SolverOptions options;
      options.threads = config.threads;
      options.node_limit = config.node_limit;
      const SearchMode search =
          mode == "exhaustive" ? SearchMode::kExhaustive : SearchMode::kBranchAndBound;

      DiscrepancyExtremes ex;
      bool sampled = false;
      try {
        ex = discrepancy_extremes(lg.graph, lg.labeling, r, search, options);
      } catch (const BudgetExceeded&) {
        sampled = true;
        bool any = false;
        const std::optional<int> restarts =
            config.restart_budget > 0 ? std::optional<int>(config.restart_budget)
                                      : std::nullopt;
        for (int s = 0; s < solve_samples; ++s) {
          const auto t = sample_tiling(lg.graph, r, config.seed + s, restarts);
          if (!t) continue;
          const std::int64_t d = discrepancy(lg.labeling, *t);
          if (!any || d < ex.min_disc) {
            ex.min_disc = d;
            ex.witness_min = *t;
          }
          if (!any || d > ex.max_disc) {
            ex.max_disc = d;
            ex.witness_max = *t;
          }
          any = true;
        }
        if (!any) throw InfeasibleError("no tiling found by sampling after the budget ran out");
      }
      const std::string count =
          ex.tilings_seen ? std::to_string(*ex.tilings_seen) : std::string("NA");
      const bool maxabs = objective == "maxabs";
      const Tiling& abs_witness =
          std::llabs(ex.min_disc) > std::llabs(ex.max_disc) ? ex.witness_min : ex.witness_max;

      if (config.format == OutputFormat::kJsonLines) {
        json j = {{"min", ex.min_disc}, {"max", ex.max_disc},
                  {"mode", sampled ? "sampled" : mode}};
        j["count"] = ex.tilings_seen ? json(*ex.tilings_seen) : json(nullptr);
        if (maxabs) {
          j["maxabs"] = ex.max_abs();
          j["witness"] = tiling_json(abs_witness);
        } else {
          j["witness_min"] = tiling_json(ex.witness_min);
          j["witness_max"] = tiling_json(ex.witness_max);
        }
        *sink << j.dump() << '\n';
      } else if (config.format == OutputFormat::kCsv) {
        *sink << "min,max,count,maxabs,mode\n"
              << ex.min_disc << ',' << ex.max_disc << ',' << count << ',' << ex.max_abs()
              << ',' << (sampled ? "sampled" : mode) << '\n';
      } else {
        *sink << "# tiling-disc solve n=" << lg.graph.order() << " r=" << r
              << " mode=" << (sampled ? "sampled" : mode) << " objective=" << objective
              << '\n';
        *sink << "extremes min=" << ex.min_disc << " max=" << ex.max_disc
              << " count=" << count << '\n';
        if (maxabs) {
          *sink << "maxabs=" << ex.max_abs() << '\n';
          write_tiles(*sink, abs_witness);
        } else {
          *sink << "# witness min\n";
          write_tiles(*sink, ex.witness_min);
          *sink << "# witness max\n";
          write_tiles(*sink, ex.witness_max);
        }
      }
      return kExitOk;
    }

    if (*verify) {
      ExtremalParams params;
      params.family = family_from_string(ver_family);
      params.param = params.family == Family::kMod03 ? ver_r : ver_m;
      params.n = ver_n;
      params.samples = ver_samples;
      const ExtremalReport report = run_verify_extremal(params, config);
      if (config.format != OutputFormat::kJsonLines) {
        *sink << "# tiling-disc verify-extremal family=" << ver_family
              << " n=" << ver_n << " samples=" << ver_samples << " seed=" << config.seed
              << '\n';
      }
      write_extremal_report(*sink, report, config.format);
      return report.pass() ? kExitOk : kExitVerificationFailed;
    }

    if (*templates) {
      if (r_min < 3 || r_max < r_min) throw ParameterError("need 3 <= r-min <= r-max");
      std::vector<Scenario> scenarios;
      for (const auto& name : split_list(scenario_list)) {
        scenarios.push_back(scenario_from_string(name));
      }
      if (scenarios.empty()) scenarios = all_scenarios();
      const auto rows = sweep_templates(scenarios, r_min, r_max);
      write_template_rows(*sink, rows, config.format);
      for (const auto& row : rows) {
        if (!row.match()) return kExitVerificationFailed;
      }
      return kExitOk;
    }

    if (*scan) {
      tp.fractions.clear();
      for (const auto& f : split_list(fractions)) tp.fractions.push_back(std::stod(f));
      tp.host = host == "turan" ? ScanHost::kTuran : ScanHost::kComplete;
      tp.labeling = labeling == "plus"    ? ScanLabeling::kPlus
                    : labeling == "turan" ? ScanLabeling::kTuran
                                          : ScanLabeling::kRandom;
      const auto rows = run_threshold_scan(tp, config);
      write_threshold_rows(*sink, tp, config, rows);
      return kExitOk;
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace tiling_disc::cli
