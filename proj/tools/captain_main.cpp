// captain: TTP-sequence attribution toolkit.
//
// Subcommands: ingest (dataset -> baseline/eval files), attribute (rank
// groups for a query TTP list), evaluate (metrics over an eval set),
// correlate (group-by-group similarity matrix as CSV).
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "captain/attribution.hpp"
#include "captain/baseline_io.hpp"
#include "captain/dataset.hpp"
#include "captain/errors.hpp"
#include "captain/evaluation.hpp"
#include "captain/phase_map.hpp"
#include "captain/sequencer.hpp"
#include "captain/similarity.hpp"
#include "json.hpp"

namespace {

using captain::PhaseMap;

// Precedence: explicit flag, CAPTAIN_PHASE_MAP, compiled-in default.
PhaseMap resolve_phase_map(const std::string& flag_path) {
  if (!flag_path.empty()) return captain::load_phase_map(flag_path);
  if (const char* env = std::getenv("CAPTAIN_PHASE_MAP")) {
    if (*env != '\0') return captain::load_phase_map(env);
  }
  return captain::default_phase_map();
}

void warn_fingerprint(const std::string& stored, const std::string& active,
                      const std::string& what) {
  if (!stored.empty() && stored != active) {
    std::cerr << "warning: " << what
              << " was built with a different phase map (fingerprint "
              << stored << ", active " << active << ")\n";
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

std::string trimmed(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

struct IngestArgs {
  std::string input;
  std::string format;
  std::string phase_map_path;
  std::string out;
  std::string eval_out;
  std::string separator = ",";
  std::optional<double> split_fraction;
  std::uint64_t seed = 0;
};

int run_ingest(const IngestArgs& args) {
  const auto map = resolve_phase_map(args.phase_map_path);
  captain::IngestOptions options;
  if (args.separator.size() != 1) {
    throw captain::ConfigError("--separator must be a single character");
  }
  options.ttp_separator = args.separator[0];

  const auto result = captain::ingest(
      args.input, captain::parse_dataset_format(args.format), map, options);
  for (const auto& warning : result.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }

  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  std::optional<std::uint64_t> stored_seed;
  std::size_t eval_count = 0;

  if (args.split_fraction) {
    const auto split_result = captain::split(
        result.campaigns,
        captain::SplitSpec{*args.split_fraction, args.seed, true});
    stored_seed = args.seed;
    for (const auto& [name, sequences] : split_result.baseline.groups()) {
      counts[name].first = sequences.size();
    }
    for (const auto& campaign : split_result.eval_set) {
      ++counts[*campaign.group_label].second;
    }
    eval_count = split_result.eval_set.size();
    captain::save_baseline(
        {split_result.baseline, stored_seed, map.fingerprint()}, args.out);
    if (!args.eval_out.empty()) {
      captain::save_eval_set({split_result.eval_set, map.fingerprint()},
                             args.eval_out);
    } else {
      std::cerr << "warning: --split given without --eval-out; the "
                << eval_count << " evaluation campaigns were not written\n";
    }
  } else {
    const auto baseline = captain::group_campaigns(result.campaigns);
    for (const auto& [name, sequences] : baseline.groups()) {
      counts[name].first = sequences.size();
    }
    captain::save_baseline({baseline, std::nullopt, map.fingerprint()},
                           args.out);
  }

  std::cout << "ingested " << result.campaigns.size() << " campaigns across "
            << counts.size() << " groups\n";
  std::cout << "baseline -> " << args.out;
  if (args.split_fraction && !args.eval_out.empty()) {
    std::cout << "   eval (" << eval_count << ") -> " << args.eval_out;
  }
  std::cout << "\n";
  for (const auto& [name, c] : counts) {
    std::cout << "  " << name << ": " << c.first << " baseline";
    if (args.split_fraction) std::cout << ", " << c.second << " eval";
    std::cout << "\n";
  }
  return 0;
}

struct AttributeArgs {
  std::string baseline_path;
  std::string ttps;
  std::string tactics;
  std::string measure = "captain";
  std::size_t top_n = 2;
  std::string format = "table";
};

int run_attribute(const AttributeArgs& args) {
  const auto baseline_file = captain::load_baseline(args.baseline_path);
  const auto map = resolve_phase_map("");
  warn_fingerprint(baseline_file.phase_map_fingerprint, map.fingerprint(),
                   "baseline " + args.baseline_path);

  const auto id_tokens = split_list(args.ttps);
  std::vector<std::optional<captain::Tactic>> hints(id_tokens.size(),
                                                    std::nullopt);
  if (!args.tactics.empty()) {
    const auto hint_tokens = split_list(args.tactics);
    if (hint_tokens.size() != id_tokens.size()) {
      throw captain::ConfigError(
          "--tactics must list one entry per technique (empty entries "
          "allowed)");
    }
    for (std::size_t i = 0; i < hint_tokens.size(); ++i) {
      const auto token = trimmed(hint_tokens[i]);
      if (!token.empty()) hints[i] = captain::parse_tactic(token);
    }
  }

  std::vector<captain::TtpObservation> observations;
  for (std::size_t i = 0; i < id_tokens.size(); ++i) {
    const auto token = trimmed(id_tokens[i]);
    if (token.empty()) continue;
    observations.push_back(
        {captain::TechniqueId::parse(token), hints[i], observations.size()});
  }
  if (observations.empty()) {
    throw captain::EmptyInput("--ttps lists no technique IDs");
  }

  const auto query = captain::sequence_ttps(observations, map);
  const auto result = captain::attribute(
      query, baseline_file.db, captain::parse_measure(args.measure));

  const std::size_t rows =
      std::min(std::max<std::size_t>(args.top_n, 1), result.ranking.size());
  if (args.format == "json") {
    nlohmann::ordered_json doc;
    doc["measure"] = args.measure;
    auto q = nlohmann::ordered_json::array();
    for (const auto& id : query) q.push_back(id.str());
    doc["query"] = std::move(q);
    doc["attributed"] = result.attributed;
    doc["tie"] = result.tie;
    auto ranking = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows; ++i) {
      ranking.push_back({{"group", result.ranking[i].group},
                         {"score", result.ranking[i].score}});
    }
    doc["ranking"] = std::move(ranking);
    std::cout << doc.dump(2) << "\n";
  } else if (args.format == "table") {
    std::cout << "attributed: " << result.attributed
              << (result.tie ? "  (tied)" : "") << "\n";
    char line[128];
    for (std::size_t i = 0; i < rows; ++i) {
      std::snprintf(line, sizeof line, "%3zu  %-24s %.6f", i + 1,
                    result.ranking[i].group.c_str(), result.ranking[i].score);
      std::cout << line << "\n";
    }
  } else {
    throw captain::ConfigError("--format must be json or table");
  }
  return 0;
}

struct EvaluateArgs {
  std::string baseline_path;
  std::string eval_path;
  std::string measure = "captain";
  std::size_t top_n_max = 0;  // 0 = up to G
  std::string format = "table";
};

int run_evaluate(const EvaluateArgs& args) {
  const auto baseline_file = captain::load_baseline(args.baseline_path);
  const auto eval_file = captain::load_eval_set(args.eval_path);
  if (!baseline_file.phase_map_fingerprint.empty() &&
      !eval_file.phase_map_fingerprint.empty() &&
      baseline_file.phase_map_fingerprint !=
          eval_file.phase_map_fingerprint) {
    std::cerr << "warning: baseline and eval set were sequenced with "
                 "different phase maps\n";
  }

  const std::size_t n_max = args.top_n_max == 0
                                ? baseline_file.db.group_count()
                                : args.top_n_max;
  const auto report =
      captain::evaluate(baseline_file.db, eval_file.campaigns,
                        captain::parse_measure(args.measure), n_max);
  if (args.format == "json") {
    std::cout << captain::report_to_json(report) << "\n";
  } else if (args.format == "table") {
    std::cout << captain::report_to_table(report);
  } else {
    throw captain::ConfigError("--format must be json or table");
  }
  return 0;
}

struct CorrelateArgs {
  std::string baseline_path;
  std::string out;
  bool include_self_pairs = false;
};

int run_correlate(const CorrelateArgs& args) {
  const auto baseline_file = captain::load_baseline(args.baseline_path);
  const auto matrix =
      captain::correlation_matrix(baseline_file.db, args.include_self_pairs);
  const auto csv = captain::matrix_to_csv(matrix);
  if (args.out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw captain::Error("cannot write " + args.out);
    out << csv;
    std::cout << "correlation matrix (" << matrix.groups.size() << "x"
              << matrix.groups.size() << ") -> " << args.out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TTP-sequence attribution of APT campaigns"};
  app.require_subcommand(1);

  IngestArgs ingest_args;
  auto* ingest = app.add_subcommand(
      "ingest", "Build baseline (and eval) files from a dataset");
  ingest->add_option("--input", ingest_args.input, "Dataset file")
      ->required();
  ingest->add_option("--format", ingest_args.format, "csv or json")
      ->required();
  ingest->add_option("--phase-map", ingest_args.phase_map_path,
                     "Phase map JSON (default: bundled map or "
                     "$CAPTAIN_PHASE_MAP)");
  ingest->add_option("--separator", ingest_args.separator,
                     "Separator inside the TTPs column (default ',')");
  ingest->add_option("--split", ingest_args.split_fraction,
                     "Baseline fraction in (0,1); remainder becomes the "
                     "eval set");
  ingest->add_option("--seed", ingest_args.seed, "Split RNG seed");
  ingest->add_option("--out", ingest_args.out, "Baseline output path")
      ->required();
  ingest->add_option("--eval-out", ingest_args.eval_out,
                     "Eval set output path (with --split)");

  AttributeArgs attribute_args;
  auto* attribute = app.add_subcommand(
      "attribute", "Rank baseline groups for a TTP list");
  attribute->add_option("--baseline", attribute_args.baseline_path,
                        "Baseline file")->required();
  attribute->add_option("--ttps", attribute_args.ttps,
                        "Comma-separated technique IDs")->required();
  attribute->add_option("--tactics", attribute_args.tactics,
                        "Comma-separated tactic hints, parallel to --ttps");
  attribute->add_option("--measure", attribute_args.measure,
                        "captain|cosine|euclidean|lcs (default captain)");
  attribute->add_option("--top-n", attribute_args.top_n,
                        "Rows to print (default 2)");
  attribute->add_option("--format", attribute_args.format, "table or json");

  EvaluateArgs evaluate_args;
  auto* evaluate = app.add_subcommand(
      "evaluate", "Score an eval set against a baseline");
  evaluate->add_option("--baseline", evaluate_args.baseline_path,
                       "Baseline file")->required();
  evaluate->add_option("--eval", evaluate_args.eval_path, "Eval set file")
      ->required();
  evaluate->add_option("--measure", evaluate_args.measure,
                       "captain|cosine|euclidean|lcs (default captain)");
  evaluate->add_option("--top-n-max", evaluate_args.top_n_max,
                       "Largest top-n window (default: group count)");
  evaluate->add_option("--format", evaluate_args.format, "table or json");

  CorrelateArgs correlate_args;
  auto* correlate = app.add_subcommand(
      "correlate", "Emit the group correlation matrix as CSV");
  correlate->add_option("--baseline", correlate_args.baseline_path,
                        "Baseline file")->required();
  correlate->add_option("--out", correlate_args.out,
                        "Write CSV here instead of stdout");
  correlate->add_flag("--include-self-pairs",
                      correlate_args.include_self_pairs,
                      "Count self pairs in diagonal cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ingest) return run_ingest(ingest_args);
    if (*attribute) return run_attribute(attribute_args);
    if (*evaluate) return run_evaluate(evaluate_args);
    if (*correlate) return run_correlate(correlate_args);
  } catch (const captain::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
