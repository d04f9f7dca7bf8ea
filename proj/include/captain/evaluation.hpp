#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "captain/baseline.hpp"
#include "captain/sequence.hpp"
#include "captain/similarity.hpp"

namespace captain {

struct GroupMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct EvaluationReport {
  double accuracy = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  // Groups with at least one evaluation sample; macro metrics are their
  // unweighted mean.
  std::map<std::string, GroupMetrics> per_group;
  // n -> macro precision under the relaxed rule: a sample counts as its
  // true group when that group ranks within the top-n window.
  std::map<std::size_t, double> topn_precision;
  Measure measure = Measure::kCaptain;
  std::size_t eval_count = 0;
};

// Attributes every eval campaign against the baseline and aggregates
// accuracy, per-group and macro metrics, and the top-n precision curve for
// n = 1..min(n_max, G). Throws UnknownLabel when an eval label is missing
// from the baseline.
EvaluationReport evaluate(const BaselineDatabase& baseline,
                          const std::vector<Campaign>& eval_set,
                          Measure measure, std::size_t n_max);

std::string report_to_json(const EvaluationReport& report);
std::string report_to_table(const EvaluationReport& report);

struct CorrelationMatrix {
  std::vector<std::string> groups;            // name order
  std::vector<std::vector<double>> cells;     // G x G, symmetric
  bool includes_self_pairs = false;
};

// Mean pairwise subsequence-profile similarity between (and within) groups.
// Diagonal cells average the unordered non-self pairs; a single-sequence
// group falls back to its self pair. With include_self_pairs the diagonal
// averages all unordered pairs including self.
CorrelationMatrix correlation_matrix(const BaselineDatabase& baseline,
                                     bool include_self_pairs = false);

std::string matrix_to_csv(const CorrelationMatrix& matrix);

// Mean diagonal and mean off-diagonal cell, for separation checks.
std::pair<double, double> intra_inter_means(const CorrelationMatrix& matrix);

}  // namespace captain
