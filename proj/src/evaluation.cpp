#include "captain/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "captain/attribution.hpp"
#include "captain/errors.hpp"
#include "json.hpp"

namespace captain {

namespace {

struct Attributed {
  std::string truth;
  std::vector<std::string> ranking;  // group names, best first

  // 1-based rank of the true group.
  std::size_t truth_rank() const {
    for (std::size_t i = 0; i < ranking.size(); ++i) {
      if (ranking[i] == truth) return i + 1;
    }
    return ranking.size() + 1;
  }
};

struct Confusion {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
};

double safe_ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

// Per-class metrics with the relaxed window rule applied at window n.
std::map<std::string, GroupMetrics> window_metrics(
    const std::vector<Attributed>& samples,
    const std::map<std::string, std::size_t>& support, std::size_t n) {
  std::map<std::string, Confusion> confusion;
  for (const auto& sample : samples) {
    const std::string predicted =
        sample.truth_rank() <= n ? sample.truth : sample.ranking.front();
    if (predicted == sample.truth) {
      ++confusion[sample.truth].tp;
    } else {
      ++confusion[predicted].fp;
      ++confusion[sample.truth].fn;
    }
  }
  std::map<std::string, GroupMetrics> metrics;
  for (const auto& [group, count] : support) {
    const auto& c = confusion[group];
    GroupMetrics m;
    m.support = count;
    m.precision = safe_ratio(c.tp, c.tp + c.fp);
    m.recall = safe_ratio(c.tp, c.tp + c.fn);
    m.f1 = (m.precision + m.recall) == 0.0
               ? 0.0
               : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    metrics[group] = m;
  }
  return metrics;
}

double macro_mean(const std::map<std::string, GroupMetrics>& metrics,
                  double GroupMetrics::*field) {
  if (metrics.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& [_, m] : metrics) sum += m.*field;
  return sum / static_cast<double>(metrics.size());
}

}  // namespace

EvaluationReport evaluate(const BaselineDatabase& baseline,
                          const std::vector<Campaign>& eval_set,
                          Measure measure, std::size_t n_max) {
  if (eval_set.empty()) throw EmptyDataset("evaluation set is empty");

  std::map<std::string, std::size_t> support;
  std::vector<Attributed> samples;
  samples.reserve(eval_set.size());
  std::size_t correct = 0;
  for (const auto& campaign : eval_set) {
    if (!campaign.group_label) {
      throw UnknownLabel("campaign '" + campaign.id +
                         "' carries no group label");
    }
    if (!baseline.has_group(*campaign.group_label)) {
      throw UnknownLabel("label '" + *campaign.group_label +
                         "' is not a baseline group");
    }
    const auto result = attribute(campaign.sequence, baseline, measure);
    Attributed sample;
    sample.truth = *campaign.group_label;
    sample.ranking.reserve(result.ranking.size());
    for (const auto& entry : result.ranking) {
      sample.ranking.push_back(entry.group);
    }
    if (sample.ranking.front() == sample.truth) ++correct;
    ++support[sample.truth];
    samples.push_back(std::move(sample));
  }

  EvaluationReport report;
  report.measure = measure;
  report.eval_count = eval_set.size();
  report.accuracy =
      static_cast<double>(correct) / static_cast<double>(eval_set.size());
  report.per_group = window_metrics(samples, support, 1);
  report.macro_precision = macro_mean(report.per_group,
                                      &GroupMetrics::precision);
  report.macro_recall = macro_mean(report.per_group, &GroupMetrics::recall);
  report.macro_f1 = macro_mean(report.per_group, &GroupMetrics::f1);

  const std::size_t max_window = std::min(n_max, baseline.group_count());
  for (std::size_t n = 1; n <= max_window; ++n) {
    report.topn_precision[n] =
        macro_mean(window_metrics(samples, support, n),
                   &GroupMetrics::precision);
  }
  return report;
}

std::string report_to_json(const EvaluationReport& report) {
  nlohmann::ordered_json doc;
  doc["measure"] = std::string(to_string(report.measure));
  doc["eval_count"] = report.eval_count;
  doc["accuracy"] = report.accuracy;
  doc["macro_precision"] = report.macro_precision;
  doc["macro_recall"] = report.macro_recall;
  doc["macro_f1"] = report.macro_f1;
  auto per_group = nlohmann::ordered_json::object();
  for (const auto& [group, m] : report.per_group) {
    per_group[group] = {{"precision", m.precision},
                        {"recall", m.recall},
                        {"f1", m.f1},
                        {"support", m.support}};
  }
  doc["per_group"] = std::move(per_group);
  auto curve = nlohmann::ordered_json::object();
  for (const auto& [n, value] : report.topn_precision) {
    curve[std::to_string(n)] = value;
  }
  doc["topn_precision"] = std::move(curve);
  return doc.dump(2);
}

std::string report_to_table(const EvaluationReport& report) {
  std::ostringstream out;
  char line[256];

  std::snprintf(line, sizeof line,
                "measure: %s   samples: %zu\n"
                "accuracy: %.6f   macro P/R/F1: %.6f / %.6f / %.6f\n\n",
                std::string(to_string(report.measure)).c_str(),
                report.eval_count, report.accuracy, report.macro_precision,
                report.macro_recall, report.macro_f1);
  out << line;

  int width = 5;
  for (const auto& [group, _] : report.per_group) {
    width = std::max(width, static_cast<int>(group.size()));
  }
  std::snprintf(line, sizeof line, "%-*s  %9s %9s %9s %8s\n", width, "group",
                "precision", "recall", "f1", "support");
  out << line;
  for (const auto& [group, m] : report.per_group) {
    std::snprintf(line, sizeof line, "%-*s  %9.6f %9.6f %9.6f %8zu\n",
                  width, group.c_str(), m.precision, m.recall, m.f1,
                  m.support);
    out << line;
  }
  out << "\ntop-n precision:\n";
  for (const auto& [n, value] : report.topn_precision) {
    std::snprintf(line, sizeof line, "  n=%-3zu %.6f\n", n, value);
    out << line;
  }
  return out.str();
}

CorrelationMatrix correlation_matrix(const BaselineDatabase& baseline,
                                     bool include_self_pairs) {
  CorrelationMatrix matrix;
  matrix.includes_self_pairs = include_self_pairs;
  std::vector<const std::vector<TtpSequence>*> sequences;
  for (const auto& [name, group] : baseline.groups()) {
    matrix.groups.push_back(name);
    sequences.push_back(&group);
  }
  const std::size_t g_count = matrix.groups.size();
  matrix.cells.assign(g_count, std::vector<double>(g_count, 0.0));

  for (std::size_t g = 0; g < g_count; ++g) {
    for (std::size_t h = g; h < g_count; ++h) {
      const auto& left = *sequences[g];
      const auto& right = *sequences[h];
      double sum = 0.0;
      std::size_t pairs = 0;
      if (g != h) {
        for (const auto& a : left) {
          for (const auto& b : right) {
            sum += captain_similarity(a, b);
            ++pairs;
          }
        }
      } else if (left.size() == 1 && !include_self_pairs) {
        // No non-self pair exists; the self pair is the only signal.
        sum = captain_similarity(left[0], left[0]);
        pairs = 1;
      } else {
        for (std::size_t i = 0; i < left.size(); ++i) {
          for (std::size_t j = include_self_pairs ? i : i + 1;
               j < left.size(); ++j) {
            sum += captain_similarity(left[i], left[j]);
            ++pairs;
          }
        }
      }
      const double mean = sum / static_cast<double>(pairs);
      matrix.cells[g][h] = mean;
      matrix.cells[h][g] = mean;
    }
  }
  return matrix;
}

std::string matrix_to_csv(const CorrelationMatrix& matrix) {
  std::ostringstream out;
  out << "group";
  for (const auto& name : matrix.groups) out << ',' << name;
  out << '\n';
  for (std::size_t g = 0; g < matrix.groups.size(); ++g) {
    out << matrix.groups[g];
    for (double cell : matrix.cells[g]) {
      out << ',' << std::fixed << std::setprecision(6) << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::pair<double, double> intra_inter_means(const CorrelationMatrix& matrix) {
  double intra = 0.0;
  double inter = 0.0;
  std::size_t inter_cells = 0;
  const std::size_t g_count = matrix.groups.size();
  for (std::size_t g = 0; g < g_count; ++g) {
    intra += matrix.cells[g][g];
    for (std::size_t h = 0; h < g_count; ++h) {
      if (g == h) continue;
      inter += matrix.cells[g][h];
      ++inter_cells;
    }
  }
  intra /= static_cast<double>(g_count);
  if (inter_cells > 0) inter /= static_cast<double>(inter_cells);
  return {intra, inter};
}

}  // namespace captain
