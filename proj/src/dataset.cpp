#include "captain/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "captain/checked_uint.hpp"
#include "captain/errors.hpp"
#include "captain/sequencer.hpp"
#include "json.hpp"

namespace captain {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

// RFC-4180-style CSV: quoted fields, doubled quotes, newlines inside
// quotes. Returns one vector of fields per row.
std::vector<std::vector<std::string>> read_csv_rows(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;

  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        break;
      case '\r':
        break;
      case '\n':
        row.push_back(std::move(field));
        field.clear();
        rows.push_back(std::move(row));
        row.clear();
        break;
      default:
        field.push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV input");
  if (any && (!field.empty() || !row.empty())) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> split_tokens(const std::string& text,
                                      char separator) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == separator) {
      const auto token = trim(current);
      if (!token.empty()) tokens.push_back(token);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  const auto token = trim(current);
  if (!token.empty()) tokens.push_back(token);
  return tokens;
}

std::optional<std::string> optional_field(const std::string& value) {
  auto trimmed = trim(value);
  if (trimmed.empty()) return std::nullopt;
  return trimmed;
}

// Unbiased index in [0, bound) from the raw 64-bit stream; keeps split
// results identical across standard library implementations.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
  const uint128 full = uint128(1) << 64;
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(full - full % bound);
  while (true) {
    const std::uint64_t x = rng();
    if (threshold == 0 || x < threshold) return x % bound;
  }
}

template <typename T>
void shuffle_indices(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[uniform_index(rng, i)]);
  }
}

}  // namespace

DatasetFormat parse_dataset_format(const std::string& name) {
  if (name == "csv") return DatasetFormat::kCsv;
  if (name == "json") return DatasetFormat::kJson;
  throw ConfigError("unknown dataset format: '" + name +
                    "' (expected csv or json)");
}

std::vector<DatasetRecord> read_dataset_csv(const std::string& path,
                                            char ttp_separator) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read dataset file: " + path);
  const auto rows = read_csv_rows(in);
  if (rows.empty()) throw EmptyDataset("dataset file is empty: " + path);

  // Header match is case-insensitive and order-independent.
  std::map<std::string, std::size_t> columns;
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    columns[lower(trim(rows[0][i]))] = i;
  }
  auto column = [&columns](const std::string& name) {
    auto it = columns.find(name);
    return it == columns.end() ? std::optional<std::size_t>{}
                               : std::optional<std::size_t>{it->second};
  };
  const auto ttps_col = column("ttps");
  const auto group_col = column("apt group");
  if (!ttps_col || !group_col) {
    throw ParseError("dataset header must contain 'TTPs' and 'APT Group'");
  }
  const auto year_col = column("year");
  const auto group_id_col = column("group id");
  const auto aliases_col = column("group aliases");
  const auto file_col = column("file name");
  const auto link_col = column("report link");

  std::vector<DatasetRecord> records;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() == 1 && trim(row[0]).empty()) continue;
    auto cell = [&row](std::optional<std::size_t> col) -> std::string {
      return (col && *col < row.size()) ? row[*col] : std::string{};
    };

    DatasetRecord record;
    record.ttps = split_tokens(cell(ttps_col), ttp_separator);
    record.group = trim(cell(group_col));
    if (const auto year = optional_field(cell(year_col))) {
      try {
        record.year = std::stoi(*year);
      } catch (const std::exception&) {
        throw ParseError("row " + std::to_string(r + 1) +
                         ": year '" + *year + "' is not an integer");
      }
    }
    record.group_id = optional_field(cell(group_id_col));
    record.aliases = optional_field(cell(aliases_col));
    record.file_name = optional_field(cell(file_col));
    record.report_link = optional_field(cell(link_col));

    if (record.group.empty()) {
      throw ParseError("row " + std::to_string(r + 1) + ": empty APT Group");
    }
    if (record.ttps.empty()) {
      throw ParseError("row " + std::to_string(r + 1) + ": empty TTP list");
    }
    records.push_back(std::move(record));
  }
  if (records.empty()) throw EmptyDataset("dataset has a header but no rows");
  return records;
}

std::vector<DatasetRecord> read_dataset_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read dataset file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("dataset is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_array()) throw ParseError("dataset JSON must be an array");
  if (doc.empty()) throw EmptyDataset("dataset JSON array is empty");

  std::vector<DatasetRecord> records;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& entry = doc[i];
    const std::string locus = "record " + std::to_string(i + 1);
    if (!entry.is_object()) throw ParseError(locus + ": not an object");
    DatasetRecord record;
    try {
      if (entry.contains("year") && !entry["year"].is_null()) {
        record.year = entry["year"].get<int>();
      }
      for (const auto& token : entry.at("ttps")) {
        record.ttps.push_back(token.get<std::string>());
      }
      record.group = entry.at("group").get<std::string>();
      if (entry.contains("group_id") && !entry["group_id"].is_null()) {
        record.group_id = entry["group_id"].get<std::string>();
      }
      if (entry.contains("aliases") && !entry["aliases"].is_null()) {
        record.aliases = entry["aliases"].get<std::string>();
      }
      if (entry.contains("file_name") && !entry["file_name"].is_null()) {
        record.file_name = entry["file_name"].get<std::string>();
      }
      if (entry.contains("report_link") && !entry["report_link"].is_null()) {
        record.report_link = entry["report_link"].get<std::string>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(locus + ": " + e.what());
    }
    if (trim(record.group).empty()) throw ParseError(locus + ": empty group");
    if (record.ttps.empty()) throw ParseError(locus + ": empty TTP list");
    records.push_back(std::move(record));
  }
  return records;
}

IngestResult ingest_records(const std::vector<DatasetRecord>& records,
                            const PhaseMap& phase_map) {
  if (records.empty()) throw EmptyDataset("no dataset records to ingest");

  IngestResult result;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& record = records[i];
    const std::string locus = "record " + std::to_string(i + 1);

    std::vector<TtpObservation> observations;
    observations.reserve(record.ttps.size());
    for (std::size_t pos = 0; pos < record.ttps.size(); ++pos) {
      try {
        observations.push_back(
            {TechniqueId::parse(record.ttps[pos]), std::nullopt, pos});
      } catch (const MalformedId& e) {
        throw ParseError(locus + ": " + e.what());
      }
    }

    SequencingNotes notes;
    Campaign campaign{
        "r" + std::to_string(i + 1),
        record.group,
        sequence_ttps(observations, phase_map, notes),
        record.year,
        record.file_name,
        record.report_link,
    };
    for (const auto& unknown : notes.unknown_techniques) {
      result.warnings.push_back(locus + ": technique " + unknown.str() +
                                " is not in the phase map catalog; placed "
                                "after all kill-chain phases");
    }
    if (notes.collapsed_duplicates > 0) {
      result.warnings.push_back(
          locus + ": collapsed " + std::to_string(notes.collapsed_duplicates) +
          " duplicate technique/phase observation(s)");
    }
    result.campaigns.push_back(std::move(campaign));
  }
  return result;
}

IngestResult ingest(const std::string& path, DatasetFormat format,
                    const PhaseMap& phase_map, const IngestOptions& options) {
  const auto records = format == DatasetFormat::kCsv
                           ? read_dataset_csv(path, options.ttp_separator)
                           : read_dataset_json(path);
  return ingest_records(records, phase_map);
}

BaselineDatabase group_campaigns(const std::vector<Campaign>& campaigns) {
  BaselineDatabase::GroupMap groups;
  for (const auto& campaign : campaigns) {
    if (!campaign.group_label) {
      throw ParseError("campaign '" + campaign.id + "' has no group label");
    }
    groups[*campaign.group_label].push_back(campaign.sequence);
  }
  return BaselineDatabase(std::move(groups));
}

SplitResult split(const std::vector<Campaign>& campaigns,
                  const SplitSpec& spec) {
  if (campaigns.empty()) throw EmptyDataset("nothing to split");
  if (!(spec.baseline_fraction > 0.0 && spec.baseline_fraction < 1.0)) {
    throw BadSpec("baseline fraction must be in (0, 1)");
  }

  // Group indices by label, in name order for seed-stable iteration.
  std::map<std::string, std::vector<std::size_t>> by_group;
  for (std::size_t i = 0; i < campaigns.size(); ++i) {
    if (!campaigns[i].group_label) {
      throw ParseError("campaign '" + campaigns[i].id +
                       "' has no group label");
    }
    by_group[*campaigns[i].group_label].push_back(i);
  }

  std::mt19937_64 rng(spec.rng_seed);
  std::vector<bool> in_baseline(campaigns.size(), false);

  if (spec.stratified) {
    // Largest-remainder apportionment: per-group floor of the quota, then
    // one extra to the biggest fractional parts until the global target
    // round(f * N) is met. Keeps every group within one sample of the
    // global fraction.
    const auto target = static_cast<std::size_t>(
        std::llround(spec.baseline_fraction *
                     static_cast<double>(campaigns.size())));
    struct GroupQuota {
      std::string name;
      double fraction;
      std::size_t take;
    };
    std::vector<GroupQuota> quotas;
    std::size_t allocated = 0;
    for (const auto& [name, indices] : by_group) {
      const double quota =
          spec.baseline_fraction * static_cast<double>(indices.size());
      const auto take = static_cast<std::size_t>(std::floor(quota));
      quotas.push_back({name, quota - std::floor(quota), take});
      allocated += take;
    }
    std::stable_sort(quotas.begin(), quotas.end(),
                     [](const GroupQuota& lhs, const GroupQuota& rhs) {
                       return lhs.fraction > rhs.fraction;
                     });
    for (auto& quota : quotas) {
      if (allocated >= target) break;
      ++quota.take;
      ++allocated;
    }
    std::map<std::string, std::size_t> take_by_group;
    for (const auto& quota : quotas) {
      if (quota.take == 0) {
        throw GroupTooSmall("group '" + quota.name +
                            "' would keep no baseline sequence at fraction " +
                            std::to_string(spec.baseline_fraction));
      }
      take_by_group[quota.name] = quota.take;
    }
    for (auto& [name, indices] : by_group) {
      shuffle_indices(indices, rng);
      for (std::size_t i = 0; i < take_by_group[name]; ++i) {
        in_baseline[indices[i]] = true;
      }
    }
  } else {
    std::vector<std::size_t> all(campaigns.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    shuffle_indices(all, rng);
    const auto take = static_cast<std::size_t>(
        std::llround(spec.baseline_fraction *
                     static_cast<double>(campaigns.size())));
    for (std::size_t i = 0; i < take && i < all.size(); ++i) {
      in_baseline[all[i]] = true;
    }
  }

  BaselineDatabase::GroupMap groups;
  std::vector<Campaign> eval_set;
  for (std::size_t i = 0; i < campaigns.size(); ++i) {
    if (in_baseline[i]) {
      groups[*campaigns[i].group_label].push_back(campaigns[i].sequence);
    } else {
      eval_set.push_back(campaigns[i]);
    }
  }
  for (const auto& [name, _] : by_group) {
    if (groups.count(name) == 0) {
      throw GroupTooSmall("group '" + name +
                          "' kept no baseline sequence after splitting");
    }
  }
  return {BaselineDatabase(std::move(groups)), std::move(eval_set)};
}

}  // namespace captain
