#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "captain/baseline.hpp"
#include "captain/phase_map.hpp"
#include "captain/sequence.hpp"

namespace captain {

// One row of the attribution dataset before sequencing. Mirrors the seven
// dataset columns; only the TTP list and the group label are mandatory.
struct DatasetRecord {
  std::optional<int> year;
  std::vector<std::string> ttps;
  std::string group;
  std::optional<std::string> group_id;
  std::optional<std::string> aliases;
  std::optional<std::string> file_name;
  std::optional<std::string> report_link;
};

enum class DatasetFormat { kCsv, kJson };

DatasetFormat parse_dataset_format(const std::string& name);

struct IngestOptions {
  // Separator between technique tokens inside the TTPs column.
  char ttp_separator = ',';
};

struct IngestResult {
  std::vector<Campaign> campaigns;
  std::vector<std::string> warnings;  // unknown IDs, collapsed duplicates
};

// Reads records, sequences each TTP list through the phase map and wraps
// them as campaigns. Malformed rows raise ParseError with the record
// number; unknown technique IDs only produce warnings.
IngestResult ingest(const std::string& path, DatasetFormat format,
                    const PhaseMap& phase_map, const IngestOptions& options = {});

// Same, from an already-loaded record list.
IngestResult ingest_records(const std::vector<DatasetRecord>& records,
                            const PhaseMap& phase_map);

// Parsing helpers, exposed for tests and tooling.
std::vector<DatasetRecord> read_dataset_csv(const std::string& path,
                                            char ttp_separator);
std::vector<DatasetRecord> read_dataset_json(const std::string& path);

struct SplitSpec {
  double baseline_fraction = 0.75;
  std::uint64_t rng_seed = 0;
  bool stratified = true;
};

struct SplitResult {
  BaselineDatabase baseline;
  std::vector<Campaign> eval_set;
};

// Seeded random split into a baseline database and an evaluation set.
// Stratified mode keeps every group's baseline share within one sample of
// the global fraction; a group that would lose all of its sequences raises
// GroupTooSmall.
SplitResult split(const std::vector<Campaign>& campaigns,
                  const SplitSpec& spec);

// Groups all campaigns into a baseline database without splitting.
BaselineDatabase group_campaigns(const std::vector<Campaign>& campaigns);

}  // namespace captain
