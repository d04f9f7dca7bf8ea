#include "captain/baseline_io.hpp"

#include <fstream>

#include "captain/errors.hpp"
#include "json.hpp"

namespace captain {

namespace {

constexpr int kFileVersion = 1;
constexpr const char* kBaselineTag = "captain-baseline";
constexpr const char* kEvalSetTag = "captain-evalset";

nlohmann::ordered_json sequence_to_json(const TtpSequence& sequence) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& id : sequence) out.push_back(id.str());
  return out;
}

TtpSequence sequence_from_json(const nlohmann::json& arr) {
  std::vector<TechniqueId> items;
  for (const auto& token : arr) {
    items.push_back(TechniqueId::parse(token.get<std::string>()));
  }
  return TtpSequence(std::move(items));
}

nlohmann::json read_document(const std::string& path, const char* tag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorruptFile("cannot read file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw CorruptFile(path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("format") || !doc.contains("version")) {
    throw CorruptFile(path + ": missing format/version header");
  }
  if (doc["format"] != tag || doc["version"] != kFileVersion) {
    throw VersionMismatch(path + ": expected " + tag + " v" +
                          std::to_string(kFileVersion) + ", found " +
                          doc["format"].dump() + " v" +
                          doc["version"].dump());
  }
  return doc;
}

void write_document(const nlohmann::ordered_json& doc,
                    const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace

void save_baseline(const BaselineFile& file, const std::string& path) {
  nlohmann::ordered_json doc;
  doc["format"] = kBaselineTag;
  doc["version"] = kFileVersion;
  if (file.seed) {
    doc["seed"] = *file.seed;
  } else {
    doc["seed"] = nullptr;
  }
  doc["phase_map_fingerprint"] = file.phase_map_fingerprint;
  auto groups = nlohmann::ordered_json::array();
  for (const auto& [name, sequences] : file.db.groups()) {
    nlohmann::ordered_json entry;
    entry["name"] = name;
    auto list = nlohmann::ordered_json::array();
    for (const auto& sequence : sequences) {
      list.push_back(sequence_to_json(sequence));
    }
    entry["sequences"] = std::move(list);
    groups.push_back(std::move(entry));
  }
  doc["groups"] = std::move(groups);
  write_document(doc, path);
}

BaselineFile load_baseline(const std::string& path) {
  const auto doc = read_document(path, kBaselineTag);
  try {
    std::optional<std::uint64_t> seed;
    if (doc.contains("seed") && !doc["seed"].is_null()) {
      seed = doc["seed"].get<std::uint64_t>();
    }
    BaselineDatabase::GroupMap groups;
    for (const auto& entry : doc.at("groups")) {
      auto& sequences = groups[entry.at("name").get<std::string>()];
      for (const auto& arr : entry.at("sequences")) {
        sequences.push_back(sequence_from_json(arr));
      }
    }
    return BaselineFile{
        BaselineDatabase(std::move(groups)),
        seed,
        doc.value("phase_map_fingerprint", std::string{}),
    };
  } catch (const nlohmann::json::exception& e) {
    throw CorruptFile(path + ": " + e.what());
  } catch (const MalformedId& e) {
    throw CorruptFile(path + ": " + e.what());
  } catch (const EmptyInput& e) {
    throw CorruptFile(path + ": " + e.what());
  }
}

void save_eval_set(const EvalSetFile& file, const std::string& path) {
  nlohmann::ordered_json doc;
  doc["format"] = kEvalSetTag;
  doc["version"] = kFileVersion;
  doc["phase_map_fingerprint"] = file.phase_map_fingerprint;
  auto campaigns = nlohmann::ordered_json::array();
  for (const auto& campaign : file.campaigns) {
    nlohmann::ordered_json entry;
    entry["id"] = campaign.id;
    if (campaign.group_label) entry["group"] = *campaign.group_label;
    entry["sequence"] = sequence_to_json(campaign.sequence);
    if (campaign.year) entry["year"] = *campaign.year;
    if (campaign.report_name) entry["report_name"] = *campaign.report_name;
    if (campaign.report_link) entry["report_link"] = *campaign.report_link;
    campaigns.push_back(std::move(entry));
  }
  doc["campaigns"] = std::move(campaigns);
  write_document(doc, path);
}

EvalSetFile load_eval_set(const std::string& path) {
  const auto doc = read_document(path, kEvalSetTag);
  try {
    EvalSetFile file;
    file.phase_map_fingerprint =
        doc.value("phase_map_fingerprint", std::string{});
    for (const auto& entry : doc.at("campaigns")) {
      Campaign campaign{
          entry.at("id").get<std::string>(),
          std::nullopt,
          sequence_from_json(entry.at("sequence")),
          std::nullopt,
          std::nullopt,
          std::nullopt,
      };
      if (entry.contains("group")) {
        campaign.group_label = entry["group"].get<std::string>();
      }
      if (entry.contains("year")) campaign.year = entry["year"].get<int>();
      if (entry.contains("report_name")) {
        campaign.report_name = entry["report_name"].get<std::string>();
      }
      if (entry.contains("report_link")) {
        campaign.report_link = entry["report_link"].get<std::string>();
      }
      file.campaigns.push_back(std::move(campaign));
    }
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw CorruptFile(path + ": " + e.what());
  } catch (const MalformedId& e) {
    throw CorruptFile(path + ": " + e.what());
  } catch (const EmptyInput& e) {
    throw CorruptFile(path + ": " + e.what());
  }
}

}  // namespace captain
