#include <algorithm>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "captain/phase_map.hpp"
#include "captain/sequencer.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using captain::ConfigError;
using captain::PhaseMap;
using captain::Tactic;
using captain::TechniqueId;
using captain::TtpObservation;
using captain::UnknownTechnique;

namespace {

TtpObservation obs(const std::string& id, std::size_t order) {
  return {TechniqueId::parse(id), std::nullopt, order};
}

TtpObservation obs(const std::string& id, Tactic hint, std::size_t order) {
  return {TechniqueId::parse(id), hint, order};
}

std::vector<std::string> id_strings(const captain::TtpSequence& s) {
  std::vector<std::string> out;
  for (const auto& id : s) out.push_back(id.str());
  return out;
}

// The bundled map as an editable JSON document, for negative tests.
nlohmann::json bundled_doc() {
  static const nlohmann::json doc = [] {
    std::ifstream in(std::string(CAPTAIN_DATA_DIR) + "/phase_map.json");
    REQUIRE(in.good());
    nlohmann::json parsed;
    in >> parsed;
    return parsed;
  }();
  return doc;
}

}  // namespace

TEST_CASE("bundled phase map shape") {
  const auto& map = captain::default_phase_map();
  CHECK(map.phases().size() == 18);
  for (int i = 0; i < 18; ++i) {
    CHECK(map.phases()[i].order_index == i + 1);
  }
  CHECK(map.multi_tactic_count() == 27);
  CHECK(map.catalog_size() >= 150);
  CHECK(map.fingerprint().size() == 16);
  // Every tactic resolves to some phase (spot checks pin the merge table).
  CHECK(map.phase_for_tactic(Tactic::kReconnaissance).order_index == 1);
  CHECK(map.phase_for_tactic(Tactic::kInitialAccess).name ==
        "Social Engineering");
  CHECK(map.phase_for_tactic(Tactic::kExecution).name == "Exploitation");
  CHECK(map.phase_for_tactic(Tactic::kLateralMovement).name == "Pivoting");
  CHECK(map.phase_for_tactic(Tactic::kImpact).order_index == 17);
}

TEST_CASE("file and default map agree") {
  const auto from_file =
      captain::load_phase_map(std::string(CAPTAIN_DATA_DIR) +
                              "/phase_map.json");
  CHECK(from_file.fingerprint() == captain::default_phase_map().fingerprint());
}

TEST_CASE("phase map validation errors") {
  SUBCASE("missing tactic is named") {
    auto doc = bundled_doc();
    doc["tactics"].erase("Impact");
    try {
      captain::parse_phase_map(doc.dump());
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("Impact") != std::string::npos);
    }
  }
  SUBCASE("seventeen phases are rejected") {
    auto doc = bundled_doc();
    doc["phases"].erase(doc["phases"].size() - 1);
    CHECK_THROWS_AS(captain::parse_phase_map(doc.dump()), ConfigError);
  }
  SUBCASE("duplicate phase order is rejected") {
    auto doc = bundled_doc();
    doc["phases"][1]["order"] = 1;
    CHECK_THROWS_AS(captain::parse_phase_map(doc.dump()), ConfigError);
  }
  SUBCASE("unknown tactic key is rejected") {
    auto doc = bundled_doc();
    doc["tactics"]["Weaponization"] = "Delivery";
    CHECK_THROWS_AS(captain::parse_phase_map(doc.dump()), ConfigError);
  }
  SUBCASE("allowed override is accepted") {
    auto doc = bundled_doc();
    doc["overrides"]["T1055"] = "Defense Evasion";
    CHECK_NOTHROW(captain::parse_phase_map(doc.dump()));
  }
  SUBCASE("override outside the allowed tactics is rejected") {
    auto doc = bundled_doc();
    doc["overrides"]["T1055"] = "Impact";
    try {
      captain::parse_phase_map(doc.dump());
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("T1055") != std::string::npos);
    }
  }
  SUBCASE("technique in both tables is rejected") {
    auto doc = bundled_doc();
    doc["techniques"]["T1055"] = "Defense Evasion";
    CHECK_THROWS_AS(captain::parse_phase_map(doc.dump()), ConfigError);
  }
}

TEST_CASE("phase resolution precedence") {
  const auto& map = captain::default_phase_map();

  // Catalog direct.
  CHECK(captain::resolve_phase(obs("T1595", 0), map).name == "Reconnaissance");
  // Allowed hint wins.
  CHECK(captain::resolve_phase(obs("T1078", Tactic::kInitialAccess, 0), map)
            .name == "Social Engineering");
  // Multi-tactic without hint: earliest allowed phase.
  CHECK(captain::resolve_phase(obs("T1055", 0), map).name ==
        "Defense Evasion");
  // A hint that is not allowed for a catalogued technique is ignored.
  CHECK(captain::resolve_phase(obs("T1595", Tactic::kImpact, 0), map).name ==
        "Reconnaissance");
  // Unknown technique: hint is the only information; without it, error.
  CHECK(captain::resolve_phase(obs("T9999", Tactic::kExecution, 0), map)
            .name == "Exploitation");
  CHECK_THROWS_AS(captain::resolve_phase(obs("T9999", 0), map),
                  UnknownTechnique);
}

TEST_CASE("override beats the earliest-phase rule") {
  auto doc = bundled_doc();
  doc["overrides"]["T1055"] = "Privilege Escalation";
  const auto map = captain::parse_phase_map(doc.dump());
  CHECK(captain::resolve_phase(obs("T1055", 0), map).name ==
        "Privilege Escalation");
  // An allowed hint still wins over the override.
  CHECK(captain::resolve_phase(obs("T1055", Tactic::kDefenseEvasion, 0), map)
            .name == "Defense Evasion");
}

TEST_CASE("four-step sequencing example") {
  const auto& map = captain::default_phase_map();
  // Scrambled input; hints carry the narrated tactics.
  const std::vector<TtpObservation> observations = {
      obs("T1203", Tactic::kExecution, 0),
      obs("T1566", Tactic::kInitialAccess, 1),
      obs("T1583", Tactic::kResourceDevelopment, 2),
      obs("T1595", Tactic::kReconnaissance, 3),
  };
  CHECK(id_strings(captain::sequence_ttps(observations, map)) ==
        std::vector<std::string>{"T1595", "T1583", "T1566", "T1203"});
}

TEST_CASE("single observation sequences to a singleton") {
  const auto& map = captain::default_phase_map();
  CHECK(id_strings(captain::sequence_ttps({obs("T1047", 0)}, map)) ==
        std::vector<std::string>{"T1047"});
}

TEST_CASE("thirteen-step scenario golden") {
  const auto& map = captain::default_phase_map();
  const std::vector<std::string> narrative = {
      "T1595", "T1583", "T1566", "T1203", "T1055", "T1027", "T1071",
      "T1570", "T1087", "T1068", "T1119", "T1041", "T1485"};
  std::vector<TtpObservation> observations;
  for (std::size_t i = 0; i < narrative.size(); ++i) {
    observations.push_back(obs(narrative[i], i));
  }
  CHECK(id_strings(captain::sequence_ttps(observations, map)) == narrative);
  // The same order falls out even when the input is scrambled, because the
  // source_order values keep narrating positions.
  std::mt19937 rng(5);
  std::shuffle(observations.begin(), observations.end(), rng);
  CHECK(id_strings(captain::sequence_ttps(observations, map)) == narrative);
}

TEST_CASE("sequencing is empty-input safe and collapses duplicates") {
  const auto& map = captain::default_phase_map();
  CHECK_THROWS_AS(captain::sequence_ttps({}, map), captain::EmptyInput);

  // Identical (technique, phase) collapses to the first occurrence.
  CHECK(id_strings(captain::sequence_ttps(
            {obs("T1595", 0), obs("T1595", 1), obs("T1583", 2)}, map)) ==
        std::vector<std::string>{"T1595", "T1583"});

  // The same technique under two phases survives twice.
  const auto twice = captain::sequence_ttps(
      {obs("T1078", Tactic::kInitialAccess, 0),
       obs("T1078", Tactic::kPersistence, 1)},
      map);
  CHECK(id_strings(twice) == std::vector<std::string>{"T1078", "T1078"});
}

TEST_CASE("phase order is non-decreasing along any output") {
  const auto& map = captain::default_phase_map();
  const auto catalog = map.catalog_ids();
  std::mt19937 rng(77);
  for (int round = 0; round < 100; ++round) {
    std::vector<TtpObservation> observations;
    const std::size_t count = 1 + rng() % 20;
    for (std::size_t i = 0; i < count; ++i) {
      observations.push_back({catalog[rng() % catalog.size()], std::nullopt,
                              i});
    }
    const auto sequence = captain::sequence_ttps(observations, map);
    int last = 0;
    for (const auto& id : sequence) {
      const int order =
          captain::resolve_phase({id, std::nullopt, 0}, map).order_index;
      CHECK(order >= last);
      last = order;
    }
  }
}

TEST_CASE("sequencing is deterministic under input permutation") {
  const auto& map = captain::default_phase_map();
  const auto catalog = map.catalog_ids();
  std::mt19937 rng(78);
  for (int round = 0; round < 100; ++round) {
    std::vector<TtpObservation> observations;
    const std::size_t count = 2 + rng() % 15;
    for (std::size_t i = 0; i < count; ++i) {
      observations.push_back({catalog[rng() % catalog.size()], std::nullopt,
                              i});
    }
    const auto expected = captain::sequence_ttps(observations, map);
    std::shuffle(observations.begin(), observations.end(), rng);
    CHECK(captain::sequence_ttps(observations, map) == expected);
  }
}

TEST_CASE("sequencing an already-sequenced list is the identity") {
  const auto& map = captain::default_phase_map();
  const auto catalog = map.catalog_ids();
  std::mt19937 rng(79);
  for (int round = 0; round < 100; ++round) {
    std::vector<TtpObservation> observations;
    const std::size_t count = 1 + rng() % 20;
    for (std::size_t i = 0; i < count; ++i) {
      observations.push_back({catalog[rng() % catalog.size()], std::nullopt,
                              i});
    }
    const auto once = captain::sequence_ttps(observations, map);
    std::vector<TtpObservation> again;
    for (std::size_t i = 0; i < once.size(); ++i) {
      again.push_back({once[i], std::nullopt, i});
    }
    CHECK(captain::sequence_ttps(again, map) == once);
  }
}

TEST_CASE("lenient sequencing keeps unknown techniques at the tail") {
  const auto& map = captain::default_phase_map();
  captain::SequencingNotes notes;
  const auto sequence = captain::sequence_ttps(
      {obs("T9999", 0), obs("T1595", 1), obs("T8888", 2)}, map, notes);
  CHECK(id_strings(sequence) ==
        std::vector<std::string>{"T1595", "T9999", "T8888"});
  CHECK(notes.unknown_techniques.size() == 2);
}
