#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bicyclic/census.hpp"
#include "bicyclic/fusion.hpp"
#include "bicyclic/invariants.hpp"
#include "bicyclic/morphisms.hpp"
#include "bicyclic/numtheory.hpp"
#include "bicyclic/subgroups.hpp"

namespace bicyclic {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const InvariantRecord& r);
nlohmann::json to_json(const ShapeTags& t);
nlohmann::json to_json(const Fingerprint& f);
nlohmann::json to_json(const EssentialReport& e);
nlohmann::json to_json(const FusionVerdict& v);
nlohmann::json to_json(const StructuralCheck& s);
nlohmann::json to_json(const CensusRecord& r);
nlohmann::json to_json(const CountRow& r);
nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const ExponentFormula& e);
nlohmann::json to_json(const SectionBoundReport& r);

enum class ReportStatus { kPass, kFail, kError };
std::string to_string(ReportStatus s);

// One schema for every subcommand. status is fail iff violations is nonempty
// (error overrides both).
struct ReportEnvelope {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<nlohmann::json> violations;
  ReportStatus status = ReportStatus::kPass;
  double seconds = 0.0;

  void finalize() {
    if (status != ReportStatus::kError) status = violations.empty() ? ReportStatus::kPass : ReportStatus::kFail;
  }
  nlohmann::json to_json() const;
};

// Indented "key: value" rendering for --format text.
std::string render_text(const ReportEnvelope& env);

}  // namespace bicyclic
