#pragma once

#include <filesystem>

#include "json.hpp"

#include "bicyclic/families.hpp"
#include "bicyclic/group_table.hpp"

namespace bicyclic {

inline constexpr int kGroupFormatVersion = 1;

// {"format": "bicyclic-group", "version": 1, "order": n, "identity": e,
//  "mult": [row-major n*n indices], "labels": [...] (optional)}
nlohmann::json group_to_json(const GroupTable& G);
// Re-validates the table in full. Throws kParseError on schema problems.
GroupTable group_from_json(const nlohmann::json& j);

void write_group_file(const std::filesystem::path& path, const GroupTable& G);
GroupTable read_group_file(const std::filesystem::path& path);

nlohmann::json spec_to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const nlohmann::json& j);

}  // namespace bicyclic
