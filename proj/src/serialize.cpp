#include "bicyclic/serialize.hpp"

#include <fstream>

#include "bicyclic/error.hpp"

namespace bicyclic {

nlohmann::json group_to_json(const GroupTable& G) {
  nlohmann::json j;
  j["format"] = "bicyclic-group";
  j["version"] = kGroupFormatVersion;
  j["order"] = G.order();
  j["identity"] = G.identity();
  j["mult"] = G.data();
  if (!G.labels().empty()) j["labels"] = G.labels();
  return j;
}

GroupTable group_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "bicyclic-group") throw Error(ErrorCode::kParseError, "not a group record");
    if (j.at("version").get<int>() != kGroupFormatVersion) {
      throw Error(ErrorCode::kParseError, "unsupported group record version");
    }
    const auto n = j.at("order").get<std::size_t>();
    const auto flat = j.at("mult").get<std::vector<long long>>();
    if (n == 0 || n > kMaxOrder || flat.size() != n * n) {
      throw Error(ErrorCode::kParseError, "mult has the wrong size for the stated order");
    }
    std::vector<std::vector<long long>> raw(n, std::vector<long long>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) raw[r][c] = flat[r * n + c];
    GroupTable G = verify_table(raw);
    if (j.contains("identity") && j["identity"].get<std::size_t>() != G.identity()) {
      throw Error(ErrorCode::kParseError, "stated identity disagrees with the table");
    }
    if (j.contains("labels")) {
      auto labels = j["labels"].get<std::vector<std::string>>();
      std::vector<Elem> mult(G.data());
      return make_table(n, std::move(mult), G.identity(), {}, std::move(labels));
    }
    return G;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

void write_group_file(const std::filesystem::path& path, const GroupTable& G) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path.string());
  out << group_to_json(G).dump() << "\n";
}

GroupTable read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
  return group_from_json(j);
}

nlohmann::json spec_to_json(const FamilySpec& s) {
  return {{"family", std::string(to_string(s.family))}, {"n", s.n}, {"m", s.m},
          {"i", s.i}, {"x_sq", s.x_sq}, {"a_pow", s.a_pow}};
}

FamilySpec spec_from_json(const nlohmann::json& j) {
  try {
    auto f = family_from_string(j.at("family").get<std::string>());
    if (!f) throw Error(ErrorCode::kParseError, "unknown family");
    FamilySpec s{*f, j.value("n", 0), j.value("m", 0), j.value("i", 0), j.value("x_sq", 0),
                 j.value("a_pow", 0)};
    validate(s);
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace bicyclic
