#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bicyclic/cohomology.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/fusion.hpp"
#include "bicyclic/group_table.hpp"
#include "bicyclic/invariants.hpp"
#include "bicyclic/morphisms.hpp"

namespace bicyclic {

struct CensusOptions {
  unsigned jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
  std::size_t budget = kDefaultSubgroupBudget;
  int h2_cap = kDefaultH2Cap;
  // Per-layer progress, e.g. for a CLI status line.
  std::function<void(int N, std::size_t records)> on_layer;
};

struct CensusRecord {
  int log_order = 0;
  std::size_t index = 0;
  GroupTable canonical_rep;
  Fingerprint fingerprint;
  ShapeTags shape;
  bool derived_cyclic = false;
  std::optional<FamilySpec> matched_family;
  FusionVerdict verdict;
  // Analysis failures such as an unmatched classification case.
  std::vector<std::string> errors;

  std::size_t order() const noexcept { return canonical_rep.order(); }
};

struct CensusLayer {
  int N = 0;
  std::vector<CensusRecord> records;
  std::size_t extensions_examined = 0;
  std::size_t rank_two_extensions = 0;
  // Extensions where the Janko criterion and the bicyclic test disagree.
  std::vector<std::string> janko_disagreements;
  bool from_cache = false;
};

struct Census {
  std::vector<CensusLayer> layers;  // layers[N - 1] has the groups of order 2^N
  const CensusLayer& layer(int N) const { return layers.at(std::size_t(N - 1)); }
  int max_log_order() const noexcept { return int(layers.size()); }
};

// All bicyclic groups of order 2^N for N = 1..N_max, one record per
// isomorphism class, in deterministic order. N_max <= 7.
Census bicyclic_census(int N_max, const CensusOptions& opts = {});

// Fills shape, derived_cyclic, verdict and matched_family of a record whose
// canonical_rep is set.
void analyze_record(CensusRecord& r, std::size_t budget = kDefaultSubgroupBudget);

int f_formula(int N);
int g_formula(int N);

struct CountRow {
  int N = 0;
  int f_empirical = 0, f_formula = 0;
  int g_empirical = 0, g_formula = 0;
};
std::vector<CountRow> count_table(const Census& c, int N_max);

struct Violation {
  std::string check;
  std::string subject;
  std::string detail;
};

struct VerifyReport {
  std::vector<Violation> violations;
  // Distinct specs landing on the same census record, outside the
  // classification catalog. Informational.
  std::vector<std::string> collisions;
  std::vector<CountRow> counts;
  std::size_t checks_run = 0;
};

VerifyReport verify_suite(const Census& c, int N_max, std::size_t budget = kDefaultSubgroupBudget);

// Index of the record isomorphic to G in layer log2|G|, if any.
std::optional<std::size_t> find_record(const Census& c, const GroupTable& G);

}  // namespace bicyclic
